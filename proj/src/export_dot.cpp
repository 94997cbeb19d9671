#include <sstream>

#include "toulmin/defeaters.hpp"
#include "toulmin/export.hpp"

namespace toulmin {

namespace {

std::size_t code_point_length(unsigned char lead) {
  if (lead >= 0xF0) return 4;
  if (lead >= 0xE0) return 3;
  if (lead >= 0xC0) return 2;
  return 1;
}

// Splits `word` into code points.
std::vector<std::string_view> code_points(std::string_view word) {
  std::vector<std::string_view> out;
  for (std::size_t i = 0; i < word.size();) {
    auto n = std::min(code_point_length(static_cast<unsigned char>(word[i])), word.size() - i);
    out.push_back(word.substr(i, n));
    i += n;
  }
  return out;
}

void wrap_paragraph(std::string_view paragraph, std::size_t width,
                    std::vector<std::string>& lines) {
  std::string line;
  std::size_t line_width = 0;
  auto flush = [&] {
    lines.push_back(std::move(line));
    line.clear();
    line_width = 0;
  };
  bool any = false;
  std::size_t start = 0;
  while (start <= paragraph.size()) {
    auto end = paragraph.find(' ', start);
    if (end == std::string_view::npos) end = paragraph.size();
    auto word = paragraph.substr(start, end - start);
    start = end + 1;
    if (word.empty()) continue;
    any = true;
    auto points = code_points(word);
    if (line_width > 0 && line_width + 1 + points.size() <= width) {
      line += ' ';
      line += word;
      line_width += 1 + points.size();
      continue;
    }
    if (line_width > 0) flush();
    // Hard-split words wider than a line.
    std::size_t i = 0;
    while (points.size() - i > width) {
      for (std::size_t k = 0; k < width; ++k) line += points[i + k];
      i += width;
      line_width = width;
      flush();
    }
    for (; i < points.size(); ++i) {
      line += points[i];
      ++line_width;
    }
  }
  if (line_width > 0 || !any) lines.push_back(std::move(line));
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string quote_id(std::string_view id) { return "\"" + escape(id) + "\""; }

std::string statement_text(const Document& doc, const Id& id) {
  const auto* statement = doc.find_statement(id);
  return statement ? statement->text() : id;
}

std::vector<std::string> texts(const Document& doc, const std::vector<Id>& ids) {
  std::vector<std::string> out;
  for (const auto& id : ids) out.push_back(statement_text(doc, id));
  return out;
}

// A box whose first label line is its component tag.
std::string box(std::string_view name, std::string tag, const std::vector<std::string>& body) {
  std::string label = escape(tag);
  for (const auto& text : body) {
    for (const auto& line : wrap_text(text, dot_wrap_width)) label += "\\n" + escape(line);
  }
  return quote_id(name) + " [label=\"" + label + "\"];";
}

std::string edge(std::string_view from, std::string_view to, std::string_view attributes = {}) {
  std::string out = quote_id(from) + " -> " + quote_id(to);
  if (!attributes.empty()) out += " [" + std::string(attributes) + "]";
  return out + ";";
}

std::string defeater_node(std::string_view prefix, std::size_t index, std::size_t count) {
  std::string name = std::string(prefix) + "_R";
  if (count > 1) name += std::to_string(index + 1);
  return name;
}

}  // namespace

std::vector<std::string> wrap_text(std::string_view text, std::size_t width) {
  if (width == 0) width = 1;
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (true) {
    auto end = text.find('\n', start);
    wrap_paragraph(text.substr(start, end == std::string_view::npos ? end : end - start), width,
                   lines);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

std::string dot_label(const std::vector<std::string>& lines_in) {
  std::string label;
  bool first = true;
  for (const auto& text : lines_in) {
    for (const auto& line : wrap_text(text, dot_wrap_width)) {
      if (!first) label += "\\n";
      label += escape(line);
      first = false;
    }
  }
  return "\"" + label + "\"";
}

std::string to_dot(const Document& doc, const Layout& layout) {
  const std::string& id = layout.id();
  const Body& body = layout.body();
  const auto name = [&](std::string_view component) { return id + "_" + std::string(component); };
  std::ostringstream out;
  out << "digraph " << quote_id(id) << " {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box];\n";
  out << "  " << box(name("D"), "D", texts(doc, body.data)) << '\n';
  out << "  " << box(name("W"), "W", texts(doc, body.warrant)) << '\n';
  if (!body.backing.empty()) out << "  " << box(name("B"), "B", texts(doc, body.backing)) << '\n';
  out << "  " << box(name("Q"), "Q", {body.qualifier.level()}) << '\n';
  out << "  " << box(name("C"), "C", {statement_text(doc, body.claim)}) << '\n';
  const auto count = body.defeaters.size();
  for (std::size_t i = 0; i < count; ++i) {
    out << "  "
        << box(defeater_node(id, i, count), "R", {statement_text(doc, body.defeaters[i].statement)})
        << '\n';
  }
  out << "  " << edge(name("D"), name("Q"), "arrowhead=none") << '\n';
  out << "  " << edge(name("Q"), name("C")) << '\n';
  for (std::size_t i = 0; i < count; ++i) {
    const auto kind = classify_defeater(body.defeaters[i]);
    out << "  "
        << edge(defeater_node(id, i, count), name("Q"),
                "label=\"" + std::string(to_string(kind)) + "\"")
        << '\n';
  }
  out << "  " << edge(name("W"), name("Q")) << '\n';
  if (!body.backing.empty()) out << "  " << edge(name("B"), name("W")) << '\n';
  out << "}\n";
  return out.str();
}

std::string to_dot(const Document& doc, const ProofChain& proof) {
  const auto& steps = proof.steps();
  std::ostringstream out;
  out << "digraph " << quote_id(proof.id()) << " {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box];\n";

  // Data of step i other than the claim it inherits from step i-1.
  auto fresh_data = [&](std::size_t i) {
    std::vector<Id> fresh;
    for (const auto& id : steps[i].body().data) {
      if (i == 0 || id != steps[i - 1].body().claim) fresh.push_back(id);
    }
    return fresh;
  };

  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& step = steps[i];
    const Body& body = step.body();
    const std::string n = std::to_string(i + 1);
    const auto name = [&](std::string_view c) { return step.id() + "_" + std::string(c); };
    out << "  subgraph " << quote_id("cluster_" + step.id()) << " {\n";
    out << "    label=" << quote_id(step.id()) << ";\n";
    const auto fresh = fresh_data(i);
    if (!fresh.empty()) out << "    " << box(name("D"), "D_" + n, texts(doc, fresh)) << '\n';
    out << "    " << box(name("W"), "W_" + n, texts(doc, body.warrant)) << '\n';
    if (!body.backing.empty()) {
      out << "    " << box(name("B"), "B_" + n, texts(doc, body.backing)) << '\n';
    }
    out << "    " << box(name("Q"), "Q_" + n, {body.qualifier.level()}) << '\n';
    std::string claim_tag = "C_" + n;
    if (i + 1 < steps.size()) claim_tag += " (or D_" + std::to_string(i + 2) + ")";
    out << "    " << box(name("C"), claim_tag, {statement_text(doc, body.claim)}) << '\n';
    const auto count = body.defeaters.size();
    for (std::size_t k = 0; k < count; ++k) {
      out << "    "
          << box(defeater_node(step.id(), k, count), "R_" + n,
                 {statement_text(doc, body.defeaters[k].statement)})
          << '\n';
    }
    out << "  }\n";
  }

  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& step = steps[i];
    const Body& body = step.body();
    const auto name = [&](std::string_view c) { return step.id() + "_" + std::string(c); };
    if (i > 0) out << "  " << edge(steps[i - 1].id() + "_C", name("Q"), "arrowhead=none") << '\n';
    if (!fresh_data(i).empty()) out << "  " << edge(name("D"), name("Q"), "arrowhead=none") << '\n';
    out << "  " << edge(name("Q"), name("C")) << '\n';
    const auto count = body.defeaters.size();
    for (std::size_t k = 0; k < count; ++k) {
      const auto kind = classify_defeater(body.defeaters[k]);
      out << "  "
          << edge(defeater_node(step.id(), k, count), name("Q"),
                  "label=\"" + std::string(to_string(kind)) + "\"")
          << '\n';
    }
    out << "  " << edge(name("W"), name("Q")) << '\n';
    if (!body.backing.empty()) out << "  " << edge(name("B"), name("W")) << '\n';
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const DependencyGraph& graph) {
  std::ostringstream out;
  out << "digraph " << quote_id(graph.name()) << " {\n";
  for (const auto& node : graph.nodes()) {
    const bool theorem = node.kind == NodeKind::theorem;
    out << "  " << quote_id(node.id) << " [label=\"" << escape(node.id) << "\\n"
        << to_string(node.kind) << "\", shape=" << (theorem ? "box" : "ellipse") << "];\n";
  }
  for (const auto& e : graph.edges()) out << "  " << edge(e.proved, e.used) << '\n';
  out << "}\n";
  return out.str();
}

}  // namespace toulmin
