#include <sstream>

#include "toulmin/dsl.hpp"

namespace toulmin {

namespace {

std::string quoted(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void list_field(std::ostream& out, std::string_view indent, std::string_view name,
                const std::vector<Id>& ids) {
  if (ids.empty()) return;
  out << indent << name << ' ';
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? ", " : "") << ids[i];
  out << ";\n";
}

void body_fields(std::ostream& out, std::string_view indent, const Body& body,
                 bool qualify_scale) {
  list_field(out, indent, "data", body.data);
  list_field(out, indent, "warrant", body.warrant);
  list_field(out, indent, "backing", body.backing);
  out << indent << "qualifier " << body.qualifier.level();
  if (qualify_scale) out << " on " << body.qualifier.scale().name();
  out << ";\n";
  out << indent << "claim " << body.claim << ";\n";
  for (const auto& d : body.defeaters) {
    out << indent << "defeater " << d.statement << " targets " << to_string(d.target) << ";\n";
  }
}

void write_layout(std::ostream& out, const Layout& layout) {
  out << "layout " << layout.id() << " {\n";
  out << "  kind " << to_string(layout.kind()) << ";\n";
  body_fields(out, "  ", layout.body(), true);
  out << "}\n";
}

}  // namespace

std::string serialize_layout(const Layout& layout) {
  std::ostringstream out;
  write_layout(out, layout);
  return out.str();
}

std::string serialize_document(const Document& doc) {
  std::ostringstream out;
  bool first = true;
  // Blank line between groups of items.
  auto section = [&] {
    if (!first) out << '\n';
    first = false;
  };

  if (!doc.scales().empty()) {
    section();
    for (const auto& scale : doc.scales()) {
      out << "scale " << scale.name() << " { ";
      for (std::size_t i = 0; i < scale.size(); ++i) out << (i ? " > " : "") << scale.levels()[i];
      out << " }\n";
    }
  }
  if (!doc.statements().empty()) {
    section();
    for (const auto& s : doc.statements()) out << "stmt " << s.id() << ' ' << quoted(s.text()) << '\n';
  }
  for (const auto& layout : doc.layouts()) {
    section();
    write_layout(out, layout);
  }
  for (const auto& proof : doc.proofs()) {
    section();
    out << "proof " << proof.id() << " {\n";
    out << "  scale " << proof.scale().name() << ";\n";
    for (const auto& step : proof.steps()) {
      out << "  step " << step.id() << " {\n";
      body_fields(out, "    ", step.body(), false);
      out << "  }\n";
    }
    out << "}\n";
  }
  for (const auto& graph : doc.graphs()) {
    section();
    out << "graph " << graph.name() << " {\n";
    for (const auto& node : graph.nodes()) {
      out << "  node " << node.id << " kind " << to_string(node.kind) << ";\n";
    }
    for (const auto& edge : graph.edges()) {
      out << "  edge " << edge.proved << " -> " << edge.used << ";\n";
    }
    out << "}\n";
  }
  // Whitespace-only input is rejected by the parser; a comment keeps the
  // empty document parseable.
  if (first) out << "# empty document\n";
  return out.str();
}

}  // namespace toulmin
