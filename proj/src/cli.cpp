#include "toulmin/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "toulmin/composer.hpp"
#include "toulmin/defeaters.hpp"
#include "toulmin/dsl.hpp"
#include "toulmin/export.hpp"

namespace toulmin::cli {

namespace {

// Raised inside a command to end it with the given exit code; diagnostics
// have already been written.
struct Exit {
  int code;
};

bool is_parse_code(std::string_view code) {
  for (auto c : {codes::empty_document, codes::lex_error, codes::unterminated_string,
                 codes::bad_escape, codes::bad_utf8, codes::syntax_error, codes::duplicate_field,
                 codes::missing_field, codes::malformed_json, codes::bad_schema,
                 codes::unsupported_version}) {
    if (code == c) return true;
  }
  return false;
}

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    out.push_back(item.substr(first, last - first + 1));
  }
  return out;
}

struct Source {
  std::string path;
  std::string text;
  Document doc;

  // Position of `keyword ID` at the start of a line, for diagnostics about
  // items the model no longer holds spans for.
  SourceSpan locate(std::string_view keyword, std::string_view id) const {
    const std::string head = std::string(keyword) + " " + std::string(id);
    std::size_t line = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      std::string_view row(text.data() + start, end - start);
      const auto indent = row.find_first_not_of(" \t");
      if (indent != std::string_view::npos && row.substr(indent).starts_with(head)) {
        const auto rest = row.substr(indent + head.size());
        if (rest.empty() || rest.front() == ' ' || rest.front() == '\t' || rest.front() == '{') {
          return {static_cast<int>(line), static_cast<int>(indent + 1), static_cast<int>(head.size())};
        }
      }
      start = end + 1;
      ++line;
    }
    return {};
  }
};

class Session {
 public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  std::ostream& out() { return out_; }

  void report(const std::vector<Diagnostic>& diagnostics, std::string_view path) {
    for (const auto& d : diagnostics) err_ << format_diagnostic(d, path) << '\n';
  }

  [[noreturn]] void fail(int code, const Diagnostic& diagnostic, std::string_view path) {
    report({diagnostic}, path);
    throw Exit{code};
  }

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      err_ << path << ": error: cannot read file\n";
      throw Exit{usage_failure};
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
  }

  Source load(const std::string& path) {
    std::string text = read(path);
    auto parsed = std::filesystem::path(path).extension() == ".json" ? from_json(text)
                                                                     : parse_document(text);
    report(parsed.diagnostics, path);
    if (!parsed.ok()) {
      bool syntax = false;
      for (const auto& d : parsed.diagnostics) syntax = syntax || is_parse_code(d.code);
      throw Exit{syntax ? parse_failure : semantic_failure};
    }
    return Source{path, std::move(text), std::move(*parsed.value)};
  }

  void write(const std::string& output, const std::string& content) {
    if (output.empty()) {
      out_ << content;
      return;
    }
    std::ofstream file(output, std::ios::binary);
    if (!file || !(file << content)) {
      err_ << output << ": error: cannot write file\n";
      throw Exit{usage_failure};
    }
  }

  const ProofChain& proof(const Source& src, const std::string& id) {
    const auto* proof = src.doc.find_proof(id);
    if (!proof) fail(semantic_failure, unknown(id, "proof"), src.path);
    return *proof;
  }

  const DependencyGraph& graph(const Source& src, const std::string& id) {
    const auto* graph = src.doc.find_graph(id);
    if (!graph) fail(semantic_failure, unknown(id, "graph"), src.path);
    return *graph;
  }

 private:
  static Diagnostic unknown(const std::string& id, std::string_view what) {
    return make_error(codes::unknown_reference,
                      "no " + std::string(what) + " named '" + id + "'");
  }

  std::ostream& out_;
  std::ostream& err_;
};

ProfileMode mode_of(const std::string& text) {
  return parse_profile_mode(text).value_or(ProfileMode::generalized);
}

int cmd_parse(Session& s, const std::string& file, bool json) {
  const auto src = s.load(file);
  s.out() << (json ? to_json(src.doc) : serialize_document(src.doc));
  return ok;
}

int cmd_validate(Session& s, const std::string& file, ProfileMode mode) {
  const auto src = s.load(file);
  std::vector<Diagnostic> problems;
  auto add = [&](std::vector<Diagnostic> found, SourceSpan span) {
    for (auto& d : found) {
      d.span = span;
      problems.push_back(std::move(d));
    }
  };
  for (const auto& layout : src.doc.layouts()) {
    add(check_defeater_profile(layout, mode), src.locate("layout", layout.id()));
  }
  for (const auto& proof : src.doc.proofs()) {
    const auto span = src.locate("proof", proof.id());
    add(validate_chain(proof), span);
    add(check_defeater_profile(merge_chain(proof), mode), span);
  }
  for (const auto& graph : src.doc.graphs()) {
    for (const auto& cycle : find_cycles(graph)) {
      std::string path;
      for (const auto& id : cycle) path += id + " -> ";
      path += cycle.front();
      problems.push_back(make_error(codes::cycle,
                                    "graph '" + graph.name() + "' has cycle " + path,
                                    src.locate("graph", graph.name()), graph.name()));
    }
  }
  s.report(problems, file);
  if (has_errors(problems)) return semantic_failure;
  s.out() << file << ": ok (" << src.doc.layouts().size() << " layouts, "
          << src.doc.proofs().size() << " proofs, " << src.doc.graphs().size() << " graphs; "
          << to_string(mode) << " mode)\n";
  return ok;
}

int cmd_compose(Session& s, const std::string& file, const std::string& id, bool json, bool dot) {
  const auto src = s.load(file);
  const Layout merged = merge_chain(s.proof(src, id));
  if (json) {
    s.out() << to_json_value(merged).dump(2) << '\n';
  } else if (dot) {
    s.out() << to_dot(src.doc, merged);
  } else {
    s.out() << serialize_layout(merged);
  }
  return ok;
}

int cmd_weakest(Session& s, const std::string& file, const std::string& id) {
  const auto src = s.load(file);
  for (const auto& step : weakest_steps(s.proof(src, id))) s.out() << step << '\n';
  return ok;
}

struct SubstituteArgs {
  std::string file, proof, step, warrant, backing, qualifier, output;
};

int cmd_substitute(Session& s, const SubstituteArgs& a) {
  std::error_code ec;
  if (!a.output.empty() && std::filesystem::equivalent(a.output, a.file, ec)) {
    s.fail(usage_failure,
           make_error(codes::syntax_error, "refusing to overwrite the input file; choose another -o"),
           a.file);
  }
  const auto src = s.load(a.file);
  const auto& proof = s.proof(src, a.proof);
  const auto updated = substitute_step(proof, a.step, split_ids(a.warrant),
                                       split_ids(a.backing), Qualifier(proof.scale(), a.qualifier));
  s.write(a.output, serialize_document(src.doc.with_proof(updated)));
  return ok;
}

int cmd_defeaters(Session& s, const std::string& file, const std::string& id, ProfileMode mode) {
  const auto src = s.load(file);
  std::optional<Layout> layout;
  SourceSpan span;
  if (const auto* found = src.doc.find_layout(id)) {
    layout = *found;
    span = src.locate("layout", id);
  } else if (const auto* proof = src.doc.find_proof(id)) {
    layout = merge_chain(*proof);
    span = src.locate("proof", id);
  } else {
    s.fail(semantic_failure,
           make_error(codes::unknown_reference, "no layout or proof named '" + id + "'"), file);
  }
  for (const auto& d : layout->body().defeaters) {
    s.out() << d.statement << ' ' << to_string(classify_defeater(d)) << '\n';
  }
  s.out() << "profile " << to_string(defeat_profile(*layout)) << '\n';
  auto problems = check_defeater_profile(*layout, mode);
  for (auto& d : problems) d.span = span;
  s.report(problems, file);
  return has_errors(problems) ? semantic_failure : ok;
}

int cmd_cycles(Session& s, const std::string& file, const std::string& id) {
  const auto src = s.load(file);
  const auto cycles = find_cycles(s.graph(src, id));
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) s.out() << (i ? " -> " : "") << cycle[i];
    s.out() << " -> " << cycle.front() << '\n';
  }
  return cycles.empty() ? ok : semantic_failure;
}

int cmd_deps(Session& s, const std::string& file, const std::string& id, const std::string& node,
             bool transitive) {
  const auto src = s.load(file);
  for (const auto& dep : dependencies(s.graph(src, id), node, transitive)) s.out() << dep << '\n';
  return ok;
}

int cmd_diff(Session& s, const std::string& file_a, const std::string& id_a,
             const std::string& file_b, const std::string& id_b) {
  const auto src_a = s.load(file_a);
  const auto src_b = s.load(file_b);
  const auto diff = diff_graphs(s.graph(src_a, id_a), s.graph(src_b, id_b));
  auto& out = s.out();
  for (const auto& id : diff.nodes_only_in_a) out << "-node " << id << '\n';
  for (const auto& id : diff.nodes_only_in_b) out << "+node " << id << '\n';
  for (const auto& k : diff.kind_changes) {
    out << k.id << ": kind " << to_string(k.kind_a) << " -> " << to_string(k.kind_b) << '\n';
  }
  for (const auto& e : diff.edge_changes) {
    out << e.proved << ':';
    const char* sep = " ";
    for (const auto& id : e.only_in_a) {
      out << sep << '-' << id;
      sep = ", ";
    }
    for (const auto& id : e.only_in_b) {
      out << sep << '+' << id;
      sep = ", ";
    }
    out << '\n';
  }
  if (diff.empty()) out << "no differences\n";
  return ok;
}

int cmd_render(Session& s, const std::string& file, const std::string& id,
               const std::string& format, const std::string& output) {
  const auto src = s.load(file);
  const bool dot = format == "dot";
  std::string content;
  if (const auto* layout = src.doc.find_layout(id)) {
    content = dot ? to_dot(src.doc, *layout) : to_json_value(*layout).dump(2) + "\n";
  } else if (const auto* proof = src.doc.find_proof(id)) {
    content = dot ? to_dot(src.doc, *proof) : to_json_value(*proof).dump(2) + "\n";
  } else if (const auto* graph = src.doc.find_graph(id)) {
    content = dot ? to_dot(*graph) : to_json_value(*graph).dump(2) + "\n";
  } else {
    s.fail(semantic_failure,
           make_error(codes::unknown_reference, "no layout, proof or graph named '" + id + "'"),
           file);
  }
  s.write(output, content);
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toulmin layouts, proof chains and dependency graphs", "toulmin"};
  app.require_subcommand(1);
  app.fallthrough(false);

  const std::vector<std::string> modes = {"strict", "strict_toulmin", "generalized"};
  std::string file, file_b, id, id_b, node, mode = "generalized", format, output;
  bool json = false, dot = false, transitive = false;
  SubstituteArgs sub;
  std::function<int(Session&)> action;

  auto* parse = app.add_subcommand("parse", "Parse a document and print it in canonical form");
  parse->add_option("file", file, "Input .tlm or .json file")->required();
  parse->add_flag("--json", json, "Print the JSON interchange form");
  parse->callback([&] { action = [&](Session& s) { return cmd_parse(s, file, json); }; });

  auto* validate = app.add_subcommand("validate", "Check every invariant and defeater profile");
  validate->add_option("file", file)->required();
  validate->add_option("--mode", mode, "strict or generalized")->check(CLI::IsMember(modes));
  validate->callback(
      [&] { action = [&](Session& s) { return cmd_validate(s, file, mode_of(mode)); }; });

  auto* compose = app.add_subcommand("compose", "Merge a proof chain into one layout");
  compose->add_option("file", file)->required();
  compose->add_option("proof", id)->required();
  auto* json_flag = compose->add_flag("--json", json);
  compose->add_flag("--dot", dot)->excludes(json_flag);
  compose->callback(
      [&] { action = [&](Session& s) { return cmd_compose(s, file, id, json, dot); }; });

  auto* weakest = app.add_subcommand("weakest", "List the steps carrying the weakest qualifier");
  weakest->add_option("file", file)->required();
  weakest->add_option("proof", id)->required();
  weakest->callback([&] { action = [&](Session& s) { return cmd_weakest(s, file, id); }; });

  auto* substitute =
      app.add_subcommand("substitute", "Replace one step's warrant, backing and qualifier");
  substitute->add_option("file", sub.file)->required();
  substitute->add_option("proof", sub.proof)->required();
  substitute->add_option("step", sub.step)->required();
  substitute->add_option("--warrant", sub.warrant, "Comma-separated statement ids")->required();
  substitute->add_option("--backing", sub.backing, "Comma-separated statement ids");
  substitute->add_option("--qualifier", sub.qualifier, "Level on the proof's scale")->required();
  substitute->add_option("-o,--output", sub.output, "Write the new document here");
  substitute->callback([&] { action = [&](Session& s) { return cmd_substitute(s, sub); }; });

  auto* defeaters = app.add_subcommand("defeaters", "Classify a layout's defeaters");
  defeaters->add_option("file", file)->required();
  defeaters->add_option("layout", id)->required();
  defeaters->add_option("--mode", mode)->check(CLI::IsMember(modes));
  defeaters->callback(
      [&] { action = [&](Session& s) { return cmd_defeaters(s, file, id, mode_of(mode)); }; });

  auto* graph = app.add_subcommand("graph", "Dependency graph queries");
  graph->require_subcommand(1);
  auto* cycles = graph->add_subcommand("cycles", "List elementary cycles");
  cycles->add_option("file", file)->required();
  cycles->add_option("graph", id)->required();
  cycles->callback([&] { action = [&](Session& s) { return cmd_cycles(s, file, id); }; });
  auto* deps = graph->add_subcommand("deps", "List what a node's proof uses");
  deps->add_option("file", file)->required();
  deps->add_option("graph", id)->required();
  deps->add_option("node", node)->required();
  deps->add_flag("--transitive", transitive);
  deps->callback(
      [&] { action = [&](Session& s) { return cmd_deps(s, file, id, node, transitive); }; });
  auto* diff = graph->add_subcommand("diff", "Compare two reconstructions");
  diff->add_option("file_a", file)->required();
  diff->add_option("graph_a", id)->required();
  diff->add_option("file_b", file_b)->required();
  diff->add_option("graph_b", id_b)->required();
  diff->callback(
      [&] { action = [&](Session& s) { return cmd_diff(s, file, id, file_b, id_b); }; });

  auto* render = app.add_subcommand("render", "Render a layout, proof or graph");
  render->add_option("file", file)->required();
  render->add_option("id", id)->required();
  render->add_option("--format", format)->required()->check(CLI::IsMember({"dot", "json"}));
  render->add_option("-o,--output", output);
  render->callback(
      [&] { action = [&](Session& s) { return cmd_render(s, file, id, format, output); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    out << target->help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "toulmin: " << e.what() << '\n';
    err << "run 'toulmin --help' for usage\n";
    return usage_failure;
  }

  Session session(out, err);
  try {
    return action(session);
  } catch (const Exit& e) {
    return e.code;
  } catch (const Error& e) {
    session.report(e.diagnostics(), file.empty() ? sub.file : file);
    return semantic_failure;
  }
}

}  // namespace toulmin::cli
