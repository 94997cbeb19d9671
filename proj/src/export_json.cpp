#include "toulmin/dsl.hpp"
#include "toulmin/export.hpp"

namespace toulmin {

using nlohmann::ordered_json;

namespace {

ordered_json qualifier_json(const Qualifier& q) {
  return ordered_json{{"scale", q.scale().name()}, {"level", q.level()}};
}

void body_json(ordered_json& out, const Body& body) {
  out["data"] = body.data;
  out["warrant"] = body.warrant;
  out["backing"] = body.backing;
  out["qualifier"] = qualifier_json(body.qualifier);
  out["claim"] = body.claim;
  out["defeaters"] = ordered_json::array();
  for (const auto& d : body.defeaters) {
    out["defeaters"].push_back({{"statement", d.statement}, {"target", to_string(d.target)}});
  }
}

}  // namespace

ordered_json to_json_value(const QualifierScale& scale) {
  return {{"name", scale.name()}, {"levels", scale.levels()}};
}

ordered_json to_json_value(const Statement& statement) {
  return {{"id", statement.id()}, {"text", statement.text()}};
}

ordered_json to_json_value(const Layout& layout) {
  ordered_json out;
  out["id"] = layout.id();
  out["kind"] = to_string(layout.kind());
  body_json(out, layout.body());
  return out;
}

ordered_json to_json_value(const ProofChain& proof) {
  ordered_json out;
  out["id"] = proof.id();
  out["scale"] = proof.scale().name();
  out["steps"] = ordered_json::array();
  for (const auto& step : proof.steps()) {
    ordered_json s;
    s["id"] = step.id();
    body_json(s, step.body());
    out["steps"].push_back(std::move(s));
  }
  return out;
}

ordered_json to_json_value(const DependencyGraph& graph) {
  ordered_json out;
  out["name"] = graph.name();
  out["nodes"] = ordered_json::array();
  for (const auto& n : graph.nodes()) {
    out["nodes"].push_back({{"id", n.id}, {"kind", to_string(n.kind)}});
  }
  out["edges"] = ordered_json::array();
  for (const auto& e : graph.edges()) {
    out["edges"].push_back({{"proved", e.proved}, {"used", e.used}});
  }
  return out;
}

ordered_json to_json_value(const Document& doc) {
  ordered_json out;
  out["format_version"] = json_format_version;
  auto collect = [&](const char* key, const auto& items) {
    out[key] = ordered_json::array();
    for (const auto& item : items) out[key].push_back(to_json_value(item));
  };
  collect("scales", doc.scales());
  collect("statements", doc.statements());
  collect("layouts", doc.layouts());
  collect("proofs", doc.proofs());
  collect("graphs", doc.graphs());
  return out;
}

std::string to_json(const Document& doc) { return to_json_value(doc).dump(2) + "\n"; }

namespace {

struct SchemaError {
  std::string message;
};

using nlohmann::json;

const json& member(const json& object, const char* key, std::string_view where) {
  if (!object.is_object()) throw SchemaError{std::string(where) + " must be an object"};
  auto it = object.find(key);
  if (it == object.end()) {
    throw SchemaError{std::string(where) + " is missing \"" + key + "\""};
  }
  return *it;
}

std::string text(const json& value, std::string_view where) {
  if (!value.is_string()) throw SchemaError{std::string(where) + " must be a string"};
  return value.get<std::string>();
}

const json& array(const json& value, std::string_view where) {
  if (!value.is_array()) throw SchemaError{std::string(where) + " must be an array"};
  return value;
}

Ref ref(const json& value, std::string_view where) { return Ref{text(value, where)}; }

std::vector<Ref> refs(const json& value, std::string_view where) {
  std::vector<Ref> out;
  for (const auto& item : array(value, where)) out.push_back(ref(item, where));
  return out;
}

template <class T, class Parse>
T enumerated(const json& value, std::string_view where, Parse parse) {
  auto parsed = parse(text(value, where));
  if (!parsed) {
    throw SchemaError{std::string(where) + " has unknown value \"" + value.get<std::string>() +
                      "\""};
  }
  return *parsed;
}

BodyDraft body(const json& object, const std::string& where) {
  BodyDraft out;
  out.data = refs(member(object, "data", where), where + ".data");
  out.warrant = refs(member(object, "warrant", where), where + ".warrant");
  out.backing = refs(member(object, "backing", where), where + ".backing");
  const auto& q = member(object, "qualifier", where);
  out.qualifier = QualifierDraft{ref(member(q, "level", where + ".qualifier"), where),
                                 ref(member(q, "scale", where + ".qualifier"), where)};
  out.claim = ref(member(object, "claim", where), where + ".claim");
  for (const auto& d : array(member(object, "defeaters", where), where + ".defeaters")) {
    out.defeaters.push_back(
        {ref(member(d, "statement", where + ".defeaters"), where),
         enumerated<DefeaterTarget>(member(d, "target", where + ".defeaters"),
                                    where + ".defeaters.target", parse_defeater_target)});
  }
  return out;
}

DocumentDraft draft(const json& root) {
  DocumentDraft out;
  for (const auto& s : array(member(root, "scales", "document"), "scales")) {
    out.scales.push_back({ref(member(s, "name", "scale"), "scale.name"),
                          refs(member(s, "levels", "scale"), "scale.levels")});
  }
  for (const auto& s : array(member(root, "statements", "document"), "statements")) {
    out.statements.push_back({ref(member(s, "id", "statement"), "statement.id"),
                              text(member(s, "text", "statement"), "statement.text")});
  }
  for (const auto& l : array(member(root, "layouts", "document"), "layouts")) {
    out.layouts.push_back(
        {ref(member(l, "id", "layout"), "layout.id"),
         enumerated<ArgumentKind>(member(l, "kind", "layout"), "layout.kind", parse_argument_kind),
         body(l, "layout")});
  }
  for (const auto& p : array(member(root, "proofs", "document"), "proofs")) {
    ProofDraft proof{ref(member(p, "id", "proof"), "proof.id"),
                     ref(member(p, "scale", "proof"), "proof.scale"),
                     {}};
    for (const auto& s : array(member(p, "steps", "proof"), "proof.steps")) {
      proof.steps.push_back({ref(member(s, "id", "step"), "step.id"), body(s, "step")});
    }
    out.proofs.push_back(std::move(proof));
  }
  for (const auto& g : array(member(root, "graphs", "document"), "graphs")) {
    GraphDecl graph;
    graph.name = ref(member(g, "name", "graph"), "graph.name");
    for (const auto& n : array(member(g, "nodes", "graph"), "graph.nodes")) {
      graph.nodes.push_back(
          {ref(member(n, "id", "node"), "node.id"),
           enumerated<NodeKind>(member(n, "kind", "node"), "node.kind", parse_node_kind)});
    }
    for (const auto& e : array(member(g, "edges", "graph"), "graph.edges")) {
      graph.edges.push_back({ref(member(e, "proved", "edge"), "edge.proved"),
                             ref(member(e, "used", "edge"), "edge.used")});
    }
    out.graphs.push_back(std::move(graph));
  }
  return out;
}

SourceSpan span_at(std::string_view text, std::size_t byte) {
  SourceSpan span{1, 1, 0};
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++span.line;
      span.column = 1;
    } else {
      ++span.column;
    }
  }
  return span;
}

}  // namespace

Outcome<Document> from_json(std::string_view input) {
  Outcome<Document> result;
  json root;
  try {
    root = json::parse(input.begin(), input.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the 1-based offset of the byte that failed.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    result.diagnostics.push_back(
        make_error(codes::malformed_json, "malformed JSON: " + std::string(e.what()),
                   span_at(input, byte)));
    return result;
  }
  try {
    const auto& version = member(root, "format_version", "document");
    if (!version.is_number_integer()) throw SchemaError{"format_version must be an integer"};
    if (version.get<long long>() != json_format_version) {
      result.diagnostics.push_back(make_error(
          codes::unsupported_version,
          "unsupported format_version " + version.dump() + " (expected " +
              std::to_string(json_format_version) + ")"));
      return result;
    }
    return assemble(draft(root));
  } catch (const SchemaError& e) {
    result.diagnostics.push_back(make_error(codes::bad_schema, e.message));
  } catch (const json::exception& e) {
    result.diagnostics.push_back(make_error(codes::bad_schema, e.what()));
  }
  return result;
}

}  // namespace toulmin
