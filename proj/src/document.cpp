#include "toulmin/document.hpp"

#include <algorithm>
#include <set>

namespace toulmin {

namespace {

template <class T, class Key>
const T* find_by(const std::vector<T>& items, std::string_view id, Key key) {
  auto it = std::find_if(items.begin(), items.end(), [&](const T& x) { return key(x) == id; });
  return it == items.end() ? nullptr : &*it;
}

template <class T, class Key>
void check_unique(std::vector<Diagnostic>& out, const std::vector<T>& items,
                  std::string_view collection, Key key) {
  std::set<std::string_view> seen;
  for (const auto& item : items) {
    const auto& id = key(item);
    if (!seen.insert(id).second) {
      out.push_back(make_error(codes::duplicate_id,
                               std::string(collection) + " '" + id + "' is declared twice", {},
                               id));
    }
  }
}

const QualifierScale* resolve_scale(const std::vector<QualifierScale>& scales,
                                    std::string_view name) {
  if (const auto* declared = find_by(scales, name, [](const auto& s) -> const Id& { return s.name(); })) {
    return declared;
  }
  if (name == QualifierScale::builtin_name) return &QualifierScale::builtin();
  return nullptr;
}

void check_scale_ref(std::vector<Diagnostic>& out, const std::vector<QualifierScale>& scales,
                     const QualifierScale& used, const std::string& owner) {
  const auto* known = resolve_scale(scales, used.name());
  if (!known) {
    out.push_back(make_error(codes::unknown_reference,
                             "'" + owner + "' uses undeclared scale '" + used.name() + "'", {},
                             owner));
  } else if (*known != used) {
    out.push_back(make_error(codes::bad_qualifier,
                             "'" + owner + "' uses a scale named '" + used.name() +
                                 "' that differs from the declared one",
                             {}, owner));
  }
}

void check_body_refs(std::vector<Diagnostic>& out, const std::set<std::string_view>& statements,
                     const Body& body, const std::string& owner) {
  auto check = [&](const Id& id) {
    if (!statements.contains(id)) {
      out.push_back(make_error(codes::unknown_reference,
                               "'" + owner + "' references unknown statement '" + id + "'", {},
                               owner));
    }
  };
  for (const auto& id : body.data) check(id);
  for (const auto& id : body.warrant) check(id);
  for (const auto& id : body.backing) check(id);
  check(body.claim);
  for (const auto& d : body.defeaters) check(d.statement);
}

}  // namespace

std::vector<Diagnostic> check_document(const DocumentParts& parts) {
  std::vector<Diagnostic> out;
  check_unique(out, parts.scales, "scale", [](const auto& s) -> const Id& { return s.name(); });
  check_unique(out, parts.statements, "statement",
               [](const auto& s) -> const Id& { return s.id(); });
  check_unique(out, parts.layouts, "layout", [](const auto& l) -> const Id& { return l.id(); });
  check_unique(out, parts.proofs, "proof", [](const auto& p) -> const Id& { return p.id(); });
  check_unique(out, parts.graphs, "graph", [](const auto& g) -> const Id& { return g.name(); });

  std::set<std::string_view> statements;
  for (const auto& s : parts.statements) statements.insert(s.id());

  for (const auto& layout : parts.layouts) {
    check_body_refs(out, statements, layout.body(), layout.id());
    check_scale_ref(out, parts.scales, layout.body().qualifier.scale(), layout.id());
  }
  for (const auto& proof : parts.proofs) {
    check_scale_ref(out, parts.scales, proof.scale(), proof.id());
    for (const auto& step : proof.steps()) check_body_refs(out, statements, step.body(), step.id());
  }
  return out;
}

Document::Document(DocumentParts parts) : parts_(std::move(parts)) {
  auto problems = check_document(parts_);
  if (!problems.empty()) throw Error(std::move(problems));
}

const Statement* Document::find_statement(std::string_view id) const {
  return find_by(parts_.statements, id, [](const auto& s) -> const Id& { return s.id(); });
}

const Layout* Document::find_layout(std::string_view id) const {
  return find_by(parts_.layouts, id, [](const auto& l) -> const Id& { return l.id(); });
}

const ProofChain* Document::find_proof(std::string_view id) const {
  return find_by(parts_.proofs, id, [](const auto& p) -> const Id& { return p.id(); });
}

const DependencyGraph* Document::find_graph(std::string_view name) const {
  return find_by(parts_.graphs, name, [](const auto& g) -> const Id& { return g.name(); });
}

const QualifierScale* Document::find_scale(std::string_view name) const {
  return resolve_scale(parts_.scales, name);
}

Document Document::with_proof(ProofChain proof) const {
  DocumentParts parts = parts_;
  auto it = std::find_if(parts.proofs.begin(), parts.proofs.end(),
                         [&](const ProofChain& p) { return p.id() == proof.id(); });
  if (it == parts.proofs.end()) {
    throw Error(codes::unknown_reference, "document has no proof '" + proof.id() + "'");
  }
  *it = std::move(proof);
  return Document(std::move(parts));
}

bool operator==(const Document& lhs, const Document& rhs) {
  const auto& a = lhs.parts_;
  const auto& b = rhs.parts_;
  return a.scales == b.scales && a.statements == b.statements && a.layouts == b.layouts &&
         a.proofs == b.proofs && a.graphs == b.graphs;
}

}  // namespace toulmin
