#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toulmin/document.hpp"

namespace toulmin {

/// Unresolved document contents as read from text or JSON. Every name keeps
/// the span it was read from so later checks can point back at it.
struct QualifierDraft {
  Ref level;
  std::optional<Ref> scale;
};

struct DefeaterDraft {
  Ref statement;
  DefeaterTarget target;
};

struct BodyDraft {
  std::vector<Ref> data;
  std::vector<Ref> warrant;
  std::vector<Ref> backing;
  std::optional<QualifierDraft> qualifier;
  std::optional<Ref> claim;
  std::vector<DefeaterDraft> defeaters;
};

struct ScaleDraft {
  Ref name;
  std::vector<Ref> levels;
};

struct StatementDraft {
  Ref id;
  std::string text;
};

struct LayoutDraft {
  Ref id;
  ArgumentKind kind = ArgumentKind::regular;
  BodyDraft body;
};

struct StepDraft {
  Ref id;
  BodyDraft body;
};

struct ProofDraft {
  Ref id;
  std::optional<Ref> scale;
  std::vector<StepDraft> steps;
};

struct DocumentDraft {
  std::vector<ScaleDraft> scales;
  std::vector<StatementDraft> statements;
  std::vector<LayoutDraft> layouts;
  std::vector<ProofDraft> proofs;
  std::vector<GraphDecl> graphs;
};

/// Resolves references and qualifiers and checks every invariant, reporting
/// all problems found rather than stopping at the first.
///
/// A qualifier without an explicit scale resolves to the enclosing proof's
/// scale, else the document's only declared scale, else the built-in scale.
Outcome<Document> assemble(const DocumentDraft& draft);

/// Reads the `.tlm` format (see docs/dsl.md). Deterministic; never throws on
/// malformed input.
Outcome<Document> parse_document(std::string_view text);

/// Canonical text: scales, statements, layouts, proofs, graphs in document
/// order, one field per line, two-space indent.
std::string serialize_document(const Document& doc);

/// One `layout ID { ... }` block in canonical form.
std::string serialize_layout(const Layout& layout);

}  // namespace toulmin
