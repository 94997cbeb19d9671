#pragma once

#include <string_view>
#include <vector>

#include "toulmin/depgraph.hpp"
#include "toulmin/model.hpp"

namespace toulmin {

struct DocumentParts {
  std::vector<QualifierScale> scales;
  std::vector<Statement> statements;
  std::vector<Layout> layouts;
  std::vector<ProofChain> proofs;
  std::vector<DependencyGraph> graphs;
};

/// Cross-reference checks: ids unique per collection, every statement
/// reference resolves, every qualifier sits on a declared scale (or on the
/// built-in one when no declared scale shadows its name).
std::vector<Diagnostic> check_document(const DocumentParts& parts);

/// A fully resolved collection of scales, statements, layouts, proofs and
/// dependency graphs, each in declaration order.
class Document {
 public:
  Document() = default;
  /// Throws Error carrying every check_document diagnostic.
  explicit Document(DocumentParts parts);

  const std::vector<QualifierScale>& scales() const { return parts_.scales; }
  const std::vector<Statement>& statements() const { return parts_.statements; }
  const std::vector<Layout>& layouts() const { return parts_.layouts; }
  const std::vector<ProofChain>& proofs() const { return parts_.proofs; }
  const std::vector<DependencyGraph>& graphs() const { return parts_.graphs; }

  const Statement* find_statement(std::string_view id) const;
  const Layout* find_layout(std::string_view id) const;
  const ProofChain* find_proof(std::string_view id) const;
  const DependencyGraph* find_graph(std::string_view name) const;
  /// Declared scale of that name, else the built-in scale for its name.
  const QualifierScale* find_scale(std::string_view name) const;

  /// Copy with the proof of the same id replaced. Throws Error when no such
  /// proof exists or the replacement references unknown statements.
  Document with_proof(ProofChain proof) const;

  const DocumentParts& parts() const { return parts_; }

  friend bool operator==(const Document& lhs, const Document& rhs);

 private:
  DocumentParts parts_;
};

}  // namespace toulmin
