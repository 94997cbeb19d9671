#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toulmin/diagnostic.hpp"

namespace toulmin {

/// `[A-Za-z_][A-Za-z0-9_.]*`
bool is_identifier(std::string_view text);
bool is_valid_utf8(std::string_view text);

/// The content of one box in a layout.
class Statement {
 public:
  /// Throws Error on a malformed id or text that is empty after trimming.
  Statement(Id id, std::string text);

  const Id& id() const { return id_; }
  const std::string& text() const { return text_; }

  friend bool operator==(const Statement&, const Statement&) = default;

 private:
  Id id_;
  std::string text_;
};

/// A named total order of certainty levels, strongest first.
class QualifierScale {
 public:
  static constexpr std::string_view builtin_name = "default";

  QualifierScale(Id name, std::vector<std::string> levels);

  /// `default { necessary > constructive > classical > almost_certain >
  /// plausible > in_light_of_facts }`, used when a document declares no
  /// scale of its own.
  static const QualifierScale& builtin();

  const Id& name() const { return name_; }
  const std::vector<std::string>& levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }
  std::optional<std::size_t> rank_of(std::string_view level) const;

  friend bool operator==(const QualifierScale&, const QualifierScale&) = default;

 private:
  Id name_;
  std::vector<std::string> levels_;
};

/// A point on a scale. Rank 0 is the strongest level.
class Qualifier {
 public:
  /// Throws Error(bad-qualifier) when `level` is not on `scale`.
  Qualifier(QualifierScale scale, std::string_view level);
  static Qualifier at_rank(QualifierScale scale, std::size_t rank);

  const QualifierScale& scale() const { return scale_; }
  const std::string& level() const { return scale_.levels()[rank_]; }
  std::size_t rank() const { return rank_; }
  bool is_strongest() const { return rank_ == 0; }

  friend bool operator==(const Qualifier&, const Qualifier&) = default;

 private:
  Qualifier(QualifierScale scale, std::size_t rank);

  QualifierScale scale_;
  std::size_t rank_;
};

enum class Ordering { stronger, equal, weaker };

std::string_view to_string(Ordering ordering);

/// Throws Error(incomparable-qualifiers) for qualifiers on different scales.
Ordering compare(const Qualifier& lhs, const Qualifier& rhs);

/// The weakest (least certain) of `qualifiers`. Throws Error(empty-meet) on
/// an empty list and Error(incomparable-qualifiers) on mixed scales.
Qualifier meet(std::span<const Qualifier> qualifiers);

enum class DefeaterTarget { conclusion, inference, both };
enum class ArgumentKind { regular, critical };

std::string_view to_string(DefeaterTarget target);
std::string_view to_string(ArgumentKind kind);
std::optional<DefeaterTarget> parse_defeater_target(std::string_view text);
std::optional<ArgumentKind> parse_argument_kind(std::string_view text);

struct Defeater {
  Id statement;
  DefeaterTarget target;

  friend bool operator==(const Defeater&, const Defeater&) = default;
};

/// The D, W, B, Q, C and R components shared by layouts and proof steps.
/// Statements are referenced by id.
struct Body {
  std::vector<Id> data;
  std::vector<Id> warrant;
  std::vector<Id> backing;
  Qualifier qualifier;
  Id claim;
  std::vector<Defeater> defeaters;

  friend bool operator==(const Body&, const Body&) = default;
};

/// Invariants of a body on its own: non-empty data and warrant, claim not
/// among the data, no id repeated within a field. `owner` becomes the
/// diagnostics' subject.
std::vector<Diagnostic> check_body(const Body& body, std::string_view owner);

/// One Toulmin argument.
class Layout {
 public:
  Layout(Id id, ArgumentKind kind, Body body);

  const Id& id() const { return id_; }
  ArgumentKind kind() const { return kind_; }
  const Body& body() const { return body_; }

  friend bool operator==(const Layout&, const Layout&) = default;

 private:
  Id id_;
  ArgumentKind kind_;
  Body body_;
};

/// One step of a proof chain.
class Step {
 public:
  Step(Id id, Body body);

  const Id& id() const { return id_; }
  const Body& body() const { return body_; }

  friend bool operator==(const Step&, const Step&) = default;

 private:
  Id id_;
  Body body_;
};

/// An ordered run of steps that has not yet been checked for chaining.
struct ChainDraft {
  Id id;
  QualifierScale scale;
  std::vector<Step> steps;
};

/// Chain-level invariants: at least one step, distinct step ids, every
/// qualifier on the chain's scale, the claim of each step among the data of
/// the next, no claim repeated, and no step whose claim is already among the
/// data of itself or an earlier step.
std::vector<Diagnostic> check_chain(const ChainDraft& draft);

/// A validated linear proof.
class ProofChain {
 public:
  /// Throws Error carrying every check_chain diagnostic.
  explicit ProofChain(ChainDraft draft);

  const Id& id() const { return id_; }
  const QualifierScale& scale() const { return scale_; }
  const std::vector<Step>& steps() const { return steps_; }
  const Step* find_step(std::string_view step_id) const;

  ChainDraft to_draft() const { return {id_, scale_, steps_}; }

  friend bool operator==(const ProofChain&, const ProofChain&) = default;

 private:
  Id id_;
  QualifierScale scale_;
  std::vector<Step> steps_;
};

}  // namespace toulmin
