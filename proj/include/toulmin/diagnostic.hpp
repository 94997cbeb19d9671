#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toulmin {

using Id = std::string;

/// Position of a diagnostic inside the input text. Lines and columns are
/// 1-based; columns count bytes.
struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// An identifier together with where it was written. Values built in memory
/// carry the default span.
struct Ref {
  Id id;
  SourceSpan span{};
};

enum class Severity { error, warning };

std::string_view to_string(Severity severity);

struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;
  std::string message;
  SourceSpan span{};
  // Optional id of the item the diagnostic is about (a step id, a layout id).
  std::string subject{};
};

Diagnostic make_error(std::string_view code, std::string message,
                      SourceSpan span = {}, std::string subject = {});

bool has_errors(std::span<const Diagnostic> diagnostics);

/// `file:line:col: severity[code]: message`
std::string format_diagnostic(const Diagnostic& diagnostic,
                              std::string_view file);

/// Diagnostic codes. The set is closed; docs/dsl.md lists each one.
namespace codes {
// lexical and syntactic
inline constexpr std::string_view empty_document = "empty-document";
inline constexpr std::string_view lex_error = "lex-error";
inline constexpr std::string_view unterminated_string = "unterminated-string";
inline constexpr std::string_view bad_escape = "bad-escape";
inline constexpr std::string_view bad_utf8 = "bad-utf8";
inline constexpr std::string_view syntax_error = "syntax-error";
inline constexpr std::string_view duplicate_field = "duplicate-field";
inline constexpr std::string_view missing_field = "missing-field";
// model invariants
inline constexpr std::string_view bad_identifier = "bad-identifier";
inline constexpr std::string_view empty_text = "empty-text";
inline constexpr std::string_view empty_scale = "empty-scale";
inline constexpr std::string_view duplicate_level = "duplicate-level";
inline constexpr std::string_view bad_qualifier = "bad-qualifier";
inline constexpr std::string_view empty_field = "empty-field";
inline constexpr std::string_view self_support = "self-support";
inline constexpr std::string_view duplicate_reference = "duplicate-reference";
inline constexpr std::string_view unknown_reference = "unknown-reference";
inline constexpr std::string_view duplicate_id = "duplicate-id";
// proof chains
inline constexpr std::string_view empty_proof = "empty-proof";
inline constexpr std::string_view scale_mismatch = "scale-mismatch";
inline constexpr std::string_view chain_break = "chain-break";
inline constexpr std::string_view claim_reuse = "claim-reuse";
inline constexpr std::string_view circular_data = "circular-data";
// dependency graphs
inline constexpr std::string_view dangling_edge = "dangling-edge";
inline constexpr std::string_view axiom_with_proof = "axiom-with-proof";
inline constexpr std::string_view self_loop = "self-loop";
inline constexpr std::string_view duplicate_edge = "duplicate-edge";
inline constexpr std::string_view cycle = "cycle";
// defeater profiles
inline constexpr std::string_view rebuttal_on_necessary = "rebuttal-on-necessary";
inline constexpr std::string_view undercutter_in_layout = "undercutter-in-layout";
inline constexpr std::string_view rebut_only_proof = "rebut-only-proof";
// JSON interchange
inline constexpr std::string_view malformed_json = "malformed-json";
inline constexpr std::string_view bad_schema = "bad-schema";
inline constexpr std::string_view unsupported_version = "unsupported-version";
// API misuse
inline constexpr std::string_view incomparable_qualifiers = "incomparable-qualifiers";
inline constexpr std::string_view empty_meet = "empty-meet";
inline constexpr std::string_view unknown_step = "unknown-step";
inline constexpr std::string_view unknown_node = "unknown-node";
}  // namespace codes

/// Thrown when a value would violate a model invariant or an operation's
/// precondition does not hold. Carries every problem found.
class Error : public std::runtime_error {
 public:
  explicit Error(std::vector<Diagnostic> diagnostics);
  Error(std::string_view code, std::string message);

  const std::string& code() const { return diagnostics_.front().code; }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Either a value or the diagnostics explaining why there is none. Warnings
/// may accompany a value.
template <class T>
struct Outcome {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
  explicit operator bool() const { return ok(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

}  // namespace toulmin
