#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "toulmin/document.hpp"

namespace toulmin {

inline constexpr int json_format_version = 1;
inline constexpr std::size_t dot_wrap_width = 40;

/// Greedy word wrap counting code points, not bytes. Newlines in `text`
/// force a break; words longer than `width` are split.
std::vector<std::string> wrap_text(std::string_view text, std::size_t width);

/// Quotes a DOT label: wraps each text to dot_wrap_width, escapes `"` and
/// `\`, and joins lines with `\n`.
std::string dot_label(const std::vector<std::string>& texts);

/// Toulmin diagram: nodes `<id>_D`, `<id>_W`, `<id>_B`, `<id>_Q`, `<id>_C`
/// and one `<id>_R` per defeater (numbered when there are several), with
/// edges D->Q (no arrowhead), Q->C, R->Q, W->Q, B->W. Statement texts come
/// from `doc`.
std::string to_dot(const Document& doc, const Layout& layout);
/// One cluster per step; the claim of step i is drawn once and labelled
/// "C_i (or D_i+1)".
std::string to_dot(const Document& doc, const ProofChain& proof);
std::string to_dot(const DependencyGraph& graph);

nlohmann::ordered_json to_json_value(const QualifierScale& scale);
nlohmann::ordered_json to_json_value(const Statement& statement);
nlohmann::ordered_json to_json_value(const Layout& layout);
nlohmann::ordered_json to_json_value(const ProofChain& proof);
nlohmann::ordered_json to_json_value(const DependencyGraph& graph);
nlohmann::ordered_json to_json_value(const Document& doc);

/// `{"format_version": 1, "scales", "statements", "layouts", "proofs",
/// "graphs"}`, pretty-printed with two-space indent and a trailing newline.
std::string to_json(const Document& doc);

/// Inverse of to_json. Rejects any format_version other than 1.
Outcome<Document> from_json(std::string_view text);

}  // namespace toulmin
