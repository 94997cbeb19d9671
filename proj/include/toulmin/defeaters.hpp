#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "toulmin/model.hpp"

namespace toulmin {

// A rebutting defeater is a reason to believe the claim false; an
// undercutting defeater is a reason to deny that the data support the claim.
enum class DefeaterKind { rebutting, undercutting, both };

enum class ProfileMode {
  // Toulmin's own account: no rebuttals on arguments of the strongest force,
  // and no undercutters anywhere.
  strict_toulmin,
  // Every defeater admitted, but a proof cannot be only rebutted.
  generalized,
};

enum class DefeatProfile { undefeated, rebut_only, undercut_only, rebut_and_undercut };

std::string_view to_string(DefeaterKind kind);
std::string_view to_string(ProfileMode mode);
std::string_view to_string(DefeatProfile profile);
std::optional<ProfileMode> parse_profile_mode(std::string_view text);

DefeaterKind classify_defeater(const Defeater& defeater);

DefeatProfile defeat_profile(const Layout& layout);

/// strict_toulmin: `rebuttal-on-necessary` for any defeater on a layout of
/// the strongest qualifier, `undercutter-in-layout` for each defeater that
/// attacks the inference.
/// generalized: `rebut-only-proof` for a regular layout whose defeaters are
/// all rebutting. Critical arguments are exempt.
std::vector<Diagnostic> check_defeater_profile(const Layout& layout,
                                               ProfileMode mode);

}  // namespace toulmin
