#include "toulmin/defeaters.hpp"

namespace toulmin {

std::string_view to_string(DefeaterKind kind) {
  switch (kind) {
    case DefeaterKind::rebutting: return "rebutting";
    case DefeaterKind::undercutting: return "undercutting";
    case DefeaterKind::both: return "both";
  }
  return "both";
}

std::string_view to_string(ProfileMode mode) {
  return mode == ProfileMode::strict_toulmin ? "strict" : "generalized";
}

std::string_view to_string(DefeatProfile profile) {
  switch (profile) {
    case DefeatProfile::undefeated: return "undefeated";
    case DefeatProfile::rebut_only: return "rebut-only";
    case DefeatProfile::undercut_only: return "undercut-only";
    case DefeatProfile::rebut_and_undercut: return "rebut-and-undercut";
  }
  return "undefeated";
}

std::optional<ProfileMode> parse_profile_mode(std::string_view text) {
  if (text == "strict" || text == "strict_toulmin") return ProfileMode::strict_toulmin;
  if (text == "generalized") return ProfileMode::generalized;
  return std::nullopt;
}

DefeaterKind classify_defeater(const Defeater& defeater) {
  switch (defeater.target) {
    case DefeaterTarget::conclusion: return DefeaterKind::rebutting;
    case DefeaterTarget::inference: return DefeaterKind::undercutting;
    case DefeaterTarget::both: return DefeaterKind::both;
  }
  return DefeaterKind::both;
}

DefeatProfile defeat_profile(const Layout& layout) {
  bool rebutted = false;
  bool undercut = false;
  for (const auto& d : layout.body().defeaters) {
    const auto kind = classify_defeater(d);
    rebutted = rebutted || kind != DefeaterKind::undercutting;
    undercut = undercut || kind != DefeaterKind::rebutting;
  }
  if (rebutted && undercut) return DefeatProfile::rebut_and_undercut;
  if (rebutted) return DefeatProfile::rebut_only;
  if (undercut) return DefeatProfile::undercut_only;
  return DefeatProfile::undefeated;
}

std::vector<Diagnostic> check_defeater_profile(const Layout& layout, ProfileMode mode) {
  std::vector<Diagnostic> out;
  const auto& body = layout.body();
  if (body.defeaters.empty()) return out;

  if (mode == ProfileMode::strict_toulmin) {
    if (body.qualifier.is_strongest()) {
      out.push_back(make_error(codes::rebuttal_on_necessary,
                               "layout '" + layout.id() + "' is qualified '" +
                                   body.qualifier.level() +
                                   "', the strongest level, yet lists defeaters",
                               {}, layout.id()));
    }
    for (const auto& d : body.defeaters) {
      if (classify_defeater(d) != DefeaterKind::rebutting) {
        out.push_back(make_error(codes::undercutter_in_layout,
                                 "layout '" + layout.id() + "' admits undercutting defeater '" +
                                     d.statement + "'",
                                 {}, layout.id()));
      }
    }
    return out;
  }

  if (layout.kind() == ArgumentKind::regular &&
      defeat_profile(layout) == DefeatProfile::rebut_only) {
    out.push_back(make_error(codes::rebut_only_proof,
                             "proof layout '" + layout.id() +
                                 "' is rebutted without being undercut",
                             {}, layout.id()));
  }
  return out;
}

}  // namespace toulmin
