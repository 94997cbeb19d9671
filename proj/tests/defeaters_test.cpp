#include <gtest/gtest.h>

#include "toulmin/corpus.hpp"
#include "toulmin/defeaters.hpp"
#include "support/fixtures.hpp"

namespace toulmin {
namespace {

using testing::codes_of;

Layout layout_with(ArgumentKind kind, std::string level, std::vector<DefeaterTarget> targets) {
  Body body{{"D"}, {"W"}, {}, Qualifier(QualifierScale::builtin(), level), "C", {}};
  int n = 0;
  for (auto t : targets) body.defeaters.push_back({"R" + std::to_string(++n), t});
  return Layout("L", kind, std::move(body));
}

TEST(Classify, FollowsTheTarget) {
  EXPECT_EQ(classify_defeater({"R", DefeaterTarget::conclusion}), DefeaterKind::rebutting);
  EXPECT_EQ(classify_defeater({"R", DefeaterTarget::inference}), DefeaterKind::undercutting);
  EXPECT_EQ(classify_defeater({"R", DefeaterTarget::both}), DefeaterKind::both);
}

TEST(Profile, AllFourShapes) {
  using T = DefeaterTarget;
  const auto regular = ArgumentKind::regular;
  EXPECT_EQ(defeat_profile(layout_with(regular, "classical", {})), DefeatProfile::undefeated);
  EXPECT_EQ(defeat_profile(layout_with(regular, "classical", {T::conclusion})),
            DefeatProfile::rebut_only);
  EXPECT_EQ(defeat_profile(layout_with(regular, "classical", {T::inference})),
            DefeatProfile::undercut_only);
  EXPECT_EQ(defeat_profile(layout_with(regular, "classical", {T::both})),
            DefeatProfile::rebut_and_undercut);
  EXPECT_EQ(defeat_profile(layout_with(regular, "classical", {T::conclusion, T::inference})),
            DefeatProfile::rebut_and_undercut);
}

TEST(Generalized, RebutOnlyProofIsRejected) {
  const auto layout = layout_with(ArgumentKind::regular, "classical",
                                  {DefeaterTarget::conclusion, DefeaterTarget::conclusion});
  const auto found = check_defeater_profile(layout, ProfileMode::generalized);
  EXPECT_EQ(codes_of(found), std::vector<std::string>{"rebut-only-proof"});
  EXPECT_EQ(found[0].subject, "L");
}

TEST(Generalized, CriticalArgumentsMayBeRebuttedAlone) {
  const auto layout = layout_with(ArgumentKind::critical, "classical", {DefeaterTarget::conclusion});
  EXPECT_TRUE(check_defeater_profile(layout, ProfileMode::generalized).empty());
}

TEST(Generalized, OtherProfilesPass) {
  using T = DefeaterTarget;
  for (const auto& targets : std::vector<std::vector<T>>{
           {}, {T::inference}, {T::both}, {T::conclusion, T::inference}}) {
    EXPECT_TRUE(check_defeater_profile(layout_with(ArgumentKind::regular, "necessary", targets),
                                       ProfileMode::generalized)
                    .empty());
  }
}

TEST(Strict, NecessaryLayoutMayNotListDefeaters) {
  const auto layout = layout_with(ArgumentKind::regular, "necessary", {DefeaterTarget::conclusion});
  EXPECT_EQ(codes_of(check_defeater_profile(layout, ProfileMode::strict_toulmin)),
            std::vector<std::string>{"rebuttal-on-necessary"});
}

TEST(Strict, UndercuttersAreNotAdmitted) {
  const auto layout = layout_with(ArgumentKind::regular, "plausible",
                                  {DefeaterTarget::inference, DefeaterTarget::conclusion,
                                   DefeaterTarget::both});
  EXPECT_EQ(codes_of(check_defeater_profile(layout, ProfileMode::strict_toulmin)),
            (std::vector<std::string>{"undercutter-in-layout", "undercutter-in-layout"}));
}

TEST(Strict, RebuttalOnWeakerQualifierPasses) {
  const auto layout = layout_with(ArgumentKind::regular, "plausible", {DefeaterTarget::conclusion});
  EXPECT_TRUE(check_defeater_profile(layout, ProfileMode::strict_toulmin).empty());
}

TEST(Corpus, ModeSplit) {
  const auto theaetetus = load_corpus_entry("theaetetus").layouts()[0];
  const auto aberdein = load_corpus_entry("fct_aberdein").layouts()[0];
  EXPECT_TRUE(check_defeater_profile(theaetetus, ProfileMode::strict_toulmin).empty());
  EXPECT_FALSE(check_defeater_profile(aberdein, ProfileMode::strict_toulmin).empty());
  EXPECT_TRUE(check_defeater_profile(aberdein, ProfileMode::generalized).empty());
  EXPECT_EQ(defeat_profile(aberdein), DefeatProfile::undercut_only);
}

TEST(Modes, ParseAndPrint) {
  EXPECT_EQ(parse_profile_mode("strict"), ProfileMode::strict_toulmin);
  EXPECT_EQ(parse_profile_mode("strict_toulmin"), ProfileMode::strict_toulmin);
  EXPECT_EQ(parse_profile_mode("generalized"), ProfileMode::generalized);
  EXPECT_EQ(parse_profile_mode("loose"), std::nullopt);
  EXPECT_EQ(to_string(DefeatProfile::rebut_and_undercut), "rebut-and-undercut");
}

}  // namespace
}  // namespace toulmin
