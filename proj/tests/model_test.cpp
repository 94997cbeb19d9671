#include <gtest/gtest.h>

#include "toulmin/model.hpp"
#include "support/fixtures.hpp"

namespace toulmin {
namespace {

using testing::codes_of;

QualifierScale certainty() {
  return QualifierScale("certainty", {"necessary", "constructive", "classical", "almost_certain",
                                      "in_light_of_facts"});
}

Body simple_body(const QualifierScale& scale, std::string level) {
  return Body{{"D"}, {"W"}, {"B"}, Qualifier(scale, level), "C", {}};
}

template <class F>
std::string thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

TEST(Identifier, AcceptsDottedNames) {
  EXPECT_TRUE(is_identifier("I.12"));
  EXPECT_TRUE(is_identifier("_x9.y"));
  EXPECT_TRUE(is_identifier("CN.4"));
  EXPECT_FALSE(is_identifier(""));
  EXPECT_FALSE(is_identifier("9a"));
  EXPECT_FALSE(is_identifier(".a"));
  EXPECT_FALSE(is_identifier("a-b"));
  EXPECT_FALSE(is_identifier("a b"));
}

TEST(Statement, RejectsBlankTextAndBadIds) {
  EXPECT_EQ(thrown_code([] { Statement("s", " \t\n"); }), "empty-text");
  EXPECT_EQ(thrown_code([] { Statement("s", ""); }), "empty-text");
  EXPECT_EQ(thrown_code([] { Statement("1s", "text"); }), "bad-identifier");
  Statement s("s", "  padded  ");
  EXPECT_EQ(s.text(), "  padded  ");
}

TEST(Statement, RejectsInvalidUtf8) {
  EXPECT_FALSE(thrown_code([] { Statement("s", std::string("a\xff", 2)); }).empty());
}

TEST(QualifierScale, RejectsEmptyAndDuplicateLevels) {
  EXPECT_EQ(thrown_code([] { QualifierScale("s", {}); }), "empty-scale");
  EXPECT_EQ(thrown_code([] { QualifierScale("s", {"a", "b", "a"}); }), "duplicate-level");
  EXPECT_EQ(thrown_code([] { QualifierScale("s", {"a", "no good"}); }), "bad-identifier");
}

TEST(QualifierScale, BuiltinPutsNecessaryFirst) {
  const auto& scale = QualifierScale::builtin();
  EXPECT_EQ(scale.name(), "default");
  EXPECT_EQ(scale.levels(),
            (std::vector<std::string>{"necessary", "constructive", "classical", "almost_certain",
                                      "plausible", "in_light_of_facts"}));
  EXPECT_EQ(scale.rank_of("necessary"), 0u);
  EXPECT_EQ(scale.rank_of("missing"), std::nullopt);
}

TEST(Qualifier, UnknownLevelIsBadQualifier) {
  EXPECT_EQ(thrown_code([] { Qualifier(certainty(), "plausible"); }), "bad-qualifier");
}

TEST(Qualifier, CompareFollowsScaleOrder) {
  const auto scale = certainty();
  const Qualifier classical(scale, "classical");
  const Qualifier constructive(scale, "constructive");
  EXPECT_EQ(compare(constructive, classical), Ordering::stronger);
  EXPECT_EQ(compare(classical, constructive), Ordering::weaker);
  EXPECT_EQ(compare(classical, classical), Ordering::equal);
  EXPECT_TRUE(Qualifier(scale, "necessary").is_strongest());
  EXPECT_FALSE(classical.is_strongest());
}

TEST(Qualifier, MeetPicksTheLeastCertain) {
  const auto scale = certainty();
  const std::vector<Qualifier> qs = {Qualifier(scale, "constructive"), Qualifier(scale, "classical"),
                                     Qualifier(scale, "constructive")};
  EXPECT_EQ(meet(qs).level(), "classical");
  const std::vector<Qualifier> one = {Qualifier(scale, "necessary")};
  EXPECT_EQ(meet(one).level(), "necessary");
}

TEST(Qualifier, MeetRejectsEmptyAndMixedScales) {
  EXPECT_EQ(thrown_code([] { meet(std::vector<Qualifier>{}); }), "empty-meet");
  const std::vector<Qualifier> mixed = {Qualifier(certainty(), "classical"),
                                        Qualifier(QualifierScale::builtin(), "classical")};
  EXPECT_EQ(thrown_code([&] { meet(mixed); }), "incomparable-qualifiers");
  EXPECT_EQ(thrown_code([&] { compare(mixed[0], mixed[1]); }), "incomparable-qualifiers");
}

TEST(Enums, RoundTripThroughText) {
  for (auto t : {DefeaterTarget::conclusion, DefeaterTarget::inference, DefeaterTarget::both}) {
    EXPECT_EQ(parse_defeater_target(to_string(t)), t);
  }
  for (auto k : {ArgumentKind::regular, ArgumentKind::critical}) {
    EXPECT_EQ(parse_argument_kind(to_string(k)), k);
  }
  EXPECT_EQ(parse_defeater_target("claim"), std::nullopt);
  EXPECT_EQ(parse_argument_kind("Regular"), std::nullopt);
}

TEST(Body, ReportsEveryProblem) {
  Body body{{}, {}, {"B", "B"}, Qualifier(certainty(), "classical"), "C",
            {{"R", DefeaterTarget::inference}, {"R", DefeaterTarget::inference}}};
  EXPECT_EQ(codes_of(check_body(body, "x")),
            (std::vector<std::string>{"empty-field", "empty-field", "duplicate-reference",
                                      "duplicate-reference"}));
}

TEST(Body, SameDefeaterWithDifferentTargetsIsAllowed) {
  Body body = simple_body(certainty(), "classical");
  body.defeaters = {{"R", DefeaterTarget::inference}, {"R", DefeaterTarget::conclusion}};
  EXPECT_TRUE(check_body(body, "x").empty());
}

TEST(Body, ClaimAmongDataIsSelfSupport) {
  Body body = simple_body(certainty(), "classical");
  body.data.push_back("C");
  EXPECT_EQ(codes_of(check_body(body, "x")), std::vector<std::string>{"self-support"});
  EXPECT_EQ(thrown_code([&] { Layout("x", ArgumentKind::regular, body); }), "self-support");
}

TEST(Layout, RejectsBadId) {
  EXPECT_EQ(thrown_code([] {
              Layout("no good", ArgumentKind::regular, simple_body(certainty(), "classical"));
            }),
            "bad-identifier");
}

class ChainTest : public ::testing::Test {
 protected:
  Step step(std::string id, std::vector<Id> data, Id claim, std::string level = "classical") {
    return Step(std::move(id), Body{std::move(data), {"W"}, {}, Qualifier(scale, level), claim, {}});
  }
  QualifierScale scale = certainty();
};

TEST_F(ChainTest, WellFormedChainHasNoDiagnostics) {
  ChainDraft draft{"p", scale, {step("a", {"D"}, "C1"), step("b", {"C1", "E"}, "C2")}};
  EXPECT_TRUE(check_chain(draft).empty());
  ProofChain proof(draft);
  EXPECT_EQ(proof.find_step("b")->body().claim, "C2");
  EXPECT_EQ(proof.find_step("z"), nullptr);
  EXPECT_EQ(proof.to_draft().steps.size(), 2u);
}

TEST_F(ChainTest, EmptyProof) {
  EXPECT_EQ(codes_of(check_chain({"p", scale, {}})), std::vector<std::string>{"empty-proof"});
}

TEST_F(ChainTest, BrokenChain) {
  ChainDraft draft{"p", scale, {step("a", {"D"}, "C1"), step("b", {"E"}, "C2")}};
  const auto found = check_chain(draft);
  ASSERT_EQ(codes_of(found), std::vector<std::string>{"chain-break"});
  EXPECT_EQ(found[0].subject, "b");
  EXPECT_EQ(thrown_code([&] { ProofChain{draft}; }), "chain-break");
}

TEST_F(ChainTest, DuplicateStepIds) {
  ChainDraft draft{"p", scale, {step("a", {"D"}, "C1"), step("a", {"C1"}, "C2")}};
  EXPECT_EQ(codes_of(check_chain(draft)), std::vector<std::string>{"duplicate-id"});
}

TEST_F(ChainTest, QualifierOffTheChainScale) {
  ChainDraft draft{"p", QualifierScale::builtin(), {step("a", {"D"}, "C1")}};
  EXPECT_EQ(codes_of(check_chain(draft)), std::vector<std::string>{"scale-mismatch"});
}

TEST_F(ChainTest, RepeatedClaim) {
  ChainDraft draft{"p", scale,
                   {step("a", {"D"}, "C1"), step("b", {"C1"}, "C2"), step("c", {"C2"}, "C1")}};
  EXPECT_EQ(codes_of(check_chain(draft)),
            (std::vector<std::string>{"claim-reuse", "circular-data"}));
}

TEST_F(ChainTest, ClaimUsedEarlierAsData) {
  ChainDraft draft{"p", scale, {step("a", {"D", "X"}, "C1"), step("b", {"C1"}, "X")}};
  EXPECT_EQ(codes_of(check_chain(draft)), std::vector<std::string>{"circular-data"});
}

}  // namespace
}  // namespace toulmin
