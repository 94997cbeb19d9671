#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "toulmin/corpus.hpp"
#include "toulmin/dsl.hpp"
#include "support/fixtures.hpp"

namespace toulmin {
namespace {

using testing::read_file;
using testing::run_cli;

std::string corpus(const std::string& name) {
  return (testing::repo_root() / "corpus" / (name + ".tlm")).string();
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("toulmin_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& file) const { return (dir_ / file).string(); }
  std::string write(const std::string& file, const std::string& text) {
    std::ofstream(path(file), std::ios::binary) << text;
    return path(file);
  }
  std::filesystem::path dir_;
};

TEST(Cli, ParsePrintsCanonicalText) {
  const auto r = run_cli({"parse", corpus("sqrt2")});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, serialize_document(load_corpus_entry("sqrt2")));
  EXPECT_EQ(r.err, "");
}

TEST(Cli, ParseJsonMatchesGolden) {
  const auto r = run_cli({"parse", corpus("carroll_frag"), "--json"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, read_file(testing::repo_root() / "corpus/golden/carroll_frag.json"));
}

TEST(Cli, ValidateWholeCorpus) {
  for (const auto& e : corpus_entries()) {
    const auto r = run_cli({"validate", corpus(e.name), "--mode", "generalized"});
    EXPECT_EQ(r.exit_code, 0) << e.name << r.err;
    EXPECT_EQ(r.err, "");
  }
}

TEST(Cli, StrictModeRejectsAberdein) {
  const auto r = run_cli({"validate", corpus("fct_aberdein"), "--mode", "strict"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find(corpus("fct_aberdein") + ":17:1: error[undercutter-in-layout]: "),
            std::string::npos)
      << r.err;
  EXPECT_EQ(run_cli({"validate", corpus("theaetetus"), "--mode", "strict"}).exit_code, 0);
}

TEST(Cli, ComposeSqrt2) {
  const auto r = run_cli({"compose", corpus("sqrt2"), "sqrt2"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\n  qualifier classical on certainty;\n"), std::string::npos) << r.out;
  EXPECT_NE(run_cli({"compose", corpus("sqrt2"), "sqrt2", "--json"}).out.find(R"("level": "classical")"),
            std::string::npos);
  EXPECT_EQ(run_cli({"compose", corpus("sqrt2"), "sqrt2", "--dot"}).out.rfind("digraph \"sqrt2\" {", 0),
            0u);
  EXPECT_EQ(run_cli({"compose", corpus("sqrt2"), "sqrt2", "--dot", "--json"}).exit_code, 3);
}

TEST(Cli, Weakest) {
  EXPECT_EQ(run_cli({"weakest", corpus("ivt"), "ivt"}).out, "s4\n");
  EXPECT_EQ(run_cli({"weakest", corpus("sqrt2"), "sqrt2"}).out, "s1\n");
  const auto missing = run_cli({"weakest", corpus("ivt"), "nope"});
  EXPECT_EQ(missing.exit_code, 1);
  EXPECT_NE(missing.err.find("error[unknown-reference]"), std::string::npos);
}

TEST_F(TempDir, SubstituteWritesANewFile) {
  const auto out = path("constructive.tlm");
  const auto r = run_cli({"substitute", corpus("sqrt2"), "sqrt2", "s1", "--warrant", "W1c",
                          "--backing", "B1c", "--qualifier", "constructive", "-o", out});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "");
  const auto composed = run_cli({"compose", out, "sqrt2"});
  EXPECT_NE(composed.out.find("qualifier constructive on certainty;"), std::string::npos);
  EXPECT_EQ(run_cli({"weakest", out, "sqrt2"}).out, "s1\ns2\n");
}

TEST_F(TempDir, SubstituteRefusesToOverwriteItsInput) {
  const auto input = write("in.tlm", read_file(corpus("sqrt2")));
  const auto r = run_cli({"substitute", input, "sqrt2", "s1", "--warrant", "W1c", "--qualifier",
                          "constructive", "-o", input});
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_EQ(read_file(input), read_file(corpus("sqrt2")));
}

TEST(Cli, SubstituteErrors) {
  const std::vector<std::string> base = {"substitute", corpus("sqrt2"), "sqrt2"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return run_cli(args);
  };
  EXPECT_EQ(with({"s9", "--warrant", "W1c", "--qualifier", "constructive"}).exit_code, 1);
  EXPECT_EQ(with({"s1", "--warrant", "W1c", "--qualifier", "plausible"}).exit_code, 1);
  EXPECT_EQ(with({"s1", "--warrant", "Nope", "--qualifier", "constructive"}).exit_code, 1);
  EXPECT_EQ(with({"s1", "--qualifier", "constructive"}).exit_code, 3);
}

TEST(Cli, Defeaters) {
  const auto zermelo = run_cli({"defeaters", corpus("zermelo"), "zermelo"});
  EXPECT_EQ(zermelo.exit_code, 0);
  EXPECT_EQ(zermelo.out, "R rebutting\nprofile rebut-only\n");
  const auto aberdein = run_cli({"defeaters", corpus("fct_aberdein"), "fct_aberdein", "--mode", "strict"});
  EXPECT_EQ(aberdein.exit_code, 1);
  EXPECT_EQ(aberdein.out, "R1 undercutting\nR2 undercutting\nprofile undercut-only\n");
  EXPECT_EQ(run_cli({"defeaters", corpus("fct_aberdein"), "fct_aberdein"}).exit_code, 0);
  EXPECT_EQ(run_cli({"defeaters", corpus("sqrt2"), "sqrt2"}).out, "profile undefeated\n");
  EXPECT_EQ(run_cli({"defeaters", corpus("zermelo"), "zermelo", "--mode", "lax"}).exit_code, 3);
}

TEST_F(TempDir, RebutOnlyProofFailsValidation) {
  const auto file = write("rebut.tlm", R"(layout L {
  data "d"; warrant "w"; qualifier classical; claim "c";
  defeater "r" targets conclusion;
}
)");
  const auto r = run_cli({"validate", file});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.err, file + ":1:1: error[rebut-only-proof]: proof layout 'L' is rebutted without being undercut\n");
}

TEST_F(TempDir, CyclesAreReported) {
  const auto file = write("cyclic.tlm", R"(graph g {
  node a kind theorem;
  node b kind theorem;
  edge a -> b;
  edge b -> a;
}
)");
  const auto cycles = run_cli({"graph", "cycles", file, "g"});
  EXPECT_EQ(cycles.exit_code, 1);
  EXPECT_EQ(cycles.out, "a -> b -> a\n");
  const auto validate = run_cli({"validate", file});
  EXPECT_EQ(validate.exit_code, 1);
  EXPECT_NE(validate.err.find(":1:1: error[cycle]: graph 'g' has cycle a -> b -> a"),
            std::string::npos)
      << validate.err;
}

TEST(Cli, GraphCommands) {
  EXPECT_EQ(run_cli({"graph", "cycles", corpus("carroll_frag"), "carroll"}).exit_code, 0);
  EXPECT_EQ(run_cli({"graph", "deps", corpus("vitrac_frag"), "vitrac", "I.12"}).out, "I.10\nI.8\n");
  EXPECT_EQ(run_cli({"graph", "deps", corpus("euclid_i4"), "euclid_i4", "SYN.1", "--transitive"}).out,
            "CN.4\nI.4\n");
  EXPECT_EQ(run_cli({"graph", "deps", corpus("euclid_i4"), "euclid_i4", "I.99"}).exit_code, 1);
  const auto diff = run_cli({"graph", "diff", corpus("carroll_frag"), "carroll",
                             corpus("vitrac_frag"), "vitrac"});
  EXPECT_EQ(diff.exit_code, 0);
  EXPECT_EQ(diff.out, "I.12: -I.9, +I.10, +I.8\n");
  EXPECT_EQ(run_cli({"graph", "diff", corpus("carroll_frag"), "carroll", corpus("carroll_frag"),
                     "carroll"})
                .out,
            "no differences\n");
  EXPECT_EQ(run_cli({"graph", "diff", corpus("carroll_frag"), "carroll", corpus("euclid_i4"),
                     "euclid_i4"})
                .out,
            "-node I.10\n-node I.12\n-node I.8\n-node I.9\n+node CN.4\n+node I.4\n+node SYN.1\n"
            "+node SYN.2\n");
}

TEST_F(TempDir, RenderToFile) {
  const auto out = path("t.dot");
  const auto r = run_cli({"render", corpus("theaetetus"), "theaetetus", "--format", "dot", "-o", out});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(read_file(out), read_file(testing::repo_root() / "corpus/golden/theaetetus.dot"));
  EXPECT_EQ(run_cli({"render", corpus("carroll_frag"), "carroll", "--format", "json"})
                .out.rfind("{\n  \"name\": \"carroll\"", 0),
            0u);
  EXPECT_EQ(run_cli({"render", corpus("carroll_frag"), "nothing", "--format", "dot"}).exit_code, 1);
  EXPECT_EQ(run_cli({"render", corpus("carroll_frag"), "carroll", "--format", "svg"}).exit_code, 3);
}

TEST_F(TempDir, ExitCodes) {
  EXPECT_EQ(run_cli({}).exit_code, 3);
  EXPECT_EQ(run_cli({"frobnicate"}).exit_code, 3);
  EXPECT_EQ(run_cli({"parse"}).exit_code, 3);
  EXPECT_EQ(run_cli({"parse", path("missing.tlm")}).exit_code, 3);
  const auto help = run_cli({"--help"});
  EXPECT_EQ(help.exit_code, 0);
  EXPECT_NE(help.out.find("validate"), std::string::npos);
  EXPECT_NE(run_cli({"graph", "diff", "--help"}).out.find("file_b"), std::string::npos);

  const auto broken = write("broken.tlm", "stmt s \"unterminated\n");
  const auto parse_error = run_cli({"parse", broken});
  EXPECT_EQ(parse_error.exit_code, 2);
  EXPECT_EQ(parse_error.err, broken + ":1:8: error[unterminated-string]: unterminated string\n");

  const auto dangling = write("dangling.tlm", R"(layout L { data D; warrant "w"; qualifier classical; claim "c"; })");
  const auto semantic = run_cli({"parse", dangling});
  EXPECT_EQ(semantic.exit_code, 1);
  EXPECT_NE(semantic.err.find(":1:17: error[unknown-reference]"), std::string::npos) << semantic.err;

  const auto bad_json = write("bad.json", "{");
  EXPECT_EQ(run_cli({"parse", bad_json}).exit_code, 2);
}

TEST_F(TempDir, JsonInputIsAccepted) {
  const auto file = write("sqrt2.json", run_cli({"parse", corpus("sqrt2"), "--json"}).out);
  EXPECT_EQ(run_cli({"weakest", file, "sqrt2"}).out, "s1\n");
}

TEST(Cli, SuccessMeansNoErrorDiagnostics) {
  const std::vector<std::vector<std::string>> commands = {
      {"parse", corpus("ivt")},
      {"validate", corpus("zermelo")},
      {"compose", corpus("ivt"), "ivt"},
      {"defeaters", corpus("zermelo"), "zermelo"},
      {"graph", "cycles", corpus("euclid_i4"), "euclid_i4"},
      {"render", corpus("ivt"), "ivt", "--format", "dot"},
  };
  for (const auto& args : commands) {
    const auto first = run_cli(args);
    EXPECT_EQ(first.exit_code, 0) << args[0];
    EXPECT_EQ(first.err.find("error["), std::string::npos) << first.err;
    const auto second = run_cli(args);
    EXPECT_EQ(first.out, second.out) << args[0];
  }
}

}  // namespace
}  // namespace toulmin
