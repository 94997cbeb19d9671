#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "toulmin/cli.hpp"
#include "toulmin/corpus.hpp"
#include "toulmin/dsl.hpp"

namespace toulmin::testing {

std::filesystem::path repo_root() { return default_repository_root(); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Document parse_ok(std::string_view text) {
  auto parsed = parse_document(text);
  for (const auto& d : parsed.diagnostics) ADD_FAILURE() << format_diagnostic(d, "<input>");
  if (!parsed.ok()) return Document{};
  return *parsed.value;
}

std::vector<std::string> codes_of(const std::vector<Diagnostic>& diagnostics) {
  std::vector<std::string> out;
  for (const auto& d : diagnostics) out.push_back(d.code);
  return out;
}

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace toulmin::testing
