#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "toulmin/document.hpp"

namespace toulmin::testing {

std::filesystem::path repo_root();
std::string read_file(const std::filesystem::path& path);

/// Parses `text`, failing the current test on any diagnostic.
Document parse_ok(std::string_view text);

/// Codes of every diagnostic, in order.
std::vector<std::string> codes_of(const std::vector<Diagnostic>& diagnostics);

/// Result of running the command-line front end in process.
struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace toulmin::testing
