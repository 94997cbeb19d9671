#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toulmin::cli {

enum ExitCode : int {
  ok = 0,
  semantic_failure = 1,
  parse_failure = 2,
  usage_failure = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err` as `file:line:col: severity[code]: message`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toulmin::cli
