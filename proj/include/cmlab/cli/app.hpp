#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmlab::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_bad_input = 1,
  exit_budget = 2,
  exit_failed = 3,
};

/// Entire command line front end: gb, dim, verify, suite, build.
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmlab::cli
