#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace adjorbit::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kNotInAlgebra = 3,
  kWitnessFailure = 4,
  kZeroElement = 5,
  kInternal = 6,
};

/// orbit analyze|chart|verify|classify --family F --size N --element FILE
///       [--seed S] [--samples K] [--out FILE]
///
/// `args` excludes the program name. JSON goes to `out` (or --out), every
/// diagnostic to `err`. --element also accepts inline JSON starting with '{'.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adjorbit::cli
