#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circulant::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kThetaParams = 3,
  kFamilyParams = 4,
  kVerification = 5,
  kBudget = 6,
};

/// Environment variable holding the default census budget.
inline constexpr const char* kBudgetEnv = "CIRCULANT_CENSUS_BUDGET";

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (or the --out file), errors and findings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circulant::cli
