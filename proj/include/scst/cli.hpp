#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace scst {

/// Exit codes: 0 success or property holds, 1 property violated, 2 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one command; `args` excludes the program name. Nothing is written to
/// `out` when the result is kExitInvalid.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scst
