#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ultracheck {

inline constexpr int kExitOk = 0;
// Biconditional disagreement, failed identity or failed self-test.
inline constexpr int kExitEngineFault = 2;
inline constexpr int kExitInput = 64;
inline constexpr int kExitPrecision = 65;

// Runs the command line `args` (without the program name). Reports go to
// `out` unless --out is given; verdict lines and diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ultracheck
