#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `spex` binary. `args` excludes the program name.
/// Exit code: 2 on usage errors, 1 when any verification is violated (or a
/// computation fails), 0 otherwise.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Fixed table of small exact checks on constructions, spectra and cycles.
/// Prints one line per check; returns the number of failures.
int run_selftest(std::ostream& out);

}  // namespace spex::cli
