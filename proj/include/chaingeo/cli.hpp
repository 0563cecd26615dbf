#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chaingeo {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// The chaingeo command line. `args` excludes the program name. Output goes
/// to `out`; usage errors and plain-text domain errors go to `err`, while
/// with --json a domain error is written to `out` as {"error": {...}}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chaingeo
