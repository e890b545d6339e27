#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace hlag {

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedVerification = 1;
inline constexpr int kExitUsage = 2;

/// Runs one hlag command. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`; `in` is read when an input path is "-".
int run_cli(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace hlag
