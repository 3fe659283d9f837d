#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace ualg::cli {

/// Exit codes: 0 the property holds / success, 1 the property fails (with
/// `WITNESS ...` lines on `out`), 2 input or usage error (message on `err`).
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;

/// Runs one `ualg` invocation; args[0] is the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ualg::cli
