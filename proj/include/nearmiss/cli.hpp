#pragma once

#include <ostream>

namespace nearmiss {

inline constexpr int kExitOk = 0;
/// A verification or identity check failed.
inline constexpr int kExitCheckFailed = 1;
/// Bad flags or arguments.
inline constexpr int kExitUsage = 2;

/// Entry point of the `nearmiss` command. Data goes to `out`, diagnostics to
/// `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace nearmiss
