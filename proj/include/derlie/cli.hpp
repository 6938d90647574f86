#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace derlie {

/// Exit codes of run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification failed, or a search/query found nothing
inline constexpr int kExitUsage = 2;   // bad flags, parse errors, precondition violations

/// Runs one `derlie` subcommand. `args` excludes the program name. Reports go
/// to `out`, diagnostics to `err`; `in` backs the "-" input of `verify`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace derlie
