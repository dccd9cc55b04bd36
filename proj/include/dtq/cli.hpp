#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtq {

/// Exit statuses of run_cli.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_error = 2;

/// Runs the command-line driver. args excludes the program name. Tables go
/// to out, diagnostics to err. Returns exit_ok iff every requested
/// verification passed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtq
