#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arcring {

inline constexpr const char* kReportSchema = "arcring-report/1";

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2 };

/// Runs the command line front end.  args[0] is the program name.  Reports
/// go to out, warnings and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcring
