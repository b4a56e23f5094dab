#pragma once

#include <iosfwd>

namespace abn {

// Exit codes of the `abn` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,  // a verify suite found a violation
  kExitDomain = 2,     // e.g. chi = 0, chi >= 0 where chi < 0 is required
  kExitInvalidClass = 3,
  kExitUsage = 64,
};

// Entry point of the command-line tool; writes to out/err instead of the
// process streams so it can be driven from tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace abn
