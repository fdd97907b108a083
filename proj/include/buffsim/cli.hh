#pragma once

#include <iosfwd>

namespace buffsim
{

/// Exit codes shared by every subcommand.
enum ExitCode : int
{
  exit_holds = 0,
  exit_fails = 1,
  exit_error = 2,
};

/// Entry point of the `buffsim` tool: subcommands sim, incl, minimize, gen,
/// monoid and selftest.  The verdict goes to `out` as a single
/// `RESULT holds|fails|inconclusive` line (monoid and selftest print their
/// listing first); diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

} // namespace buffsim
