#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace buffsim
{

struct SuiteResult
{
  std::string name;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0; // monoid cap exceeded
  std::vector<std::string> failures;
};

struct SelftestReport
{
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::size_t cap = 0;
  std::vector<SuiteResult> suites;

  bool ok() const;
};

/// Runs the randomized property suites; `budget` is the number of random
/// instances per suite.  Each suite draws from its own generator derived
/// from `seed`, so reports are reproducible.
SelftestReport run_selftest(std::uint64_t seed, std::size_t budget = 200,
                            std::size_t cap = 50000);

/// One line per suite with pass/fail/skip counts and the skip rate, then
/// the failure messages.
std::string format_report(const SelftestReport& r);

} // namespace buffsim
