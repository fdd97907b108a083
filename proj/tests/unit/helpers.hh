#pragma once

#include <string>
#include <vector>

#include "buffsim/nba.hh"

namespace test
{

// The two-state automaton used throughout: p -a-> p, p -a-> q, q -b-> p,
// accepting q.
inline buffsim::Nba a1(bool with_accepting = true)
{
  using buffsim::Transition;
  std::vector<buffsim::State> acc;
  if (with_accepting)
    acc.push_back(1);
  return buffsim::Nba({"p", "q"}, {"a", "b"},
                      {Transition{0, 0, 0}, Transition{0, 0, 1},
                       Transition{1, 1, 0}},
                      0, acc);
}

inline bool has_edge(const buffsim::Nba& a, buffsim::State q,
                     buffsim::Letter l, buffsim::State t)
{
  for (auto s : a.successors(q, l))
    if (s == t)
      return true;
  return false;
}

inline buffsim::Word word(const buffsim::Nba& a, const std::string& text)
{
  return buffsim::parse_word(a, text);
}

} // namespace test
