#pragma once

#include <cstddef>
#include <vector>

#include "buffsim/nba.hh"

namespace buffsim
{

enum class PreorderKind
{
  direct,
  delayed,
};

const char* to_string(PreorderKind k) noexcept;

/// Preorder on the states of one automaton: q ≤ q' when A(q) is simulated
/// by A(q') in the bounded-k lookahead game with direct or delayed
/// acceptance, closed under transitivity.
struct StatePreorder
{
  std::size_t size = 0;
  PreorderKind kind = PreorderKind::direct;
  std::size_t k = 1;
  std::vector<char> rel; // row-major size × size

  bool le(State q, State q2) const { return rel[q * size + q2]; }
  bool equivalent(State q, State q2) const { return le(q, q2) && le(q2, q); }
  bool strictly_below(State q, State q2) const
  {
    return le(q, q2) && !le(q2, q);
  }
  std::size_t num_pairs() const;
};

/// Throws std::invalid_argument when k = 0.
StatePreorder compute_preorder(const Nba& a, PreorderKind kind, std::size_t k);

/// Merges the classes of r ∩ r⁻¹.  A class is accepting when one of its
/// members is; classes are ordered by their smallest member.
Nba quotient(const Nba& a, const StatePreorder& r);

/// Removes every transition (q, x, q1) for which some (q, x, q2) has q1
/// strictly below q2 (decided on the original transitions), then drops
/// unreachable states.  Throws DelayedPruningRefused for delayed
/// preorders.
Nba prune(const Nba& a, const StatePreorder& r);

/// Drops the states that are unreachable or have an empty language (the
/// initial state is always kept).  Buffered games let Duplicator win when
/// Spoiler runs into a dead end with letters still buffered, so preorders
/// are only sound for quotienting on trimmed automata.
Nba trim(const Nba& a);

/// trim, quotient, then (optionally) prune with a direct preorder recomputed on
/// the quotient.  Throws DelayedPruningRefused when pruning a delayed
/// minimisation.
Nba minimize(const Nba& a, PreorderKind kind, std::size_t k, bool with_prune);

} // namespace buffsim
