#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "buffsim/game.hh"
#include "buffsim/monoid.hh"
#include "buffsim/nba.hh"

namespace buffsim
{

enum class QuotientRelation
{
  continuous_fair,
  lookahead_fair,
};

const char* to_string(QuotientRelation r) noexcept;

/// Quotient game arena plus the bookkeeping needed to print certificates
/// and replay strategies.
///
/// Refuter (Spoiler-owned) positions R(q, q', β) are identified by q and
/// the set of b-states reachable from q' on β; Prover (Duplicator-owned)
/// positions by (q_i, w2, S) where S is the set of q_i' Prover may pick
/// (w2 is dropped in the lookahead game, where it does not influence the
/// successors).  Positions merged this way have identical successor sets.
/// Each position keeps the first move that created it as representative.
struct QuotientArena
{
  QuotientRelation relation;
  GameArena arena{ConditionKind::safety};

  enum class Kind : std::uint8_t
  {
    refuter,
    prover,
    sink,
  };
  /// Representative of a position.  Refuter positions use q, qb and
  /// beta; Prover positions additionally w1, w2 and qi (the Refuter move
  /// that first created them, from the Refuter representative q, qb, beta).
  struct Info
  {
    Kind kind = Kind::sink;
    State q = 0;
    State qb = 0; // a state of b
    TransitionMonoid::Index beta = 0;
    TransitionMonoid::Index w1 = 0;
    TransitionMonoid::Index w2 = 0;
    State qi = 0;
  };
  /// For R -> P edges: (w1, w2, q_i) of the move.  For P -> R edges:
  /// q_i' in `state` and the Prover position's w1/w2.
  struct Move
  {
    TransitionMonoid::Index w1 = 0;
    TransitionMonoid::Index w2 = 0;
    State state = 0;
  };

  using Bits = std::vector<std::uint64_t>;

  std::vector<Info> info;
  std::vector<std::vector<Move>> moves; // parallel to arena successors
  /// Refuter positions: the b-states reachable from q' on β.
  std::vector<Bits> reach;
  /// Keys: {q, reach...} for Refuter, {q_i, w2, S...} (continuous) or
  /// {q_i, S...} (lookahead) for Prover.
  std::map<Bits, GameArena::Position> refuter_index;
  std::map<Bits, GameArena::Position> prover_index;
};

/// The monoid must be the one of disjoint_union(a, b).
/// Throws AlphabetMismatch and std::invalid_argument on a monoid of the
/// wrong dimension.
QuotientArena build_continuous_quotient(const Nba& a, const Nba& b,
                                        const TransitionMonoid& m);
QuotientArena build_lookahead_quotient(const Nba& a, const Nba& b,
                                       const TransitionMonoid& m);

enum class Outcome
{
  holds,
  fails,
  inconclusive,
};

const char* to_string(Outcome o) noexcept;

struct SimulationReport
{
  QuotientRelation relation;
  Outcome outcome = Outcome::inconclusive;
  std::size_t monoid_size = 0; // partial size when inconclusive
  std::size_t arena_size = 0;
  std::optional<TransitionMonoid> monoid;
  std::optional<QuotientArena> game;
  std::optional<Verdict> verdict;
  /// Witness of every class used by the winner's strategy.
  std::map<TransitionMonoid::Index, Word> witness_words;

  bool holds() const noexcept { return outcome == Outcome::holds; }
};

/// Disjoint union, monoid, quotient arena, safety solve.  A monoid past
/// `cap` yields Outcome::inconclusive.  Throws AlphabetMismatch.
SimulationReport decide(const Nba& a, const Nba& b, QuotientRelation relation,
                        std::size_t cap);

/// Short deterministic text summary.
std::string summary(const SimulationReport& r);

/// Strategy edges of the winner reachable from the start, one
/// `POSITION <id> -> <id> [witness: w1=..., w2=...]` line each, followed by
/// `LABEL <id> <text>` lines for every position mentioned.
std::string certificate(const SimulationReport& r, const Nba& a);

/// Replays the Prover strategy against an accepting Spoiler lasso run of
/// `a` for at least `rounds` rounds and returns the Duplicator run over b
/// (letters follow a's alphabet).  Every consumed segment and every pending
/// idempotent loop is realised by a concrete path of b.
/// Throws std::invalid_argument unless r.holds(), ReplayFailure when the
/// strategy cannot be realised.
RunPath replay(const SimulationReport& r, const Nba& a, const Nba& b,
               const LassoRun& spoiler, std::size_t rounds = 3);

} // namespace buffsim
