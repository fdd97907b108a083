#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace buffsim
{

enum class Player : std::uint8_t
{
  duplicator, // also plays Prover in quotient games
  spoiler,    // also plays Refuter
};

constexpr Player opponent(Player p) noexcept
{
  return p == Player::duplicator ? Player::spoiler : Player::duplicator;
}

const char* to_string(Player p) noexcept;

/// Winning conditions, always stated for Duplicator.
enum class ConditionKind : std::uint8_t
{
  safety,       // never visit a marked position
  reachability, // visit a marked position
  parity,       // max priority seen infinitely often is even
};

/// Two-player turn-based game graph.
///
/// Every position carries one `mark` byte whose meaning depends on the
/// condition: avoid flag (safety), target flag (reachability) or priority
/// (parity).  A player who cannot move loses.
class GameArena
{
public:
  using Position = std::uint32_t;
  static constexpr Position none = std::numeric_limits<Position>::max();

  explicit GameArena(ConditionKind kind = ConditionKind::safety)
    : kind_(kind)
  {
  }

  ConditionKind condition() const noexcept { return kind_; }

  Position add_position(Player owner, std::uint8_t mark, std::string label);
  /// Successors keep insertion order, which is the order strategies use to
  /// break ties.
  void add_edge(Position from, Position to);

  void set_start(Position p) { start_ = p; }
  Position start() const noexcept { return start_; }

  std::size_t size() const noexcept { return owner_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }
  Player owner(Position p) const { return owner_.at(p); }
  std::uint8_t mark(Position p) const { return mark_.at(p); }
  const std::string& label(Position p) const { return label_.at(p); }
  const std::vector<Position>& successors(Position p) const
  {
    return succ_.at(p);
  }

  std::string to_dot() const;

private:
  ConditionKind kind_;
  Position start_ = none;
  std::size_t num_edges_ = 0;
  std::vector<Player> owner_;
  std::vector<std::uint8_t> mark_;
  std::vector<std::string> label_;
  std::vector<std::vector<Position>> succ_;
};

struct SolveStats
{
  std::size_t positions = 0;
  std::size_t edges = 0;
  std::size_t iterations = 0; // attractor computations
};

/// Winning regions and positional strategies of both players.
struct Verdict
{
  bool holds = false; // Duplicator wins from the start position
  std::vector<Player> winner;
  /// For each position owned by the player winning there: the chosen
  /// successor; GameArena::none elsewhere.
  std::vector<GameArena::Position> strategy;
  SolveStats stats;
};

/// Attractors for safety/reachability, Zielonka's recursive algorithm for
/// parity.  Deterministic in the successor order of the arena.
Verdict solve(const GameArena& arena);

/// The winner's strategy edges on positions reachable from the start (the
/// opponent moving freely), one `POSITION <id> -> <id>` line each in
/// breadth-first order, then `LABEL <id> <label>` for every reached
/// position in id order.
std::string strategy_certificate(const GameArena& arena, const Verdict& v);

/// Attractor of `target` for `player` inside `within`, with the rank of
/// each attracted position (0 on the target, otherwise the round in which it
/// was attracted; SIZE_MAX outside).
std::vector<std::size_t> attractor_ranks(const GameArena& arena,
                                         Player player,
                                         const std::vector<char>& target,
                                         const std::vector<char>& within);

} // namespace buffsim
