#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "buffsim/game.hh"
#include "buffsim/nba.hh"

namespace buffsim
{

enum class Acceptance
{
  fair,
  direct,
  delayed,
};

enum class BufferMode
{
  lookahead,  // Duplicator skips or flushes the whole buffer
  continuous, // Duplicator consumes any prefix
};

const char* to_string(Acceptance a) noexcept;
const char* to_string(BufferMode m) noexcept;
std::optional<Acceptance> parse_acceptance(std::string_view s);
std::optional<BufferMode> parse_buffer_mode(std::string_view s);

/// Classic simulation game between a (Spoiler) and b (Duplicator).
///
/// Spoiler positions S(q,q'), Duplicator positions D(q,a,q_next,q').
///  - fair: parity; S-positions get 2 when q' is accepting, else 1 when q
///    is accepting, else 0.
///  - direct: safety; S-positions with q ∈ F and q' ∉ F' are avoided.
///  - delayed: positions carry an obligation bit, set when Spoiler enters F
///    and cleared when Duplicator enters F'; S-positions get priority 1
///    with a pending obligation and 2 otherwise.
/// Stuck players are routed to explicit winning sinks.  Throws
/// AlphabetMismatch.
GameArena build_plain_sim_arena(const Nba& a, const Nba& b,
                                Acceptance acceptance);

/// Buffered simulation game with a FIFO buffer bounded by k.
///
/// Spoiler appends one letter per round, remembering whether his new state
/// is accepting; Duplicator then consumes r letters, r ∈ {0, |β|}
/// (lookahead) or r ∈ {0..|β|} (continuous), and may only skip while
/// |β| < k.  direct/delayed compare the i-th Duplicator state with the
/// flag of the i-th Spoiler state.  `limit` (0 = none) bounds the number
/// of positions; BudgetExceeded is thrown past it.
/// Throws AlphabetMismatch and std::invalid_argument when k = 0.
GameArena build_bounded_buffer_arena(const Nba& a, const Nba& b, std::size_t k,
                                     BufferMode mode, Acceptance acceptance,
                                     std::size_t limit = 0);

/// solve(build_plain_sim_arena(...)).holds
bool plain_simulates(const Nba& a, const Nba& b, Acceptance acceptance);
/// solve(build_bounded_buffer_arena(...)).holds
bool bounded_simulates(const Nba& a, const Nba& b, std::size_t k,
                       BufferMode mode, Acceptance acceptance,
                       std::size_t limit = 0);

} // namespace buffsim
