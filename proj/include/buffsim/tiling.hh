#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "buffsim/nba.hh"

namespace buffsim
{

using Tile = std::size_t;

/// (T, H, V, t_I, t_F).  Tiles are indices into `tiles`.
struct TilingSystem
{
  std::vector<std::string> tiles;
  std::vector<char> horizontal; // |T| × |T|, row-major
  std::vector<char> vertical;
  Tile initial = 0;
  Tile final = 0;

  std::size_t size() const noexcept { return tiles.size(); }
  bool h(Tile t, Tile t2) const { return horizontal[t * size() + t2]; }
  bool v(Tile t, Tile t2) const { return vertical[t * size() + t2]; }
};

/// Line-based format: `tiles: t1 t2 ...`, `h: t t'` and `v: t t'` per pair,
/// `initial: t`, `final: t`; '#' starts a comment line.  Throws ParseError.
TilingSystem parse_tiling_system(std::string_view text);
TilingSystem load_tiling_system(const std::string& path);
std::string emit_tiling_system(const TilingSystem& ts);

/// rows[i][j] is the tile in column j of row i.
struct Tiling
{
  std::size_t width = 0;
  std::vector<std::vector<Tile>> rows;
};

bool is_valid_tiling(const TilingSystem& ts, const Tiling& t);

/// Lexicographically least valid width × height tiling, by row-state
/// dynamic programming over the H-compatible rows.  Throws BudgetExceeded
/// when there are more than `budget` such rows.
std::optional<Tiling> brute_force_tiling(const TilingSystem& ts,
                                         std::size_t width, std::size_t height,
                                         std::size_t budget = 1u << 20);

enum class TilingGameWinner
{
  starter,
  completer,
};

const char* to_string(TilingGameWinner w) noexcept;

/// `reduction`: a completed row containing t_F ends the play in favour of
/// Completer (this is what the simulation encoding implements).
/// `literal`: a stuck player always loses, and Completer wins an infinite
/// play iff t_F occurs in it.
enum class TilingGameRule
{
  reduction,
  literal,
};

/// Finite-state solution of the tiling game on rows of length `width`.
/// Throws BudgetExceeded when there are more than `budget` rows.
TilingGameWinner brute_force_tiling_game(
  const TilingSystem& ts, std::size_t width,
  TilingGameRule rule = TilingGameRule::reduction,
  std::size_t budget = 1u << 16);

/// Blocks of n tagged tiles separated by `$`, binary counter tags (first
/// bit least significant), `#` after the last block.  Lookahead fair
/// simulation holds iff there is no valid n × 2^n tiling.
/// Throws std::invalid_argument for n = 0 or n > 16.
std::pair<Nba, Nba> gen_pspace(const TilingSystem& ts, std::size_t n);

/// Rows of n tiles preceded by a bit; B's states q_t track the tile that
/// starts the next row.  Continuous fair simulation holds iff Starter wins
/// the tiling game (reduction rule).  Throws std::invalid_argument for
/// n = 0 or tile names "0"/"1".
std::pair<Nba, Nba> gen_exptime(const TilingSystem& ts, std::size_t n);

/// Letter names used by the generators.
std::string pspace_letter(const TilingSystem& ts, Tile t, bool bit);

/// The word of gen_pspace's A encoding `tiling` (which must have 2^n rows
/// of width n): `$`, tagged blocks separated by `$`, then `#`^ω.
UltimatelyPeriodicWord pspace_word(const Nba& a, const TilingSystem& ts,
                                   const Tiling& tiling);

} // namespace buffsim
