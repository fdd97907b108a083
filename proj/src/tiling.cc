#include "buffsim/tiling.hh"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "buffsim/errors.hh"
#include "buffsim/game.hh"

namespace buffsim
{

namespace
{

std::vector<std::string> split_ws(const std::string& s)
{
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok)
    out.push_back(tok);
  return out;
}

// Automaton under construction, states and letters referenced by name.
class Builder
{
public:
  explicit Builder(std::vector<std::string> alphabet)
    : alphabet_(std::move(alphabet))
  {
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
      letters_[alphabet_[i]] = static_cast<Letter>(i);
  }

  State state(const std::string& name)
  {
    auto [it, fresh] = states_.emplace(name, names_.size());
    if (fresh)
      names_.push_back(name);
    return it->second;
  }

  void edge(const std::string& from, const std::string& letter,
            const std::string& to)
  {
    const State s = state(from);
    const State d = state(to);
    trans_.push_back({s, letters_.at(letter), d});
  }

  void edges(const std::string& from, const std::vector<std::string>& letters,
             const std::string& to)
  {
    for (const auto& l : letters)
      edge(from, l, to);
  }

  Nba finish(const std::string& initial)
  {
    const State init = state(initial);
    std::vector<State> acc(names_.size());
    for (State q = 0; q < acc.size(); ++q)
      acc[q] = q;
    return Nba(names_, alphabet_, trans_, init, std::move(acc));
  }

private:
  std::vector<std::string> alphabet_;
  std::map<std::string, Letter> letters_;
  std::vector<std::string> names_;
  std::map<std::string, State> states_;
  std::vector<Transition> trans_;
};

// H-compatible rows of the given width, in lexicographic order.
std::vector<std::vector<Tile>> h_rows(const TilingSystem& ts,
                                      std::size_t width, std::size_t budget)
{
  std::vector<std::vector<Tile>> out;
  std::vector<Tile> row;
  auto rec = [&](auto& self) -> void {
    if (row.size() == width)
      {
        if (out.size() >= budget)
          throw BudgetExceeded("more than " + std::to_string(budget)
                               + " H-compatible rows");
        out.push_back(row);
        return;
      }
    for (Tile t = 0; t < ts.size(); ++t)
      if (row.empty() || ts.h(row.back(), t))
        {
          row.push_back(t);
          self(self);
          row.pop_back();
        }
  };
  if (width > 0)
    rec(rec);
  return out;
}

bool v_compatible(const TilingSystem& ts, const std::vector<Tile>& upper,
                  const std::vector<Tile>& lower, std::size_t from_column)
{
  for (std::size_t j = from_column; j < upper.size(); ++j)
    if (!ts.v(upper[j], lower[j]))
      return false;
  return true;
}

bool contains(const std::vector<Tile>& row, Tile t)
{
  return std::find(row.begin(), row.end(), t) != row.end();
}

} // namespace

TilingSystem parse_tiling_system(std::string_view text)
{
  TilingSystem ts;
  std::map<std::string, Tile> index;
  std::vector<std::pair<Tile, Tile>> h, v;
  std::optional<Tile> initial, final;
  bool have_tiles = false;

  auto tile_of = [&](const std::string& n, std::size_t ln) {
    auto it = index.find(n);
    if (it == index.end())
      throw ParseError(ln, "undeclared tile '" + n + "'");
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line))
    {
      ++ln;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#')
        continue;
      auto colon = line.find(':');
      if (colon == std::string::npos)
        throw ParseError(ln, "expected 'key: values'");
      auto key = split_ws(line.substr(0, colon));
      auto vals = split_ws(line.substr(colon + 1));
      if (key.size() != 1)
        throw ParseError(ln, "malformed key");
      if (key[0] == "tiles")
        {
          if (have_tiles)
            throw ParseError(ln, "tiles declared twice");
          have_tiles = true;
          for (const auto& t : vals)
            {
              if (!index.emplace(t, ts.tiles.size()).second)
                throw ParseError(ln, "duplicate tile '" + t + "'");
              ts.tiles.push_back(t);
            }
        }
      else if (key[0] == "h" || key[0] == "v")
        {
          if (vals.size() != 2)
            throw ParseError(ln, "expected two tiles");
          (key[0] == "h" ? h : v)
            .emplace_back(tile_of(vals[0], ln), tile_of(vals[1], ln));
        }
      else if (key[0] == "initial" || key[0] == "final")
        {
          if (vals.size() != 1)
            throw ParseError(ln, "expected one tile");
          auto& slot = key[0] == "initial" ? initial : final;
          if (slot)
            throw ParseError(ln, key[0] + " declared twice");
          slot = tile_of(vals[0], ln);
        }
      else
        throw ParseError(ln, "unknown key '" + key[0] + "'");
    }
  if (ts.tiles.empty())
    throw ParseError(0, "no tiles declared");
  if (!initial || !final)
    throw ParseError(0, "initial and final tiles are required");
  const auto n = ts.size();
  ts.horizontal.assign(n * n, 0);
  ts.vertical.assign(n * n, 0);
  for (auto [a, b] : h)
    ts.horizontal[a * n + b] = 1;
  for (auto [a, b] : v)
    ts.vertical[a * n + b] = 1;
  ts.initial = *initial;
  ts.final = *final;
  return ts;
}

TilingSystem load_tiling_system(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tiling_system(buf.str());
}

std::string emit_tiling_system(const TilingSystem& ts)
{
  std::ostringstream out;
  out << "tiles:";
  for (const auto& t : ts.tiles)
    out << ' ' << t;
  out << '\n';
  for (Tile a = 0; a < ts.size(); ++a)
    for (Tile b = 0; b < ts.size(); ++b)
      if (ts.h(a, b))
        out << "h: " << ts.tiles[a] << ' ' << ts.tiles[b] << '\n';
  for (Tile a = 0; a < ts.size(); ++a)
    for (Tile b = 0; b < ts.size(); ++b)
      if (ts.v(a, b))
        out << "v: " << ts.tiles[a] << ' ' << ts.tiles[b] << '\n';
  out << "initial: " << ts.tiles[ts.initial] << '\n';
  out << "final: " << ts.tiles[ts.final] << '\n';
  return out.str();
}

bool is_valid_tiling(const TilingSystem& ts, const Tiling& t)
{
  if (t.width == 0 || t.rows.empty())
    return false;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    {
      const auto& row = t.rows[i];
      if (row.size() != t.width)
        return false;
      for (Tile x : row)
        if (x >= ts.size())
          return false;
      for (std::size_t j = 1; j < row.size(); ++j)
        if (!ts.h(row[j - 1], row[j]))
          return false;
      if (i > 0 && !v_compatible(ts, t.rows[i - 1], row, 0))
        return false;
    }
  return t.rows.front().front() == ts.initial
         && t.rows.back().back() == ts.final;
}

std::optional<Tiling> brute_force_tiling(const TilingSystem& ts,
                                         std::size_t width, std::size_t height,
                                         std::size_t budget)
{
  if (width == 0 || height == 0)
    return std::nullopt;
  const auto rows = h_rows(ts, width, budget);
  const auto r = rows.size();
  // good[i][x]: row x at index i can be completed to a valid tiling.
  std::vector<std::vector<char>> good(height, std::vector<char>(r, 0));
  for (std::size_t x = 0; x < r; ++x)
    good[height - 1][x] = rows[x].back() == ts.final;
  for (std::size_t i = height - 1; i-- > 0;)
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r && !good[i][x]; ++y)
        good[i][x] = good[i + 1][y] && v_compatible(ts, rows[x], rows[y], 0);

  Tiling out{width, {}};
  std::optional<std::size_t> prev;
  for (std::size_t i = 0; i < height; ++i)
    {
      std::optional<std::size_t> pick;
      for (std::size_t x = 0; x < r && !pick; ++x)
        if (good[i][x]
            && (prev ? v_compatible(ts, rows[*prev], rows[x], 0)
                     : rows[x].front() == ts.initial))
          pick = x;
      if (!pick)
        return std::nullopt;
      out.rows.push_back(rows[*pick]);
      prev = pick;
    }
  return out;
}

const char* to_string(TilingGameWinner w) noexcept
{
  return w == TilingGameWinner::starter ? "starter" : "completer";
}

TilingGameWinner brute_force_tiling_game(const TilingSystem& ts,
                                         std::size_t width,
                                         TilingGameRule rule,
                                         std::size_t budget)
{
  if (width == 0)
    throw std::invalid_argument("row width must be at least 1");
  const auto rows = h_rows(ts, width, budget);
  const auto r = rows.size();
  const bool literal = rule == TilingGameRule::literal;

  // Starter is Duplicator, Completer is Spoiler.  Literal rule: parity with
  // priority 1 once t_F has been seen.  Reduction rule: safety, a t_F row
  // leads to a marked Completer-win position.
  GameArena g(literal ? ConditionKind::parity : ConditionKind::safety);
  using Position = GameArena::Position;
  const std::size_t flags = literal ? 2 : 1;
  // Completer positions (prev row or none, first tile, flag); Starter
  // positions (row, flag).
  std::map<std::tuple<std::size_t, Tile, std::size_t>, Position> cpos;
  std::vector<Position> spos(r * flags, GameArena::none);
  Position completer_wins = GameArena::none;
  const std::size_t none_row = r;

  struct Item
  {
    bool completer;
    std::size_t row;
    Tile t;
    std::size_t flag;
    Position p;
  };
  std::vector<Item> work;
  auto get_c = [&](std::size_t prev, Tile t, std::size_t f) {
    auto [it, fresh] = cpos.emplace(std::tuple{prev, t, f}, 0);
    if (fresh)
      {
        it->second = g.add_position(Player::spoiler, literal ? f : 0,
                                    "C" + std::to_string(prev) + "/"
                                      + ts.tiles[t]);
        work.push_back({true, prev, t, f, it->second});
      }
    return it->second;
  };
  auto get_s = [&](std::size_t row, std::size_t f) {
    auto& slot = spos[row * flags + f];
    if (slot == GameArena::none)
      {
        slot = g.add_position(Player::duplicator, literal ? f : 0,
                              "S" + std::to_string(row));
        work.push_back({false, row, 0, f, slot});
      }
    return slot;
  };

  g.set_start(get_c(none_row, ts.initial, 0));
  while (!work.empty())
    {
      const Item it = work.back();
      work.pop_back();
      if (it.completer)
        {
          for (std::size_t x = 0; x < r; ++x)
            {
              const auto& row = rows[x];
              if (row.front() != it.t
                  || (it.row != none_row
                      && !v_compatible(ts, rows[it.row], row, 1)))
                continue;
              const bool f = contains(row, ts.final);
              if (!literal && f)
                {
                  if (completer_wins == GameArena::none)
                    completer_wins =
                      g.add_position(Player::spoiler, 1, "completer-wins");
                  g.add_edge(it.p, completer_wins);
                }
              else
                g.add_edge(it.p, get_s(x, it.flag | (f ? 1 : 0)));
            }
        }
      else
        {
          for (Tile t = 0; t < ts.size(); ++t)
            if (ts.v(rows[it.row].front(), t))
              g.add_edge(it.p, get_c(it.row, t, it.flag));
        }
    }
  return solve(g).holds ? TilingGameWinner::starter
                        : TilingGameWinner::completer;
}

std::string pspace_letter(const TilingSystem& ts, Tile t, bool bit)
{
  return "(" + ts.tiles[t] + "," + (bit ? "1" : "0") + ")";
}

std::pair<Nba, Nba> gen_pspace(const TilingSystem& ts, std::size_t n)
{
  if (n == 0 || n > 16)
    throw std::invalid_argument("block length must be in 1..16");
  const auto nt = ts.size();
  std::vector<std::string> sigma;
  for (Tile t = 0; t < nt; ++t)
    {
      sigma.push_back(pspace_letter(ts, t, false));
      sigma.push_back(pspace_letter(ts, t, true));
    }
  sigma.push_back("$");
  sigma.push_back("#");
  std::vector<std::string> tagged0, tagged1, tiles_any, no_hash, all = sigma;
  for (Tile t = 0; t < nt; ++t)
    {
      tagged0.push_back(pspace_letter(ts, t, false));
      tagged1.push_back(pspace_letter(ts, t, true));
      tiles_any.push_back(pspace_letter(ts, t, false));
      tiles_any.push_back(pspace_letter(ts, t, true));
    }
  no_hash = tiles_any;
  no_hash.push_back("$");
  auto str = [](std::size_t x) { return std::to_string(x); };

  // A: $ first-block $ block $ ... $ all-ones-block #^ω.
  Builder a(sigma);
  a.state("start");
  a.edge("start", "$", "first.0");
  {
    const std::string first = pspace_letter(ts, ts.initial, false);
    auto at = [&](std::size_t j) {
      return j == n ? std::string("sep") : "first." + str(j);
    };
    a.edge("first.0", first, at(1));
    for (std::size_t j = 1; j < n; ++j)
      a.edges(at(j), tagged0, at(j + 1));
  }
  a.edge("sep", "$", "block.0");
  // block.<j>.z: j tiles read, some tag 0; block.<j>.o: all tags 1 so far.
  auto blk = [&](std::size_t j, bool zero) {
    return j == 0 ? std::string("block.0")
                  : "block." + str(j) + (zero ? ".z" : ".o");
  };
  const std::string last = pspace_letter(ts, ts.final, true);
  for (std::size_t j = 0; j < n; ++j)
    for (bool zero : {false, true})
      {
        if (j == 0 && zero)
          continue;
        const std::string from = blk(j, zero);
        if (j + 1 < n)
          {
            a.edges(from, tagged0, blk(j + 1, true));
            a.edges(from, tagged1, blk(j + 1, zero));
          }
        else
          {
            a.edges(from, tagged0, "sep");
            if (zero)
              a.edges(from, tagged1, "sep");
            else
              a.edge(from, last, "end");
          }
      }
  a.edge("end", "#", "end");

  // B: accepts a word unless it encodes a valid tiling with a correct
  // counter; every error is detected by a branch into the universal sink.
  Builder b(sigma);
  b.state("init");
  b.edges("init", no_hash, "init");
  b.edge("init", "$", "cnt");
  auto chain = [&](const std::string& prefix, const std::string& from) {
    // n arbitrary letters; returns the state reached.
    std::string cur = from;
    for (std::size_t j = 1; j <= n; ++j)
      {
        const std::string next = prefix + "." + str(j);
        b.edges(cur, all, next);
        cur = next;
      }
    return cur;
  };
  for (Tile t = 0; t < nt; ++t)
    {
      const std::string q = "h." + ts.tiles[t];
      b.edge("init", pspace_letter(ts, t, false), q);
      b.edge("init", pspace_letter(ts, t, true), q);
      for (Tile t2 = 0; t2 < nt; ++t2)
        if (!ts.h(t, t2))
          {
            b.edge(q, pspace_letter(ts, t2, false), "sink");
            b.edge(q, pspace_letter(ts, t2, true), "sink");
          }
      b.edges(q, all, "v." + ts.tiles[t] + ".1");
      std::string cur = "v." + ts.tiles[t] + ".1";
      for (std::size_t j = 2; j <= n; ++j)
        {
          const std::string next = "v." + ts.tiles[t] + "." + str(j);
          b.edges(cur, all, next);
          cur = next;
        }
      for (Tile t2 = 0; t2 < nt; ++t2)
        if (!ts.v(t, t2))
          {
            b.edge(cur, pspace_letter(ts, t2, false), "sink");
            b.edge(cur, pspace_letter(ts, t2, true), "sink");
          }
    }
  // Counter increment, least significant bit first: a prefix of 1s turns
  // into 0s, the first 0 into a 1, the rest is copied.
  b.edges("cnt", tagged1, "cnt");
  b.edges("cnt", tagged0, "cnt.flip.0");
  b.edges(chain("cnt.flip", "cnt.flip.0"), tagged0, "sink");
  b.edges("cnt", tagged1, "cnt.carry.0");
  b.edges(chain("cnt.carry", "cnt.carry.0"), tagged1, "sink");
  b.edges("cnt", tagged0, "cnt.rest");
  {
    std::vector<std::string> no_dollar = tiles_any;
    no_dollar.push_back("#");
    b.edges("cnt.rest", no_dollar, "cnt.rest");
  }
  b.edges("cnt.rest", tagged0, "cnt.rest0.0");
  b.edges(chain("cnt.rest0", "cnt.rest0.0"), tagged1, "sink");
  b.edges("cnt.rest", tagged1, "cnt.rest1.0");
  b.edges(chain("cnt.rest1", "cnt.rest1.0"), tagged0, "sink");
  b.edges("sink", all, "sink");

  return {a.finish("start"), b.finish("init")};
}

std::pair<Nba, Nba> gen_exptime(const TilingSystem& ts, std::size_t n)
{
  if (n == 0)
    throw std::invalid_argument("row length must be at least 1");
  const auto nt = ts.size();
  for (const auto& t : ts.tiles)
    if (t == "0" || t == "1")
      throw std::invalid_argument("tile names must differ from the bits");
  std::vector<std::string> sigma = ts.tiles;
  sigma.push_back("0");
  sigma.push_back("1");
  auto str = [](std::size_t x) { return std::to_string(x); };

  // A: 0 w0 b1 w1 b2 w2 ... with H-compatible rows w_i ∈ T^n.  The first
  // bit is fixed to 0 so that the first row goes through B's tile checks.
  Builder a(sigma);
  a.state("start");
  a.edge("start", "0", "col0");
  for (Tile t = 0; t < nt; ++t)
    a.edge("col0", ts.tiles[t], "c.1." + ts.tiles[t]);
  for (std::size_t j = 1; j < n; ++j)
    for (Tile t = 0; t < nt; ++t)
      for (Tile t2 = 0; t2 < nt; ++t2)
        if (ts.h(t, t2))
          a.edge("c." + str(j) + "." + ts.tiles[t], ts.tiles[t2],
                 "c." + str(j + 1) + "." + ts.tiles[t2]);
  for (Tile t = 0; t < nt; ++t)
    {
      a.edge("c." + str(n) + "." + ts.tiles[t], "0", "col0");
      a.edge("c." + str(n) + "." + ts.tiles[t], "1", "col0");
    }

  Builder b(sigma);
  for (Tile t = 0; t < nt; ++t)
    b.state("q." + ts.tiles[t]);
  std::vector<std::string> tiles_or0 = ts.tiles, tiles_or1 = ts.tiles;
  tiles_or0.push_back("0");
  tiles_or1.push_back("1");
  for (Tile t = 0; t < nt; ++t)
    {
      const std::string q = "q." + ts.tiles[t];
      // (P4) and (P5).
      for (Tile t2 = 0; t2 < nt; ++t2)
        if (t2 != ts.final)
          b.edge(q, ts.tiles[t2], q);
      b.edge(q, "1", q);
      for (Tile t2 = 0; t2 < nt; ++t2)
        if (ts.v(t, t2))
          b.edge(q, "0", "q." + ts.tiles[t2]);
      // (P1): the next row does not start with t.
      b.edge(q, "0", "p1." + ts.tiles[t]);
      for (Tile t2 = 0; t2 < nt; ++t2)
        if (t2 != t)
          b.edge("p1." + ts.tiles[t], ts.tiles[t2], "sink");
      // Entry into the shared (P2)/(P3) detectors; the drawn ε-edges are
      // replaced by copies of the detectors' first transitions.
      for (Tile ti = 0; ti < nt; ++ti)
        {
          b.edge(q, ts.tiles[ti], "p3." + ts.tiles[ti] + ".0");
          b.edge(q, ts.tiles[ti], "p2." + ts.tiles[ti] + ".0");
        }
    }
  for (Tile ti = 0; ti < nt; ++ti)
    {
      // (P3): same column of the next row is not V-compatible, across a 0.
      const std::string p3 = "p3." + ts.tiles[ti] + ".";
      for (std::size_t j = 0; j < n; ++j)
        b.edges(p3 + str(j), tiles_or0, p3 + str(j + 1));
      for (Tile t2 = 0; t2 < nt; ++t2)
        if (!ts.v(ti, t2))
          b.edge(p3 + str(n), ts.tiles[t2], "sink");
      // (P2): same column of the next row differs, across a 1.
      const std::string p2 = "p2." + ts.tiles[ti] + ".";
      for (std::size_t j = 0; j < n; ++j)
        b.edges(p2 + str(j), tiles_or1, p2 + str(j + 1));
      for (Tile t2 = 0; t2 < nt; ++t2)
        if (t2 != ti)
          b.edge(p2 + str(n), ts.tiles[t2], "sink");
    }
  b.edges("sink", sigma, "sink");

  return {a.finish("start"), b.finish("q." + ts.tiles[ts.initial])};
}

UltimatelyPeriodicWord pspace_word(const Nba& a, const TilingSystem& ts,
                                   const Tiling& tiling)
{
  const std::size_t n = tiling.width;
  if (n == 0 || n > 16 || tiling.rows.size() != (std::size_t{1} << n))
    throw std::invalid_argument("tiling must have 2^n rows of width n");
  auto letter = [&](const std::string& name) {
    auto l = a.find_letter(name);
    if (!l)
      throw UnknownLetter("unknown letter '" + name + "'");
    return *l;
  };
  UltimatelyPeriodicWord w;
  for (std::size_t i = 0; i < tiling.rows.size(); ++i)
    {
      w.stem.push_back(letter("$"));
      for (std::size_t j = 0; j < n; ++j)
        w.stem.push_back(
          letter(pspace_letter(ts, tiling.rows[i][j], (i >> j) & 1)));
    }
  w.period.push_back(letter("#"));
  return w;
}

} // namespace buffsim
