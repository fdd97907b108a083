#include <doctest.h>

#include <functional>
#include <stdexcept>

#include "buffsim/game.hh"
#include "buffsim/random.hh"

using namespace buffsim;

namespace
{

using Pos = GameArena::Position;

// Positions reachable from `from` when `fixed` plays by `strategy` and the
// other player moves freely, restricted to `allowed`.
std::vector<char> reach_under(const GameArena& g, Player fixed,
                              const std::vector<Pos>& strategy, Pos from,
                              const std::vector<char>& allowed)
{
  std::vector<char> seen(g.size(), 0);
  if (!allowed[from])
    return seen;
  std::vector<Pos> stack{from};
  seen[from] = 1;
  while (!stack.empty())
    {
      auto p = stack.back();
      stack.pop_back();
      std::vector<Pos> next;
      if (g.owner(p) == fixed)
        {
          if (strategy[p] != GameArena::none)
            next.push_back(strategy[p]);
        }
      else
        next = g.successors(p);
      for (auto s : next)
        if (allowed[s] && !seen[s])
          {
            seen[s] = 1;
            stack.push_back(s);
          }
    }
  return seen;
}

// True iff `player` wins every play from `from` that follows `strategy`
// on its positions.  Brute force over the one-player graph that remains.
bool strategy_wins(const GameArena& g, Player player,
                   const std::vector<Pos>& strategy, Pos from)
{
  const auto n = g.size();
  std::vector<char> all(n, 1);
  const bool dup = player == Player::duplicator;
  auto stuck_loss = [&](const std::vector<char>& r) {
    for (Pos p = 0; p < n; ++p)
      if (r[p] && g.owner(p) == player && strategy[p] == GameArena::none)
        return true;
    return false;
  };
  // A cycle inside `inside` through p.
  auto on_cycle = [&](Pos p, const std::vector<char>& inside) {
    std::vector<char> r(n, 0);
    std::vector<Pos> stack;
    auto push_succ = [&](Pos x) {
      std::vector<Pos> next;
      if (g.owner(x) == player)
        {
          if (strategy[x] != GameArena::none)
            next.push_back(strategy[x]);
        }
      else
        next = g.successors(x);
      for (auto s : next)
        if (inside[s] && !r[s])
          {
            r[s] = 1;
            stack.push_back(s);
          }
    };
    push_succ(p);
    while (!stack.empty())
      {
        auto x = stack.back();
        stack.pop_back();
        push_succ(x);
      }
    return bool(r[p]);
  };

  switch (g.condition())
    {
    case ConditionKind::safety:
      {
        auto r = reach_under(g, player, strategy, from, all);
        bool hit = false;
        for (Pos p = 0; p < n; ++p)
          hit = hit || (r[p] && g.mark(p));
        if (dup)
          return !hit && !stuck_loss(r);
        // Spoiler: every play reaches a marked position, or Duplicator gets
        // stuck first.
        std::vector<char> unmarked(n, 0);
        for (Pos p = 0; p < n; ++p)
          unmarked[p] = !g.mark(p);
        auto free = reach_under(g, player, strategy, from, unmarked);
        for (Pos p = 0; p < n; ++p)
          if (free[p])
            {
              if (g.owner(p) == player && strategy[p] == GameArena::none)
                return false;
              if (g.owner(p) != player && g.successors(p).empty())
                continue;
              if (on_cycle(p, unmarked))
                return false;
            }
        return true;
      }
    case ConditionKind::reachability:
      {
        std::vector<char> open(n, 0);
        for (Pos p = 0; p < n; ++p)
          open[p] = !g.mark(p);
        auto r = reach_under(g, player, strategy, from, open);
        if (dup)
          {
            for (Pos p = 0; p < n; ++p)
              if (r[p])
                {
                  if (g.owner(p) == player && strategy[p] == GameArena::none)
                    return false;
                  if (on_cycle(p, open))
                    return false;
                }
            return true;
          }
        auto all_r = reach_under(g, player, strategy, from, all);
        for (Pos p = 0; p < n; ++p)
          if (all_r[p] && g.mark(p))
            return false;
        return !stuck_loss(all_r);
      }
    case ConditionKind::parity:
      {
        auto r = reach_under(g, player, strategy, from, all);
        if (stuck_loss(r))
          return false;
        const int bad_parity = dup ? 1 : 0;
        for (Pos p = 0; p < n; ++p)
          if (r[p] && g.mark(p) % 2 == bad_parity)
            {
              std::vector<char> low(n, 0);
              for (Pos x = 0; x < n; ++x)
                low[x] = r[x] && g.mark(x) <= g.mark(p);
              if (on_cycle(p, low))
                return false;
            }
        return true;
      }
    }
  return false;
}

// Duplicator wins from `from` iff some positional strategy wins; parity,
// safety and reachability games are positionally determined.
bool oracle_duplicator_wins(const GameArena& g, Pos from)
{
  std::vector<Pos> owned;
  for (Pos p = 0; p < g.size(); ++p)
    if (g.owner(p) == Player::duplicator && !g.successors(p).empty())
      owned.push_back(p);
  std::vector<Pos> strategy(g.size(), GameArena::none);
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == owned.size())
      return strategy_wins(g, Player::duplicator, strategy, from);
    for (auto s : g.successors(owned[i]))
      {
        strategy[owned[i]] = s;
        if (search(i + 1))
          return true;
      }
    return false;
  };
  return search(0);
}

GameArena random_arena(Rng& rng, ConditionKind kind)
{
  GameArena g(kind);
  const auto n = uniform(rng, 1, 6);
  const int top = kind == ConditionKind::parity ? 2 : 1;
  for (std::size_t i = 0; i < n; ++i)
    g.add_position(coin(rng, 0.5) ? Player::duplicator : Player::spoiler,
                   static_cast<std::uint8_t>(uniform(rng, 0, top)),
                   "v" + std::to_string(i));
  for (Pos p = 0; p < n; ++p)
    for (Pos s = 0; s < n; ++s)
      if (coin(rng, 0.35))
        g.add_edge(p, s);
  g.set_start(0);
  return g;
}

} // namespace

TEST_CASE("a stuck owner loses")
{
  GameArena g(ConditionKind::parity);
  auto d = g.add_position(Player::duplicator, 0, "d");
  auto s = g.add_position(Player::spoiler, 0, "s");
  g.set_start(d);
  CHECK_FALSE(solve(g).holds);
  g.set_start(s);
  CHECK(solve(g).holds);
}

TEST_CASE("parity: the highest priority seen infinitely often decides")
{
  GameArena g(ConditionKind::parity);
  auto a = g.add_position(Player::spoiler, 1, "a");
  auto b = g.add_position(Player::spoiler, 2, "b");
  auto c = g.add_position(Player::spoiler, 1, "c");
  g.add_edge(a, b);
  g.add_edge(b, a);
  g.add_edge(a, c);
  g.add_edge(c, c);
  g.set_start(a);
  auto v = solve(g);
  CHECK_FALSE(v.holds);
  CHECK(v.winner[c] == Player::spoiler);
  CHECK(v.strategy[a] == c);
  g.set_start(b);
  CHECK_FALSE(solve(g).holds);
}

TEST_CASE("safety and reachability")
{
  GameArena s(ConditionKind::safety);
  auto d = s.add_position(Player::duplicator, 0, "d");
  auto bad = s.add_position(Player::spoiler, 1, "bad");
  auto ok = s.add_position(Player::spoiler, 0, "ok");
  s.add_edge(d, bad);
  s.add_edge(d, ok);
  s.add_edge(ok, d);
  s.add_edge(bad, bad);
  s.set_start(d);
  auto v = solve(s);
  CHECK(v.holds);
  CHECK(v.strategy[d] == ok);

  GameArena r(ConditionKind::reachability);
  auto x = r.add_position(Player::spoiler, 0, "x");
  auto y = r.add_position(Player::spoiler, 0, "y");
  auto t = r.add_position(Player::spoiler, 1, "t");
  r.add_edge(x, t);
  r.add_edge(x, y);
  r.add_edge(y, y);
  r.set_start(x);
  auto w = solve(r);
  CHECK_FALSE(w.holds);
  CHECK(w.strategy[x] == y);
}

TEST_CASE("solve agrees with exhaustive positional strategies")
{
  Rng rng(17);
  for (auto kind : {ConditionKind::safety, ConditionKind::reachability,
                    ConditionKind::parity})
    for (int i = 0; i < 300; ++i)
      {
        GameArena g = random_arena(rng, kind);
        auto v = solve(g);
        for (Pos p = 0; p < g.size(); ++p)
          {
            const bool dup = oracle_duplicator_wins(g, p);
            CHECK(dup == (v.winner[p] == Player::duplicator));
            // The returned strategy wins on its own from every won position.
            CHECK(strategy_wins(g, v.winner[p], v.strategy, p));
          }
      }
}

TEST_CASE("strategy certificate lists the reachable winning edges")
{
  GameArena g(ConditionKind::safety);
  auto d = g.add_position(Player::duplicator, 0, "D");
  auto bad = g.add_position(Player::spoiler, 1, "B");
  auto ok = g.add_position(Player::spoiler, 0, "S");
  g.add_edge(d, bad);
  g.add_edge(d, ok);
  g.add_edge(ok, d);
  g.set_start(d);
  auto v = solve(g);
  CHECK(strategy_certificate(g, v)
        == "# holds, strategy of the duplicator\n"
           "POSITION 0 -> 2\n"
           "LABEL 0 D\n"
           "LABEL 2 S\n");
  CHECK_THROWS_AS(solve(GameArena{}), std::invalid_argument);
  CHECK_THROWS_AS(g.add_position(Player::spoiler, 2, "x"),
                  std::invalid_argument);
}

TEST_CASE("attractor ranks")
{
  GameArena g(ConditionKind::reachability);
  auto a = g.add_position(Player::duplicator, 0, "a");
  auto b = g.add_position(Player::spoiler, 0, "b");
  auto c = g.add_position(Player::spoiler, 1, "c");
  g.add_edge(a, b);
  g.add_edge(b, c);
  std::vector<char> target{0, 0, 1}, all{1, 1, 1};
  auto r = attractor_ranks(g, Player::duplicator, target, all);
  CHECK(r[c] == 0);
  CHECK(r[b] == 1);
  CHECK(r[a] == 2);
}
