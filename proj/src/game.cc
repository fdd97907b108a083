#include "buffsim/game.hh"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace buffsim
{

const char* to_string(Player p) noexcept
{
  return p == Player::duplicator ? "duplicator" : "spoiler";
}

GameArena::Position GameArena::add_position(Player owner, std::uint8_t mark,
                                            std::string label)
{
  if (kind_ == ConditionKind::parity ? mark > 2 : mark > 1)
    throw std::invalid_argument("position mark out of range");
  owner_.push_back(owner);
  mark_.push_back(mark);
  label_.push_back(std::move(label));
  succ_.emplace_back();
  return static_cast<Position>(owner_.size() - 1);
}

void GameArena::add_edge(Position from, Position to)
{
  if (from >= size() || to >= size())
    throw std::out_of_range("edge endpoint out of range");
  succ_[from].push_back(to);
  ++num_edges_;
}

std::string GameArena::to_dot() const
{
  std::ostringstream out;
  out << "digraph arena {\n";
  for (Position p = 0; p < size(); ++p)
    {
      out << "  n" << p << " [label=\"";
      for (char c : label_[p])
        out << (c == '"' ? "\\\"" : std::string(1, c));
      out << "\\n" << int(mark_[p]) << "\" shape="
          << (owner_[p] == Player::spoiler ? "box" : "ellipse")
          << (p == start_ ? " penwidth=2" : "") << "];\n";
    }
  for (Position p = 0; p < size(); ++p)
    for (Position s : succ_[p])
      out << "  n" << p << " -> n" << s << ";\n";
  out << "}\n";
  return out.str();
}

namespace
{

constexpr auto unranked = static_cast<std::size_t>(-1);

class Solver
{
public:
  explicit Solver(const GameArena& g, Verdict& v) : g_(g), v_(v)
  {
    pred_.resize(g.size());
    for (GameArena::Position p = 0; p < g.size(); ++p)
      for (auto s : g.successors(p))
        pred_[s].push_back(p);
  }

  // Attracts `target` for `player` inside `within`.  When `record` is set,
  // player-owned attracted positions outside the target get the first
  // successor (in arena order) of strictly smaller rank as strategy.
  std::vector<std::size_t> attract(Player player,
                                   const std::vector<char>& target,
                                   const std::vector<char>& within,
                                   bool record)
  {
    ++v_.stats.iterations;
    const auto n = g_.size();
    std::vector<std::size_t> rank(n, unranked);
    std::vector<std::size_t> count(n, 0);
    std::deque<GameArena::Position> queue;
    for (GameArena::Position p = 0; p < n; ++p)
      {
        if (!within[p])
          continue;
        for (auto s : g_.successors(p))
          count[p] += within[s] ? 1 : 0;
        // An opponent stuck inside the subgame loses.
        if (target[p] || (g_.owner(p) != player && count[p] == 0))
          {
            rank[p] = 0;
            queue.push_back(p);
          }
      }
    while (!queue.empty())
      {
        auto s = queue.front();
        queue.pop_front();
        for (auto p : pred_[s])
          {
            if (!within[p] || rank[p] != unranked)
              continue;
            if (g_.owner(p) == player || --count[p] == 0)
              {
                rank[p] = rank[s] + 1;
                queue.push_back(p);
              }
          }
      }
    if (record)
      for (GameArena::Position p = 0; p < n; ++p)
        if (rank[p] != unranked && rank[p] > 0 && g_.owner(p) == player)
          for (auto s : g_.successors(p))
            if (within[s] && rank[s] < rank[p])
              {
                v_.strategy[p] = s;
                break;
              }
    return rank;
  }

  // Player `who` keeps the play inside `region`: first successor in it.
  void stay_inside(Player who, const std::vector<char>& region)
  {
    for (GameArena::Position p = 0; p < g_.size(); ++p)
      if (region[p] && g_.owner(p) == who)
        for (auto s : g_.successors(p))
          if (region[s])
            {
              v_.strategy[p] = s;
              break;
            }
  }

  void zielonka(std::vector<char> game)
  {
    const auto n = g_.size();
    for (;;)
      {
        int top = -1;
        for (GameArena::Position p = 0; p < n; ++p)
          if (game[p])
            top = std::max(top, int(g_.mark(p)));
        if (top < 0)
          return;
        const Player alpha = top % 2 == 0 ? Player::duplicator
                                          : Player::spoiler;
        const Player beta = opponent(alpha);
        std::vector<char> u(n, 0);
        for (GameArena::Position p = 0; p < n; ++p)
          u[p] = game[p] && g_.mark(p) == top;
        auto a = attract(alpha, u, game, true);
        std::vector<char> sub(n, 0);
        for (GameArena::Position p = 0; p < n; ++p)
          sub[p] = game[p] && a[p] == unranked;
        zielonka(sub);

        std::vector<char> lost(n, 0);
        bool any = false;
        for (GameArena::Position p = 0; p < n; ++p)
          if (sub[p] && v_.winner[p] == beta)
            {
              lost[p] = 1;
              any = true;
            }
        if (!any)
          {
            for (GameArena::Position p = 0; p < n; ++p)
              if (a[p] != unranked)
                {
                  v_.winner[p] = alpha;
                  if (a[p] == 0 && g_.owner(p) == alpha)
                    for (auto s : g_.successors(p))
                      if (game[s])
                        {
                          v_.strategy[p] = s;
                          break;
                        }
                }
            return;
          }
        auto b = attract(beta, lost, game, true);
        for (GameArena::Position p = 0; p < n; ++p)
          if (b[p] != unranked)
            {
              v_.winner[p] = beta;
              game[p] = 0;
            }
      }
  }

private:
  const GameArena& g_;
  Verdict& v_;
  std::vector<std::vector<GameArena::Position>> pred_;
};

} // namespace

std::vector<std::size_t> attractor_ranks(const GameArena& arena,
                                         Player player,
                                         const std::vector<char>& target,
                                         const std::vector<char>& within)
{
  Verdict scratch;
  scratch.strategy.assign(arena.size(), GameArena::none);
  Solver s(arena, scratch);
  return s.attract(player, target, within, false);
}

Verdict solve(const GameArena& arena)
{
  if (arena.start() == GameArena::none || arena.start() >= arena.size())
    throw std::invalid_argument("arena has no start position");
  const auto n = arena.size();
  Verdict v;
  v.winner.assign(n, Player::duplicator);
  v.strategy.assign(n, GameArena::none);
  v.stats.positions = n;
  v.stats.edges = arena.num_edges();
  Solver s(arena, v);
  std::vector<char> all(n, 1), none_set(n, 0), marked(n, 0);
  for (GameArena::Position p = 0; p < n; ++p)
    marked[p] = arena.mark(p) != 0;

  switch (arena.condition())
    {
    case ConditionKind::safety:
      {
        auto r = s.attract(Player::spoiler, marked, all, true);
        std::vector<char> safe(n, 0);
        for (GameArena::Position p = 0; p < n; ++p)
          {
            safe[p] = r[p] == unranked;
            v.winner[p] = safe[p] ? Player::duplicator : Player::spoiler;
          }
        s.stay_inside(Player::duplicator, safe);
        // Spoiler positions on the avoided set have already won.
        std::vector<char> bad(n, 0);
        for (GameArena::Position p = 0; p < n; ++p)
          bad[p] = marked[p] && arena.owner(p) == Player::spoiler;
        for (GameArena::Position p = 0; p < n; ++p)
          if (bad[p] && !arena.successors(p).empty())
            v.strategy[p] = arena.successors(p).front();
        break;
      }
    case ConditionKind::reachability:
      {
        auto r = s.attract(Player::duplicator, marked, all, true);
        std::vector<char> out(n, 0);
        for (GameArena::Position p = 0; p < n; ++p)
          {
            out[p] = r[p] == unranked;
            v.winner[p] = out[p] ? Player::spoiler : Player::duplicator;
          }
        s.stay_inside(Player::spoiler, out);
        break;
      }
    case ConditionKind::parity:
      {
        // Dead ends first, so that the recursion only sees total subgames.
        auto d = s.attract(Player::duplicator, none_set, all, true);
        std::vector<char> rest(n, 0);
        for (GameArena::Position p = 0; p < n; ++p)
          {
            if (d[p] != unranked)
              v.winner[p] = Player::duplicator;
            rest[p] = d[p] == unranked;
          }
        auto sp = s.attract(Player::spoiler, none_set, rest, true);
        for (GameArena::Position p = 0; p < n; ++p)
          if (sp[p] != unranked)
            {
              v.winner[p] = Player::spoiler;
              rest[p] = 0;
            }
        s.zielonka(rest);
        break;
      }
    }
  // Drop strategy entries of positions the owner does not win.
  for (GameArena::Position p = 0; p < n; ++p)
    if (v.winner[p] != arena.owner(p))
      v.strategy[p] = GameArena::none;
  v.holds = v.winner[arena.start()] == Player::duplicator;
  return v;
}

std::string strategy_certificate(const GameArena& arena, const Verdict& v)
{
  const Player winner = v.winner.at(arena.start());
  std::ostringstream out;
  out << "# " << (v.holds ? "holds" : "fails") << ", strategy of the "
      << to_string(winner) << "\n";
  std::vector<char> seen(arena.size(), 0);
  std::vector<GameArena::Position> order{arena.start()};
  seen[arena.start()] = 1;
  for (std::size_t h = 0; h < order.size(); ++h)
    {
      const auto p = order[h];
      const bool mine = arena.owner(p) == winner;
      for (auto s : arena.successors(p))
        {
          if (mine && v.strategy[p] != s)
            continue;
          if (mine)
            out << "POSITION " << p << " -> " << s << "\n";
          if (!seen[s])
            {
              seen[s] = 1;
              order.push_back(s);
            }
        }
    }
  std::sort(order.begin(), order.end());
  for (auto p : order)
    out << "LABEL " << p << " " << arena.label(p) << "\n";
  return out.str();
}

} // namespace buffsim
