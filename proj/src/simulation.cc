#include "buffsim/simulation.hh"

#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "buffsim/errors.hh"

namespace buffsim
{

const char* to_string(Acceptance a) noexcept
{
  switch (a)
    {
    case Acceptance::fair:
      return "fair";
    case Acceptance::direct:
      return "direct";
    case Acceptance::delayed:
      return "delayed";
    }
  return "?";
}

const char* to_string(BufferMode m) noexcept
{
  return m == BufferMode::lookahead ? "lookahead" : "continuous";
}

std::optional<Acceptance> parse_acceptance(std::string_view s)
{
  if (s == "fair")
    return Acceptance::fair;
  if (s == "direct")
    return Acceptance::direct;
  if (s == "delayed")
    return Acceptance::delayed;
  return std::nullopt;
}

std::optional<BufferMode> parse_buffer_mode(std::string_view s)
{
  if (s == "lookahead")
    return BufferMode::lookahead;
  if (s == "continuous")
    return BufferMode::continuous;
  return std::nullopt;
}

namespace
{

using Position = GameArena::Position;
using Key = std::vector<std::uint32_t>;

struct KeyHash
{
  std::size_t operator()(const Key& k) const noexcept
  {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto x : k)
      {
        h ^= x;
        h *= 0x100000001b3ull;
      }
    return static_cast<std::size_t>(h);
  }
};

ConditionKind kind_of(Acceptance acc)
{
  return acc == Acceptance::direct ? ConditionKind::safety
                                   : ConditionKind::parity;
}

// Sinks shared by both builders: Spoiler-owned self-loop won by Duplicator
// and Duplicator-owned self-loop won by Spoiler.
struct Sinks
{
  Position dup_wins = GameArena::none;
  Position spo_wins = GameArena::none;

  Position dup(GameArena& g)
  {
    if (dup_wins == GameArena::none)
      {
        dup_wins = g.add_position(Player::spoiler, 0, "dup-wins");
        g.add_edge(dup_wins, dup_wins);
      }
    return dup_wins;
  }
  Position spo(GameArena& g)
  {
    if (spo_wins == GameArena::none)
      {
        spo_wins = g.add_position(Player::duplicator, 1, "spo-wins");
        g.add_edge(spo_wins, spo_wins);
      }
    return spo_wins;
  }
};

// Generic on-the-fly explorer: positions are interned by key and expanded
// in creation order.
class Explorer
{
public:
  Explorer(ConditionKind kind, std::size_t limit) : arena(kind), limit_(limit)
  {
  }

  GameArena arena;
  Sinks sinks;

  // Returns the position for `key`, creating it (and queueing it) if new.
  template <class LabelFn>
  Position intern(Key key, Player owner, std::uint8_t mark, LabelFn&& label)
  {
    auto it = index_.find(key);
    if (it != index_.end())
      return it->second;
    if (limit_ && arena.size() >= limit_)
      throw BudgetExceeded("game arena exceeds " + std::to_string(limit_)
                           + " positions");
    Position p = arena.add_position(owner, mark, label());
    index_.emplace(key, p);
    keys_.resize(p + 1); // sinks leave empty slots
    keys_[p] = std::move(key);
    pending_.push_back(p);
    return p;
  }

  bool next(Position& p, Key& key)
  {
    if (pending_.empty())
      return false;
    p = pending_.front();
    pending_.pop_front();
    key = keys_[p];
    return true;
  }

private:
  std::size_t limit_;
  std::unordered_map<Key, Position, KeyHash> index_;
  std::vector<Key> keys_;
  std::deque<Position> pending_;
};

} // namespace

GameArena build_plain_sim_arena(const Nba& a, const Nba& b0,
                                Acceptance acceptance)
{
  const Nba b = align_alphabet(a, b0);
  Explorer ex(kind_of(acceptance), 0);
  const bool delayed = acceptance == Acceptance::delayed;

  auto s_mark = [&](State q, State qb, bool bit) -> std::uint8_t {
    switch (acceptance)
      {
      case Acceptance::fair:
        return b.is_accepting(qb) ? 2 : a.is_accepting(q) ? 1 : 0;
      case Acceptance::direct:
        return a.is_accepting(q) && !b.is_accepting(qb);
      case Acceptance::delayed:
        return bit ? 1 : 2;
      }
    return 0;
  };
  auto s_pos = [&](State q, State qb, bool bit) {
    return ex.intern({0, q, qb, bit}, Player::spoiler, s_mark(q, qb, bit),
                     [&] {
                       std::string l = "S(" + a.state_name(q) + ","
                                       + b.state_name(qb);
                       if (delayed)
                         l += bit ? ",1" : ",0";
                       return l + ")";
                     });
  };
  auto d_pos = [&](State q, Letter l, State qn, State qb, bool bit) {
    return ex.intern({1, q, l, qn, qb, bit}, Player::duplicator, 0, [&] {
      std::string s = "D(" + a.state_name(q) + "," + a.letter_name(l) + ","
                      + a.state_name(qn) + "," + b.state_name(qb);
      if (delayed)
        s += bit ? ",1" : ",0";
      return s + ")";
    });
  };

  const State qa = a.initial(), qb = b.initial();
  const bool bit0 = delayed && a.is_accepting(qa) && !b.is_accepting(qb);
  ex.arena.set_start(s_pos(qa, qb, bit0));

  Position p;
  Key key;
  while (ex.next(p, key))
    {
      if (key[0] == 0)
        {
          const State q = key[1], qq = key[2];
          const bool bit = key[3];
          if (acceptance == Acceptance::direct && ex.arena.mark(p))
            {
              // Already lost: keep the position total.
              ex.arena.add_edge(p, ex.sinks.spo(ex.arena));
              continue;
            }
          bool moved = false;
          for (Letter l = 0; l < a.num_letters(); ++l)
            for (State qn : a.successors(q, l))
              {
                ex.arena.add_edge(p, d_pos(q, l, qn, qq, bit));
                moved = true;
              }
          if (!moved)
            ex.arena.add_edge(p, ex.sinks.dup(ex.arena));
        }
      else
        {
          const Letter l = key[2];
          const State qn = key[3], qq = key[4];
          const bool bit = key[5];
          bool moved = false;
          for (State t : b.successors(qq, l))
            {
              bool nb = delayed && (bit || a.is_accepting(qn))
                        && !b.is_accepting(t);
              ex.arena.add_edge(p, s_pos(qn, t, nb));
              moved = true;
            }
          if (!moved)
            ex.arena.add_edge(p, ex.sinks.spo(ex.arena));
        }
    }
  return std::move(ex.arena);
}

GameArena build_bounded_buffer_arena(const Nba& a, const Nba& b0,
                                     std::size_t k, BufferMode mode,
                                     Acceptance acceptance, std::size_t limit)
{
  if (k == 0)
    throw std::invalid_argument("buffer bound k must be at least 1");
  const Nba b = align_alphabet(a, b0);
  Explorer ex(kind_of(acceptance), limit);
  const auto nb = b.num_states();

  // Keys: S = {0, q, q', aux, entries...}, D = {1, q, q', aux, entries...};
  // an entry is letter * 2 + accepting flag.
  auto buffer_text = [&](const Key& key) {
    std::string s = "[";
    for (std::size_t i = 4; i < key.size(); ++i)
      {
        if (i > 4)
          s += ' ';
        s += a.letter_name(key[i] / 2);
        if (key[i] % 2)
          s += '*';
      }
    return s + "]";
  };
  auto label = [&](const Key& key) {
    return std::string(key[0] == 0 ? "S(" : "D(") + a.state_name(key[1]) + ","
           + b.state_name(key[2]) + "," + buffer_text(key) + ","
           + std::to_string(key[3]) + ")";
  };
  auto s_mark = [&](bool aux) -> std::uint8_t {
    switch (acceptance)
      {
      case Acceptance::fair:
        return aux ? 2 : 0;
      case Acceptance::direct:
        return 0;
      case Acceptance::delayed:
        return aux ? 1 : 2;
      }
    return 0;
  };
  auto intern = [&](Key key) {
    const bool spo = key[0] == 0;
    std::uint8_t mark =
      spo ? s_mark(key[3])
          : (acceptance == Acceptance::fair && a.is_accepting(key[1]) ? 1 : 0);
    return ex.intern(key, spo ? Player::spoiler : Player::duplicator, mark,
                     [&] { return label(key); });
  };

  const State qa = a.initial(), qb = b.initial();
  const bool init_violation = a.is_accepting(qa) && !b.is_accepting(qb);
  if (acceptance == Acceptance::direct && init_violation)
    {
      ex.arena.set_start(ex.sinks.spo(ex.arena));
      return std::move(ex.arena);
    }
  const std::uint32_t aux0 =
    acceptance == Acceptance::delayed && init_violation ? 1 : 0;
  ex.arena.set_start(intern({0, qa, qb, aux0}));

  std::vector<char> layer(nb * 2), next(nb * 2);
  Position p;
  Key key;
  while (ex.next(p, key))
    {
      const State q = key[1], qq = key[2];
      const std::uint32_t aux = key[3];
      if (key[0] == 0)
        {
          bool moved = false;
          for (Letter l = 0; l < a.num_letters(); ++l)
            for (State qn : a.successors(q, l))
              {
                Key d = key;
                d[0] = 1;
                d[1] = qn;
                d.push_back(l * 2 + (a.is_accepting(qn) ? 1 : 0));
                ex.arena.add_edge(p, intern(std::move(d)));
                moved = true;
              }
          if (!moved)
            ex.arena.add_edge(p, ex.sinks.dup(ex.arena));
          continue;
        }

      const std::size_t len = key.size() - 4;
      bool moved = false;
      auto emit = [&](std::size_t r, State s, std::uint32_t x) {
        Key nk{0, q, s, x};
        nk.insert(nk.end(), key.begin() + 4 + r, key.end());
        ex.arena.add_edge(p, intern(std::move(nk)));
        moved = true;
      };
      if (len < k)
        emit(0, qq, acceptance == Acceptance::delayed ? aux : 0);
      std::fill(layer.begin(), layer.end(), 0);
      layer[qq * 2 + (acceptance == Acceptance::delayed ? aux : 0)] = 1;
      for (std::size_t i = 0; i < len; ++i)
        {
          const Letter l = key[4 + i] / 2;
          const bool flag = key[4 + i] % 2;
          std::fill(next.begin(), next.end(), 0);
          bool alive = false;
          for (State s = 0; s < nb; ++s)
            for (std::uint32_t x = 0; x < 2; ++x)
              {
                if (!layer[s * 2 + x])
                  continue;
                for (State t : b.successors(s, l))
                  {
                    const bool acc = b.is_accepting(t);
                    std::uint32_t nx = 0;
                    switch (acceptance)
                      {
                      case Acceptance::fair:
                        nx = x || acc;
                        break;
                      case Acceptance::direct:
                        if (flag && !acc)
                          continue;
                        break;
                      case Acceptance::delayed:
                        nx = (x || flag) && !acc;
                        break;
                      }
                    next[t * 2 + nx] = 1;
                    alive = true;
                  }
              }
          layer.swap(next);
          if (!alive)
            break;
          const std::size_t r = i + 1;
          if (mode == BufferMode::lookahead && r != len)
            continue;
          for (State s = 0; s < nb; ++s)
            for (std::uint32_t x = 0; x < 2; ++x)
              if (layer[s * 2 + x])
                emit(r, s, x);
        }
      if (!moved)
        ex.arena.add_edge(p, ex.sinks.spo(ex.arena));
    }
  return std::move(ex.arena);
}

bool plain_simulates(const Nba& a, const Nba& b, Acceptance acceptance)
{
  return solve(build_plain_sim_arena(a, b, acceptance)).holds;
}

bool bounded_simulates(const Nba& a, const Nba& b, std::size_t k,
                       BufferMode mode, Acceptance acceptance,
                       std::size_t limit)
{
  return solve(build_bounded_buffer_arena(a, b, k, mode, acceptance, limit))
    .holds;
}

} // namespace buffsim
