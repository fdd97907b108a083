#include "buffsim/quotient.hh"

#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "buffsim/errors.hh"

namespace buffsim
{

const char* to_string(QuotientRelation r) noexcept
{
  return r == QuotientRelation::continuous_fair ? "continuous-fair"
                                                : "lookahead-fair";
}

const char* to_string(Outcome o) noexcept
{
  switch (o)
    {
    case Outcome::holds:
      return "holds";
    case Outcome::fails:
      return "fails";
    case Outcome::inconclusive:
      return "inconclusive";
    }
  return "?";
}

namespace
{

using Bits = QuotientArena::Bits;
using Index = TransitionMonoid::Index;
using Position = GameArena::Position;

std::size_t words_for(std::size_t n)
{
  return (n + 63) / 64;
}
bool test(const Bits& b, std::size_t i)
{
  return (b[i / 64] >> (i % 64)) & 1u;
}
void put(Bits& b, std::size_t i)
{
  b[i / 64] |= std::uint64_t{1} << (i % 64);
}
bool empty(const Bits& b)
{
  for (auto w : b)
    if (w)
      return false;
  return true;
}

struct BitsHash
{
  std::size_t operator()(const Bits& k) const noexcept
  {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto x : k)
      {
        h ^= x;
        h *= 0x100000001b3ull;
        h ^= h >> 31;
      }
    return static_cast<std::size_t>(h);
  }
};

// Path relation of b (on one letter or one monoid class) as rows of bitsets.
struct Relation
{
  std::size_t n = 0, w = 0;
  std::vector<std::uint64_t> rows;

  Bits image(const Bits& from) const
  {
    Bits out(w, 0);
    for (std::size_t s = 0; s < n; ++s)
      if (test(from, s))
        for (std::size_t i = 0; i < w; ++i)
          out[i] |= rows[s * w + i];
    return out;
  }
  Bits row(std::size_t s) const
  {
    return Bits(rows.begin() + s * w, rows.begin() + (s + 1) * w);
  }
};

// Restriction of a profile of a ⊎ b to b's states.
Relation b_relation(const Profile& p, std::size_t off, std::size_t nb)
{
  Relation r{nb, words_for(nb), {}};
  r.rows.assign(nb * r.w, 0);
  for (std::size_t s = 0; s < nb; ++s)
    for (std::size_t t = 0; t < nb; ++t)
      if (p.has_path(off + s, off + t))
        r.rows[s * r.w + t / 64] |= std::uint64_t{1} << (t % 64);
  return r;
}

Bits b_diag0(const Profile& p, std::size_t off, std::size_t nb)
{
  Bits d(words_for(nb), 0);
  for (std::size_t s = 0; s < nb; ++s)
    if (p.has_accepting_path(off + s, off + s))
      put(d, s);
  return d;
}

// Shared context of the quotient builders and replay.
struct Context
{
  const TransitionMonoid& m;
  Nba u;
  Nba bb;
  std::size_t na, nb, wa, wb;
  bool continuous;
  std::vector<Index> idem; // non-identity idempotents, index order
  std::unordered_map<Index, Relation> idem_rel;
  std::unordered_map<Index, Bits> idem_diag_b;
  std::unordered_map<Index, std::vector<char>> idem_diag_a;

  Context(const Nba& a, const Nba& b, const TransitionMonoid& mon, bool cont)
    : m(mon),
      u(disjoint_union(a, b)),
      bb(align_alphabet(a, b)),
      na(a.num_states()),
      nb(b.num_states()),
      wa(words_for(na)),
      wb(words_for(nb)),
      continuous(cont)
  {
    if (m.dimension() != u.num_states() || m.num_letters() != u.num_letters())
      throw std::invalid_argument(
        "monoid does not belong to the disjoint union of the automata");
    for (Index e : m.idempotent_indices())
      {
        if (e == TransitionMonoid::identity())
          continue;
        idem.push_back(e);
        const Profile& p = m.profile(e);
        idem_rel.emplace(e, b_relation(p, na, nb));
        idem_diag_b.emplace(e, b_diag0(p, na, nb));
        std::vector<char> da(na);
        for (std::size_t q = 0; q < na; ++q)
          da[q] = p.has_accepting_path(q, q);
        idem_diag_a.emplace(e, std::move(da));
      }
  }

  Bits singleton_b(State s) const
  {
    Bits b(wb, 0);
    put(b, s);
    return b;
  }

  Bits refuter_key(State q, const Bits& reach) const
  {
    Bits k{q};
    k.insert(k.end(), reach.begin(), reach.end());
    return k;
  }

  Bits prover_key(State qi, Index w2, const Bits& s) const
  {
    Bits k{qi};
    if (continuous)
      k.push_back(w2);
    k.insert(k.end(), s.begin(), s.end());
    return k;
  }

  // S = {q_i' : reach·w1·w2 reaches q_i' and w2 has an accepting q_i' loop}
  Bits prover_choices(const Bits& after_w1, Index w2) const
  {
    Bits s = idem_rel.at(w2).image(after_w1);
    const Bits& d = idem_diag_b.at(w2);
    for (std::size_t i = 0; i < wb; ++i)
      s[i] &= d[i];
    return s;
  }

  // b-states reached at the next Refuter position after Prover picks q_i'.
  Bits next_reach(Index w2, State qi_b) const
  {
    return continuous ? idem_rel.at(w2).row(qi_b) : singleton_b(qi_b);
  }
};

// One reachable (A-image of q, b-image of reach) pair of the subset
// construction, with the class of its shortlex-least word.
struct Group
{
  Bits xa;
  Bits yb;
  Index w1;
};

std::vector<Group> w1_groups(const Context& c, const Nba& a, State q,
                             const Bits& reach)
{
  std::vector<Group> groups;
  std::unordered_set<Bits, BitsHash> seen;
  Bits xa(c.wa, 0);
  put(xa, q);
  auto remember = [&](Bits x, Bits y, Index w) {
    Bits key = x;
    key.insert(key.end(), y.begin(), y.end());
    if (seen.insert(std::move(key)).second)
      groups.push_back({std::move(x), std::move(y), w});
  };
  remember(xa, reach, TransitionMonoid::identity());
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (Letter l = 0; l < a.num_letters(); ++l)
      {
        Bits x(c.wa, 0), y(c.wb, 0);
        for (State s = 0; s < c.na; ++s)
          if (test(groups[g].xa, s))
            for (State t : a.successors(s, l))
              put(x, t);
        for (State s = 0; s < c.nb; ++s)
          if (test(groups[g].yb, s))
            for (State t : c.bb.successors(s, l))
              put(y, t);
        if (empty(x))
          continue; // no q_i can follow
        remember(std::move(x), std::move(y), c.m.right_mult(groups[g].w1, l));
      }
  return groups;
}

std::string word_text(const Nba& a, const TransitionMonoid& m, Index e)
{
  return format_word(a, m.witness(e));
}

QuotientArena build_quotient(const Nba& a, const Nba& b,
                             const TransitionMonoid& m, bool continuous)
{
  Context c(a, b, m, continuous);
  QuotientArena g;
  g.relation = continuous ? QuotientRelation::continuous_fair
                          : QuotientRelation::lookahead_fair;
  auto& arena = g.arena;
  Position dup_sink = GameArena::none, spo_sink = GameArena::none;
  auto add = [&](Player owner, std::uint8_t mark, std::string label,
                 QuotientArena::Info info, Bits reach) {
    Position p = arena.add_position(owner, mark, std::move(label));
    g.info.push_back(info);
    g.moves.emplace_back();
    g.reach.push_back(std::move(reach));
    return p;
  };
  auto sink = [&](bool prover_wins) {
    Position& s = prover_wins ? dup_sink : spo_sink;
    if (s == GameArena::none)
      {
        s = add(prover_wins ? Player::spoiler : Player::duplicator,
                prover_wins ? 0 : 1, prover_wins ? "prover-wins" : "refuter-wins",
                {}, {});
        arena.add_edge(s, s);
        g.moves[s].push_back({});
      }
    return s;
  };

  std::deque<Position> pending;
  auto refuter = [&](State q, State qb, Index beta, Bits reach) {
    Bits key = c.refuter_key(q, reach);
    auto it = g.refuter_index.find(key);
    if (it != g.refuter_index.end())
      return it->second;
    std::string label = "R(" + a.state_name(q) + "," + b.state_name(qb);
    if (continuous)
      label += "," + word_text(a, m, beta);
    label += ")";
    QuotientArena::Info info;
    info.kind = QuotientArena::Kind::refuter;
    info.q = q;
    info.qb = qb;
    info.beta = beta;
    Position p = add(Player::spoiler, 0, std::move(label), info,
                     std::move(reach));
    g.refuter_index.emplace(std::move(key), p);
    pending.push_back(p);
    return p;
  };

  const State qb0 = b.initial();
  arena.set_start(refuter(a.initial(), qb0, TransitionMonoid::identity(),
                          c.singleton_b(qb0)));

  // Prover positions are expanded as soon as they are created.
  std::vector<std::pair<Position, Bits>> to_expand;
  while (!pending.empty())
    {
      const Position r = pending.front();
      pending.pop_front();
      const auto rinfo = g.info[r];
      const Bits reach = g.reach[r];
      std::unordered_set<Position> linked;
      for (const Group& grp : w1_groups(c, a, rinfo.q, reach))
        for (Index w2 : c.idem)
          {
            const auto& da = c.idem_diag_a.at(w2);
            bool any = false;
            for (State qi = 0; qi < c.na && !any; ++qi)
              any = da[qi] && test(grp.xa, qi);
            if (!any)
              continue;
            const Bits s = c.prover_choices(grp.yb, w2);
            for (State qi = 0; qi < c.na; ++qi)
              {
                if (!da[qi] || !test(grp.xa, qi))
                  continue;
                Bits key = c.prover_key(qi, w2, s);
                Position p;
                auto it = g.prover_index.find(key);
                if (it != g.prover_index.end())
                  p = it->second;
                else
                  {
                    std::string label = "P(" + a.state_name(rinfo.q) + ","
                                        + b.state_name(rinfo.qb) + ",";
                    if (continuous)
                      label += word_text(a, m, rinfo.beta) + ",";
                    label += word_text(a, m, grp.w1) + ","
                             + word_text(a, m, w2) + "," + a.state_name(qi)
                             + ")";
                    QuotientArena::Info info = rinfo;
                    info.kind = QuotientArena::Kind::prover;
                    info.w1 = grp.w1;
                    info.w2 = w2;
                    info.qi = qi;
                    p = add(Player::duplicator, 0, std::move(label), info, {});
                    g.prover_index.emplace(std::move(key), p);
                    to_expand.emplace_back(p, s);
                  }
                if (linked.insert(p).second)
                  {
                    arena.add_edge(r, p);
                    g.moves[r].push_back({grp.w1, w2, qi});
                  }
              }
          }
      if (arena.successors(r).empty())
        {
          arena.add_edge(r, sink(true));
          g.moves[r].push_back({});
        }
      for (auto& [p, s] : to_expand)
        {
          const auto pinfo = g.info[p];
          for (State qi_b = 0; qi_b < c.nb; ++qi_b)
            if (test(s, qi_b))
              {
                Position nr =
                  refuter(pinfo.qi, qi_b,
                          continuous ? pinfo.w2 : TransitionMonoid::identity(),
                          c.next_reach(pinfo.w2, qi_b));
                arena.add_edge(p, nr);
                g.moves[p].push_back({pinfo.w1, pinfo.w2, qi_b});
              }
          if (arena.successors(p).empty())
            {
              arena.add_edge(p, sink(false));
              g.moves[p].push_back({});
            }
        }
      to_expand.clear();
    }
  return g;
}

// Path of b from `from` to `to` reading `w`; accepting when possible (or
// required).  Returns the visited states.
std::optional<std::vector<State>> find_path(const Nba& b, State from, State to,
                                            std::span<const Letter> w,
                                            bool need_accepting)
{
  const auto n = b.num_states();
  // layer[i][s * 2 + f]: reachable after i letters, f = accepting seen
  std::vector<std::vector<char>> layer(w.size() + 1,
                                       std::vector<char>(n * 2, 0));
  layer[0][from * 2] = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (State s = 0; s < n; ++s)
      for (int f = 0; f < 2; ++f)
        if (layer[i][s * 2 + f])
          for (State t : b.successors(s, w[i]))
            layer[i + 1][t * 2 + (f || b.is_accepting(t))] = 1;
  int f;
  if (layer[w.size()][to * 2 + 1])
    f = 1;
  else if (!need_accepting && layer[w.size()][to * 2])
    f = 0;
  else
    return std::nullopt;
  std::vector<State> path(w.size() + 1);
  path[w.size()] = to;
  State cur = to;
  for (std::size_t i = w.size(); i > 0; --i)
    {
      bool found = false;
      for (State s = 0; s < n && !found; ++s)
        {
          auto succ = b.successors(s, w[i - 1]);
          if (!std::binary_search(succ.begin(), succ.end(), cur))
            continue;
          for (int pf = 0; pf < 2 && !found; ++pf)
            {
              if (!layer[i - 1][s * 2 + pf])
                continue;
              const int nf = pf || b.is_accepting(cur);
              if (nf != f)
                continue;
              path[i - 1] = s;
              cur = s;
              f = pf;
              found = true;
            }
        }
      if (!found)
        return std::nullopt;
    }
  return path;
}

} // namespace

QuotientArena build_continuous_quotient(const Nba& a, const Nba& b,
                                        const TransitionMonoid& m)
{
  return build_quotient(a, b, m, true);
}

QuotientArena build_lookahead_quotient(const Nba& a, const Nba& b,
                                       const TransitionMonoid& m)
{
  return build_quotient(a, b, m, false);
}

SimulationReport decide(const Nba& a, const Nba& b, QuotientRelation relation,
                        std::size_t cap)
{
  SimulationReport r;
  r.relation = relation;
  const Nba u = disjoint_union(a, b);
  try
    {
      r.monoid.emplace(build_monoid(u, cap));
    }
  catch (const CapExceeded& e)
    {
      r.outcome = Outcome::inconclusive;
      r.monoid_size = e.partial_size();
      return r;
    }
  r.monoid_size = r.monoid->size();
  r.game.emplace(build_quotient(a, b, *r.monoid,
                                relation == QuotientRelation::continuous_fair));
  r.arena_size = r.game->arena.size();
  r.verdict.emplace(solve(r.game->arena));
  r.outcome = r.verdict->holds ? Outcome::holds : Outcome::fails;

  // Witnesses of the classes on the winner's strategy.
  const auto& arena = r.game->arena;
  const auto& v = *r.verdict;
  const Player winner = v.winner[arena.start()];
  std::vector<char> seen(arena.size(), 0);
  std::deque<Position> queue{arena.start()};
  seen[arena.start()] = 1;
  auto note = [&](Index e) { r.witness_words[e] = r.monoid->witness(e); };
  while (!queue.empty())
    {
      auto p = queue.front();
      queue.pop_front();
      const auto& info = r.game->info[p];
      if (info.kind == QuotientArena::Kind::refuter)
        note(info.beta);
      const auto& succ = arena.successors(p);
      for (std::size_t i = 0; i < succ.size(); ++i)
        {
          if (arena.owner(p) == winner && v.strategy[p] != succ[i])
            continue;
          if (info.kind != QuotientArena::Kind::sink)
            {
              note(r.game->moves[p][i].w1);
              note(r.game->moves[p][i].w2);
            }
          if (!seen[succ[i]])
            {
              seen[succ[i]] = 1;
              queue.push_back(succ[i]);
            }
        }
    }
  return r;
}

std::string summary(const SimulationReport& r)
{
  std::ostringstream out;
  out << "relation " << to_string(r.relation) << "\n"
      << "outcome " << to_string(r.outcome) << "\n"
      << "monoid " << r.monoid_size << "\n"
      << "arena " << r.arena_size << "\n";
  if (r.verdict)
    out << "edges " << r.verdict->stats.edges << "\n";
  return out.str();
}

std::string certificate(const SimulationReport& r, const Nba& a)
{
  if (!r.game || !r.verdict)
    return {};
  const auto& g = *r.game;
  const auto& arena = g.arena;
  const auto& v = *r.verdict;
  const Player winner = v.winner[arena.start()];
  std::ostringstream out;
  out << "# " << to_string(r.relation) << " " << to_string(r.outcome)
      << ", strategy of the "
      << (winner == Player::duplicator ? "prover" : "refuter") << "\n";
  std::vector<char> seen(arena.size(), 0);
  std::vector<Position> order{arena.start()};
  seen[arena.start()] = 1;
  for (std::size_t h = 0; h < order.size(); ++h)
    {
      const Position p = order[h];
      const auto& succ = arena.successors(p);
      for (std::size_t i = 0; i < succ.size(); ++i)
        {
          const bool mine = arena.owner(p) == winner;
          if (mine && v.strategy[p] != succ[i])
            continue;
          if (mine && g.info[p].kind != QuotientArena::Kind::sink)
            {
              const auto& mv = g.moves[p][i];
              out << "POSITION " << p << " -> " << succ[i]
                  << " [witness: w1=" << format_word(a, r.monoid->witness(mv.w1))
                  << ", w2=" << format_word(a, r.monoid->witness(mv.w2))
                  << "]\n";
            }
          if (!seen[succ[i]])
            {
              seen[succ[i]] = 1;
              order.push_back(succ[i]);
            }
        }
    }
  std::sort(order.begin(), order.end());
  for (Position p : order)
    out << "LABEL " << p << " " << arena.label(p) << "\n";
  return out.str();
}

RunPath replay(const SimulationReport& r, const Nba& a, const Nba& b,
               const LassoRun& spoiler, std::size_t rounds)
{
  if (!r.holds() || !r.game || !r.monoid || !r.verdict)
    throw std::invalid_argument("replay needs a holding simulation report");
  const bool continuous = r.relation == QuotientRelation::continuous_fair;
  const auto& m = *r.monoid;
  const auto& g = *r.game;
  const auto& v = *r.verdict;
  Context c(a, b, m, continuous);
  if (!is_path(a, spoiler.stem) || !is_path(a, spoiler.cycle)
      || spoiler.cycle.word.empty()
      || spoiler.stem.states.back() != spoiler.cycle.states.front()
      || spoiler.cycle.states.front() != spoiler.cycle.states.back())
    throw std::invalid_argument("replay: not a lasso run of the automaton");

  const std::size_t period = spoiler.cycle.word.size();
  std::size_t length = spoiler.stem.word.size() + 4 * period;
  RunPath run = unroll(spoiler, length);
  constexpr std::size_t max_length = std::size_t{1} << 16;

  // Least Ramsey triple of the a ⊎ b run starting at `from`.
  auto next_triple = [&](std::size_t from) {
    for (;;)
      {
        RunPath slice;
        slice.states.assign(run.states.begin() + from, run.states.end());
        slice.word.assign(run.word.begin() + from, run.word.end());
        if (auto t = ramsey_factorize(c.u, slice))
          return RamseyTriple{from + t->i, from + t->j, from + t->k};
        if (length >= max_length)
          throw ReplayFailure("no Ramsey factorisation within "
                              + std::to_string(max_length) + " steps");
        length *= 2;
        run = unroll(spoiler, length);
      }
  };
  auto segment = [&](std::size_t x, std::size_t y) {
    return std::span<const Letter>(run.word).subspan(x, y - x);
  };

  RunPath out;
  State qb = c.bb.initial();
  out.states.push_back(qb);
  Position cur = g.arena.start();
  std::size_t s = 0, consumed = 0;
  for (std::size_t round = 0; round < rounds; ++round)
    {
      const auto t = next_triple(s);
      const Index w2 = m.of_word(segment(t.i, t.j));
      const State qi = run.states[t.i];
      if (w2 == TransitionMonoid::identity() || !m.is_idempotent(w2))
        throw ReplayFailure("Ramsey segment is not a non-identity idempotent");
      if (g.info[cur].kind != QuotientArena::Kind::refuter
          || g.info[cur].q != run.states[s])
        throw ReplayFailure("replay left the Refuter positions");

      // The Prover position the arena associates with this Refuter move.
      Bits after_w1 = g.reach[cur];
      for (Letter l : segment(s, t.i))
        {
          Bits y(c.wb, 0);
          for (State x = 0; x < c.nb; ++x)
            if (test(after_w1, x))
              for (State z : c.bb.successors(x, l))
                put(y, z);
          after_w1 = std::move(y);
        }
      auto it = g.prover_index.find(
        c.prover_key(qi, w2, c.prover_choices(after_w1, w2)));
      if (it == g.prover_index.end())
        throw ReplayFailure("Refuter move missing from the arena");
      const Position p = it->second;
      const auto& rs = g.arena.successors(cur);
      if (std::find(rs.begin(), rs.end(), p) == rs.end())
        throw ReplayFailure("Refuter move not offered at its position");
      const Position next = v.strategy[p];
      if (next == GameArena::none)
        throw ReplayFailure("no Prover strategy at " + g.arena.label(p));
      const auto& ps = g.arena.successors(p);
      const auto idx = std::find(ps.begin(), ps.end(), next) - ps.begin();
      if (g.info[next].kind != QuotientArena::Kind::refuter)
        throw ReplayFailure("Prover strategy leaves the game");
      const State qi_b = g.moves[p][idx].state;

      // Concrete realisation: Prover's move reads the pending β, w1 and w2,
      // and the next copy of w2 must close an accepting loop.
      auto path = find_path(c.bb, qb, qi_b, segment(consumed, t.j), false);
      if (!path)
        throw ReplayFailure("no concrete b-path for round "
                            + std::to_string(round));
      for (std::size_t z = consumed; z < t.j; ++z)
        {
          out.word.push_back(run.word[z]);
          out.states.push_back((*path)[z - consumed + 1]);
        }
      if (!find_path(c.bb, qi_b, qi_b, segment(t.j, t.k), true))
        throw ReplayFailure("pending buffer has no accepting loop");

      qb = qi_b;
      cur = next;
      consumed = t.j;
      s = t.k;
    }
  if (!is_path(c.bb, out))
    throw ReplayFailure("replayed run is not a path of b");
  return out;
}

} // namespace buffsim
