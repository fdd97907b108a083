#include "buffsim/minimize.hh"

#include <algorithm>
#include <stdexcept>

#include "buffsim/errors.hh"
#include "buffsim/simulation.hh"

namespace buffsim
{

namespace
{

std::vector<char> reachable(std::size_t n, const std::vector<Transition>& trans,
                            State from)
{
  std::vector<std::vector<State>> out(n);
  for (const auto& t : trans)
    out[t.src].push_back(t.dst);
  std::vector<char> reach(n, 0);
  std::vector<State> stack{from};
  reach[from] = 1;
  while (!stack.empty())
    {
      State q = stack.back();
      stack.pop_back();
      for (State t : out[q])
        if (!reach[t])
          {
            reach[t] = 1;
            stack.push_back(t);
          }
    }
  return reach;
}

// The states flagged in `keep`, in declared order, with the transitions of
// `trans` between them.
Nba restrict(const Nba& a, const std::vector<Transition>& trans,
             const std::vector<char>& keep)
{
  const auto n = a.num_states();
  std::vector<State> renum(n, 0);
  std::vector<std::string> names;
  std::vector<State> accepting;
  for (State q = 0; q < n; ++q)
    if (keep[q])
      {
        renum[q] = static_cast<State>(names.size());
        if (a.is_accepting(q))
          accepting.push_back(renum[q]);
        names.push_back(a.state_name(q));
      }
  std::vector<Transition> out;
  for (const auto& t : trans)
    if (keep[t.src] && keep[t.dst])
      out.push_back({renum[t.src], t.letter, renum[t.dst]});
  return Nba(std::move(names), a.alphabet(), std::move(out),
             renum[a.initial()], std::move(accepting));
}

} // namespace

const char* to_string(PreorderKind k) noexcept
{
  return k == PreorderKind::direct ? "direct" : "delayed";
}

std::size_t StatePreorder::num_pairs() const
{
  return static_cast<std::size_t>(std::count(rel.begin(), rel.end(), 1));
}

StatePreorder compute_preorder(const Nba& a, PreorderKind kind, std::size_t k)
{
  if (k == 0)
    throw std::invalid_argument("buffer bound k must be at least 1");
  const auto n = a.num_states();
  StatePreorder r{n, kind, k, std::vector<char>(n * n, 0)};
  const Acceptance acc =
    kind == PreorderKind::direct ? Acceptance::direct : Acceptance::delayed;
  std::vector<Nba> from;
  for (State q = 0; q < n; ++q)
    from.push_back(a.with_initial(q));
  for (State q = 0; q < n; ++q)
    for (State q2 = 0; q2 < n; ++q2)
      r.rel[q * n + q2] =
        q == q2
        || bounded_simulates(from[q], from[q2], k, BufferMode::lookahead, acc);
  // Bounded games need not be transitive; close the relation.
  for (State m = 0; m < n; ++m)
    for (State q = 0; q < n; ++q)
      if (r.rel[q * n + m])
        for (State q2 = 0; q2 < n; ++q2)
          if (r.rel[m * n + q2])
            r.rel[q * n + q2] = 1;
  return r;
}

Nba quotient(const Nba& a, const StatePreorder& r)
{
  if (r.size != a.num_states())
    throw std::invalid_argument("preorder does not match the automaton");
  const auto n = a.num_states();
  constexpr State unset = static_cast<State>(-1);
  std::vector<State> cls(n, unset);
  std::vector<std::string> names;
  std::vector<State> accepting;
  for (State q = 0; q < n; ++q)
    {
      if (cls[q] != unset)
        continue;
      const State c = static_cast<State>(names.size());
      std::string name;
      bool acc = false;
      for (State q2 = q; q2 < n; ++q2)
        if (cls[q2] == unset && r.equivalent(q, q2))
          {
            cls[q2] = c;
            if (!name.empty())
              name += '|';
            name += a.state_name(q2);
            acc = acc || a.is_accepting(q2);
          }
      names.push_back(std::move(name));
      if (acc)
        accepting.push_back(c);
    }
  std::vector<Transition> trans;
  for (const auto& t : a.transitions())
    trans.push_back({cls[t.src], t.letter, cls[t.dst]});
  return Nba(std::move(names), a.alphabet(), std::move(trans),
             cls[a.initial()], std::move(accepting));
}

Nba prune(const Nba& a, const StatePreorder& r)
{
  if (r.kind == PreorderKind::delayed)
    throw DelayedPruningRefused();
  if (r.size != a.num_states())
    throw std::invalid_argument("preorder does not match the automaton");
  std::vector<Transition> kept;
  for (const auto& t : a.transitions())
    {
      bool subsumed = false;
      for (State q2 : a.successors(t.src, t.letter))
        if (q2 != t.dst && r.strictly_below(t.dst, q2))
          {
            subsumed = true;
            break;
          }
      if (!subsumed)
        kept.push_back(t);
    }

  return restrict(a, kept, reachable(a.num_states(), kept, a.initial()));
}

Nba trim(const Nba& a)
{
  const auto n = a.num_states();
  // Accepting states on a cycle, then everything that reaches one.
  std::vector<std::vector<State>> pred(n);
  for (const auto& t : a.transitions())
    pred[t.dst].push_back(t.src);
  std::vector<char> live(n, 0);
  std::vector<State> stack;
  for (State f : a.accepting_states())
    {
      std::vector<char> back(n, 0);
      std::vector<State> todo{f};
      while (!todo.empty())
        {
          State q = todo.back();
          todo.pop_back();
          for (State p : pred[q])
            if (!back[p])
              {
                back[p] = 1;
                todo.push_back(p);
              }
        }
      if (back[f] && !live[f])
        {
          live[f] = 1;
          stack.push_back(f);
        }
    }
  while (!stack.empty())
    {
      State q = stack.back();
      stack.pop_back();
      for (State p : pred[q])
        if (!live[p])
          {
            live[p] = 1;
            stack.push_back(p);
          }
    }
  live[a.initial()] = 1;
  std::vector<Transition> kept;
  for (const auto& t : a.transitions())
    if (live[t.src] && live[t.dst])
      kept.push_back(t);
  return restrict(a, kept, reachable(n, kept, a.initial()));
}

Nba minimize(const Nba& a, PreorderKind kind, std::size_t k, bool with_prune)
{
  if (with_prune && kind == PreorderKind::delayed)
    throw DelayedPruningRefused();
  const Nba t = trim(a);
  Nba q = quotient(t, compute_preorder(t, kind, k));
  if (!with_prune)
    return q;
  return prune(q, compute_preorder(q, PreorderKind::direct, k));
}

} // namespace buffsim
