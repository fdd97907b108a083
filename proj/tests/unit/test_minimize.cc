#include <doctest.h>

#include "buffsim/errors.hh"
#include "buffsim/minimize.hh"
#include "buffsim/monoid.hh"
#include "buffsim/random.hh"
#include "helpers.hh"

using namespace buffsim;

namespace
{

bool same_language(const Nba& a, const Nba& b)
{
  auto ab = language_inclusion(a, b, 200000);
  auto ba = language_inclusion(b, a, 200000);
  REQUIRE(ab.verdict != InclusionVerdict::inconclusive);
  REQUIRE(ba.verdict != InclusionVerdict::inconclusive);
  return ab.verdict == InclusionVerdict::included
         && ba.verdict == InclusionVerdict::included;
}

// Classic direct simulation between states of one automaton.
std::vector<char> direct_relation(const Nba& a)
{
  const auto n = a.num_states();
  std::vector<char> rel(n * n, 0);
  for (State q = 0; q < n; ++q)
    for (State t = 0; t < n; ++t)
      rel[q * n + t] = !a.is_accepting(q) || a.is_accepting(t);
  for (bool changed = true; changed;)
    {
      changed = false;
      for (State q = 0; q < n; ++q)
        for (State t = 0; t < n; ++t)
          {
            if (!rel[q * n + t])
              continue;
            bool ok = true;
            for (Letter l = 0; l < a.num_letters() && ok; ++l)
              for (State p : a.successors(q, l))
                {
                  bool matched = false;
                  for (State p2 : a.successors(t, l))
                    matched = matched || rel[p * n + p2];
                  ok = ok && matched;
                }
            if (!ok)
              {
                rel[q * n + t] = 0;
                changed = true;
              }
          }
    }
  return rel;
}

} // namespace

TEST_CASE("duplicate states are merged")
{
  // s0 branches into two copies of the same accepting a-loop.
  Nba a({"s0", "s1", "s2"}, {"a"}, {{0, 0, 1}, {0, 0, 2}, {1, 0, 1}, {2, 0, 2}},
        0, {1, 2});
  auto r = compute_preorder(a, PreorderKind::direct, 1);
  CHECK(r.equivalent(1, 2));
  CHECK_FALSE(r.le(1, 0));
  Nba m = quotient(a, r);
  CHECK(m.num_states() == 2);
  CHECK(m.state_name(1) == "s1|s2");
  CHECK(m.is_accepting(1));
  CHECK(same_language(a, m));
  // Under delayed acceptance s0 catches up with F one step later.
  Nba d = minimize(a, PreorderKind::delayed, 2, false);
  CHECK(d.num_states() == 1);
  CHECK(same_language(a, d));
}

TEST_CASE("pruning drops transitions to strictly smaller states")
{
  // s0 -a-> s1 (dead end) and s0 -a-> s2 (accepting loop).
  Nba a({"s0", "s1", "s2"}, {"a"}, {{0, 0, 1}, {0, 0, 2}, {2, 0, 2}}, 0, {2});
  auto r = compute_preorder(a, PreorderKind::direct, 1);
  CHECK(r.strictly_below(1, 2));
  Nba p = prune(a, r);
  CHECK(p.num_states() == 2);
  CHECK(p.num_transitions() == 2);
  CHECK(same_language(a, p));
  auto d = compute_preorder(a, PreorderKind::delayed, 1);
  CHECK_THROWS_AS(prune(a, d), DelayedPruningRefused);
  CHECK_THROWS_AS(minimize(a, PreorderKind::delayed, 1, true),
                  DelayedPruningRefused);
  CHECK_THROWS_AS(compute_preorder(a, PreorderKind::direct, 0),
                  std::invalid_argument);
}

TEST_CASE("preorders are reflexive, transitive and grow with k")
{
  Rng rng(53);
  RandomNbaOptions o;
  o.max_states = 4;
  for (int i = 0; i < 60; ++i)
    {
      Nba a = random_nba(rng, o);
      const auto n = a.num_states();
      for (auto kind : {PreorderKind::direct, PreorderKind::delayed})
        {
          auto r1 = compute_preorder(a, kind, 1);
          auto r2 = compute_preorder(a, kind, 2);
          for (State q = 0; q < n; ++q)
            {
              CHECK(r1.le(q, q));
              for (State x = 0; x < n; ++x)
                {
                  CHECK((!r1.le(q, x) || r2.le(q, x)));
                  for (State y = 0; y < n; ++y)
                    CHECK((!(r2.le(q, x) && r2.le(x, y)) || r2.le(q, y)));
                }
            }
          if (kind == PreorderKind::direct)
            CHECK(r1.rel == direct_relation(a));
          CHECK(r1.num_pairs() >= n);
        }
    }
}

TEST_CASE("minimisation preserves the language")
{
  Rng rng(59);
  RandomNbaOptions o;
  o.max_states = 4;
  for (int i = 0; i < 80; ++i)
    {
      Nba a = random_nba(rng, o);
      for (std::size_t k : {1u, 2u})
        {
          Nba d = minimize(a, PreorderKind::direct, k, true);
          Nba l = minimize(a, PreorderKind::delayed, k, false);
          CHECK(d.num_states() <= a.num_states());
          CHECK(l.num_states() <= a.num_states());
          CHECK(same_language(a, d));
          CHECK(same_language(a, l));
        }
    }
}

TEST_CASE("trim keeps only live states before quotienting")
{
  // s1 reads into the dead end s0: both have an empty language, but with a
  // buffer of two Spoiler gets stuck before Duplicator has to answer.
  Nba a({"s0", "s1", "s2"}, {"a", "b"},
        {{1, 0, 0}, {1, 1, 0}, {2, 0, 0}, {2, 1, 0}}, 0, {0, 1});
  auto r = compute_preorder(a, PreorderKind::direct, 2);
  CHECK(r.equivalent(0, 1));
  Nba merged = quotient(a, r);
  CHECK_FALSE(same_language(a, merged));
  Nba t = trim(a);
  CHECK(t.num_states() == 1);
  CHECK(t.num_transitions() == 0);
  CHECK(same_language(a, minimize(a, PreorderKind::direct, 2, true)));

  Nba live({"s0", "s1", "s2"}, {"a"}, {{0, 0, 1}, {0, 0, 2}, {1, 0, 1}}, 0,
           {1});
  Nba lt = trim(live);
  CHECK(lt.num_states() == 2);
  CHECK(lt.state_name(1) == "s1");
}
