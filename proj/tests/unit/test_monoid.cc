#include <doctest.h>

#include <cmath>

#include "buffsim/errors.hh"
#include "buffsim/monoid.hh"
#include "buffsim/random.hh"
#include "helpers.hh"

using namespace buffsim;

namespace
{

// Entry-wise composition straight from the definition of f_uv.
Profile naive_compose(const Profile& f, const Profile& g)
{
  const auto n = f.dimension();
  Profile out(n);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t t = 0; t < n; ++t)
      {
        int v = 1;
        for (std::size_t r = 0; r < n; ++r)
          {
            const int x = f.entry(q, r), y = g.entry(r, t);
            if (x == 1 || y == 1)
              continue;
            v = (x == 0 || y == 0) ? 0 : (v == 0 ? 0 : 2);
          }
        out.set(q, t, v);
      }
  return out;
}

// Every triple in (k, i, j) order, checked with brute-force profiles.
std::optional<RamseyTriple> naive_triple(const Nba& a, const RunPath& run)
{
  const auto n = run.word.size();
  auto seg = [&](std::size_t x, std::size_t y) {
    return word_profile(a, std::span<const Letter>(run.word).subspan(x, y - x));
  };
  for (std::size_t k = 2; k <= n; ++k)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        {
          const State q = run.states[i];
          if (!a.is_accepting(q) || run.states[j] != q || run.states[k] != q)
            continue;
          auto ij = seg(i, j);
          if (ij == seg(j, k) && ij == seg(i, k))
            return RamseyTriple{i, j, k};
        }
  return std::nullopt;
}

RunPath run_of(const Nba& a, const std::vector<State>& states,
               const std::string& w)
{
  return RunPath{states, test::word(a, w)};
}

} // namespace

TEST_CASE("letter profiles")
{
  Nba a = test::a1();
  Profile fa = letter_profile(a, 0);
  CHECK(fa.entry(0, 1) == 0);
  CHECK(fa.entry(0, 0) == 2);
  CHECK(fa == word_profile(a, test::word(a, "a")));
  Nba none({"s", "t"}, {"a", "b"}, {{0, 1, 1}}, 0, {});
  CHECK(letter_profile(none, 0).to_string() == "11/11");
  Nba non_acc({"s", "t"}, {"a"}, {{0, 0, 1}, {1, 0, 1}}, 0, {});
  const auto s = letter_profile(non_acc, 0).to_string();
  CHECK(s.find('0') == std::string::npos);
}

TEST_CASE("composition matches the definition and concatenation")
{
  Nba a = test::a1();
  auto fa = word_profile(a, test::word(a, "a"));
  auto fb = word_profile(a, test::word(a, "b"));
  CHECK(compose(Profile::identity(2), fa) == fa);
  CHECK(compose(fa, Profile::identity(2)) == fa);
  CHECK(compose(fa, fb) == word_profile(a, test::word(a, "ab")));
  CHECK(compose(fa, fb).entry(0, 0) == 0);
  CHECK_THROWS_AS(compose(fa, Profile::identity(3)), std::invalid_argument);

  Rng rng(3);
  for (int i = 0; i < 200; ++i)
    {
      const auto d = uniform(rng, 1, 4);
      auto f = random_profile(rng, d), g = random_profile(rng, d),
           h = random_profile(rng, d);
      CHECK(compose(f, g) == naive_compose(f, g));
      CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("congruence: equal profiles stay equal under extension")
{
  Rng rng(5);
  RandomNbaOptions o;
  o.max_states = 3;
  int pairs = 0;
  for (int i = 0; i < 400; ++i)
    {
      Nba a = random_nba(rng, o);
      auto u = random_word(rng, a, uniform(rng, 0, 4));
      auto u2 = random_word(rng, a, uniform(rng, 0, 4));
      auto v = random_word(rng, a, uniform(rng, 0, 3));
      if (!(word_profile(a, u) == word_profile(a, u2)))
        continue;
      ++pairs;
      Word uv = u, u2v = u2, vu = v, vu2 = v;
      uv.insert(uv.end(), v.begin(), v.end());
      u2v.insert(u2v.end(), v.begin(), v.end());
      vu.insert(vu.end(), u.begin(), u.end());
      vu2.insert(vu2.end(), u2.begin(), u2.end());
      CHECK(word_profile(a, uv) == word_profile(a, u2v));
      CHECK(word_profile(a, vu) == word_profile(a, vu2));
    }
  CHECK(pairs > 20);
}

TEST_CASE("monoid of a one-state loop")
{
  // Without accepting states every word has the identity profile.
  Nba plain({"s"}, {"a"}, {{0, 0, 0}}, 0, {});
  CHECK(build_monoid(plain, 100).size() == 1);
  Nba a({"s"}, {"a"}, {{0, 0, 0}}, 0, {0});
  auto m = build_monoid(a, 100);
  REQUIRE(m.size() == 2);
  CHECK(m.element(0).is_identity);
  CHECK(m.witness(0).empty());
  CHECK(m.profile(1).to_string() == "0");
  CHECK(m.witness(1) == Word{0});
  CHECK(m.is_idempotent(0));
  CHECK(m.is_idempotent(1));
  CHECK(idempotents(m).size() == 2);
  CHECK(idempotents(m).front().is_identity);
}

TEST_CASE("monoid witnesses realise their profiles")
{
  Nba a = test::a1();
  auto m = build_monoid(a, 1000);
  CHECK(m.size() <= 81);
  for (std::size_t i = 0; i < m.size(); ++i)
    {
      CHECK(word_profile(a, m.witness(i)) == m.profile(i));
      CHECK(m.of_word(m.witness(i)) == i);
    }
  // Shortest witnesses first.
  for (std::size_t i = 1; i < m.size(); ++i)
    CHECK(m.witness(i - 1).size() <= m.witness(i).size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      CHECK(m.profile(m.multiply(i, j))
            == compose(m.profile(i), m.profile(j)));
}

TEST_CASE("monoid size bound and cap")
{
  Rng rng(9);
  RandomNbaOptions o;
  o.max_states = 3;
  for (int i = 0; i < 50; ++i)
    {
      Nba a = random_nba(rng, o);
      auto m = build_monoid(a, 100000);
      CHECK(static_cast<double>(m.size())
            <= std::pow(3.0, double(a.num_states() * a.num_states())));
      for (const auto& e : idempotents(m))
        CHECK(compose(e.profile, e.profile) == e.profile);
    }
  Nba a = test::a1();
  CHECK_THROWS_AS(build_monoid(a, 2), std::invalid_argument);
  try
    {
      build_monoid(a, 4);
      FAIL("expected the cap to be exceeded");
    }
  catch (const CapExceeded& e)
    {
      CHECK(e.cap() == 4);
      CHECK(e.partial_size() >= 4);
    }
}

TEST_CASE("Ramsey factorisation")
{
  Nba a = test::a1();
  CHECK_FALSE(ramsey_factorize(a, run_of(a, {0, 1}, "a")));
  // On p a q b p a q b p a q the only candidate triple (1, 3, 5) has
  // f_ba(q, p) = 2 but f_baba(q, p) = 0, so there is none.
  auto short_run = run_of(a, {0, 1, 0, 1, 0, 1}, "ababa");
  CHECK_FALSE(naive_triple(a, short_run));
  CHECK_FALSE(ramsey_factorize(a, short_run));
  // Two more rounds give the segments baba ~ baba ~ babababa.
  auto long_run = run_of(a, {0, 1, 0, 1, 0, 1, 0, 1, 0, 1}, "ababababa");
  auto t = ramsey_factorize(a, long_run);
  REQUIRE(t);
  CHECK(*t == RamseyTriple{1, 5, 9});
  CHECK(naive_triple(a, long_run) == t);
  CHECK_THROWS_AS(ramsey_factorize(a, run_of(a, {1, 1}, "a")),
                  std::invalid_argument);
}

TEST_CASE("Ramsey factorisation agrees with exhaustive search")
{
  Rng rng(21);
  RandomNbaOptions o;
  o.max_states = 2;
  o.edge_probability = 0.6;
  int found = 0;
  for (int i = 0; i < 150; ++i)
    {
      Nba a = random_nba(rng, o);
      UltimatelyPeriodicWord w{random_word(rng, a, uniform(rng, 0, 2)),
                               random_word(rng, a, uniform(rng, 1, 3))};
      auto lasso = accepting_lasso(a, w);
      if (!lasso)
        continue;
      auto run = unroll(*lasso, 14);
      auto t = ramsey_factorize(a, run);
      CHECK(t == naive_triple(a, run));
      found += t.has_value();
    }
  CHECK(found > 10);
}

TEST_CASE("Ramsey bound")
{
  Nba a = test::a1();
  CHECK(ramsey_bound(a) == 81 * 1 * 2 + 2);
}

TEST_CASE("language inclusion")
{
  auto [ia, ib] = fixture("inclusion-gap");
  CHECK(language_inclusion(ia, ib, 10000).verdict
        == InclusionVerdict::included);
  CHECK(language_inclusion(ib, ia, 10000).verdict
        == InclusionVerdict::included);
  Nba a = test::a1();
  CHECK(language_inclusion(a, a, 10000).verdict == InclusionVerdict::included);
  auto r = language_inclusion(a, test::a1(false), 10000);
  REQUIRE(r.verdict == InclusionVerdict::not_included);
  REQUIRE(r.counterexample);
  CHECK(periodic_membership(a, *r.counterexample));
  CHECK_FALSE(periodic_membership(test::a1(false), *r.counterexample));
  CHECK(language_inclusion(a, test::a1(false), 4).verdict
        == InclusionVerdict::inconclusive);
  Nba other({"s"}, {"x", "y"}, {}, 0, {});
  CHECK_THROWS_AS(language_inclusion(a, other, 100), AlphabetMismatch);
}
