#include "buffsim/selftest.hh"

#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "buffsim/errors.hh"
#include "buffsim/minimize.hh"
#include "buffsim/monoid.hh"
#include "buffsim/quotient.hh"
#include "buffsim/random.hh"
#include "buffsim/simulation.hh"

namespace buffsim
{

namespace
{

// Outcome of one random instance.
enum class Check
{
  pass,
  fail,
  skip,
};

using Instance = std::function<Check(Rng&, std::string&)>;

SuiteResult run_suite(const std::string& name, std::uint64_t seed,
                      std::size_t budget, const Instance& body)
{
  SuiteResult r{name, 0, 0, 0, {}};
  std::uint64_t h = seed;
  for (char c : name)
    h = h * 1099511628211ull + static_cast<unsigned char>(c);
  Rng rng(h);
  for (std::size_t i = 0; i < budget; ++i)
    {
      std::string why;
      switch (body(rng, why))
        {
        case Check::pass:
          ++r.pass;
          break;
        case Check::skip:
          ++r.skip;
          break;
        case Check::fail:
          ++r.fail;
          r.failures.push_back(name + " #" + std::to_string(i) + ": " + why);
          break;
        }
    }
  return r;
}

// Structure by names, ignoring states that touch nothing: the ba format
// fixes neither the state nor the letter order and drops isolated states.
auto named_structure(const Nba& a)
{
  std::set<std::tuple<std::string, std::string, std::string>> trans;
  for (const auto& t : a.transitions())
    trans.insert({a.state_name(t.src), a.letter_name(t.letter),
                  a.state_name(t.dst)});
  std::set<std::string> accepting;
  for (State q : a.accepting_states())
    accepting.insert(a.state_name(q));
  return std::make_tuple(a.state_name(a.initial()), accepting, trans);
}

// All words of length <= max over the alphabet of `a`, shortest first.
std::vector<Word> words_up_to(const Nba& a, std::size_t min, std::size_t max)
{
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0; len <= max; ++len)
    {
      if (len >= min)
        out.insert(out.end(), layer.begin(), layer.end());
      std::vector<Word> next;
      for (const auto& w : layer)
        for (Letter l = 0; l < a.num_letters(); ++l)
          {
            auto x = w;
            x.push_back(l);
            next.push_back(std::move(x));
          }
      layer = std::move(next);
    }
  return out;
}

std::optional<UltimatelyPeriodicWord> exhaustive_counterexample(const Nba& a,
                                                                const Nba& b)
{
  for (const auto& u : words_up_to(a, 0, 3))
    for (const auto& v : words_up_to(a, 1, 3))
      {
        UltimatelyPeriodicWord w{u, v};
        if (periodic_membership(a, w) && !periodic_membership(b, w))
          return w;
      }
  return std::nullopt;
}

// Both inclusions; nullopt when the oracle is inconclusive.
std::optional<bool> same_language(const Nba& a, const Nba& b, std::size_t cap)
{
  auto x = language_inclusion(a, b, cap);
  auto y = language_inclusion(b, a, cap);
  if (x.verdict == InclusionVerdict::inconclusive
      || y.verdict == InclusionVerdict::inconclusive)
    return std::nullopt;
  return x.verdict == InclusionVerdict::included
         && y.verdict == InclusionVerdict::included;
}

RandomNbaOptions small(std::size_t max_states)
{
  RandomNbaOptions o;
  o.max_states = max_states;
  return o;
}

} // namespace

bool SelftestReport::ok() const
{
  for (const auto& s : suites)
    if (s.fail)
      return false;
  return true;
}

SelftestReport run_selftest(std::uint64_t seed, std::size_t budget,
                            std::size_t cap)
{
  SelftestReport rep{seed, budget, cap, {}};
  auto add = [&](const std::string& name, const Instance& body) {
    rep.suites.push_back(run_suite(name, seed, budget, body));
  };

  add("profile-composition", [](Rng& rng, std::string& why) {
    auto a = random_nba(rng, small(4));
    auto u = random_word(rng, a, uniform(rng, 0, 4));
    auto v = random_word(rng, a, uniform(rng, 0, 4));
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    if (compose(word_profile(a, u), word_profile(a, v)) == word_profile(a, uv))
      return Check::pass;
    why = "compose(f_u, f_v) != f_uv for u=" + format_word(a, u)
          + " v=" + format_word(a, v);
    return Check::fail;
  });

  add("profile-associativity", [](Rng& rng, std::string& why) {
    const auto d = uniform(rng, 1, 4);
    auto f = random_profile(rng, d), g = random_profile(rng, d),
         h = random_profile(rng, d);
    if (compose(compose(f, g), h) == compose(f, compose(g, h)))
      return Check::pass;
    why = "not associative on " + f.to_string() + " " + g.to_string() + " "
          + h.to_string();
    return Check::fail;
  });

  add("monoid-coherence", [cap](Rng& rng, std::string& why) {
    auto a = random_nba(rng, small(3));
    try
      {
        auto m = build_monoid(a, cap);
        const auto n = a.num_states();
        double bound = 1;
        for (std::size_t i = 0; i < n * n; ++i)
          bound *= 3;
        if (static_cast<double>(m.size()) > bound)
          {
            why = "monoid larger than 3^(n^2)";
            return Check::fail;
          }
        for (std::size_t i = 0; i < m.size(); ++i)
          {
            const auto e = static_cast<TransitionMonoid::Index>(i);
            if (!(word_profile(a, m.witness(e)) == m.profile(e)))
              {
                why = "witness " + format_word(a, m.witness(e))
                      + " does not realise its profile";
                return Check::fail;
              }
            const bool idem =
              compose(m.profile(e), m.profile(e)) == m.profile(e);
            if (idem != m.is_idempotent(e))
              {
                why = "wrong idempotent flag";
                return Check::fail;
              }
          }
        for (std::size_t i = 0; i < m.size(); ++i)
          for (std::size_t j = 0; j < m.size(); ++j)
            {
              auto p = compose(m.profile(i), m.profile(j));
              auto k = m.find(p);
              if (!k || *k != m.multiply(i, j))
                {
                  why = "monoid not closed under composition";
                  return Check::fail;
                }
            }
        return Check::pass;
      }
    catch (const CapExceeded&)
      {
        return Check::skip;
      }
  });

  add("membership-unrolling", [](Rng& rng, std::string& why) {
    auto a = random_nba(rng, small(3));
    UltimatelyPeriodicWord w{random_word(rng, a, uniform(rng, 0, 3)),
                             random_word(rng, a, uniform(rng, 1, 3))};
    UltimatelyPeriodicWord w2 = w;
    w2.stem.insert(w2.stem.end(), w.period.begin(), w.period.end());
    const bool m = periodic_membership(a, w);
    if (m != periodic_membership(a, w2))
      {
        why = "membership changes under unrolling";
        return Check::fail;
      }
    auto lasso = accepting_lasso(a, w);
    if (m != lasso.has_value())
      {
        why = "accepting_lasso disagrees with membership";
        return Check::fail;
      }
    if (lasso
        && (!is_path(a, lasso->stem) || !is_path(a, lasso->cycle)))
      {
        why = "lasso run is not a path";
        return Check::fail;
      }
    return Check::pass;
  });

  add("inclusion-oracle", [cap](Rng& rng, std::string& why) {
    auto a = random_nba(rng, small(3));
    auto b = random_nba(rng, small(3));
    auto r = language_inclusion(a, b, cap);
    if (r.verdict == InclusionVerdict::inconclusive)
      return Check::skip;
    auto ex = exhaustive_counterexample(a, b);
    if (ex && r.verdict != InclusionVerdict::not_included)
      {
        why = "missed counterexample " + format_word(a, ex->stem) + "("
              + format_word(a, ex->period) + ")^w";
        return Check::fail;
      }
    if (r.counterexample
        && (!periodic_membership(a, *r.counterexample)
            || periodic_membership(b, *r.counterexample)))
      {
        why = "counterexample does not verify";
        return Check::fail;
      }
    return Check::pass;
  });

  add("implication-chain", [cap](Rng& rng, std::string& why) {
    auto a = random_nba(rng, small(3));
    auto b = random_nba(rng, small(3));
    const bool plain = plain_simulates(a, b, Acceptance::fair);
    const bool direct = plain_simulates(a, b, Acceptance::direct);
    const bool delayed = plain_simulates(a, b, Acceptance::delayed);
    const bool la1 =
      bounded_simulates(a, b, 1, BufferMode::lookahead, Acceptance::fair);
    const bool la2 =
      bounded_simulates(a, b, 2, BufferMode::lookahead, Acceptance::fair);
    const bool co2 =
      bounded_simulates(a, b, 2, BufferMode::continuous, Acceptance::fair);
    auto la = decide(a, b, QuotientRelation::lookahead_fair, cap);
    auto co = decide(a, b, QuotientRelation::continuous_fair, cap);
    if (la.outcome == Outcome::inconclusive
        || co.outcome == Outcome::inconclusive)
      return Check::skip;
    auto incl = language_inclusion(a, b, cap);
    if (incl.verdict == InclusionVerdict::inconclusive)
      return Check::skip;
    const bool inc = incl.verdict == InclusionVerdict::included;
    auto implies = [&](bool x, bool y, const char* what) {
      if (x && !y && why.empty())
        why = what;
    };
    implies(direct, delayed, "direct without delayed");
    implies(delayed, plain, "delayed without fair");
    implies(plain, la1, "plain without bounded-1 lookahead");
    implies(la1, la2, "bounded-1 without bounded-2 lookahead");
    implies(la2, co2, "bounded-2 lookahead without bounded-2 continuous");
    implies(la2, la.holds(), "bounded-2 lookahead without lookahead-fair");
    implies(co2, co.holds(), "bounded-2 continuous without continuous-fair");
    implies(la.holds(), co.holds(), "lookahead-fair without continuous-fair");
    implies(co.holds(), inc, "continuous-fair without inclusion");
    return why.empty() ? Check::pass : Check::fail;
  });

  add("minimize-soundness", [cap](Rng& rng, std::string& why) {
    auto a = random_nba(rng, small(4));
    bool skipped = false;
    auto check = [&](const Nba& o, const std::string& what) {
      if (o.num_states() > a.num_states())
        {
          why = what + " increased the state count";
          return false;
        }
      auto same = same_language(a, o, cap);
      if (!same)
        {
          skipped = true;
          return true;
        }
      if (!*same)
        why = what + " changed the language";
      return *same;
    };
    for (std::size_t k : {1, 2})
      if (!check(minimize(a, PreorderKind::delayed, k, false),
                 "delayed-" + std::to_string(k) + " quotient")
          || !check(minimize(a, PreorderKind::direct, k, true),
                    "direct-" + std::to_string(k) + " quotient+prune"))
        return Check::fail;
    try
      {
        prune(a, compute_preorder(a, PreorderKind::delayed, 1));
        why = "delayed pruning was not refused";
        return Check::fail;
      }
    catch (const DelayedPruningRefused&)
      {
      }
    return skipped ? Check::skip : Check::pass;
  });

  add("ramsey-factorization", [](Rng& rng, std::string& why) {
    RandomNbaOptions o = small(2);
    o.edge_probability = 0.6;
    for (;;)
      {
        auto a = random_nba(rng, o);
        UltimatelyPeriodicWord w{random_word(rng, a, uniform(rng, 0, 3)),
                                 random_word(rng, a, uniform(rng, 1, 3))};
        auto lasso = accepting_lasso(a, w);
        if (!lasso)
          continue;
        auto run = unroll(*lasso, ramsey_bound(a));
        auto t = ramsey_factorize(a, run);
        if (!t)
          {
            why = "no triple within the pigeonhole bound";
            return Check::fail;
          }
        auto seg = [&](std::size_t x, std::size_t y) {
          return word_profile(
            a, std::span<const Letter>(run.word).subspan(x, y - x));
        };
        auto ij = seg(t->i, t->j), jk = seg(t->j, t->k), ik = seg(t->i, t->k);
        if (!(ij == jk && jk == ik && compose(ij, ij) == ij))
          {
            why = "triple segments differ or are not idempotent";
            return Check::fail;
          }
        return Check::pass;
      }
  });

  add("format-roundtrip", [](Rng& rng, std::string& why) {
    auto a = random_nba(rng, small(4));
    for (auto f : {NbaFormat::native, NbaFormat::ba})
      {
        // ba text cannot describe an automaton without transitions.
        if (f == NbaFormat::ba && a.num_transitions() == 0)
          continue;
        auto back = parse_nba(emit_nba(a, f), f);
        if (f == NbaFormat::native
              ? !(back == a)
              : named_structure(back) != named_structure(a))
          {
            why = std::string("round trip through ")
                  + (f == NbaFormat::native ? "native" : "ba") + " differs";
            return Check::fail;
          }
      }
    return Check::pass;
  });
  return rep;
}

std::string format_report(const SelftestReport& r)
{
  std::ostringstream out;
  out << "selftest seed " << r.seed << " budget " << r.budget << " cap "
      << r.cap << "\n";
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& s : r.suites)
    {
      const auto total = s.pass + s.fail + s.skip;
      char rate[32];
      std::snprintf(rate, sizeof rate, "%.1f%%",
                    total ? 100.0 * double(s.skip) / double(total) : 0.0);
      out << "suite " << s.name << ": pass " << s.pass << " fail " << s.fail
          << " skip " << s.skip << " (skip rate " << rate << ")\n";
      pass += s.pass;
      fail += s.fail;
      skip += s.skip;
    }
  for (const auto& s : r.suites)
    for (const auto& f : s.failures)
      out << "FAIL " << f << "\n";
  out << "total: pass " << pass << " fail " << fail << " skip " << skip
      << "\n";
  return out.str();
}

} // namespace buffsim
