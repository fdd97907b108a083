#include <doctest.h>

#include "buffsim/errors.hh"
#include "buffsim/monoid.hh"
#include "buffsim/random.hh"
#include "buffsim/simulation.hh"
#include "helpers.hh"

using namespace buffsim;

namespace
{

// Greatest fixpoint of the classic direct simulation refinement.
bool direct_oracle(const Nba& a, const Nba& b)
{
  const auto n = a.num_states(), m = b.num_states();
  std::vector<char> rel(n * m, 0);
  for (State q = 0; q < n; ++q)
    for (State t = 0; t < m; ++t)
      rel[q * m + t] = !a.is_accepting(q) || b.is_accepting(t);
  for (bool changed = true; changed;)
    {
      changed = false;
      for (State q = 0; q < n; ++q)
        for (State t = 0; t < m; ++t)
          {
            if (!rel[q * m + t])
              continue;
            bool ok = true;
            for (Letter l = 0; l < a.num_letters() && ok; ++l)
              for (State p : a.successors(q, l))
                {
                  bool matched = false;
                  for (State p2 : b.successors(t, l))
                    matched = matched || rel[p * m + p2];
                  ok = ok && matched;
                }
            if (!ok)
              {
                rel[q * m + t] = 0;
                changed = true;
              }
          }
    }
  return rel[a.initial() * m + b.initial()];
}

} // namespace

TEST_CASE("an automaton simulates itself")
{
  auto [a, b] = fixture("branching");
  for (auto acc : {Acceptance::fair, Acceptance::direct, Acceptance::delayed})
    {
      CHECK(plain_simulates(a, a, acc));
      CHECK(plain_simulates(b, b, acc));
      CHECK(bounded_simulates(a, a, 2, BufferMode::lookahead, acc));
    }
}

TEST_CASE("fixture verdicts for plain and bounded games")
{
  auto [a, b] = fixture("branching");
  CHECK_FALSE(plain_simulates(a, b, Acceptance::fair));
  for (std::size_t k = 1; k <= 5; ++k)
    CHECK_FALSE(
      bounded_simulates(a, b, k, BufferMode::lookahead, Acceptance::fair));

  auto [la, lb] = fixture("lookahead-gap");
  CHECK_FALSE(plain_simulates(la, lb, Acceptance::fair));
  for (std::size_t k = 1; k <= 4; ++k)
    CHECK_FALSE(
      bounded_simulates(la, lb, k, BufferMode::lookahead, Acceptance::fair));
  CHECK(bounded_simulates(la, lb, 2, BufferMode::continuous,
                          Acceptance::fair));
  CHECK(bounded_simulates(la, lb, 2, BufferMode::continuous,
                          Acceptance::direct));
  CHECK_FALSE(bounded_simulates(la, lb, 1, BufferMode::continuous,
                                Acceptance::fair));

  auto [ia, ib] = fixture("inclusion-gap");
  for (std::size_t k = 1; k <= 4; ++k)
    CHECK_FALSE(
      bounded_simulates(ia, ib, k, BufferMode::continuous, Acceptance::fair));
}

TEST_CASE("direct simulation agrees with the refinement fixpoint")
{
  Rng rng(23);
  RandomNbaOptions o;
  o.max_states = 4;
  for (int i = 0; i < 300; ++i)
    {
      Nba a = random_nba(rng, o), b = random_nba(rng, o);
      CHECK(plain_simulates(a, b, Acceptance::direct) == direct_oracle(a, b));
    }
}

TEST_CASE("implications between relations on random pairs")
{
  Rng rng(29);
  RandomNbaOptions o;
  o.max_states = 3;
  int holding = 0;
  for (int i = 0; i < 200; ++i)
    {
      Nba a = random_nba(rng, o), b = random_nba(rng, o);
      const bool direct = plain_simulates(a, b, Acceptance::direct);
      const bool delayed = plain_simulates(a, b, Acceptance::delayed);
      const bool fair = plain_simulates(a, b, Acceptance::fair);
      CHECK((!direct || delayed));
      CHECK((!delayed || fair));
      holding += fair;
      for (auto acc :
           {Acceptance::fair, Acceptance::direct, Acceptance::delayed})
        {
          const bool plain = plain_simulates(a, b, acc);
          const bool la1 = bounded_simulates(a, b, 1, BufferMode::lookahead, acc);
          const bool la2 = bounded_simulates(a, b, 2, BufferMode::lookahead, acc);
          const bool la3 = bounded_simulates(a, b, 3, BufferMode::lookahead, acc);
          const bool co2 =
            bounded_simulates(a, b, 2, BufferMode::continuous, acc);
          CHECK(plain == la1);
          CHECK(la1 == bounded_simulates(a, b, 1, BufferMode::continuous, acc));
          CHECK((!la1 || la2));
          CHECK((!la2 || la3));
          CHECK((!la2 || co2));
        }
      if (fair)
        CHECK(language_inclusion(a, b, 100000).verdict
              == InclusionVerdict::included);
    }
  CHECK(holding > 10);
}

TEST_CASE("bounded arena validation")
{
  auto [a, b] = fixture("branching");
  CHECK_THROWS_AS(
    build_bounded_buffer_arena(a, b, 0, BufferMode::lookahead,
                               Acceptance::fair),
    std::invalid_argument);
  CHECK_THROWS_AS(build_bounded_buffer_arena(a, b, 6, BufferMode::continuous,
                                             Acceptance::fair, 10),
                  BudgetExceeded);
  auto [ia, ib] = fixture("inclusion-gap");
  CHECK_THROWS_AS(plain_simulates(a, ib, Acceptance::fair), AlphabetMismatch);
  CHECK(parse_acceptance("delayed") == Acceptance::delayed);
  CHECK_FALSE(parse_acceptance("weak"));
  CHECK(parse_buffer_mode("continuous") == BufferMode::continuous);
  CHECK(std::string(to_string(BufferMode::lookahead)) == "lookahead");
}
