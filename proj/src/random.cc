#include "buffsim/random.hh"

#include <stdexcept>
#include <string>

namespace buffsim
{

// Hand-rolled draws: the standard distributions are not specified bit for
// bit, and reproducible corpora need identical draws on every platform.
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
  if (hi < lo)
    throw std::invalid_argument("empty range");
  const std::uint64_t span = hi - lo + 1;
  return lo + static_cast<std::size_t>(rng() % span);
}

bool coin(Rng& rng, double p)
{
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

Nba random_nba(Rng& rng, const RandomNbaOptions& opt)
{
  if (opt.letters == 0 || opt.letters > 26 || opt.min_states == 0
      || opt.max_states < opt.min_states)
    throw std::invalid_argument("bad random automaton options");
  const std::size_t n = uniform(rng, opt.min_states, opt.max_states);
  std::vector<std::string> states, alphabet;
  for (std::size_t i = 0; i < n; ++i)
    states.push_back("s" + std::to_string(i));
  for (std::size_t i = 0; i < opt.letters; ++i)
    alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<Transition> trans;
  for (State q = 0; q < n; ++q)
    for (Letter l = 0; l < opt.letters; ++l)
      for (State q2 = 0; q2 < n; ++q2)
        if (coin(rng, opt.edge_probability))
          trans.push_back({q, l, q2});
  std::vector<State> acc;
  for (State q = 0; q < n; ++q)
    if (coin(rng, opt.accepting_probability))
      acc.push_back(q);
  return Nba(std::move(states), std::move(alphabet), std::move(trans), 0,
             std::move(acc));
}

Word random_word(Rng& rng, const Nba& a, std::size_t length)
{
  Word w(length);
  for (auto& l : w)
    l = static_cast<Letter>(uniform(rng, 0, a.num_letters() - 1));
  return w;
}

Profile random_profile(Rng& rng, std::size_t dim)
{
  Profile p(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      p.set(i, j, static_cast<std::uint8_t>(uniform(rng, 0, 2)));
  return p;
}

TilingSystem random_tiling_system(Rng& rng, std::size_t tiles,
                                  double pair_probability)
{
  if (tiles == 0)
    throw std::invalid_argument("a tiling system needs a tile");
  TilingSystem ts;
  for (std::size_t i = 1; i <= tiles; ++i)
    ts.tiles.push_back("t" + std::to_string(i));
  ts.horizontal.resize(tiles * tiles);
  ts.vertical.resize(tiles * tiles);
  for (auto& x : ts.horizontal)
    x = coin(rng, pair_probability);
  for (auto& x : ts.vertical)
    x = coin(rng, pair_probability);
  ts.initial = uniform(rng, 0, tiles - 1);
  ts.final = uniform(rng, 0, tiles - 1);
  return ts;
}

} // namespace buffsim
