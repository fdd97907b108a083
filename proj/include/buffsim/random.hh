#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "buffsim/nba.hh"
#include "buffsim/profile.hh"
#include "buffsim/tiling.hh"

namespace buffsim
{

using Rng = std::mt19937_64;

struct RandomNbaOptions
{
  std::size_t min_states = 1;
  std::size_t max_states = 3;
  std::size_t letters = 2; // named a, b, c, ...
  double edge_probability = 0.35;
  double accepting_probability = 0.5;
};

/// States s0.., initial s0.  Each (q, a, q') is present independently.
Nba random_nba(Rng& rng, const RandomNbaOptions& opt = {});

/// Uniform word over a's alphabet.
Word random_word(Rng& rng, const Nba& a, std::size_t length);

/// Entries uniform over {0, 1, 2}.
Profile random_profile(Rng& rng, std::size_t dim);

/// Tiles t1..t<tiles>, each H/V pair present with the given probability,
/// initial and final uniform.
TilingSystem random_tiling_system(Rng& rng, std::size_t tiles,
                                  double pair_probability = 0.5);

/// Uniform integer in [lo, hi].
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);
bool coin(Rng& rng, double p);

} // namespace buffsim
