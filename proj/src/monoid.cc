#include "buffsim/monoid.hh"

#include <limits>
#include <stdexcept>

#include "buffsim/errors.hh"

namespace buffsim
{

Profile letter_profile(const Nba& a, Letter letter)
{
  if (letter >= a.num_letters())
    throw UnknownLetter("letter index out of range");
  Profile p(a.num_states());
  for (State q = 0; q < a.num_states(); ++q)
    for (State t : a.successors(q, letter))
      p.set(q, t, a.is_accepting(t) ? 0 : 2);
  return p;
}

TransitionMonoid::Index TransitionMonoid::multiply(Index x, Index y) const
{
  for (Letter l : elements_.at(y).witness)
    x = right_mult(x, l);
  return x;
}

TransitionMonoid::Index TransitionMonoid::of_word(std::span<const Letter> w) const
{
  Index x = identity();
  for (Letter l : w)
    {
      if (l >= num_letters_)
        throw UnknownLetter("letter index out of range");
      x = right_mult(x, l);
    }
  return x;
}

std::optional<TransitionMonoid::Index>
TransitionMonoid::find(const Profile& p) const
{
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::vector<TransitionMonoid::Index> TransitionMonoid::idempotent_indices() const
{
  std::vector<Index> out;
  for (Index i = 0; i < elements_.size(); ++i)
    if (elements_[i].idempotent)
      out.push_back(i);
  return out;
}

TransitionMonoid build_monoid(const Nba& a, std::size_t cap)
{
  const auto letters = a.num_letters();
  if (cap < letters + 1)
    throw std::invalid_argument("monoid cap must be at least |alphabet| + 1");

  TransitionMonoid m;
  m.dim_ = a.num_states();
  m.num_letters_ = letters;
  m.cap_ = cap;

  std::vector<Profile> gens;
  for (Letter l = 0; l < letters; ++l)
    gens.push_back(letter_profile(a, l));

  auto add = [&](Profile p, Word w) {
    auto [it, fresh] =
      m.index_.emplace(p, static_cast<TransitionMonoid::Index>(m.size()));
    if (fresh)
      {
        if (m.elements_.size() >= cap)
          throw CapExceeded(cap, m.elements_.size());
        m.elements_.push_back({std::move(p), std::move(w), false, false});
      }
    return it->second;
  };

  add(Profile::identity(m.dim_), {});
  m.elements_[0].is_identity = true;
  // Processing in index order extends shortlex-least witnesses by one
  // letter, so every new class gets its shortlex-least word.
  for (std::size_t e = 0; e < m.elements_.size(); ++e)
    for (Letter l = 0; l < letters; ++l)
      {
        Profile p = compose(m.elements_[e].profile, gens[l]);
        Word w = m.elements_[e].witness;
        w.push_back(l);
        m.cayley_.push_back(add(std::move(p), std::move(w)));
      }
  for (TransitionMonoid::Index i = 0; i < m.size(); ++i)
    m.elements_[i].idempotent = m.multiply(i, i) == i;
  return m;
}

std::vector<MonoidElement> idempotents(const TransitionMonoid& m)
{
  std::vector<MonoidElement> out;
  for (const auto& e : m.elements())
    if (e.idempotent)
      out.push_back(e);
  return out;
}

std::optional<RamseyTriple> ramsey_factorize(const Nba& a, const RunPath& run)
{
  if (!is_path(a, run))
    throw std::invalid_argument("ramsey_factorize: run is not a path");
  const auto n = run.word.size();
  if (n < 2)
    return std::nullopt;

  // Profiles are interned; (id, letter) -> id products are memoised.
  std::vector<Profile> profiles;
  std::unordered_map<Profile, std::uint32_t, ProfileHash> ids;
  auto intern = [&](Profile p) {
    auto [it, fresh] = ids.emplace(p, profiles.size());
    if (fresh)
      profiles.push_back(std::move(p));
    return it->second;
  };
  std::vector<std::uint32_t> letter_id;
  for (Letter l = 0; l < a.num_letters(); ++l)
    letter_id.push_back(intern(letter_profile(a, l)));
  std::vector<std::uint32_t> step; // (id * |Σ| + letter) -> id, or npos
  constexpr auto npos = std::numeric_limits<std::uint32_t>::max();
  auto extend = [&](std::uint32_t id, Letter l) {
    const auto key = static_cast<std::size_t>(id) * a.num_letters() + l;
    if (key >= step.size())
      step.resize(std::max(key + 1, step.size() * 2), npos);
    if (step[key] == npos)
      {
        auto r = intern(compose(profiles[id], profiles[letter_id[l]]));
        step[key] = r; // intern may not invalidate `step`
      }
    return step[key];
  };

  // cur[x] = profile of the segment x..k.  saved[j] keeps cur at j for
  // accepting positions j.
  std::vector<std::uint32_t> cur;
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> saved;
  for (std::size_t k = 0; k <= n; ++k)
    {
      if (k > 0)
        {
          const Letter l = run.word[k - 1];
          for (auto& id : cur)
            id = extend(id, l);
          cur.push_back(letter_id[l]);
        }
      const State qk = run.states[k];
      if (!a.is_accepting(qk))
        continue;
      for (std::size_t i = 0; i < k; ++i)
        {
          if (run.states[i] != qk)
            continue;
          for (std::size_t j = i + 1; j < k; ++j)
            if (run.states[j] == qk && cur[i] == cur[j]
                && saved.at(j)[i] == cur[j])
              return RamseyTriple{i, j, k};
        }
      saved.emplace(k, cur);
    }
  return std::nullopt;
}

std::size_t ramsey_bound(const Nba& a)
{
  constexpr auto max = std::numeric_limits<std::size_t>::max();
  const std::size_t q = a.num_states();
  std::size_t b = 1;
  for (std::size_t e = 0; e < q * q; ++e)
    {
      if (b > max / 3)
        return max;
      b *= 3;
    }
  const std::size_t f = a.accepting_states().size();
  if (f && b > max / f)
    return max;
  b *= f;
  if (q && b > max / q)
    return max;
  b *= q;
  return b > max - 2 ? max : b + 2;
}

InclusionResult language_inclusion(const Nba& a, const Nba& b, std::size_t cap)
{
  const Nba u = disjoint_union(a, b);
  const Nba bb = align_alphabet(a, b);
  InclusionResult res{InclusionVerdict::included, std::nullopt, 0};
  std::optional<TransitionMonoid> m;
  try
    {
      m.emplace(build_monoid(u, cap));
    }
  catch (const CapExceeded& e)
    {
      res.verdict = InclusionVerdict::inconclusive;
      res.monoid_size = e.partial_size();
      return res;
    }
  res.monoid_size = m->size();
  const auto idem = m->idempotent_indices();
  const State qa = a.initial();
  for (TransitionMonoid::Index g = 0; g < m->size(); ++g)
    {
      const Profile& pg = m->profile(g);
      for (auto h : idem)
        {
          if (h == TransitionMonoid::identity())
            continue;
          const Profile& ph = m->profile(h);
          bool candidate = false;
          for (State q = 0; q < a.num_states() && !candidate; ++q)
            candidate = pg.has_path(qa, q) && ph.has_accepting_path(q, q);
          if (!candidate)
            continue;
          UltimatelyPeriodicWord w{m->witness(g), m->witness(h)};
          if (!periodic_membership(bb, w))
            {
              res.verdict = InclusionVerdict::not_included;
              res.counterexample = std::move(w);
              return res;
            }
        }
    }
  return res;
}

} // namespace buffsim
