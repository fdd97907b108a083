#pragma once

#include <cstddef>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "buffsim/nba.hh"
#include "buffsim/profile.hh"

namespace buffsim
{

/// Profile of a single letter: 0 for an a-edge into F, 2 for any other
/// a-edge, 1 otherwise.  Throws UnknownLetter.
Profile letter_profile(const Nba& a, Letter letter);

struct MonoidElement
{
  Profile profile;
  /// Shortest word of the class, lexicographically least among those
  /// (letters compared by their declared order).
  Word witness;
  bool idempotent = false;
  bool is_identity = false;
};

/// The finite monoid of word profiles of an automaton.
///
/// Elements are numbered in breadth-first discovery order, which is the
/// shortlex order of their witnesses; element 0 is the identity.  The right
/// Cayley table (element, letter) is stored; general products fold the
/// left operand over the witness of the right one.
class TransitionMonoid
{
public:
  using Index = std::uint32_t;

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t num_letters() const noexcept { return num_letters_; }
  std::size_t cap() const noexcept { return cap_; }
  std::size_t dimension() const noexcept { return dim_; }

  const MonoidElement& element(Index i) const { return elements_.at(i); }
  const std::vector<MonoidElement>& elements() const noexcept
  {
    return elements_;
  }
  const Profile& profile(Index i) const { return elements_.at(i).profile; }
  const Word& witness(Index i) const { return elements_.at(i).witness; }
  bool is_idempotent(Index i) const { return elements_.at(i).idempotent; }

  static constexpr Index identity() noexcept { return 0; }
  Index generator(Letter a) const { return right_mult(identity(), a); }
  Index right_mult(Index e, Letter a) const
  {
    return cayley_[static_cast<std::size_t>(e) * num_letters_ + a];
  }
  /// Class of x·y.
  Index multiply(Index x, Index y) const;
  /// Class of a word.
  Index of_word(std::span<const Letter> w) const;
  std::optional<Index> find(const Profile& p) const;

  /// Idempotent elements in index order (the identity first).
  std::vector<Index> idempotent_indices() const;

private:
  friend TransitionMonoid build_monoid(const Nba& a, std::size_t cap);

  std::size_t dim_ = 0;
  std::size_t num_letters_ = 0;
  std::size_t cap_ = 0;
  std::vector<MonoidElement> elements_;
  std::vector<Index> cayley_;
  std::unordered_map<Profile, Index, ProfileHash> index_;
};

/// Breadth-first closure of the letter profiles under composition.
/// Throws CapExceeded when more than `cap` elements would be needed and
/// std::invalid_argument when cap < |alphabet| + 1.
TransitionMonoid build_monoid(const Nba& a, std::size_t cap);

/// Idempotent elements (the identity included, flagged is_identity).
std::vector<MonoidElement> idempotents(const TransitionMonoid& m);

struct RamseyTriple
{
  std::size_t i, j, k;
  bool operator==(const RamseyTriple&) const = default;
};

/// Least triple i < j < k in (k, i, j) order with q_i = q_j = q_k accepting
/// and equal profiles for the segments i..j, j..k and i..k.
/// Throws std::invalid_argument when `run` is not a path of `a`.
std::optional<RamseyTriple> ramsey_factorize(const Nba& a,
                                             const RunPath& run);

/// Number of steps after which every accepting lasso run must admit a
/// Ramsey triple: 3^(|Q|^2)·|F|·|Q| + 2, saturated at SIZE_MAX.
std::size_t ramsey_bound(const Nba& a);

enum class InclusionVerdict
{
  included,
  not_included,
  inconclusive,
};

struct InclusionResult
{
  InclusionVerdict verdict;
  /// Set iff verdict == not_included; letters follow a's alphabet.
  std::optional<UltimatelyPeriodicWord> counterexample;
  std::size_t monoid_size = 0;
};

/// L(a) ⊆ L(b) via the profile monoid of a ⊎ b.  Each candidate pair (g, h),
/// h a non-identity idempotent with an accepting h-loop on an a-state
/// reachable by g, is checked by testing witness(g)·witness(h)^ω against
/// b.  Throws AlphabetMismatch.
InclusionResult language_inclusion(const Nba& a, const Nba& b,
                                   std::size_t cap);

} // namespace buffsim
