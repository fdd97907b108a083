#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "buffsim/profile.hh"

namespace buffsim
{

using State = std::uint32_t;
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

struct Transition
{
  State src;
  Letter letter;
  State dst;

  auto operator<=>(const Transition&) const = default;
};

/// Nondeterministic Büchi automaton with a single initial state.
///
/// States and letters are named; their iteration order is the declared
/// order and every algorithm in the library walks them in that order.
/// Instances are immutable once constructed.
class Nba
{
public:
  /// Validates and normalises (transitions are sorted and deduplicated).
  /// Throws InvalidAutomaton.
  Nba(std::vector<std::string> states, std::vector<std::string> alphabet,
      std::vector<Transition> transitions, State initial,
      std::vector<State> accepting);

  std::size_t num_states() const noexcept { return states_.size(); }
  std::size_t num_letters() const noexcept { return alphabet_.size(); }
  std::size_t num_transitions() const noexcept { return trans_.size(); }

  const std::vector<std::string>& state_names() const noexcept
  {
    return states_;
  }
  const std::vector<std::string>& alphabet() const noexcept
  {
    return alphabet_;
  }
  const std::string& state_name(State q) const { return states_.at(q); }
  const std::string& letter_name(Letter a) const { return alphabet_.at(a); }

  std::optional<State> find_state(std::string_view name) const;
  std::optional<Letter> find_letter(std::string_view name) const;

  State initial() const noexcept { return initial_; }
  bool is_accepting(State q) const { return accepting_.at(q); }
  const std::vector<bool>& accepting_mask() const noexcept
  {
    return accepting_;
  }
  std::vector<State> accepting_states() const;

  /// Sorted by (src, letter, dst).
  std::span<const Transition> transitions() const noexcept { return trans_; }
  /// Sorted successors of q on a.
  std::span<const State> successors(State q, Letter a) const;
  bool has_successor(State q) const;

  /// Same automaton, different initial state (the A(q) construction).
  Nba with_initial(State q) const;
  /// Same automaton with every state accepting (LTS reading).
  Nba all_accepting() const;

  bool operator==(const Nba& other) const;

private:
  std::vector<std::string> states_;
  std::vector<std::string> alphabet_;
  std::vector<Transition> trans_;
  State initial_;
  std::vector<bool> accepting_;
  // succ_[offset_[q * |Σ| + a] .. offset_[q * |Σ| + a + 1])
  std::vector<std::size_t> offset_;
  std::vector<State> succ_;
};

/// Infinite word stem · period^ω.
struct UltimatelyPeriodicWord
{
  Word stem;
  Word period;

  bool operator==(const UltimatelyPeriodicWord&) const = default;
};

/// A finite w-path q_0 a_1 q_1 ... a_n q_n.
struct RunPath
{
  std::vector<State> states;
  Word word;

  bool operator==(const RunPath&) const = default;
};

enum class NbaFormat
{
  native,
  ba,
};

/// Parses either format.  Throws ParseError (with a line number) or
/// InvalidAutomaton.
Nba parse_nba(std::string_view text, NbaFormat format);
/// Guesses the format from the first meaningful line.
NbaFormat detect_format(std::string_view text);
Nba load_nba(const std::string& path);

std::string emit_nba(const Nba& a, NbaFormat format);
std::string to_dot(const Nba& a);

/// States without outgoing transitions.
std::vector<State> dead_ends(const Nba& a);

/// Brute-force f_w by relation powering over (state, seen-accepting) pairs.
/// Throws UnknownLetter.
Profile word_profile(const Nba& a, std::span<const Letter> w);

/// True iff `w` is a valid path of `a`.
bool is_path(const Nba& a, const RunPath& run);

/// u·v^ω ∈ L(a), via the product with the lasso automaton of (u, v).
bool periodic_membership(const Nba& a, const UltimatelyPeriodicWord& w);

/// Accepting lasso run of `a` on u·v^ω, when one exists.  stem reads the
/// first |stem.word| letters of u·v^ω and cycle reads the next block, whose
/// length is a positive multiple of |v|, so stem·cycle^ω reads u·v^ω.  The
/// cycle starts and ends in the same state and enters an accepting state.
struct LassoRun
{
  RunPath stem;
  RunPath cycle;
};
std::optional<LassoRun> accepting_lasso(const Nba& a,
                                        const UltimatelyPeriodicWord& w);
/// First `length` steps of stem·cycle^ω.
RunPath unroll(const LassoRun& lasso, std::size_t length);

/// Disjoint union used by the monoid-based algorithms: the states of `a`
/// come first (prefixed "A:"), then those of `b` (prefixed "B:"); the
/// initial state is a's.  b's letters are remapped onto a's alphabet.
/// Throws AlphabetMismatch unless both alphabets hold the same letters.
Nba disjoint_union(const Nba& a, const Nba& b);
/// Same letter set (order may differ).
bool same_alphabet(const Nba& a, const Nba& b);
/// b with its letters renumbered to follow a's alphabet order.
Nba align_alphabet(const Nba& a, const Nba& b);

/// Letters separated by whitespace or '.'; a single token made only of
/// one-character letters is split into characters.  "eps" or "" is ε.
Word parse_word(const Nba& a, std::string_view text);
std::string format_word(const Nba& a, std::span<const Letter> w);

/// Example automaton pairs drawn in the buffered-simulation literature.
/// Names: "branching", "lookahead-gap", "inclusion-gap".
std::pair<Nba, Nba> fixture(std::string_view name);
std::vector<std::string> fixture_names();

} // namespace buffsim
