#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace buffsim
{

/// Malformed automaton or tiling-system text.  line() is 1-based, 0 when
/// the problem is not tied to a line.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                              : what),
      line_(line)
  {
  }
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Structurally invalid automaton (bad ids, multiple initial states...).
class InvalidAutomaton : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class AlphabetMismatch : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class UnknownLetter : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// The transition monoid grew past its element cap.  The partial monoid is
/// discarded; nothing that needs completeness may be concluded.
class CapExceeded : public std::runtime_error
{
public:
  CapExceeded(std::size_t cap, std::size_t partial)
    : std::runtime_error("monoid cap " + std::to_string(cap)
                         + " exceeded (" + std::to_string(partial)
                         + " elements built)"),
      cap_(cap), partial_(partial)
  {
  }
  std::size_t cap() const noexcept { return cap_; }
  std::size_t partial_size() const noexcept { return partial_; }

private:
  std::size_t cap_;
  std::size_t partial_;
};

/// A quotient-game strategy could not be realised on concrete runs.  This
/// always indicates a bug.
class ReplayFailure : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

class DelayedPruningRefused : public std::invalid_argument
{
public:
  DelayedPruningRefused()
    : std::invalid_argument(
        "pruning with a delayed-simulation preorder is not language preserving")
  {
  }
};

/// A brute-force oracle would exceed its configured state budget.
class BudgetExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace buffsim
