#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace buffsim
{

/// Transition profile of a finite word over a fixed state space.
///
/// entry(q, q') is 0 when an accepting path q -> q' exists, 2 when only
/// non-accepting paths exist and 1 when there is no path at all.  A path is
/// accepting when one of the states it enters (the start state excluded)
/// is accepting.
///
/// Internally the profile is a pair of bit matrices: `path` (some path
/// exists) and `acc` (some accepting path exists), with acc a subset of
/// path.  Rows are packed into 64-bit words.
class Profile
{
public:
  Profile() = default;
  explicit Profile(std::size_t dimension);

  /// Profile of the empty word: diagonal 2, everything else 1.
  static Profile identity(std::size_t dimension);

  std::size_t dimension() const noexcept { return dim_; }

  /// Value in {0, 1, 2}.
  int entry(std::size_t from, std::size_t to) const noexcept;
  void set(std::size_t from, std::size_t to, int value);

  bool has_path(std::size_t from, std::size_t to) const noexcept
  {
    return bit(path_, from, to);
  }
  bool has_accepting_path(std::size_t from, std::size_t to) const noexcept
  {
    return bit(acc_, from, to);
  }

  /// Profile of the concatenation: (*this) followed by `next`.
  Profile then(const Profile& next) const;

  bool operator==(const Profile& other) const noexcept
  {
    return dim_ == other.dim_ && path_ == other.path_ && acc_ == other.acc_;
  }
  bool operator<(const Profile& other) const noexcept;

  std::size_t hash() const noexcept;

  /// Row-major digits, rows separated by '/', e.g. "21/12".
  std::string to_string() const;

private:
  friend Profile compose(const Profile& f, const Profile& g);

  std::size_t words_per_row() const noexcept { return (dim_ + 63) / 64; }
  bool bit(const std::vector<std::uint64_t>& m, std::size_t r,
           std::size_t c) const noexcept
  {
    return (m[r * words_per_row() + c / 64] >> (c % 64)) & 1u;
  }

  std::size_t dim_ = 0;
  std::vector<std::uint64_t> path_;
  std::vector<std::uint64_t> acc_;
};

/// compose(f, g) realises f_{uv} from f_u and f_v.
/// Throws std::invalid_argument on a dimension mismatch.
Profile compose(const Profile& f, const Profile& g);

struct ProfileHash
{
  std::size_t operator()(const Profile& p) const noexcept { return p.hash(); }
};

} // namespace buffsim
