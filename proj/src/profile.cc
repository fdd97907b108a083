#include "buffsim/profile.hh"

#include <stdexcept>

namespace buffsim
{

Profile::Profile(std::size_t dimension)
  : dim_(dimension),
    path_(dimension * words_per_row(), 0),
    acc_(dimension * words_per_row(), 0)
{
}

Profile Profile::identity(std::size_t dimension)
{
  Profile p(dimension);
  for (std::size_t q = 0; q < dimension; ++q)
    p.set(q, q, 2);
  return p;
}

int Profile::entry(std::size_t from, std::size_t to) const noexcept
{
  if (bit(acc_, from, to))
    return 0;
  return bit(path_, from, to) ? 2 : 1;
}

void Profile::set(std::size_t from, std::size_t to, int value)
{
  if (value < 0 || value > 2)
    throw std::invalid_argument("profile entry must be 0, 1 or 2");
  const std::size_t idx = from * words_per_row() + to / 64;
  const std::uint64_t mask = std::uint64_t{1} << (to % 64);
  path_[idx] &= ~mask;
  acc_[idx] &= ~mask;
  if (value != 1)
    path_[idx] |= mask;
  if (value == 0)
    acc_[idx] |= mask;
}

Profile Profile::then(const Profile& next) const
{
  return compose(*this, next);
}

bool Profile::operator<(const Profile& other) const noexcept
{
  if (dim_ != other.dim_)
    return dim_ < other.dim_;
  if (path_ != other.path_)
    return path_ < other.path_;
  return acc_ < other.acc_;
}

std::size_t Profile::hash() const noexcept
{
  // FNV-1a over both matrices.
  std::uint64_t h = 0xcbf29ce484222325ull ^ dim_;
  auto mix = [&h](std::uint64_t w) {
    h ^= w;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  };
  for (auto w : path_)
    mix(w);
  for (auto w : acc_)
    mix(w);
  return static_cast<std::size_t>(h);
}

std::string Profile::to_string() const
{
  std::string s;
  s.reserve(dim_ * (dim_ + 1));
  for (std::size_t q = 0; q < dim_; ++q)
    {
      if (q)
        s += '/';
      for (std::size_t r = 0; r < dim_; ++r)
        s += static_cast<char>('0' + entry(q, r));
    }
  return s;
}

Profile compose(const Profile& f, const Profile& g)
{
  if (f.dimension() != g.dimension())
    throw std::invalid_argument("compose: dimension mismatch");
  const std::size_t n = f.dimension();
  Profile out(n);
  // Row-wise: out.path[q] = OR_{r in f.path[q]} g.path[r]
  //           out.acc[q]  = OR_{r in f.acc[q]} g.path[r]
  //                       | OR_{r in f.path[q]} g.acc[r]
  const std::size_t w = (n + 63) / 64;
  for (std::size_t q = 0; q < n; ++q)
    {
      std::uint64_t* op = &out.path_[q * w];
      std::uint64_t* oa = &out.acc_[q * w];
      for (std::size_t r = 0; r < n; ++r)
        {
          if (!f.has_path(q, r))
            continue;
          const std::uint64_t* gp = &g.path_[r * w];
          const std::uint64_t* ga = &g.acc_[r * w];
          if (f.has_accepting_path(q, r))
            for (std::size_t i = 0; i < w; ++i)
              {
                op[i] |= gp[i];
                oa[i] |= gp[i];
              }
          else
            for (std::size_t i = 0; i < w; ++i)
              {
                op[i] |= gp[i];
                oa[i] |= ga[i];
              }
        }
    }
  return out;
}

} // namespace buffsim
