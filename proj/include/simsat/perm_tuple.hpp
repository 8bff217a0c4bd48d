#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "simsat/permutation.hpp"

namespace simsat {

/// Largest tuple-space dimension D = (N!)^M any dense-matrix consumer accepts.
inline constexpr std::uint64_t kMaxTupleSpace = 20000;

/// An element of (S_N)^M. parts[m-1] is the m-th permutation; all parts share
/// one degree N. Transition indices use mod-M clock arithmetic, so part 0
/// means part M.
class PermTuple {
public:
  PermTuple(std::vector<Permutation> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("PermTuple: M must be >= 1");
    for (const auto& p : parts_)
      if (p.degree() != parts_.front().degree())
        throw std::invalid_argument("PermTuple: parts must share one degree");
  }

  static PermTuple identity(int degree, int multilinearity) {
    return PermTuple(std::vector<Permutation>(
        static_cast<std::size_t>(multilinearity), Permutation::identity(degree)));
  }

  int degree() const { return parts_.front().degree(); }
  int multilinearity() const { return static_cast<int>(parts_.size()); }

  /// 1-based access matching the sigma_m convention; m=0 aliases m=M.
  const Permutation& part(int m) const {
    const int big_m = multilinearity();
    if (m < 0 || m > big_m) throw std::out_of_range("PermTuple::part: index");
    return parts_[static_cast<std::size_t>(m == 0 ? big_m - 1 : m - 1)];
  }

  const std::vector<Permutation>& parts() const { return parts_; }

  friend bool operator==(const PermTuple& a, const PermTuple& b) {
    return a.parts_ == b.parts_;
  }

private:
  std::vector<Permutation> parts_;
};

inline void require_same_shape(const PermTuple& s, const PermTuple& t) {
  if (s.degree() != t.degree() || s.multilinearity() != t.multilinearity())
    throw std::invalid_argument("perm tuple shape mismatch");
}

/// The m-th transition sigma_m^{-1} * sigma_{m-1}, with sigma_0 = sigma_M.
inline Permutation transition(const PermTuple& t, int m) {
  if (m < 1 || m > t.multilinearity())
    throw std::out_of_range("transition: m out of range");
  return compose(invert(t.part(m)), t.part(m - 1));
}

/// sigma ~ev tau: transitions agree at every even m <= M. Requires M even.
inline bool equiv_even(const PermTuple& s, const PermTuple& t) {
  require_same_shape(s, t);
  if (s.multilinearity() % 2 != 0)
    throw std::invalid_argument("equiv_even: M must be even");
  for (int m = 2; m <= s.multilinearity(); m += 2)
    if (!(transition(s, m) == transition(t, m))) return false;
  return true;
}

/// sigma ~odd tau: transitions agree at every odd m <= M. Requires M even.
inline bool equiv_odd(const PermTuple& s, const PermTuple& t) {
  require_same_shape(s, t);
  if (s.multilinearity() % 2 != 0)
    throw std::invalid_argument("equiv_odd: M must be even");
  for (int m = 1; m <= s.multilinearity(); m += 2)
    if (!(transition(s, m) == transition(t, m))) return false;
  return true;
}

/// The weaving condition
///   sigma_1^{-1} sigma_M tau_M^{-1} tau_{M-1} ... tau_2^{-1} tau_1 = e,
/// i.e. the alternating product of s transitions at odd clock positions and
/// t transitions at even ones closes into a loop. Requires M even.
inline bool weaves(const PermTuple& s, const PermTuple& t) {
  require_same_shape(s, t);
  const int big_m = s.multilinearity();
  if (big_m % 2 != 0) throw std::invalid_argument("weaves: M must be even");
  Permutation acc = transition(s, 1);
  for (int m = big_m; m >= 2; --m)
    acc = compose(acc, transition(m % 2 == 0 ? t : s, m));
  return acc.is_identity();
}

/// c(sigma_1,...,sigma_M) = (sigma_2,...,sigma_M,sigma_1).
inline PermTuple cycle_shift(const PermTuple& s) {
  std::vector<Permutation> parts;
  parts.reserve(static_cast<std::size_t>(s.multilinearity()));
  for (int m = 2; m <= s.multilinearity(); ++m) parts.push_back(s.part(m));
  parts.push_back(s.part(1));
  return PermTuple(std::move(parts));
}

inline PermTuple cycle_shift_inverse(const PermTuple& s) {
  std::vector<Permutation> parts;
  parts.reserve(static_cast<std::size_t>(s.multilinearity()));
  parts.push_back(s.part(s.multilinearity()));
  for (int m = 1; m < s.multilinearity(); ++m) parts.push_back(s.part(m));
  return PermTuple(std::move(parts));
}

/// Number of sites (m,j) where the images differ; ranges over 0..M*N.
inline int hamming(const PermTuple& s, const PermTuple& t) {
  require_same_shape(s, t);
  int count = 0;
  for (int m = 1; m <= s.multilinearity(); ++m)
    for (int j = 0; j < s.degree(); ++j)
      if (s.part(m)(j) != t.part(m)(j)) ++count;
  return count;
}

/// Mixed-radix Lehmer rank over (S_N)^M, part sigma_1 most significant.
struct TupleIndex {
  std::uint64_t rank = 0;
};

inline std::uint64_t tuple_space_size(int degree, int multilinearity) {
  const std::uint64_t base = factorial(degree);
  std::uint64_t d = 1;
  for (int m = 0; m < multilinearity; ++m) {
    d *= base;
    if (d > kMaxTupleSpace)
      throw std::invalid_argument("tuple space exceeds dense guard (N!)^M <= 20000");
  }
  return d;
}

inline TupleIndex tuple_rank(const PermTuple& s) {
  tuple_space_size(s.degree(), s.multilinearity());
  const std::uint64_t base = factorial(s.degree());
  std::uint64_t r = 0;
  for (int m = 1; m <= s.multilinearity(); ++m) r = r * base + lehmer_rank(s.part(m));
  return TupleIndex{r};
}

inline PermTuple tuple_unrank(int degree, int multilinearity, TupleIndex idx) {
  const std::uint64_t d = tuple_space_size(degree, multilinearity);
  if (idx.rank >= d) throw std::out_of_range("tuple_unrank: rank out of range");
  const std::uint64_t base = factorial(degree);
  std::vector<Permutation> parts(static_cast<std::size_t>(multilinearity),
                                 Permutation::identity(degree));
  std::uint64_t r = idx.rank;
  for (int m = multilinearity; m >= 1; --m) {
    parts[static_cast<std::size_t>(m - 1)] = lehmer_unrank(degree, r % base);
    r /= base;
  }
  return PermTuple(std::move(parts));
}

}  // namespace simsat
