#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace simsat {

/// Element of S_N stored as an image array: mapping[j] is the image of j.
/// Indices run 0..N-1.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<std::uint8_t> mapping)
      : mapping_(std::move(mapping)) {
    check_bijection();
  }

  static Permutation identity(int degree) {
    std::vector<std::uint8_t> m(static_cast<std::size_t>(degree));
    std::iota(m.begin(), m.end(), std::uint8_t{0});
    return Permutation(std::move(m));
  }

  int degree() const { return static_cast<int>(mapping_.size()); }

  int operator()(int j) const { return mapping_[static_cast<std::size_t>(j)]; }

  const std::vector<std::uint8_t>& mapping() const { return mapping_; }

  bool is_identity() const {
    for (int j = 0; j < degree(); ++j)
      if ((*this)(j) != j) return false;
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.mapping_ == b.mapping_;
  }

private:
  void check_bijection() const {
    std::vector<bool> seen(mapping_.size(), false);
    for (auto v : mapping_) {
      if (v >= mapping_.size() || seen[v])
        throw std::invalid_argument("Permutation: mapping is not a bijection");
      seen[v] = true;
    }
  }

  std::vector<std::uint8_t> mapping_;
};

inline constexpr int kMaxDegree = 6;

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// All N! elements of S_N in lexicographic order of image arrays.
/// The first element is the identity.
inline std::vector<Permutation> enumerate_group(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("enumerate_group: degree must be in [1," +
                                std::to_string(kMaxDegree) + "]");
  std::vector<std::uint8_t> m(static_cast<std::size_t>(degree));
  std::iota(m.begin(), m.end(), std::uint8_t{0});
  std::vector<Permutation> out;
  out.reserve(factorial(degree));
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

/// (a*b)(j) = a(b(j)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<std::uint8_t> m(static_cast<std::size_t>(a.degree()));
  for (int j = 0; j < a.degree(); ++j)
    m[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(a(b(j)));
  return Permutation(std::move(m));
}

inline Permutation invert(const Permutation& a) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(a.degree()));
  for (int j = 0; j < a.degree(); ++j)
    m[static_cast<std::size_t>(a(j))] = static_cast<std::uint8_t>(j);
  return Permutation(std::move(m));
}

/// Lexicographic rank of a permutation via its Lehmer code. Identity -> 0.
inline std::uint64_t lehmer_rank(const Permutation& p) {
  const int n = p.degree();
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j < n; ++j)
      if (p(j) < p(i)) ++smaller_later;
    rank += static_cast<std::uint64_t>(smaller_later) * factorial(n - 1 - i);
  }
  return rank;
}

inline Permutation lehmer_unrank(int degree, std::uint64_t rank) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("lehmer_unrank: degree out of range");
  if (rank >= factorial(degree))
    throw std::out_of_range("lehmer_unrank: rank out of range");
  std::vector<std::uint8_t> pool(static_cast<std::size_t>(degree));
  std::iota(pool.begin(), pool.end(), std::uint8_t{0});
  std::vector<std::uint8_t> m;
  m.reserve(pool.size());
  for (int i = 0; i < degree; ++i) {
    const std::uint64_t f = factorial(degree - 1 - i);
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    m.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(m));
}

}  // namespace simsat
