#pragma once

#include <cstdint>
#include <vector>

#include "simsat/perm_tuple.hpp"

namespace simsat {

/// Multiplication and inverse tables for S_N under lexicographic ranks.
/// Rank 0 is the identity.
struct GroupTable {
  explicit GroupTable(int degree);

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mult_[a * order + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }

  int degree = 0;
  std::uint32_t order = 0;

private:
  std::vector<std::uint32_t> mult_;
  std::vector<std::uint32_t> inv_;
};

/// Enumerates (S_N)^M by mixed-radix Lehmer rank and caches, per tuple, the
/// part ranks and the clock transitions sigma_m^{-1} sigma_{m-1}. Everything
/// downstream that walks tuple pairs goes through this cache.
class TupleSpace {
public:
  TupleSpace(int degree, int multilinearity);

  int degree() const { return degree_; }
  int multilinearity() const { return multilinearity_; }
  std::uint64_t dimension() const { return dimension_; }
  const GroupTable& group() const { return group_; }

  const PermTuple& tuple(std::uint32_t rank) const { return tuples_[rank]; }

  /// Rank of part m (1-based) of tuple s.
  std::uint32_t part_rank(std::uint32_t s, int m) const {
    return parts_[s * static_cast<std::uint32_t>(multilinearity_) +
                  static_cast<std::uint32_t>(m - 1)];
  }

  /// Rank of the m-th transition (1-based, clock arithmetic) of tuple s.
  std::uint32_t transition_rank(std::uint32_t s, int m) const {
    return trans_[s * static_cast<std::uint32_t>(multilinearity_) +
                  static_cast<std::uint32_t>(m - 1)];
  }

  std::uint32_t cycle_shift_rank(std::uint32_t s) const { return cycled_[s]; }

  /// Weaving test on cached transitions; M must be even.
  bool weaves(std::uint32_t s, std::uint32_t t) const;

  int hamming(std::uint32_t s, std::uint32_t t) const;

private:
  int degree_;
  int multilinearity_;
  std::uint64_t dimension_;
  GroupTable group_;
  std::vector<PermTuple> tuples_;
  std::vector<std::uint32_t> parts_;
  std::vector<std::uint32_t> trans_;
  std::vector<std::uint32_t> cycled_;
};

}  // namespace simsat
