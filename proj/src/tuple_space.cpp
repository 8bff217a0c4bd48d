#include "simsat/tuple_space.hpp"

namespace simsat {

GroupTable::GroupTable(int deg) : degree(deg) {
  const auto elems = enumerate_group(deg);
  order = static_cast<std::uint32_t>(elems.size());
  mult_.resize(static_cast<std::size_t>(order) * order);
  inv_.resize(order);
  for (std::uint32_t a = 0; a < order; ++a) {
    for (std::uint32_t b = 0; b < order; ++b)
      mult_[a * order + b] =
          static_cast<std::uint32_t>(lehmer_rank(compose(elems[a], elems[b])));
    inv_[a] = static_cast<std::uint32_t>(lehmer_rank(invert(elems[a])));
  }
}

TupleSpace::TupleSpace(int degree, int multilinearity)
    : degree_(degree), multilinearity_(multilinearity),
      dimension_(tuple_space_size(degree, multilinearity)), group_(degree) {
  const auto d = static_cast<std::uint32_t>(dimension_);
  const auto m_count = static_cast<std::uint32_t>(multilinearity_);
  tuples_.reserve(d);
  parts_.resize(static_cast<std::size_t>(d) * m_count);
  trans_.resize(static_cast<std::size_t>(d) * m_count);
  cycled_.resize(d);
  for (std::uint32_t s = 0; s < d; ++s) {
    tuples_.push_back(tuple_unrank(degree_, multilinearity_, TupleIndex{s}));
    const PermTuple& t = tuples_.back();
    for (int m = 1; m <= multilinearity_; ++m) {
      parts_[s * m_count + static_cast<std::uint32_t>(m - 1)] =
          static_cast<std::uint32_t>(lehmer_rank(t.part(m)));
      trans_[s * m_count + static_cast<std::uint32_t>(m - 1)] =
          static_cast<std::uint32_t>(lehmer_rank(transition(t, m)));
    }
    cycled_[s] = static_cast<std::uint32_t>(tuple_rank(cycle_shift(t)).rank);
  }
}

bool TupleSpace::weaves(std::uint32_t s, std::uint32_t t) const {
  std::uint32_t acc = transition_rank(s, 1);
  for (int m = multilinearity_; m >= 2; --m)
    acc = group_.mul(acc, m % 2 == 0 ? transition_rank(t, m)
                                     : transition_rank(s, m));
  return acc == 0;
}

int TupleSpace::hamming(std::uint32_t s, std::uint32_t t) const {
  return simsat::hamming(tuples_[s], tuples_[t]);
}

}  // namespace simsat
