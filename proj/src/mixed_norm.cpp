#include "simsat/mixed_norm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace simsat {

MixedNormSpec MixedNormSpec::plain(double p, int dim) {
  MixedNormSpec spec;
  spec.outer_axes.resize(static_cast<std::size_t>(dim));
  std::iota(spec.outer_axes.begin(), spec.outer_axes.end(), 0);
  spec.p_outer = p;
  spec.q_inner = p;
  return spec;
}

std::size_t GridField::total() const {
  std::size_t n = 1;
  for (int s : shape) n *= static_cast<std::size_t>(s);
  return n;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct BlockLayout {
  std::vector<int> axes;
  std::vector<std::size_t> strides;  // stride per block axis in the flat array
  std::vector<int> sizes;
  double cell_volume = 1.0;
  std::size_t count = 1;
};

BlockLayout make_layout(const GridField& field, const std::vector<int>& axes) {
  const int dim = static_cast<int>(field.shape.size());
  std::vector<std::size_t> stride(static_cast<std::size_t>(dim), 1);
  for (int a = dim - 2; a >= 0; --a)
    stride[static_cast<std::size_t>(a)] =
        stride[static_cast<std::size_t>(a + 1)] *
        static_cast<std::size_t>(field.shape[static_cast<std::size_t>(a + 1)]);
  BlockLayout layout;
  layout.axes = axes;
  for (int a : axes) {
    layout.strides.push_back(stride[static_cast<std::size_t>(a)]);
    layout.sizes.push_back(field.shape[static_cast<std::size_t>(a)]);
    layout.cell_volume *= field.cell[static_cast<std::size_t>(a)];
    layout.count *= static_cast<std::size_t>(field.shape[static_cast<std::size_t>(a)]);
  }
  return layout;
}

// Iterates a block's multi-index, producing flat offsets.
template <typename Fn>
void for_each_offset(const BlockLayout& layout, Fn&& fn) {
  std::vector<int> idx(layout.axes.size(), 0);
  while (true) {
    std::size_t offset = 0;
    for (std::size_t a = 0; a < idx.size(); ++a)
      offset += static_cast<std::size_t>(idx[a]) * layout.strides[a];
    fn(offset);
    std::size_t a = 0;
    for (; a < idx.size(); ++a) {
      if (++idx[a] < layout.sizes[a]) break;
      idx[a] = 0;
    }
    if (a == idx.size()) break;
  }
}

}  // namespace

double mixed_norm(const GridField& field, const MixedNormSpec& spec) {
  if (field.shape.size() != field.cell.size())
    throw std::invalid_argument("mixed_norm: shape/cell mismatch");
  if (!field.active.empty() && field.active.size() != field.magnitudes.size())
    throw std::invalid_argument("mixed_norm: mask size mismatch");
  if (field.magnitudes.size() != field.total())
    throw std::invalid_argument("mixed_norm: field size mismatch");
  if (spec.p_outer <= 0.0 || spec.q_inner <= 0.0)
    throw std::invalid_argument("mixed_norm: exponents must be positive or inf");

  const int dim = static_cast<int>(field.shape.size());
  std::vector<int> inner_axes;
  for (int a = 0; a < dim; ++a)
    if (std::find(spec.outer_axes.begin(), spec.outer_axes.end(), a) ==
        spec.outer_axes.end())
      inner_axes.push_back(a);

  const BlockLayout outer = make_layout(field, spec.outer_axes);
  const BlockLayout inner = make_layout(field, inner_axes);

  const bool p_inf = spec.p_outer == kInf;
  const bool q_inf = spec.q_inner == kInf;

  double outer_acc = 0.0;
  for_each_offset(outer, [&](std::size_t outer_offset) {
    double inner_acc = 0.0;
    for_each_offset(inner, [&](std::size_t inner_offset) {
      const std::size_t at = outer_offset + inner_offset;
      if (!field.active.empty() && !field.active[at]) return;
      const double v = field.magnitudes[at];
      if (q_inf)
        inner_acc = std::max(inner_acc, v);
      else
        inner_acc += std::pow(v, spec.q_inner) * inner.cell_volume;
    });
    const double inner_norm =
        q_inf ? inner_acc : std::pow(inner_acc, 1.0 / spec.q_inner);
    if (p_inf)
      outer_acc = std::max(outer_acc, inner_norm);
    else
      outer_acc += std::pow(inner_norm, spec.p_outer) * outer.cell_volume;
  });
  return p_inf ? outer_acc : std::pow(outer_acc, 1.0 / spec.p_outer);
}

}  // namespace simsat
