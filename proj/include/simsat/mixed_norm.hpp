#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace simsat {

/// Iterated L^p_y L^q_z norm over a tensor grid: the z block is integrated
/// first at exponent q_inner, then the y block at p_outer. Infinite exponents
/// take the max. outer_axes lists the y axes; the remaining axes form z.
struct MixedNormSpec {
  std::vector<int> outer_axes;
  double p_outer = 2.0;
  double q_inner = 2.0;

  static MixedNormSpec plain(double p, int dim);
};

/// Values on a row-major tensor grid with per-axis sizes `shape` and cell
/// volume weights per axis `cell`. Masked-out points carry weight 0 through
/// the `active` flags (empty = all active).
struct GridField {
  std::vector<double> magnitudes;
  std::vector<int> shape;
  std::vector<double> cell;           // per-axis cell width
  std::vector<std::uint8_t> active;   // optional mask

  std::size_t total() const;
};

double mixed_norm(const GridField& field, const MixedNormSpec& spec);

}  // namespace simsat
