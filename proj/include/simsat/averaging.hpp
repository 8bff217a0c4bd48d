#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "simsat/tuple_space.hpp"

namespace simsat {

using DenseHermitian = Eigen::MatrixXcd;

/// Indicator matrix with a single scalar scale: entry (s,t) is `scale` when t
/// appears in rows[s], otherwise 0. Supports are kept as sorted integer sets
/// so products and structural identities can be checked exactly before any
/// scaling is applied.
class ScaledIndicatorMatrix {
public:
  ScaledIndicatorMatrix(std::uint64_t dim, double scale,
                        std::vector<std::vector<std::uint32_t>> rows)
      : dim_(dim), scale_(scale), rows_(std::move(rows)) {}

  std::uint64_t dimension() const { return dim_; }
  double scale() const { return scale_; }
  const std::vector<std::uint32_t>& row(std::uint32_t s) const { return rows_[s]; }

  bool contains(std::uint32_t s, std::uint32_t t) const;
  double entry(std::uint32_t s, std::uint32_t t) const {
    return contains(s, t) ? scale_ : 0.0;
  }

  std::uint64_t support_size() const;
  Eigen::MatrixXd to_dense() const;

  /// Plain-text sparse triplets "row col value", one per line.
  void write_triplets(std::ostream& os) const;

private:
  std::uint64_t dim_;
  double scale_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

/// A_ev of the even-transition equivalence; entries D^{-1/2} on classes of
/// size exactly D^{1/2}, which makes the matrix an orthogonal projection.
ScaledIndicatorMatrix build_even_projector(const TupleSpace& space);

/// A_odd, same construction over odd transitions.
ScaledIndicatorMatrix build_odd_projector(const TupleSpace& space);

/// The unitary C with C(s,t) = 1 iff t = c(s); C V_s = V_{c^{-1}(s)} and
/// C^M = Id.
ScaledIndicatorMatrix build_cycle_matrix(const TupleSpace& space);

/// A = A_ev A_odd + A_odd A_ev, assembled from the weaving indicator
/// (both orientations) at scale D^{-(1-1/M)}.
DenseHermitian build_symmetrized_average(const TupleSpace& space);

/// Sorted weaving adjacency: weave_rows(space)[s] = { t : s weaves t }.
std::vector<std::vector<std::uint32_t>> weave_rows(const TupleSpace& space);

struct StructureReport {
  bool ok = true;
  std::string detail;  // offending (s,t) and values on failure
};

/// Exact support-level verification that A_odd = C A_ev C^{-1} and that C^2
/// commutes with both projectors.
StructureReport check_similarity(const TupleSpace& space);

/// Exact verification that A_odd*A_ev equals the D^{-(1-1/M)}-scaled weaving
/// indicator and A_ev*A_odd its transposed orientation: the class join count
/// must equal N! on weaving pairs and 0 elsewhere.
StructureReport check_weaving_product(const TupleSpace& space);

/// Minimum eigenvalue of a Hermitian matrix via full eigendecomposition.
/// Throws if the input violates conjugate symmetry beyond
/// 1e-12 * max|entry|. PSD verdict: lambda_min >= -1e-9 * ||H||.
double check_psd(const DenseHermitian& h);

/// Full spectrum, ascending.
Eigen::VectorXd hermitian_eigenvalues(const DenseHermitian& h);

/// Cycle lengths of the index permutation underlying C all divide M; this is
/// the exact form of "the eigenvalues of C are M-th roots of unity".
bool cycle_spectrum_divides_m(const TupleSpace& space);

}  // namespace simsat
