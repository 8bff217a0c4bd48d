#pragma once

#include <vector>

#include "simsat/extension.hpp"
#include "simsat/geometry.hpp"
#include "simsat/system.hpp"

namespace simsat {

/// Geometric realization of a kernel system: operator m is the extension
/// operator of surface m at the common lambda, kernels are quadrature values
/// of the pair kernel at point differences, and the relation is cone
/// membership around the surface's nominal normal. Kernels are Gram sums
/// over quadrature nodes, so the induced energy matrices are PSD.
class ExtensionSystem final : public SimultaneousSystem {
public:
  ExtensionSystem(std::vector<GraphHypersurface> surfaces, double lambda,
                  std::vector<Eigen::VectorXd> points,
                  ConeRelationParams params);

  int multilinearity() const override {
    return static_cast<int>(surfaces_.size());
  }
  std::complex<double> kernel(int m, int p, int q) const override;
  bool relation(int m, int p, int q) const override;
  double bound_B() const override { return bound_b_; }
  /// Off-relation kernels decay super-polynomially; reported at a fixed
  /// reference order rather than measured per pair.
  double decay_rate(double lambda) const override {
    return std::pow(lambda, -3.0);
  }
  double lambda() const override { return lambda_; }

  const PointSet& base_points() const { return base_; }

private:
  std::vector<GraphHypersurface> surfaces_;
  double lambda_;
  double bound_b_ = 0.0;
  PointSet base_;
  std::vector<QuadratureGrid> grids_;
  ConeRelationParams params_;
};

}  // namespace simsat
