#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "simsat/extension.hpp"
#include "simsat/mixed_norm.hpp"
#include "simsat/surface.hpp"

namespace simsat {

/// Uniform grid [-1,1]^d, odd point count per axis so the origin is a grid
/// point, with a unit-ball mask for the norm integrals.
struct SpatialGrid {
  int dim = 2;
  int per_axis = 0;
  Eigen::VectorXd axis;  // shared coordinates per axis
  double spacing = 0.0;

  SpatialGrid(int dim, int per_axis);

  std::size_t total() const;
  std::vector<std::uint8_t> ball_mask() const;
  Eigen::VectorXd point(std::size_t flat_index) const;
};

/// Evaluates extension fields of one surface over a whole grid by splitting
/// the phase e^{i lambda <x, embed(node)>} into per-axis factors: the graph
/// axis couples to Sigma(node) as a dense G x nodes matrix, every parameter
/// axis couples to a single node component. Evaluation is then one or two
/// complex matrix products instead of a quadrature loop per grid point.
class ExtensionFieldPlan {
public:
  ExtensionFieldPlan(const GraphHypersurface& surface, double lambda,
                     const SpatialGrid& grid, const QuadratureGrid& quad);

  int node_count() const { return node_count_; }

  /// w * b per node, flattened in the plan's node order.
  const Eigen::VectorXd& node_weights() const { return node_weights_; }

  /// Quadrature L^2 norm of coefficients against the b d(xi_hat) measure.
  double input_norm(const Eigen::VectorXcd& f) const;

  /// Row-major complex field over the grid for node coefficients f.
  Eigen::VectorXcd evaluate(const Eigen::VectorXcd& f) const;

private:
  int dim_;
  int grid_points_;
  int graph_axis_;
  int node_count_;
  int nodes_per_axis_;
  Eigen::VectorXd node_weights_;
  Eigen::MatrixXcd graph_phase_;               // G x nodes, weights folded in
  std::vector<Eigen::MatrixXcd> param_phase_;  // per parameter axis: G x nodes_per_axis
};

/// Pointwise |product of per-surface fields| over the grid, plus per-factor
/// sups. Coefficient vectors must be pre-normalised to unit input norm.
struct ProductField {
  GridField grid_field;           // magnitudes + ball mask
  std::vector<double> factor_sup; // sup |E_m f_m| over the masked grid
  double sup = 0.0;               // sup of the product
};

ProductField product_field(const std::vector<ExtensionFieldPlan>& plans,
                           const std::vector<Eigen::VectorXcd>& coefficients,
                           const SpatialGrid& grid);

}  // namespace simsat
