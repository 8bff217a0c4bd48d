#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "simsat/surface.hpp"

namespace simsat {

/// Tensor-product quadrature over the surface parameter box: uniform nodes,
/// trapezoid weights periodized through the compact support of the bump.
/// Resolves oscillation at scale lambda with `oversampling` nodes per
/// wavelength (default 8).
class QuadratureGrid {
public:
  QuadratureGrid(const GraphHypersurface& surface, double lambda,
                 int oversampling = 8, int min_nodes = 32);

  int nodes_per_axis() const { return nodes_per_axis_; }
  int param_dim() const { return param_dim_; }
  double weight() const { return weight_; }  // per-node tensor weight
  const Eigen::VectorXd& axis_nodes() const { return axis_nodes_; }
  double resolved_lambda() const { return resolved_lambda_; }

  /// Visit every node: callback(xi_hat, weight * amplitude).
  void for_each_node(const GraphHypersurface& surface,
                     const std::function<void(const Eigen::VectorXd&, double)>& fn)
      const;

private:
  int param_dim_;
  int nodes_per_axis_;
  double weight_;
  double resolved_lambda_;
  Eigen::VectorXd axis_nodes_;
};

/// Quadrature value of int e^{i lambda <x, (graph embed)(xi_hat)>}
/// b(xi_hat) f(xi_hat) d xi_hat. Throws if the grid does not resolve lambda.
std::complex<double> extension_eval(
    const GraphHypersurface& surface, double lambda,
    const std::function<std::complex<double>(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x, const QuadratureGrid& grid);

/// Pairwise kernel of T_m T_m^*: the extension of the bare amplitude
/// evaluated at x = p - q. Conjugate symmetric in (p,q).
std::complex<double> extension_kernel(const GraphHypersurface& surface,
                                      double lambda, const Eigen::VectorXd& p,
                                      const Eigen::VectorXd& q,
                                      const QuadratureGrid& grid);

struct DecayFit {
  double r_hat = 0.0;           // minus the fitted log-log slope
  bool underflow_clamped = false;
  std::vector<double> kernel_magnitudes;
};

/// Fits |K(p, p + u/2)| ~ lambda^{-R} over a geometric lambda list and
/// returns R_hat. Direction u must be unit; at least 3 lambdas.
DecayFit decay_fit(const GraphHypersurface& surface, const Eigen::VectorXd& u,
                   const std::vector<double>& lambdas, int oversampling = 8);

struct CurvatureReport {
  double det = 0.0;
  bool curved = false;  // |det| >= 1e-6
};

/// Finite-difference Hessian determinant of the section Sigma(0, eta) where
/// eta is the trailing d-k parameter block; the non-degeneracy hypothesis of
/// the curvature-assisted estimates.
CurvatureReport curvature_section_check(const GraphHypersurface& surface, int k,
                                        double step = 1e-4);

}  // namespace simsat
