#pragma once

#include <Eigen/Dense>
#include <string>

namespace simsat {

enum class SurfaceKind { hyperplane, paraboloid, perturbed_paraboloid, cylinder };

SurfaceKind surface_kind_from_string(const std::string& name);
std::string to_string(SurfaceKind kind);

/// Hypersurface xi_a = Sigma(xi_hat) over a centered parameter box in
/// R^{d-1}, carrying the smooth bump amplitude
///   b(xi_hat) = prod_i exp(1 - 1/(1 - (2 xi_hat_i / w)^2)),
/// extended by zero outside the box. The amplitude absorbs the surface
/// Jacobian: the measure is b(xi_hat) d xi_hat on the parameter box.
class GraphHypersurface {
public:
  GraphHypersurface(std::string name, int ambient_dim, int graph_axis,
                    SurfaceKind kind, double box_width,
                    double perturbation = 0.0);

  const std::string& name() const { return name_; }
  int ambient_dim() const { return dim_; }
  int graph_axis() const { return axis_; }
  SurfaceKind kind() const { return kind_; }
  double box_width() const { return width_; }
  double perturbation() const { return perturbation_; }

  /// Sigma(xi_hat); xi_hat has d-1 components.
  double graph(const Eigen::VectorXd& xi_hat) const;

  /// The bump; zero outside the open box.
  double amplitude(const Eigen::VectorXd& xi_hat) const;

  /// The ambient point (graph coordinate on graph_axis, parameters on the
  /// remaining axes in ascending order).
  Eigen::VectorXd embed(const Eigen::VectorXd& xi_hat) const;

  Eigen::VectorXd unit_normal(const Eigen::VectorXd& xi_hat) const;

  /// Normal at the box center; equals e_{graph_axis} for the built-ins.
  Eigen::VectorXd nominal_normal() const;

  /// max |nu(xi_hat) - nominal| over a sample grid of the bump support;
  /// callers pairing the surface with a cone relation require this to stay
  /// within 2 epsilon_tilde.
  double normal_spread(int samples_per_axis = 17) const;

  std::string to_json() const;
  static GraphHypersurface from_json(const std::string& text);

private:
  std::string name_;
  int dim_;
  int axis_;
  SurfaceKind kind_;
  double width_;
  double perturbation_;
};

}  // namespace simsat
