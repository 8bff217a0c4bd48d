#include "simsat/extension.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "simsat/fit.hpp"

namespace simsat {

namespace {

int required_nodes(double lambda, double width, int oversampling) {
  return static_cast<int>(
      std::ceil(oversampling * lambda * width / (2.0 * std::numbers::pi)));
}

}  // namespace

QuadratureGrid::QuadratureGrid(const GraphHypersurface& surface, double lambda,
                               int oversampling, int min_nodes)
    : param_dim_(surface.ambient_dim() - 1), resolved_lambda_(lambda) {
  nodes_per_axis_ =
      std::max(min_nodes, required_nodes(lambda, surface.box_width(), oversampling));
  const double h = surface.box_width() / nodes_per_axis_;
  weight_ = std::pow(h, param_dim_);
  axis_nodes_.resize(nodes_per_axis_);
  for (int i = 0; i < nodes_per_axis_; ++i)
    axis_nodes_(i) = -0.5 * surface.box_width() + (i + 0.5) * h;
}

void QuadratureGrid::for_each_node(
    const GraphHypersurface& surface,
    const std::function<void(const Eigen::VectorXd&, double)>& fn) const {
  std::vector<int> idx(static_cast<std::size_t>(param_dim_), 0);
  Eigen::VectorXd xi_hat(param_dim_);
  while (true) {
    for (int i = 0; i < param_dim_; ++i)
      xi_hat(i) = axis_nodes_(idx[static_cast<std::size_t>(i)]);
    const double b = surface.amplitude(xi_hat);
    if (b > 0.0) fn(xi_hat, weight_ * b);
    int i = 0;
    for (; i < param_dim_; ++i) {
      if (++idx[static_cast<std::size_t>(i)] < nodes_per_axis_) break;
      idx[static_cast<std::size_t>(i)] = 0;
    }
    if (i == param_dim_) break;
  }
}

namespace {

void require_resolved(const GraphHypersurface& surface, double lambda,
                      const QuadratureGrid& grid) {
  if (grid.nodes_per_axis() < required_nodes(lambda, surface.box_width(), 8))
    throw std::invalid_argument(
        "quadrature under-resolved: need >= 8 nodes per wavelength at this lambda");
}

}  // namespace

std::complex<double> extension_eval(
    const GraphHypersurface& surface, double lambda,
    const std::function<std::complex<double>(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x, const QuadratureGrid& grid) {
  require_resolved(surface, lambda, grid);
  if (x.size() != surface.ambient_dim())
    throw std::invalid_argument("extension_eval: point dimension mismatch");
  std::complex<double> acc{0.0, 0.0};
  grid.for_each_node(surface, [&](const Eigen::VectorXd& xi_hat, double wb) {
    const double phase = lambda * x.dot(surface.embed(xi_hat));
    acc += wb * f(xi_hat) * std::complex<double>(std::cos(phase), std::sin(phase));
  });
  return acc;
}

std::complex<double> extension_kernel(const GraphHypersurface& surface,
                                      double lambda, const Eigen::VectorXd& p,
                                      const Eigen::VectorXd& q,
                                      const QuadratureGrid& grid) {
  require_resolved(surface, lambda, grid);
  const Eigen::VectorXd diff = p - q;
  std::complex<double> acc{0.0, 0.0};
  grid.for_each_node(surface, [&](const Eigen::VectorXd& xi_hat, double wb) {
    const double phase = lambda * diff.dot(surface.embed(xi_hat));
    acc += wb * std::complex<double>(std::cos(phase), std::sin(phase));
  });
  return acc;
}

DecayFit decay_fit(const GraphHypersurface& surface, const Eigen::VectorXd& u,
                   const std::vector<double>& lambdas, int oversampling) {
  if (std::abs(u.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("decay_fit: direction must be unit");
  if (lambdas.size() < 3)
    throw std::invalid_argument("decay_fit: need at least 3 lambdas");
  DecayFit fit;
  const Eigen::VectorXd p = Eigen::VectorXd::Zero(surface.ambient_dim());
  const Eigen::VectorXd q = p + 0.5 * u;
  std::vector<double> log_lambda, log_mag;
  for (double lambda : lambdas) {
    const QuadratureGrid grid(surface, lambda, oversampling);
    double mag = std::abs(extension_kernel(surface, lambda, p, q, grid));
    if (mag < 1e-300) {
      mag = 1e-300;
      fit.underflow_clamped = true;
    }
    fit.kernel_magnitudes.push_back(mag);
    log_lambda.push_back(std::log(lambda));
    log_mag.push_back(std::log(mag));
  }
  fit.r_hat = -least_squares_slope(log_lambda, log_mag);
  return fit;
}

CurvatureReport curvature_section_check(const GraphHypersurface& surface, int k,
                                        double step) {
  const int d = surface.ambient_dim();
  if (k < 1 || k >= d)
    throw std::invalid_argument("curvature_section_check: need 1 <= k < d");
  if (step < 1e-12) throw std::invalid_argument("curvature_section_check: step underflow");
  const int eta_dim = d - k;
  const int param_dim = d - 1;
  const int eta_offset = k - 1;  // leading k-1 parameters frozen at 0

  auto section = [&](const Eigen::VectorXd& eta) {
    Eigen::VectorXd xi_hat = Eigen::VectorXd::Zero(param_dim);
    xi_hat.segment(eta_offset, eta_dim) = eta;
    return surface.graph(xi_hat);
  };

  Eigen::MatrixXd hess(eta_dim, eta_dim);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(eta_dim);
  const double f0 = section(e);
  for (int i = 0; i < eta_dim; ++i) {
    for (int j = i; j < eta_dim; ++j) {
      Eigen::VectorXd probe = Eigen::VectorXd::Zero(eta_dim);
      double value;
      if (i == j) {
        probe(i) = step;
        const double fp = section(probe);
        probe(i) = -step;
        const double fm = section(probe);
        value = (fp - 2.0 * f0 + fm) / (step * step);
      } else {
        probe(i) = step; probe(j) = step;
        const double fpp = section(probe);
        probe(j) = -step;
        const double fpm = section(probe);
        probe(i) = -step; probe(j) = step;
        const double fmp = section(probe);
        probe(j) = -step;
        const double fmm = section(probe);
        value = (fpp - fpm - fmp + fmm) / (4.0 * step * step);
      }
      hess(i, j) = value;
      hess(j, i) = value;
    }
  }
  CurvatureReport rep;
  rep.det = hess.determinant();
  rep.curved = std::abs(rep.det) >= 1e-6;
  return rep;
}

}  // namespace simsat
