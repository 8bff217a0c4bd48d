#include "simsat/system.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace simsat {

namespace {

Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> all_related(int n) {
  return Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>::Ones(n, n);
}

Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> equality_relation(int n) {
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> r =
      Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  r.diagonal().setOnes();
  return r;
}

}  // namespace

std::complex<double> FiniteSystem::kernel(int m, int p, int q) const {
  const auto& v = vectors_[static_cast<std::size_t>(m - 1)];
  if (!relation(m, p, q)) return {0.0, 0.0};
  // <v(p), v(q)> with conjugation on the second slot; Eigen's dot conjugates
  // the first argument, so swap.
  return v.col(q).dot(v.col(p));
}

FiniteSystem FiniteSystem::random(int n_points, int multilinearity, int h,
                                  std::uint64_t seed) {
  FiniteSystem sys;
  sys.n_points_ = n_points;
  sys.multilinearity_ = multilinearity;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double max_norm = 0.0;
  for (int m = 0; m < multilinearity; ++m) {
    Eigen::MatrixXcd v(h, n_points);
    for (int p = 0; p < n_points; ++p)
      for (int i = 0; i < h; ++i) v(i, p) = {gauss(rng), gauss(rng)};
    max_norm = std::max(max_norm, v.colwise().norm().maxCoeff());
    sys.vectors_.push_back(std::move(v));
    sys.relation_.push_back(all_related(n_points));
  }
  for (auto& v : sys.vectors_) v /= max_norm;
  sys.bound_b_ = 1.0;
  return sys;
}

FiniteSystem FiniteSystem::diagonal(int n_points, int multilinearity, double b) {
  FiniteSystem sys;
  sys.n_points_ = n_points;
  sys.multilinearity_ = multilinearity;
  sys.bound_b_ = b;
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n_points, n_points) * b;
  for (int m = 0; m < multilinearity; ++m) {
    sys.vectors_.push_back(v);
    sys.relation_.push_back(equality_relation(n_points));
  }
  return sys;
}

FiniteSystem FiniteSystem::rank_one(int n_points, int multilinearity,
                                    const Eigen::VectorXcd& v) {
  FiniteSystem sys;
  sys.n_points_ = n_points;
  sys.multilinearity_ = multilinearity;
  sys.bound_b_ = v.norm();
  Eigen::MatrixXcd tab(v.size(), n_points);
  for (int p = 0; p < n_points; ++p) tab.col(p) = v;
  for (int m = 0; m < multilinearity; ++m) {
    sys.vectors_.push_back(tab);
    sys.relation_.push_back(all_related(n_points));
  }
  return sys;
}

EmbeddedOddSystem::EmbeddedOddSystem(std::shared_ptr<const SimultaneousSystem> base,
                                     int n_points)
    : base_(std::move(base)), n_points_(n_points) {
  if (base_->multilinearity() % 2 == 0 || base_->multilinearity() < 3)
    throw std::invalid_argument("EmbeddedOddSystem: base M must be odd and >= 3");
}

std::complex<double> EmbeddedOddSystem::kernel(int m, int p, int q) const {
  if (m <= base_->multilinearity()) return base_->kernel(m, p, q);
  const double b = base_->bound_B();
  const bool on_base = p >= 0 && p < n_points_ && q >= 0 && q < n_points_;
  return (on_base && p == q) ? std::complex<double>(b * b, 0.0)
                             : std::complex<double>(0.0, 0.0);
}

bool EmbeddedOddSystem::relation(int m, int p, int q) const {
  if (m <= base_->multilinearity()) return base_->relation(m, p, q);
  return p == q;
}

EmbeddedOddSystem embed_odd_system(std::shared_ptr<const SimultaneousSystem> sys,
                                   const PointSet& base) {
  return EmbeddedOddSystem(std::move(sys), base.size);
}

double embedded_lower_bound(double lower_l, double bound_b, int m_odd, int n_points) {
  const double m = static_cast<double>(m_odd);
  return std::pow(lower_l, m / (m + 1.0)) * std::pow(bound_b, 1.0 / (m + 1.0)) *
         std::pow(static_cast<double>(n_points), -1.0 / (2.0 * (m + 1.0)));
}

SystemCheckReport check_system_invariants(const SimultaneousSystem& sys,
                                          int n_points) {
  SystemCheckReport rep;
  const double b2 = sys.bound_B() * sys.bound_B();
  const double tol = 1e-12 * std::max(1.0, b2);
  for (int m = 1; m <= sys.multilinearity() && rep.ok; ++m)
    for (int p = 0; p < n_points && rep.ok; ++p)
      for (int q = 0; q < n_points; ++q) {
        if (sys.relation(m, p, q) != sys.relation(m, q, p) ||
            !sys.relation(m, p, p)) {
          rep.ok = false;
          rep.detail = "relation not symmetric/reflexive at m=" + std::to_string(m);
          break;
        }
        const auto k = sys.kernel(m, p, q);
        if (std::abs(k) > b2 + tol) {
          rep.ok = false;
          rep.detail = "kernel exceeds B^2 at m=" + std::to_string(m);
          break;
        }
        if (p == q && std::abs(k.imag()) > tol) {
          rep.ok = false;
          rep.detail = "diagonal kernel has imaginary part at m=" + std::to_string(m);
          break;
        }
        if (p == q && k.real() < -tol) {
          rep.ok = false;
          rep.detail = "diagonal kernel negative at m=" + std::to_string(m);
          break;
        }
        if (std::abs(sys.kernel(m, q, p) - std::conj(k)) > tol) {
          rep.ok = false;
          rep.detail = "kernel not conjugate symmetric at m=" + std::to_string(m);
          break;
        }
      }
  return rep;
}

}  // namespace simsat
