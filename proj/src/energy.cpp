#include "simsat/energy.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace simsat {

std::complex<double> tensor_kernel(const SimultaneousSystem& sys,
                                   const PermTuple& s, const PermTuple& t) {
  require_same_shape(s, t);
  if (s.multilinearity() != sys.multilinearity())
    throw std::invalid_argument("tensor_kernel: tuple M mismatch");
  std::complex<double> acc{1.0, 0.0};
  for (int m = 1; m <= s.multilinearity(); ++m)
    for (int j = 0; j < s.degree(); ++j)
      acc *= sys.kernel(m, s.part(m)(j), t.part(m)(j));
  return acc;
}

EnergyMatrix build_energy_matrix(const SimultaneousSystem& sys,
                                 const PointSet& base, const TupleSpace& space) {
  if (space.degree() != base.size || sys.multilinearity() != space.multilinearity())
    throw std::invalid_argument("build_energy_matrix: shape mismatch");
  const int n = base.size;
  const int big_m = space.multilinearity();
  const auto d = static_cast<std::uint32_t>(space.dimension());

  // Kernel tables per operator; tensor entries are plain products over them.
  std::vector<Eigen::MatrixXcd> beta(static_cast<std::size_t>(big_m));
  for (int m = 1; m <= big_m; ++m) {
    beta[static_cast<std::size_t>(m - 1)].resize(n, n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        beta[static_cast<std::size_t>(m - 1)](p, q) = sys.kernel(m, p, q);
  }

  EnergyMatrix energy;
  energy.n_points = n;
  energy.multilinearity = big_m;
  energy.lambda = sys.lambda();
  energy.w.resize(d, d);
  const double inv_d = 1.0 / static_cast<double>(space.dimension());
  for (std::uint32_t s = 0; s < d; ++s) {
    const PermTuple& ts = space.tuple(s);
    for (std::uint32_t t = s; t < d; ++t) {
      const PermTuple& tt = space.tuple(t);
      std::complex<double> acc{1.0, 0.0};
      for (int m = 1; m <= big_m; ++m) {
        const auto& b = beta[static_cast<std::size_t>(m - 1)];
        const auto& ps = ts.part(m);
        const auto& pt = tt.part(m);
        for (int j = 0; j < n; ++j) acc *= b(ps(j), pt(j));
      }
      energy.w(s, t) = acc * inv_d;
      energy.w(t, s) = std::conj(acc) * inv_d;
    }
  }
  return energy;
}

OnesEigenReport ones_eigen_check(const EnergyMatrix& energy) {
  const Eigen::VectorXcd z =
      energy.w * Eigen::VectorXcd::Ones(energy.w.rows());
  OnesEigenReport rep;
  const std::complex<double> z_e = z(0);  // identity tuple has rank 0
  rep.lambda_ones = z_e.real();
  rep.residual = (z.array() - z_e).abs().maxCoeff();
  rep.tolerance = 1e-9 * std::abs(z_e) + 1e-14;
  rep.ok = rep.residual <= rep.tolerance;
  return rep;
}

TraceBoundReport trace_bound_check(const EnergyMatrix& energy,
                                   const TupleSpace& space) {
  if (space.multilinearity() % 2 != 0)
    throw std::invalid_argument("trace_bound_check: M must be even");
  if (static_cast<Eigen::Index>(space.dimension()) != energy.w.rows())
    throw std::invalid_argument("trace_bound_check: shape mismatch");

  TraceBoundReport rep;
  rep.w_min_eigenvalue = check_psd(energy.w);
  const double w_scale = energy.w.cwiseAbs().maxCoeff();
  rep.psd_verified = rep.w_min_eigenvalue >= -1e-9 * std::max(w_scale, 1e-300);
  if (!rep.psd_verified)
    throw std::runtime_error("trace_bound_check: W failed the PSD precondition");

  const auto ones = ones_eigen_check(energy);
  rep.lambda_ones = ones.lambda_ones;
  rep.m_ones_eigenvalue = 2.0 * ones.lambda_ones;

  // Trace(A W) = scale * sum_{s W t} (W(t,s) + W(s,t)).
  const double scale = static_cast<double>(factorial(space.degree())) /
                       static_cast<double>(space.dimension());
  std::complex<double> trace{0.0, 0.0};
  const auto d = static_cast<std::uint32_t>(space.dimension());
  for (std::uint32_t s = 0; s < d; ++s)
    for (std::uint32_t t = 0; t < d; ++t)
      if (space.weaves(s, t)) trace += energy.w(t, s) + energy.w(s, t);
  trace *= scale;
  rep.trace = trace.real();
  rep.trace_imag = trace.imag();

  const double tol = 1e-9 * std::abs(rep.lambda_ones);
  rep.ok_factor2 = rep.trace >= rep.m_ones_eigenvalue - 2.0 * tol;
  rep.ok_paper = rep.trace >= rep.lambda_ones - tol;
  return rep;
}

CensusReport diagonal_census(const TupleSpace& space, std::uint32_t sigma,
                             double epsilon) {
  if (space.multilinearity() % 2 != 0)
    throw std::invalid_argument("diagonal_census: M must be even");
  const auto d = static_cast<std::uint32_t>(space.dimension());
  const double n = space.degree();
  const double max_dist = epsilon * n;
  CensusReport rep;
  for (std::uint32_t mu = 0; mu < d; ++mu)
    if (space.hamming(mu, sigma) <= max_dist && space.weaves(mu, sigma))
      ++rep.count;
  rep.bound = std::pow(2.0, space.multilinearity() * n) *
              std::pow(n, epsilon * n);
  rep.ok = static_cast<double>(rep.count) <= rep.bound;
  return rep;
}

BoundValue theorem_bound(int multilinearity, double bound_b, double lower_l,
                         double epsilon, BoundVariant variant) {
  if (lower_l <= 0.0 || bound_b < lower_l)
    throw std::invalid_argument("theorem_bound: need B >= L > 0");
  if (multilinearity < 1)
    throw std::invalid_argument("theorem_bound: M must be >= 1");
  if (epsilon < 0.0 || epsilon >= 1.0)
    throw std::invalid_argument("theorem_bound: epsilon must be in [0,1)");
  const double ratio = bound_b / lower_l;
  const double m = static_cast<double>(multilinearity);
  BoundValue out;
  switch (variant) {
    case BoundVariant::theorem:
      out.n_exponent = 1.0 - epsilon;
      out.rhs = multilinearity == 1 ? ratio * ratio
                                    : std::pow(ratio, 2.0 * m / (m - 1.0));
      break;
    case BoundVariant::even_proof:
      if (multilinearity < 2 || multilinearity % 2 != 0)
        throw std::invalid_argument("theorem_bound: even_proof needs even M >= 2");
      out.n_exponent = 1.0 - epsilon / (m - 1.0);
      out.rhs = std::pow(ratio, 2.0 * m / (m - 1.0));
      break;
    case BoundVariant::odd_proof:
      if (multilinearity < 3 || multilinearity % 2 == 0)
        throw std::invalid_argument("theorem_bound: odd_proof needs odd M >= 3");
      out.n_exponent = 1.0 - epsilon * m / ((m - 1.0) * (m - 1.0));
      out.rhs = std::pow(ratio, 2.0 * m / (m - 1.0));
      break;
    case BoundVariant::m1:
      if (multilinearity != 1)
        throw std::invalid_argument("theorem_bound: m1 variant needs M = 1");
      out.n_exponent = 1.0 - epsilon;
      out.rhs = ratio * ratio;
      break;
  }
  return out;
}

SaturationReport run_saturation_checks(const SimultaneousSystem& sys,
                                       const PointSet& base, double epsilon) {
  const TupleSpace space(base.size, sys.multilinearity());
  const auto energy = build_energy_matrix(sys, base, space);

  SaturationReport rep;
  rep.n_points = base.size;
  rep.multilinearity = sys.multilinearity();
  rep.bound_b = sys.bound_B();
  rep.epsilon = epsilon;

  const auto ones = ones_eigen_check(energy);
  rep.lambda_ones = ones.lambda_ones;
  rep.ones_ok = ones.ok;

  const auto trace = trace_bound_check(energy, space);
  rep.trace = trace.trace;
  rep.psd_ok = trace.psd_verified;
  rep.trace_ok = trace.ok_factor2 && trace.ok_paper;

  const auto census = diagonal_census(space, 0, epsilon);
  rep.census_ok = census.ok;

  // Empirical per-factor lower bound: the largest L with Lambda >= L^{2MN}.
  const double mn = 2.0 * rep.multilinearity * rep.n_points;
  rep.lower_l = rep.lambda_ones > 0.0 ? std::pow(rep.lambda_ones, 1.0 / mn) : 0.0;
  rep.lower_l = std::min(rep.lower_l, rep.bound_b);
  if (rep.lower_l > 0.0 && rep.lower_l <= rep.bound_b) {
    const auto bound = theorem_bound(rep.multilinearity, rep.bound_b, rep.lower_l,
                                     epsilon, BoundVariant::theorem);
    rep.bound_rhs = bound.rhs;
    rep.bound_exponent = bound.n_exponent;
    rep.n_bound_ok =
        std::pow(static_cast<double>(rep.n_points), bound.n_exponent) <=
        bound.rhs * (1.0 + 1e-12);
  }
  return rep;
}

std::string to_json(const SaturationReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "{\"n_points\":" << r.n_points << ",\"multilinearity\":" << r.multilinearity
     << ",\"bound_b\":" << r.bound_b << ",\"lower_l\":" << r.lower_l
     << ",\"epsilon\":" << r.epsilon << ",\"lambda_ones\":" << r.lambda_ones
     << ",\"trace\":" << r.trace << ",\"bound_rhs\":" << r.bound_rhs
     << ",\"bound_exponent\":" << r.bound_exponent
     << ",\"ones_ok\":" << (r.ones_ok ? "true" : "false")
     << ",\"psd_ok\":" << (r.psd_ok ? "true" : "false")
     << ",\"trace_ok\":" << (r.trace_ok ? "true" : "false")
     << ",\"census_ok\":" << (r.census_ok ? "true" : "false")
     << ",\"n_bound_ok\":" << (r.n_bound_ok ? "true" : "false") << "}";
  return os.str();
}

}  // namespace simsat
