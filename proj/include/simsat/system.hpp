#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace simsat {

/// N abstract points. Coordinates are optional; when present they are used by
/// geometric relations and separation checks.
struct PointSet {
  int size = 0;
  std::vector<Eigen::VectorXd> coords;  // empty for purely abstract points

  static PointSet abstract(int n) { return PointSet{n, {}}; }

  bool separated(double min_dist) const {
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (std::size_t j = i + 1; j < coords.size(); ++j)
        if ((coords[i] - coords[j]).norm() < min_dist) return false;
    return true;
  }
};

/// Operator family {T_m} seen through its pairwise kernels
/// beta_{p,q} = T_m(p) (T_m(q))^*. Points are indices into a base PointSet.
class SimultaneousSystem {
public:
  virtual ~SimultaneousSystem() = default;

  virtual int multilinearity() const = 0;
  virtual std::complex<double> kernel(int m, int p, int q) const = 0;
  virtual bool relation(int m, int p, int q) const = 0;
  virtual double bound_B() const = 0;
  virtual double decay_rate(double lambda) const = 0;
  virtual double lambda() const = 0;
};

/// Concrete system backed by evaluation tables: each operator m assigns point
/// p a vector v_m(p) in C^h and kernel(m,p,q) = <v_m(p), v_m(q)> with the
/// conjugation on the second slot. Every kernel Gram block is PSD by
/// construction. Off-relation kernels are exactly zero in the builders that
/// declare a nontrivial relation (orthogonal blocks), matching the policy
/// that finite systems carry no residual decay.
class FiniteSystem final : public SimultaneousSystem {
public:
  /// Fully related system with random vectors, normalised so max ||v|| = 1.
  static FiniteSystem random(int n_points, int multilinearity, int h,
                             std::uint64_t seed);

  /// kernel(m,p,q) = B^2 delta_{pq}; relation is equality.
  static FiniteSystem diagonal(int n_points, int multilinearity, double b);

  /// All points share one vector; kernel is constant ||v||^2.
  static FiniteSystem rank_one(int n_points, int multilinearity,
                               const Eigen::VectorXcd& v);

  int multilinearity() const override { return multilinearity_; }
  std::complex<double> kernel(int m, int p, int q) const override;
  bool relation(int m, int p, int q) const override {
    return relation_[static_cast<std::size_t>(m - 1)](p, q) != 0;
  }
  double bound_B() const override { return bound_b_; }
  double decay_rate(double) const override { return 0.0; }
  double lambda() const override { return 1.0; }

  int n_points() const { return n_points_; }

private:
  FiniteSystem() = default;

  int n_points_ = 0;
  int multilinearity_ = 0;
  double bound_b_ = 0.0;
  // vectors_[m-1].col(p) = v_m(p)
  std::vector<Eigen::MatrixXcd> vectors_;
  std::vector<Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>> relation_;
};

/// Adds the point-evaluation operator T_{M+1} to an odd-M system:
/// kernel(M+1,p,q) = B^2 delta_{pq} on the base points and the relation is
/// equality, so non-degeneracy is preserved and the even-M machinery applies.
class EmbeddedOddSystem final : public SimultaneousSystem {
public:
  EmbeddedOddSystem(std::shared_ptr<const SimultaneousSystem> base, int n_points);

  int multilinearity() const override { return base_->multilinearity() + 1; }
  std::complex<double> kernel(int m, int p, int q) const override;
  bool relation(int m, int p, int q) const override;
  double bound_B() const override { return base_->bound_B(); }
  double decay_rate(double lambda) const override { return base_->decay_rate(lambda); }
  double lambda() const override { return base_->lambda(); }

private:
  std::shared_ptr<const SimultaneousSystem> base_;
  int n_points_;
};

EmbeddedOddSystem embed_odd_system(std::shared_ptr<const SimultaneousSystem> sys,
                                   const PointSet& base);

/// Lower bound carried by the embedded system:
/// L' = L^{M/(M+1)} B^{1/(M+1)} N^{-1/(2(M+1))}.
double embedded_lower_bound(double lower_l, double bound_b, int m_odd, int n_points);

struct SystemCheckReport {
  bool ok = true;
  std::string detail;
};

/// Validates the definitional invariants: relations symmetric and reflexive,
/// |kernel| <= B^2 (+tol), diagonal kernels real non-negative, conjugate
/// symmetry.
SystemCheckReport check_system_invariants(const SimultaneousSystem& sys,
                                          int n_points);

}  // namespace simsat
