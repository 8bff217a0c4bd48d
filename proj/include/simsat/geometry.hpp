#pragma once

#include <Eigen/Dense>
#include <vector>

namespace simsat {

/// lambda >= 1, 0 < epsilon < 1 separation exponent, 0 < epsilon_tilde < 1/2
/// cone half-width.
struct ConeRelationParams {
  double lambda = 1.0;
  double epsilon = 0.1;
  double epsilon_tilde = 0.1;

  void validate() const;
  double near_radius() const;  // lambda^{-1+epsilon}
};

/// p and q are related for a direction nu when they nearly coincide
/// (|p-q| <= lambda^{-1+eps}) or their unit difference lies within
/// 2 epsilon_tilde of +-nu. Symmetric and reflexive.
bool cone_relation(const ConeRelationParams& params, const Eigen::VectorXd& p,
                   const Eigen::VectorXd& q, const Eigen::VectorXd& nu);

/// k-dimensional parallelepiped volume of k unit vectors in R^d: the square
/// root of the Gram determinant. Rejects non-unit inputs (tolerance 1e-9).
double wedge_transversality(const std::vector<Eigen::VectorXd>& normals);

/// Gram determinant itself, no unit-norm requirement; used for the exact
/// closed-loop dependence identity.
double gram_determinant(const std::vector<Eigen::VectorXd>& vectors);

struct Cone {
  Eigen::VectorXd axis;
  double epsilon_tilde = 0.1;
};

enum class LoopVerdict {
  trivial,    // every link is below the separation radius
  broken,     // some separated link fails its cone test
  collapsed,  // mixed: contractible links alongside valid direction links
  illegal,    // all links separated yet every cone test holds
};

struct LoopReport {
  LoopVerdict verdict = LoopVerdict::trivial;
  bool all_links_separated = false;  // every consecutive pair beyond the near radius
  double direction_wedge = 0.0;    // Gram volume of consecutive unit differences
  double direction_gram_det = 0.0; // exact: vanishes for dependent loop links
};

/// Walks the closed loop p_1 -> p_2 -> ... -> p_n -> p_1 checking membership
/// of each consecutive difference in its cone. An `illegal` verdict is the
/// configuration the non-degeneracy condition forbids: when the cone axes
/// span and n * epsilon_tilde stays below half the axes' wedge, no such loop
/// exists, because the n closed-loop differences are linearly dependent and
/// their wedge vanishes identically.
LoopReport loop_collapse_check(const std::vector<Eigen::VectorXd>& points,
                               const std::vector<Cone>& cones,
                               const ConeRelationParams& params);

}  // namespace simsat
