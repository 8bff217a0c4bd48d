#include "simsat/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace simsat {

void ConeRelationParams::validate() const {
  if (lambda < 1.0 || epsilon <= 0.0 || epsilon >= 1.0 || epsilon_tilde <= 0.0 ||
      epsilon_tilde >= 0.5)
    throw std::invalid_argument("ConeRelationParams: out of range");
}

double ConeRelationParams::near_radius() const {
  return std::pow(lambda, -1.0 + epsilon);
}

bool cone_relation(const ConeRelationParams& params, const Eigen::VectorXd& p,
                   const Eigen::VectorXd& q, const Eigen::VectorXd& nu) {
  const Eigen::VectorXd diff = p - q;
  const double dist = diff.norm();
  if (dist <= params.near_radius()) return true;
  const Eigen::VectorXd u = diff / dist;
  return (u - nu).norm() <= 2.0 * params.epsilon_tilde ||
         (u + nu).norm() <= 2.0 * params.epsilon_tilde;
}

namespace {

// Parallelepiped volume as the product of singular values. Equivalent to
// sqrt(det Gram) but stable near dependence: a dependent family yields a
// singular value at rounding level instead of determinant cancellation noise.
double singular_volume(const std::vector<Eigen::VectorXd>& vectors) {
  const auto k = static_cast<Eigen::Index>(vectors.size());
  Eigen::MatrixXd v(vectors.front().size(), k);
  for (Eigen::Index i = 0; i < k; ++i) v.col(i) = vectors[static_cast<std::size_t>(i)];
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(v);
  double volume = 1.0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    volume *= svd.singularValues()(i);
  return volume;
}

}  // namespace

double gram_determinant(const std::vector<Eigen::VectorXd>& vectors) {
  const double volume = singular_volume(vectors);
  return volume * volume;
}

double wedge_transversality(const std::vector<Eigen::VectorXd>& normals) {
  if (normals.empty()) throw std::invalid_argument("wedge: no vectors");
  const auto dim = normals.front().size();
  if (static_cast<Eigen::Index>(normals.size()) > dim)
    throw std::invalid_argument("wedge: more vectors than ambient dimension");
  for (const auto& v : normals) {
    if (v.size() != dim) throw std::invalid_argument("wedge: mixed dimensions");
    if (std::abs(v.norm() - 1.0) > 1e-9)
      throw std::invalid_argument("wedge: non-unit input");
  }
  return singular_volume(normals);
}

LoopReport loop_collapse_check(const std::vector<Eigen::VectorXd>& points,
                               const std::vector<Cone>& cones,
                               const ConeRelationParams& params) {
  if (points.size() < 2 || points.size() != cones.size())
    throw std::invalid_argument("loop_collapse_check: need n points and n cones");
  const std::size_t n = points.size();
  const double near = params.near_radius();

  // A link below the separation radius is contractible: the loop collapses
  // through it, so it never witnesses an aligned direction.
  LoopReport rep;
  bool any_near = false;
  bool all_near = true;
  bool any_broken = false;
  std::vector<Eigen::VectorXd> directions;
  directions.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::VectorXd diff = points[(i + 1) % n] - points[i];
    const double dist = diff.norm();
    if (dist <= near) {
      any_near = true;
      continue;
    }
    all_near = false;
    const Eigen::VectorXd u = diff / dist;
    directions.push_back(u);
    const double width = 2.0 * cones[i].epsilon_tilde;
    if ((u - cones[i].axis).norm() > width && (u + cones[i].axis).norm() > width)
      any_broken = true;
  }

  if (directions.size() == n) {
    rep.all_links_separated = true;
    rep.direction_gram_det = gram_determinant(directions);
    rep.direction_wedge = std::sqrt(std::max(0.0, rep.direction_gram_det));
  }

  if (all_near)
    rep.verdict = LoopVerdict::trivial;
  else if (any_broken)
    rep.verdict = LoopVerdict::broken;
  else if (any_near)
    rep.verdict = LoopVerdict::collapsed;
  else
    rep.verdict = LoopVerdict::illegal;
  return rep;
}

}  // namespace simsat
