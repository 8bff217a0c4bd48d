#include "simsat/extension_system.hpp"

#include <cmath>
#include <stdexcept>

namespace simsat {

ExtensionSystem::ExtensionSystem(std::vector<GraphHypersurface> surfaces,
                                 double lambda,
                                 std::vector<Eigen::VectorXd> points,
                                 ConeRelationParams params)
    : surfaces_(std::move(surfaces)), lambda_(lambda), params_(params) {
  if (surfaces_.empty())
    throw std::invalid_argument("ExtensionSystem: need at least one surface");
  const int dim = surfaces_.front().ambient_dim();
  for (const auto& s : surfaces_)
    if (s.ambient_dim() != dim)
      throw std::invalid_argument("ExtensionSystem: mixed ambient dimensions");
  for (const auto& p : points)
    if (p.size() != dim)
      throw std::invalid_argument("ExtensionSystem: point dimension mismatch");
  params_.lambda = lambda_;
  params_.validate();

  base_.size = static_cast<int>(points.size());
  base_.coords = std::move(points);
  if (!base_.separated(params_.near_radius()))
    throw std::invalid_argument(
        "ExtensionSystem: points must be lambda^{-1+eps} separated");

  grids_.reserve(surfaces_.size());
  const Eigen::VectorXd origin = Eigen::VectorXd::Zero(dim);
  double peak = 0.0;
  for (const auto& s : surfaces_) {
    grids_.emplace_back(s, lambda_);
    peak = std::max(peak, std::abs(extension_kernel(s, lambda_, origin, origin,
                                                    grids_.back())));
  }
  bound_b_ = std::sqrt(peak);
}

std::complex<double> ExtensionSystem::kernel(int m, int p, int q) const {
  return extension_kernel(surfaces_[static_cast<std::size_t>(m - 1)], lambda_,
                          base_.coords[static_cast<std::size_t>(p)],
                          base_.coords[static_cast<std::size_t>(q)],
                          grids_[static_cast<std::size_t>(m - 1)]);
}

bool ExtensionSystem::relation(int m, int p, int q) const {
  return cone_relation(params_, base_.coords[static_cast<std::size_t>(p)],
                       base_.coords[static_cast<std::size_t>(q)],
                       surfaces_[static_cast<std::size_t>(m - 1)].nominal_normal());
}

}  // namespace simsat
