#include "simsat/level_sets.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace simsat {

LevelSetPartition level_set_partition(const std::vector<double>& magnitudes,
                                      double lambda, int k) {
  if (magnitudes.empty())
    throw std::invalid_argument("level_set_partition: empty field");
  LevelSetPartition part;
  part.lambda = lambda;
  part.sup = *std::max_element(magnitudes.begin(), magnitudes.end());
  if (part.sup <= 0.0)
    throw std::invalid_argument("level_set_partition: field is identically zero");
  const double floor_exponent = 0.5 * k * (k - 1) * std::log2(lambda);
  part.floor_index = static_cast<int>(std::ceil(floor_exponent - 1e-12));
  part.shells.resize(static_cast<std::size_t>(part.floor_index) + 1);
  for (std::uint32_t i = 0; i < magnitudes.size(); ++i) {
    const double v = magnitudes[i] / part.sup;
    if (v <= 0.0) {
      part.below_floor.push_back(i);
      continue;
    }
    // v in (2^{-s-1}, 2^{-s}]  <=>  s = floor(-log2 v), exact at powers of 2.
    int shell = static_cast<int>(std::floor(-std::log2(v)));
    if (shell < 0) shell = 0;  // v == sup rounding
    if (shell > part.floor_index)
      part.below_floor.push_back(i);
    else
      part.shells[static_cast<std::size_t>(shell)].push_back(i);
  }
  return part;
}

SeparatedNet greedy_net(const std::vector<Eigen::VectorXd>& points, double radius) {
  if (radius <= 0.0) throw std::invalid_argument("greedy_net: radius must be > 0");
  SeparatedNet net;
  net.radius = radius;
  if (points.empty()) return net;

  // Bucket grid at cell size = radius keeps the scan near-linear; candidates
  // only need distance checks against net points in neighbouring cells.
  const int dim = static_cast<int>(points.front().size());
  using Key = std::vector<long>;
  std::map<Key, std::vector<std::uint32_t>> buckets;
  auto key_of = [&](const Eigen::VectorXd& p) {
    Key key(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
      key[static_cast<std::size_t>(i)] = static_cast<long>(std::floor(p(i) / radius));
    return key;
  };

  for (std::uint32_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const Key center = key_of(p);
    bool separated = true;
    Key probe(center);
    std::vector<int> offset(static_cast<std::size_t>(dim), -1);
    while (separated) {
      for (int a = 0; a < dim; ++a)
        probe[static_cast<std::size_t>(a)] =
            center[static_cast<std::size_t>(a)] + offset[static_cast<std::size_t>(a)];
      if (auto it = buckets.find(probe); it != buckets.end())
        for (auto id : it->second)
          if ((points[id] - p).norm() < radius) {
            separated = false;
            break;
          }
      int a = 0;
      for (; a < dim; ++a) {
        if (++offset[static_cast<std::size_t>(a)] <= 1) break;
        offset[static_cast<std::size_t>(a)] = -1;
      }
      if (a == dim) break;
    }
    if (separated) {
      net.points.push_back(i);
      buckets[center].push_back(i);
    }
  }
  return net;
}

}  // namespace simsat
