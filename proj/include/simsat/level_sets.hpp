#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace simsat {

/// Dyadic shells of a normalized field: shell i holds the points where the
/// magnitude over the sup lies in (2^{-i-1}, 2^{-i}], for i = 0..floor_index.
/// Points at or below 2^{-floor_index-1} land in below_floor.
struct LevelSetPartition {
  double lambda = 0.0;
  int floor_index = 0;  // I with 2^{-I} = lambda^{-k(k-1)/2}
  double sup = 0.0;     // normalization actually used
  std::vector<std::vector<std::uint32_t>> shells;  // point ids per shell
  std::vector<std::uint32_t> below_floor;
};

/// magnitudes[i] is |field| at point i. k is the number of factors, which
/// sets the dyadic floor 2^{-I} = lambda^{-k(k-1)/2}.
LevelSetPartition level_set_partition(const std::vector<double>& magnitudes,
                                      double lambda, int k);

/// Maximal radius-separated subset picked greedily in index order: pairwise
/// distances >= radius and every input point within radius of a net point.
struct SeparatedNet {
  double radius = 0.0;
  std::vector<std::uint32_t> points;  // ids into the source list
};

SeparatedNet greedy_net(const std::vector<Eigen::VectorXd>& points, double radius);

}  // namespace simsat
