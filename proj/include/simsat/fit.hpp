#pragma once

#include <stdexcept>
#include <vector>

namespace simsat {

/// Ordinary least-squares slope of y against x.
inline double least_squares_slope(const std::vector<double>& x,
                                  const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("least_squares_slope: need >= 2 paired samples");
  const double n = static_cast<double>(x.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;
  double cov = 0.0, var = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cov += (x[i] - mean_x) * (y[i] - mean_y);
    var += (x[i] - mean_x) * (x[i] - mean_x);
  }
  if (var == 0.0) throw std::invalid_argument("least_squares_slope: degenerate x");
  return cov / var;
}

}  // namespace simsat
