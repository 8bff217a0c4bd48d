#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "simsat/fit.hpp"
#include "simsat/level_sets.hpp"
#include "simsat/mixed_norm.hpp"

using namespace simsat;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("level_set_partition") {
  SUBCASE("constant field lands entirely in shell 0") {
    const auto part = level_set_partition({1.0, 1.0, 1.0}, 16.0, 2);
    CHECK(part.shells[0].size() == 3);
    CHECK(part.below_floor.empty());
  }
  SUBCASE("dyadic bins") {
    const auto part = level_set_partition({0.6, 0.3}, 16.0, 2);
    REQUIRE(part.shells.size() >= 2);
    CHECK(part.shells[0] == std::vector<std::uint32_t>{0});
    CHECK(part.shells[1] == std::vector<std::uint32_t>{1});
  }
  SUBCASE("floor index tracks lambda^{k(k-1)/2}") {
    CHECK(level_set_partition({1.0}, 16.0, 2).floor_index == 4);
    CHECK(level_set_partition({1.0}, 16.0, 1).floor_index == 0);
    CHECK(level_set_partition({1.0}, 32.0, 2).floor_index == 5);
  }
  SUBCASE("shells plus below-floor partition the grid exactly") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> mag(0.0, 1.0);
    std::vector<double> field(512);
    for (auto& v : field) v = mag(rng);
    const auto part = level_set_partition(field, 32.0, 2);
    std::vector<int> seen(field.size(), 0);
    for (const auto& shell : part.shells)
      for (auto id : shell) ++seen[id];
    for (auto id : part.below_floor) ++seen[id];
    for (std::size_t i = 0; i < field.size(); ++i) CHECK(seen[i] == 1);
    // bin membership is honest: 2^{-i-1} < v/sup <= 2^{-i}
    for (std::size_t i = 0; i < part.shells.size(); ++i)
      for (auto id : part.shells[i]) {
        const double v = field[id] / part.sup;
        CHECK(v <= std::pow(2.0, -static_cast<double>(i)) * (1.0 + 1e-12));
        CHECK(v > std::pow(2.0, -static_cast<double>(i) - 1.0) * (1.0 - 1e-12));
      }
  }
  SUBCASE("empty and zero fields are rejected") {
    CHECK_THROWS_AS(level_set_partition({}, 16.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(level_set_partition({0.0}, 16.0, 2), std::invalid_argument);
  }
}

TEST_CASE("greedy_net") {
  auto pt = [](double x, double y) {
    Eigen::VectorXd v(2);
    v << x, y;
    return v;
  };
  SUBCASE("single point") {
    CHECK(greedy_net({pt(0.3, 0.4)}, 0.5).points.size() == 1);
  }
  SUBCASE("two points at twice the radius") {
    CHECK(greedy_net({pt(0.0, 0.0), pt(1.0, 0.0)}, 0.5).points.size() == 2);
  }
  SUBCASE("packing count on a uniform grid") {
    const double radius = 0.1;
    std::vector<Eigen::VectorXd> points;
    for (int i = 0; i <= 20; ++i)
      for (int j = 0; j <= 20; ++j) points.push_back(pt(i * radius / 2, j * radius / 2));
    const auto net = greedy_net(points, radius);
    const double expected = 1.0 / (radius * radius);
    CHECK(static_cast<double>(net.points.size()) >= expected / 4.0);
    CHECK(static_cast<double>(net.points.size()) <= expected * 4.0);
    // separation and maximality, exact pairwise
    for (std::size_t a = 0; a < net.points.size(); ++a)
      for (std::size_t b = a + 1; b < net.points.size(); ++b)
        CHECK((points[net.points[a]] - points[net.points[b]]).norm() >= radius);
    for (const auto& p : points) {
      double nearest = 1e9;
      for (auto id : net.points)
        nearest = std::min(nearest, (points[id] - p).norm());
      CHECK(nearest < radius);
    }
  }
  SUBCASE("deterministic scan order") {
    std::vector<Eigen::VectorXd> points{pt(0, 0), pt(0.05, 0), pt(0.2, 0)};
    const auto net = greedy_net(points, 0.1);
    CHECK(net.points == std::vector<std::uint32_t>{0, 2});
  }
  SUBCASE("invalid radius") {
    CHECK_THROWS_AS(greedy_net({pt(0, 0)}, 0.0), std::invalid_argument);
  }
}

TEST_CASE("mixed_norm") {
  GridField unit;
  unit.shape = {4, 5};
  unit.cell = {1.0 / 4, 1.0 / 5};
  unit.magnitudes.assign(20, 1.0);

  SUBCASE("constant 1 on the unit box has norm 1 for any exponents") {
    for (double p : {0.5, 1.0, 2.0, 4.0})
      for (double q : {0.5, 2.0, 3.0}) {
        MixedNormSpec spec;
        spec.outer_axes = {0};
        spec.p_outer = p;
        spec.q_inner = q;
        CHECK(mixed_norm(unit, spec) == doctest::Approx(1.0).epsilon(1e-12));
      }
    MixedNormSpec sup_spec;
    sup_spec.outer_axes = {0};
    sup_spec.p_outer = kInf;
    sup_spec.q_inner = kInf;
    CHECK(mixed_norm(unit, sup_spec) == doctest::Approx(1.0));
  }

  SUBCASE("p = q collapses to the plain norm") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> mag(0.0, 2.0);
    GridField f = unit;
    for (auto& v : f.magnitudes) v = mag(rng);
    for (double p : {1.0, 2.0, 3.5}) {
      MixedNormSpec iterated;
      iterated.outer_axes = {0};
      iterated.p_outer = p;
      iterated.q_inner = p;
      const double plain = mixed_norm(f, MixedNormSpec::plain(p, 2));
      CHECK(mixed_norm(f, iterated) == doctest::Approx(plain).epsilon(1e-12));
    }
  }

  SUBCASE("separable fields factor into single-block norms") {
    const int ny = 8, nz = 6;
    GridField f;
    f.shape = {ny, nz};
    f.cell = {0.125, 1.0 / 6};
    std::vector<double> a(ny), c(nz);
    for (int i = 0; i < ny; ++i) a[i] = 0.5 + 0.1 * i;
    for (int j = 0; j < nz; ++j) c[j] = 1.7 - 0.2 * j;
    f.magnitudes.resize(ny * nz);
    for (int i = 0; i < ny; ++i)
      for (int j = 0; j < nz; ++j) f.magnitudes[i * nz + j] = a[i] * std::abs(c[j]);

    MixedNormSpec spec;
    spec.outer_axes = {0};
    spec.p_outer = 4.0;
    spec.q_inner = 2.0;

    // 1-D oracles
    double inner = 0.0;
    for (int j = 0; j < nz; ++j) inner += std::pow(std::abs(c[j]), 2.0) / 6.0;
    inner = std::sqrt(inner);
    double outer = 0.0;
    for (int i = 0; i < ny; ++i) outer += std::pow(a[i], 4.0) * 0.125;
    outer = std::pow(outer, 0.25);
    CHECK(mixed_norm(f, spec) == doctest::Approx(outer * inner).epsilon(1e-10));
  }

  SUBCASE("homogeneity and monotonicity") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> mag(0.0, 1.0);
    GridField f = unit;
    for (auto& v : f.magnitudes) v = mag(rng);
    MixedNormSpec spec;
    spec.outer_axes = {1};
    spec.p_outer = 3.0;
    spec.q_inner = 2.0;
    const double base = mixed_norm(f, spec);
    GridField scaled = f;
    for (auto& v : scaled.magnitudes) v *= 2.5;
    CHECK(mixed_norm(scaled, spec) == doctest::Approx(2.5 * base).epsilon(1e-12));
    GridField bigger = f;
    bigger.magnitudes[7] += 0.5;
    CHECK(mixed_norm(bigger, spec) >= base);
  }

  SUBCASE("zero field gives zero, no errors") {
    GridField zero = unit;
    zero.magnitudes.assign(20, 0.0);
    CHECK(mixed_norm(zero, MixedNormSpec::plain(2.0, 2)) == 0.0);
  }

  SUBCASE("q = inf takes the inner sup") {
    GridField f = unit;
    f.magnitudes[3] = 7.0;  // row 0
    MixedNormSpec spec;
    spec.outer_axes = {0};
    spec.p_outer = kInf;
    spec.q_inner = kInf;
    CHECK(mixed_norm(f, spec) == doctest::Approx(7.0));
  }
}

TEST_CASE("slope fit recovers exact power laws") {
  std::vector<double> x, y;
  for (double lambda : {8.0, 16.0, 32.0, 64.0}) {
    x.push_back(std::log(lambda));
    y.push_back(std::log(3.7 * std::pow(lambda, -1.25)));
  }
  CHECK(least_squares_slope(x, y) == doctest::Approx(-1.25).epsilon(1e-6));
  CHECK_THROWS_AS(least_squares_slope({1.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(least_squares_slope({1.0, 1.0}, {1.0, 2.0}), std::invalid_argument);
}
