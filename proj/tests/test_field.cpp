#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "simsat/field.hpp"

using namespace simsat;

namespace {

// Oracle: the quadrature loop, one point at a time, against the same node
// set the plan uses (plan node order: first parameter axis outermost).
std::complex<double> direct_eval(const GraphHypersurface& surface, double lambda,
                                 const QuadratureGrid& quad,
                                 const Eigen::VectorXcd& f, const Eigen::VectorXd& x) {
  const int param_dim = surface.ambient_dim() - 1;
  const int nn = quad.nodes_per_axis();
  std::complex<double> acc{0.0, 0.0};
  Eigen::VectorXd xi_hat(param_dim);
  int node_count = 1;
  for (int i = 0; i < param_dim; ++i) node_count *= nn;
  for (int n = 0; n < node_count; ++n) {
    int rest = n;
    for (int i = param_dim - 1; i >= 0; --i) {
      xi_hat(i) = quad.axis_nodes()(rest % nn);
      rest /= nn;
    }
    const double wb = quad.weight() * surface.amplitude(xi_hat);
    const double phase = lambda * x.dot(surface.embed(xi_hat));
    acc += wb * f(n) * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return acc;
}

Eigen::VectorXcd ramp_coefficients(int n) {
  Eigen::VectorXcd f(n);
  for (int i = 0; i < n; ++i)
    f(i) = std::complex<double>(std::cos(0.1 * i), std::sin(0.07 * i + 0.4));
  return f;
}

}  // namespace

TEST_CASE("plan evaluation matches the direct quadrature loop") {
  const double lambda = 8.0;
  for (int d : {2, 3}) {
    for (int axis = 0; axis < d; ++axis) {
      const GraphHypersurface surf("s", d, axis, SurfaceKind::paraboloid, 1.0);
      const QuadratureGrid quad(surf, lambda, 8, 8);
      const SpatialGrid grid(d, 9);
      const ExtensionFieldPlan plan(surf, lambda, grid, quad);
      const Eigen::VectorXcd f = ramp_coefficients(plan.node_count());
      const Eigen::VectorXcd field = plan.evaluate(f);
      REQUIRE(field.size() == static_cast<Eigen::Index>(grid.total()));
      for (std::size_t i = 0; i < grid.total(); i += 7) {
        const auto expected = direct_eval(surf, lambda, quad, f, grid.point(i));
        CAPTURE(d);
        CAPTURE(axis);
        CAPTURE(i);
        CHECK(std::abs(field(static_cast<Eigen::Index>(i)) - expected) <=
              1e-12 * std::max(1.0, std::abs(expected)));
      }
    }
  }
}

TEST_CASE("product_field") {
  const double lambda = 8.0;
  const SpatialGrid grid(2, 33);

  SUBCASE("k = 1 equals the single extension field") {
    const GraphHypersurface surf("arc", 2, 0, SurfaceKind::paraboloid, 1.0);
    const QuadratureGrid quad(surf, lambda);
    const ExtensionFieldPlan plan(surf, lambda, grid, quad);
    Eigen::VectorXcd f = Eigen::VectorXcd::Ones(plan.node_count());
    f /= plan.input_norm(f);
    const auto product = product_field({plan}, {f}, grid);
    const Eigen::VectorXcd single = plan.evaluate(f);
    for (std::size_t i = 0; i < grid.total(); i += 11)
      CHECK(product.grid_field.magnitudes[i] ==
            doctest::Approx(std::abs(single(static_cast<Eigen::Index>(i))))
                .epsilon(1e-13));
  }

  SUBCASE("a zero factor annihilates the product") {
    const GraphHypersurface s1("a", 2, 0, SurfaceKind::paraboloid, 1.0);
    const GraphHypersurface s2("b", 2, 1, SurfaceKind::paraboloid, 1.0);
    const QuadratureGrid q1(s1, lambda), q2(s2, lambda);
    const ExtensionFieldPlan p1(s1, lambda, grid, q1), p2(s2, lambda, grid, q2);
    const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(p1.node_count());
    const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(p2.node_count());
    const auto product = product_field({p1, p2}, {ones, zero}, grid);
    CHECK(product.sup == 0.0);
    for (double v : product.grid_field.magnitudes) CHECK(v == 0.0);
  }

  SUBCASE("product sup is bounded by the per-factor sups") {
    const GraphHypersurface s1("a", 2, 0, SurfaceKind::paraboloid, 1.0);
    const GraphHypersurface s2("b", 2, 1, SurfaceKind::paraboloid, 1.0);
    const QuadratureGrid q1(s1, lambda), q2(s2, lambda);
    const ExtensionFieldPlan p1(s1, lambda, grid, q1), p2(s2, lambda, grid, q2);
    Eigen::VectorXcd f1 = ramp_coefficients(p1.node_count());
    Eigen::VectorXcd f2 = ramp_coefficients(p2.node_count());
    f1 /= p1.input_norm(f1);
    f2 /= p2.input_norm(f2);
    const auto product = product_field({p1, p2}, {f1, f2}, grid);
    CHECK(product.factor_sup.size() == 2);
    CHECK(product.sup <= product.factor_sup[0] * product.factor_sup[1] + 1e-12);
  }
}

TEST_CASE("spatial grid geometry") {
  const SpatialGrid grid(2, 5);
  CHECK(grid.spacing == doctest::Approx(0.5));
  CHECK(grid.axis(2) == 0.0);  // odd count includes the origin
  CHECK(grid.total() == 25);
  const auto mask = grid.ball_mask();
  // corners of [-1,1]^2 are outside the unit ball
  CHECK(mask[0] == 0);
  CHECK(mask[24] == 0);
  CHECK(mask[12] == 1);  // origin
  CHECK_THROWS_AS(SpatialGrid(2, 4), std::invalid_argument);

  // row-major flattening: point(i) walks the last axis fastest
  const auto p1 = grid.point(1);
  CHECK(p1(0) == doctest::Approx(-1.0));
  CHECK(p1(1) == doctest::Approx(-0.5));
}

TEST_CASE("input norm matches the quadrature measure") {
  const GraphHypersurface surf("arc", 2, 0, SurfaceKind::paraboloid, 1.0);
  const QuadratureGrid quad(surf, 8.0);
  const SpatialGrid grid(2, 9);
  const ExtensionFieldPlan plan(surf, 8.0, grid, quad);
  const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(plan.node_count());
  // ||1||^2 = integral of b
  double b_mass = 0.0;
  quad.for_each_node(surf, [&](const Eigen::VectorXd&, double wb) { b_mass += wb; });
  CHECK(plan.input_norm(ones) == doctest::Approx(std::sqrt(b_mass)).epsilon(1e-12));
}
