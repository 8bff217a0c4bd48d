#include "simsat/field.hpp"

#include <cmath>
#include <stdexcept>

namespace simsat {

SpatialGrid::SpatialGrid(int dim_in, int per_axis_in)
    : dim(dim_in), per_axis(per_axis_in) {
  if (dim < 1) throw std::invalid_argument("SpatialGrid: dim must be >= 1");
  if (per_axis < 3 || per_axis % 2 == 0)
    throw std::invalid_argument("SpatialGrid: per-axis count must be odd and >= 3");
  axis.resize(per_axis);
  spacing = 2.0 / (per_axis - 1);
  for (int i = 0; i < per_axis; ++i) axis(i) = -1.0 + i * spacing;
}

std::size_t SpatialGrid::total() const {
  std::size_t n = 1;
  for (int i = 0; i < dim; ++i) n *= static_cast<std::size_t>(per_axis);
  return n;
}

Eigen::VectorXd SpatialGrid::point(std::size_t flat_index) const {
  Eigen::VectorXd x(dim);
  for (int a = dim - 1; a >= 0; --a) {
    x(a) = axis(static_cast<Eigen::Index>(flat_index % static_cast<std::size_t>(per_axis)));
    flat_index /= static_cast<std::size_t>(per_axis);
  }
  return x;
}

std::vector<std::uint8_t> SpatialGrid::ball_mask() const {
  std::vector<std::uint8_t> mask(total());
  for (std::size_t i = 0; i < mask.size(); ++i)
    mask[i] = point(i).squaredNorm() <= 1.0 ? 1 : 0;
  return mask;
}

namespace {

Eigen::MatrixXcd phase_matrix(const Eigen::VectorXd& coords, double lambda,
                              const Eigen::VectorXd& values) {
  Eigen::MatrixXcd out(coords.size(), values.size());
  for (Eigen::Index g = 0; g < coords.size(); ++g)
    for (Eigen::Index n = 0; n < values.size(); ++n) {
      const double phase = lambda * coords(g) * values(n);
      out(g, n) = {std::cos(phase), std::sin(phase)};
    }
  return out;
}

}  // namespace

ExtensionFieldPlan::ExtensionFieldPlan(const GraphHypersurface& surface,
                                       double lambda, const SpatialGrid& grid,
                                       const QuadratureGrid& quad)
    : dim_(surface.ambient_dim()), grid_points_(grid.per_axis),
      graph_axis_(surface.graph_axis()), nodes_per_axis_(quad.nodes_per_axis()) {
  if (grid.dim != dim_)
    throw std::invalid_argument("ExtensionFieldPlan: grid dimension mismatch");
  if (dim_ != 2 && dim_ != 3)
    throw std::invalid_argument("ExtensionFieldPlan: only d=2 and d=3 supported");

  const int param_dim = dim_ - 1;
  node_count_ = 1;
  for (int i = 0; i < param_dim; ++i) node_count_ *= nodes_per_axis_;

  // Flat node order: first parameter axis outermost.
  node_weights_.resize(node_count_);
  Eigen::VectorXd graph_values(node_count_);
  Eigen::VectorXd xi_hat(param_dim);
  for (int n = 0; n < node_count_; ++n) {
    int rest = n;
    for (int i = param_dim - 1; i >= 0; --i) {
      xi_hat(i) = quad.axis_nodes()(rest % nodes_per_axis_);
      rest /= nodes_per_axis_;
    }
    node_weights_(n) = quad.weight() * surface.amplitude(xi_hat);
    graph_values(n) = surface.graph(xi_hat);
  }

  graph_phase_ = phase_matrix(grid.axis, lambda, graph_values);
  for (Eigen::Index n = 0; n < node_count_; ++n)
    graph_phase_.col(n) *= node_weights_(n);
  for (int i = 0; i < param_dim; ++i)
    param_phase_.push_back(phase_matrix(grid.axis, lambda, quad.axis_nodes()));
}

double ExtensionFieldPlan::input_norm(const Eigen::VectorXcd& f) const {
  double acc = 0.0;
  for (Eigen::Index n = 0; n < f.size(); ++n)
    acc += node_weights_(n) * std::norm(f(n));
  return std::sqrt(acc);
}

Eigen::VectorXcd ExtensionFieldPlan::evaluate(const Eigen::VectorXcd& f) const {
  if (f.size() != node_count_)
    throw std::invalid_argument("ExtensionFieldPlan: coefficient size mismatch");
  const int g = grid_points_;

  if (dim_ == 2) {
    // field[x0, x1] = sum_n U[x_graph, n] f_n V[x_other, n], written
    // row-major so the flat layout matches SpatialGrid::point.
    const Eigen::MatrixXcd uf = graph_phase_ * f.asDiagonal();
    Eigen::VectorXcd out(static_cast<Eigen::Index>(g) * g);
    using RowMajor =
        Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                      Eigen::RowMajor>;
    Eigen::Map<RowMajor> field(out.data(), g, g);
    if (graph_axis_ == 0)
      field.noalias() = uf * param_phase_[0].transpose();
    else
      field.noalias() = param_phase_[0] * uf.transpose();
    return out;
  }

  // d = 3: contract the second parameter axis, then the first.
  const int nn = nodes_per_axis_;
  const Eigen::MatrixXcd uf = graph_phase_ * f.asDiagonal();  // G x (n1*n2)
  // r[ga, n1, gc] = sum_{n2} uf[ga, n1*nn+n2] P2[gc, n2]
  std::vector<Eigen::MatrixXcd> r(static_cast<std::size_t>(nn));
  for (int n1 = 0; n1 < nn; ++n1)
    r[static_cast<std::size_t>(n1)].noalias() =
        uf.middleCols(static_cast<Eigen::Index>(n1) * nn, nn) *
        param_phase_[1].transpose();  // G x G
  // t[ga, gb, gc] = sum_{n1} P1[gb, n1] r[ga, n1, gc]
  Eigen::VectorXcd out(static_cast<Eigen::Index>(g) * g * g);
  out.setZero();
  // Spatial axes in tensor order: graph axis, then the two parameter axes in
  // ascending spatial order. Map tensor (ga, gb, gc) onto row-major (x0,x1,x2).
  int axes[3];
  axes[0] = graph_axis_;
  int pos = 1;
  for (int a = 0; a < 3; ++a)
    if (a != graph_axis_) axes[pos++] = a;
  std::size_t stride[3];
  for (int t = 0; t < 3; ++t) {
    std::size_t s = 1;
    for (int a = axes[t] + 1; a < 3; ++a) s *= static_cast<std::size_t>(g);
    stride[t] = s;
  }
  for (int n1 = 0; n1 < nn; ++n1) {
    const auto& slice = r[static_cast<std::size_t>(n1)];
    for (int gb = 0; gb < g; ++gb) {
      const std::complex<double> p1 = param_phase_[0](gb, n1);
      for (int ga = 0; ga < g; ++ga) {
        const std::size_t base =
            static_cast<std::size_t>(ga) * stride[0] +
            static_cast<std::size_t>(gb) * stride[1];
        for (int gc = 0; gc < g; ++gc)
          out(static_cast<Eigen::Index>(base + static_cast<std::size_t>(gc) * stride[2])) +=
              p1 * slice(ga, gc);
      }
    }
  }
  return out;
}

ProductField product_field(const std::vector<ExtensionFieldPlan>& plans,
                           const std::vector<Eigen::VectorXcd>& coefficients,
                           const SpatialGrid& grid) {
  if (plans.empty() || plans.size() != coefficients.size())
    throw std::invalid_argument("product_field: need one coefficient vector per plan");
  ProductField out;
  out.grid_field.shape.assign(static_cast<std::size_t>(grid.dim), grid.per_axis);
  out.grid_field.cell.assign(static_cast<std::size_t>(grid.dim), grid.spacing);
  out.grid_field.active = grid.ball_mask();

  std::vector<double> product(grid.total(), 1.0);
  for (std::size_t m = 0; m < plans.size(); ++m) {
    const Eigen::VectorXcd field = plans[m].evaluate(coefficients[m]);
    double sup = 0.0;
    for (std::size_t i = 0; i < product.size(); ++i) {
      const double mag = std::abs(field(static_cast<Eigen::Index>(i)));
      product[i] *= mag;
      if (out.grid_field.active[i] && mag > sup) sup = mag;
    }
    out.factor_sup.push_back(sup);
  }
  out.grid_field.magnitudes = std::move(product);
  for (std::size_t i = 0; i < out.grid_field.magnitudes.size(); ++i)
    if (out.grid_field.active[i])
      out.sup = std::max(out.sup, out.grid_field.magnitudes[i]);
  return out;
}

}  // namespace simsat
