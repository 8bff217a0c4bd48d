#include "simsat/surface.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace simsat {

SurfaceKind surface_kind_from_string(const std::string& name) {
  if (name == "hyperplane") return SurfaceKind::hyperplane;
  if (name == "paraboloid") return SurfaceKind::paraboloid;
  if (name == "perturbed_paraboloid") return SurfaceKind::perturbed_paraboloid;
  if (name == "cylinder") return SurfaceKind::cylinder;
  throw std::invalid_argument("unknown surface kind: " + name);
}

std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::hyperplane: return "hyperplane";
    case SurfaceKind::paraboloid: return "paraboloid";
    case SurfaceKind::perturbed_paraboloid: return "perturbed_paraboloid";
    case SurfaceKind::cylinder: return "cylinder";
  }
  return "unknown";
}

GraphHypersurface::GraphHypersurface(std::string name, int ambient_dim,
                                     int graph_axis, SurfaceKind kind,
                                     double box_width, double perturbation)
    : name_(std::move(name)), dim_(ambient_dim), axis_(graph_axis), kind_(kind),
      width_(box_width), perturbation_(perturbation) {
  if (dim_ < 2) throw std::invalid_argument("GraphHypersurface: need d >= 2");
  if (axis_ < 0 || axis_ >= dim_)
    throw std::invalid_argument("GraphHypersurface: graph axis out of range");
  if (width_ <= 0.0) throw std::invalid_argument("GraphHypersurface: width <= 0");
}

double GraphHypersurface::graph(const Eigen::VectorXd& xi_hat) const {
  switch (kind_) {
    case SurfaceKind::hyperplane:
      return 0.0;
    case SurfaceKind::paraboloid:
      return 0.5 * xi_hat.squaredNorm();
    case SurfaceKind::perturbed_paraboloid:
      return 0.5 * xi_hat.squaredNorm() + perturbation_ * std::sin(xi_hat.sum());
    case SurfaceKind::cylinder:
      return 0.5 * xi_hat(0) * xi_hat(0);
  }
  return 0.0;
}

double GraphHypersurface::amplitude(const Eigen::VectorXd& xi_hat) const {
  double b = 1.0;
  for (Eigen::Index i = 0; i < xi_hat.size(); ++i) {
    const double u = 2.0 * xi_hat(i) / width_;
    const double u2 = u * u;
    if (u2 >= 1.0) return 0.0;
    b *= std::exp(1.0 - 1.0 / (1.0 - u2));
  }
  return b;
}

Eigen::VectorXd GraphHypersurface::embed(const Eigen::VectorXd& xi_hat) const {
  Eigen::VectorXd xi(dim_);
  int k = 0;
  for (int i = 0; i < dim_; ++i)
    xi(i) = (i == axis_) ? graph(xi_hat) : xi_hat(k++);
  return xi;
}

namespace {

Eigen::VectorXd graph_gradient(const GraphHypersurface& surf,
                               const Eigen::VectorXd& xi_hat) {
  const double h = 1e-6;
  Eigen::VectorXd g(xi_hat.size());
  Eigen::VectorXd probe = xi_hat;
  for (Eigen::Index i = 0; i < xi_hat.size(); ++i) {
    probe(i) = xi_hat(i) + h;
    const double fp = surf.graph(probe);
    probe(i) = xi_hat(i) - h;
    const double fm = surf.graph(probe);
    probe(i) = xi_hat(i);
    g(i) = (fp - fm) / (2.0 * h);
  }
  return g;
}

}  // namespace

Eigen::VectorXd GraphHypersurface::unit_normal(const Eigen::VectorXd& xi_hat) const {
  const Eigen::VectorXd g = graph_gradient(*this, xi_hat);
  Eigen::VectorXd n = Eigen::VectorXd::Zero(dim_);
  n(axis_) = 1.0;
  int k = 0;
  for (int i = 0; i < dim_; ++i)
    if (i != axis_) n(i) = -g(k++);
  return n / n.norm();
}

Eigen::VectorXd GraphHypersurface::nominal_normal() const {
  Eigen::VectorXd n = Eigen::VectorXd::Zero(dim_);
  n(axis_) = 1.0;
  return n;
}

double GraphHypersurface::normal_spread(int samples_per_axis) const {
  const int p = dim_ - 1;
  const Eigen::VectorXd nominal = nominal_normal();
  double spread = 0.0;
  std::vector<int> idx(static_cast<std::size_t>(p), 0);
  Eigen::VectorXd xi_hat(p);
  while (true) {
    for (int i = 0; i < p; ++i)
      xi_hat(i) = width_ * (static_cast<double>(idx[static_cast<std::size_t>(i)]) /
                                (samples_per_axis - 1) -
                            0.5);
    if (amplitude(xi_hat) > 0.0)
      spread = std::max(spread, (unit_normal(xi_hat) - nominal).norm());
    int i = 0;
    for (; i < p; ++i) {
      if (++idx[static_cast<std::size_t>(i)] < samples_per_axis) break;
      idx[static_cast<std::size_t>(i)] = 0;
    }
    if (i == p) break;
  }
  return spread;
}

std::string GraphHypersurface::to_json() const {
  nlohmann::json j{{"name", name_},
                   {"dim", dim_},
                   {"graph_axis", axis_},
                   {"type", simsat::to_string(kind_)},
                   {"width", width_},
                   {"perturbation", perturbation_}};
  return j.dump();
}

GraphHypersurface GraphHypersurface::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  return GraphHypersurface(j.at("name").get<std::string>(), j.at("dim").get<int>(),
                           j.at("graph_axis").get<int>(),
                           surface_kind_from_string(j.at("type").get<std::string>()),
                           j.at("width").get<double>(),
                           j.value("perturbation", 0.0));
}

}  // namespace simsat
