#include "simsat/sweep.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "simsat/extension.hpp"
#include "simsat/fit.hpp"

namespace simsat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double json_exponent(const nlohmann::json& j) {
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "Inf"))
    return kInf;
  return j.get<double>();
}

nlohmann::json exponent_json(double p) {
  if (p == kInf) return "inf";
  return p;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (d != 2 && d != 3)
    throw std::invalid_argument("config: only d=2 and d=3 are desk scale");
  if (k < 1 || k > d) throw std::invalid_argument("config: need 1 <= k <= d");
  if (surfaces.size() != static_cast<std::size_t>(k))
    throw std::invalid_argument("config: need exactly k surfaces");
  for (const auto& s : surfaces)
    if (s.ambient_dim() != d)
      throw std::invalid_argument("config: surface dimension mismatch");
  if (lambdas.size() < 3)
    throw std::invalid_argument("config: need at least 3 lambdas");
  for (std::size_t i = 1; i < lambdas.size(); ++i)
    if (lambdas[i] <= lambdas[i - 1])
      throw std::invalid_argument("config: lambdas must increase");
  if (d == 3) {
    if (lambdas.back() > 32.0)
      throw std::invalid_argument("config: d=3 sweeps are capped at lambda <= 32");
    if (grid_scale * lambdas.back() > 32.0)
      throw std::invalid_argument("config: d=3 grid capped at 65^3");
  }
  if (lambdas.front() < 1.0)
    throw std::invalid_argument("config: lambdas must be >= 1");
  if (epsilon <= 0.0 || epsilon >= 1.0)
    throw std::invalid_argument("config: epsilon must be in (0,1)");
  if (draws < 0 || draws > 1000) throw std::invalid_argument("config: draws out of range");
  if (norm.p_outer <= 0.0 || norm.q_inner <= 0.0)
    throw std::invalid_argument("config: norm exponents must be positive or inf");
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  for (int a : norm.outer_axes) {
    if (a < 0 || a >= d || seen[static_cast<std::size_t>(a)])
      throw std::invalid_argument("config: norm outer_axes must be distinct axes in [0,d)");
    seen[static_cast<std::size_t>(a)] = true;
  }
  // Under-resolved grids are refused rather than silently degraded:
  // spacing <= wavelength / grid_oversampling, wavelength = 2 pi / lambda.
  const double spacing = 1.0 / (grid_scale * lambdas.back());
  if (spacing > 2.0 * std::numbers::pi / (grid_oversampling * lambdas.back()))
    throw std::invalid_argument(
        "config: grid under-resolved; raise grid_scale above oversampling/(2 pi)");
}

std::string config_to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["experiment_id"] = c.experiment_id;
  j["d"] = c.d;
  j["k"] = c.k;
  j["surfaces"] = nlohmann::json::array();
  for (const auto& s : c.surfaces)
    j["surfaces"].push_back(nlohmann::json::parse(s.to_json()));
  j["lambdas"] = c.lambdas;
  j["grid_scale"] = c.grid_scale;
  j["grid_oversampling"] = c.grid_oversampling;
  j["epsilon"] = c.epsilon;
  j["epsilon_tilde"] = c.epsilon_tilde;
  j["norm"] = {{"outer_axes", c.norm.outer_axes},
               {"p_outer", exponent_json(c.norm.p_outer)},
               {"q_inner", exponent_json(c.norm.q_inner)}};
  j["target_exponent"] = c.target_exponent;
  j["slack"] = c.slack;
  j["draws"] = c.draws;
  j["seed"] = c.seed;
  j["output_csv"] = c.output_csv;
  j["output_manifest"] = c.output_manifest;
  return j.dump();
}

ExperimentConfig config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: bad JSON: ") + e.what());
  }
  ExperimentConfig c;
  c.experiment_id = j.value("experiment_id", std::string("sweep"));
  c.d = j.at("d").get<int>();
  c.k = j.at("k").get<int>();
  for (const auto& js : j.at("surfaces"))
    c.surfaces.push_back(GraphHypersurface::from_json(js.dump()));
  c.lambdas = j.at("lambdas").get<std::vector<double>>();
  c.grid_scale = j.value("grid_scale", 16.0);
  c.grid_oversampling = j.value("grid_oversampling", 4);
  c.epsilon = j.value("epsilon", 0.1);
  c.epsilon_tilde = j.value("epsilon_tilde", 0.1);
  if (j.contains("norm")) {
    c.norm.outer_axes = j["norm"].at("outer_axes").get<std::vector<int>>();
    c.norm.p_outer = json_exponent(j["norm"].at("p_outer"));
    c.norm.q_inner = json_exponent(j["norm"].at("q_inner"));
  } else {
    c.norm = MixedNormSpec::plain(2.0, c.d);
  }
  c.target_exponent = j.at("target_exponent").get<double>();
  c.slack = j.value("slack", 0.15);
  c.draws = j.value("draws", 20);
  c.seed = j.value("seed", std::uint64_t{0});
  c.output_csv = j.value("output_csv", std::string());
  c.output_manifest = j.value("output_manifest", std::string());
  c.validate();
  return c;
}

double unit_ball_volume(int dim) {
  // vol(B^d) = pi^{d/2} / Gamma(d/2 + 1)
  return std::pow(std::numbers::pi, 0.5 * dim) / std::tgamma(0.5 * dim + 1.0);
}

std::vector<ShellStat> omega_bound_check(const LevelSetPartition& partition,
                                         const std::vector<SeparatedNet>& nets,
                                         double lambda, double epsilon,
                                         double bound_b, double sup, int k) {
  if (nets.size() != partition.shells.size())
    throw std::invalid_argument("omega_bound_check: one net per shell required");
  const double radius = std::pow(lambda, -1.0 + epsilon);
  const double exponent =
      k == 1 ? 2.0 : 2.0 * static_cast<double>(k) / (static_cast<double>(k) - 1.0);
  std::vector<ShellStat> stats;
  for (std::size_t i = 0; i < nets.size(); ++i) {
    if (partition.shells[i].empty()) continue;  // empty shells are skipped
    ShellStat s;
    s.shell = static_cast<int>(i);
    s.net_size = nets[i].points.size();
    // Nets live in the outer block, so the covering balls sit in R^k.
    s.omega_estimate = static_cast<double>(s.net_size) * unit_ball_volume(k) *
                       std::pow(radius, k);
    s.lower_l = std::pow(2.0, -(static_cast<double>(i) + 1.0) / k) *
                std::pow(sup, 1.0 / k);
    s.fitted_c = std::pow(static_cast<double>(s.net_size), 1.0 - epsilon) *
                 std::pow(s.lower_l / bound_b, exponent);
    stats.push_back(s);
  }
  return stats;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
  for (std::uint64_t v : {a, b, c}) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return h;
}

// Constant saturator (draw 0) or seeded random phases with constant
// amplitude, normalised to unit quadrature norm against b d(xi_hat).
Eigen::VectorXcd input_draw(const ExtensionFieldPlan& plan, int draw,
                            std::uint64_t seed, std::size_t lambda_index,
                            std::size_t surface_index) {
  Eigen::VectorXcd f = Eigen::VectorXcd::Ones(plan.node_count());
  if (draw > 0) {
    std::mt19937_64 rng(mix_seed(seed, lambda_index, surface_index,
                                 static_cast<std::uint64_t>(draw)));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int n = 0; n < plan.node_count(); ++n) {
      const double theta = angle(rng);
      f(n) = {std::cos(theta), std::sin(theta)};
    }
  }
  const double norm = plan.input_norm(f);
  if (norm <= 0.0) throw std::runtime_error("input draw has zero norm");
  return f / norm;
}

// Points of a shell projected to the outer (y) block, for nets in R^k.
std::vector<Eigen::VectorXd> shell_points_outer(
    const std::vector<std::uint32_t>& ids, const SpatialGrid& grid,
    const std::vector<int>& outer_axes) {
  std::vector<Eigen::VectorXd> pts;
  pts.reserve(ids.size());
  for (auto id : ids) {
    const Eigen::VectorXd x = grid.point(id);
    Eigen::VectorXd y(static_cast<Eigen::Index>(outer_axes.size()));
    for (std::size_t a = 0; a < outer_axes.size(); ++a)
      y(static_cast<Eigen::Index>(a)) = x(outer_axes[a]);
    pts.push_back(std::move(y));
  }
  return pts;
}

}  // namespace

SweepResult restriction_sweep(const ExperimentConfig& config) {
  config.validate();
  SweepResult result;
  result.config_json = config_to_json(config);
  const std::string hash = fnv1a_hex(result.config_json);

  std::vector<double> log_lambda, log_norm;
  for (std::size_t li = 0; li < config.lambdas.size(); ++li) {
    const double lambda = config.lambdas[li];
    int per_axis = static_cast<int>(std::llround(2.0 * config.grid_scale * lambda)) + 1;
    if (per_axis % 2 == 0) ++per_axis;
    const SpatialGrid grid(config.d, per_axis);

    std::vector<ExtensionFieldPlan> plans;
    std::vector<QuadratureGrid> quads;
    quads.reserve(config.surfaces.size());
    for (const auto& surf : config.surfaces) {
      quads.emplace_back(surf, lambda);
      plans.emplace_back(surf, lambda, grid, quads.back());
    }

    double best_norm = -1.0;
    std::optional<ProductField> best_field;
    for (int draw = 0; draw <= config.draws; ++draw) {
      std::vector<Eigen::VectorXcd> coeffs;
      coeffs.reserve(plans.size());
      for (std::size_t m = 0; m < plans.size(); ++m)
        coeffs.push_back(input_draw(plans[m], draw, config.seed, li, m));
      ProductField field = product_field(plans, coeffs, grid);
      const double value = mixed_norm(field.grid_field, config.norm);
      if (value > best_norm) {
        best_norm = value;
        best_field = std::move(field);
      }
    }

    RunRecord record;
    record.experiment_id = config.experiment_id;
    record.config_hash = hash;
    record.lambda = lambda;
    record.norm = best_norm;
    record.exponent_target = config.target_exponent;
    record.slack = config.slack;

    // Packing analysis on the extremal field. Shells partition the grid
    // restricted to the ball; nets live in the outer block.
    if (best_field && best_field->sup > 0.0) {
      std::vector<double> masked = best_field->grid_field.magnitudes;
      for (std::size_t i = 0; i < masked.size(); ++i)
        if (!best_field->grid_field.active[i]) masked[i] = 0.0;
      const auto partition = level_set_partition(masked, lambda, config.k);
      const double radius = std::pow(lambda, -1.0 + config.epsilon);
      std::vector<SeparatedNet> nets;
      nets.reserve(partition.shells.size());
      const std::vector<int> outer =
          config.norm.outer_axes.empty() ? MixedNormSpec::plain(2.0, config.d).outer_axes
                                         : config.norm.outer_axes;
      for (const auto& shell : partition.shells)
        nets.push_back(greedy_net(shell_points_outer(shell, grid, outer), radius));
      double bound_b = 1.0;
      for (double s : best_field->factor_sup) bound_b *= s;
      bound_b = std::pow(bound_b, 1.0 / config.k);
      record.shells = omega_bound_check(partition, nets, lambda, config.epsilon,
                                        bound_b, best_field->sup, config.k);
    }

    log_lambda.push_back(std::log(lambda));
    log_norm.push_back(std::log(std::max(best_norm, 1e-300)));
    result.records.push_back(std::move(record));
  }

  result.slope = least_squares_slope(log_lambda, log_norm);
  result.pass_slope = result.slope <= config.target_exponent + config.slack;
  for (auto& r : result.records) {
    r.slope = result.slope;
    r.pass = result.pass_slope;
  }

  double c0_min = kInf, c0_max = 0.0;
  for (const auto& r : result.records)
    for (const auto& s : r.shells)
      if (s.shell == 0 && s.net_size > 0) {
        c0_min = std::min(c0_min, s.fitted_c);
        c0_max = std::max(c0_max, s.fitted_c);
      }
  result.c0_ratio = (c0_min < kInf && c0_min > 0.0) ? c0_max / c0_min : 0.0;

  if (!config.output_csv.empty()) write_records_csv(result.records, config.output_csv);
  if (!config.output_manifest.empty())
    write_manifest(result.records, result.config_json, config.output_manifest);
  return result;
}

SweepResult rerun_from_manifest(const std::string& manifest_path) {
  const Manifest m = read_manifest(manifest_path);
  ExperimentConfig config = config_from_json(m.config_json);
  config.output_csv.clear();
  config.output_manifest.clear();
  return restriction_sweep(config);
}

}  // namespace simsat
