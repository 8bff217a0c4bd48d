#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "simsat/averaging.hpp"
#include "simsat/energy.hpp"
#include "simsat/extension.hpp"
#include "simsat/extension_system.hpp"
#include "simsat/records.hpp"
#include "simsat/sweep.hpp"
#include "simsat/system.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

// Output paths may be redirected wholesale through SIMSAT_OUT_DIR.
std::string redirect_output(const std::string& path) {
  const char* dir = std::getenv("SIMSAT_OUT_DIR");
  if (!dir || path.empty()) return path;
  return (std::filesystem::path(dir) / std::filesystem::path(path).filename())
      .string();
}

int run_verify_lemmas(int n, int m, const std::string& dump_dir) {
  using namespace simsat;
  const TupleSpace space(n, m);
  bool ok = true;
  auto report = [&ok](const std::string& name, bool pass, const std::string& extra = "") {
    std::cout << (pass ? "[ok]   " : "[FAIL] ") << name;
    if (!extra.empty()) std::cout << ": " << extra;
    std::cout << '\n';
    ok = ok && pass;
  };

  const auto sim = check_similarity(space);
  report("similarity A_odd = C A_ev C^-1 and C^2 commutation", sim.ok, sim.detail);
  const auto weave = check_weaving_product(space);
  report("weaving product A_odd A_ev = D^{-(1-1/M)} indicator", weave.ok, weave.detail);
  report("cycle spectrum: orbit lengths divide M", cycle_spectrum_divides_m(space));

  const auto ev = build_even_projector(space);
  const auto odd = build_odd_projector(space);
  const auto root_d = static_cast<std::uint64_t>(
      std::llround(std::sqrt(static_cast<double>(space.dimension()))));
  bool class_sizes = true;
  for (std::uint32_t s = 0; s < space.dimension(); ++s)
    class_sizes = class_sizes && ev.row(s).size() == root_d &&
                  odd.row(s).size() == root_d;
  report("equivalence classes all have size D^{1/2}", class_sizes);

  const DenseHermitian a = build_symmetrized_average(space);
  const double a_min = check_psd(a);
  const double a_scale = a.cwiseAbs().maxCoeff();
  report("A is PSD", a_min >= -1e-9 * a_scale,
         "lambda_min = " + std::to_string(a_min));

  const Eigen::MatrixXd sum = ev.to_dense() + odd.to_dense();
  const Eigen::VectorXd spectrum = hermitian_eigenvalues(sum.cast<std::complex<double>>());
  bool gap = true;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i)
    gap = gap && (spectrum(i) <= 1e-9 || spectrum(i) >= 1.0 - 1e-9);
  report("nonzero eigenvalues of A_ev + A_odd are >= 1", gap);

  if (!dump_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(dump_dir);
    for (const auto& [name, mat] :
         {std::pair<std::string, const ScaledIndicatorMatrix*>{"a_ev.txt", &ev},
          {"a_odd.txt", &odd}}) {
      std::ofstream os(fs::path(dump_dir) / name);
      mat->write_triplets(os);
    }
    std::ofstream os(fs::path(dump_dir) / "cycle.txt");
    build_cycle_matrix(space).write_triplets(os);
  }
  return ok ? kExitPass : kExitFail;
}

int run_system_cmd(const std::string& config_path, std::uint64_t seed_override,
                   bool seed_given) {
  using namespace simsat;
  const auto j = nlohmann::json::parse(slurp(config_path));
  const std::string kind = j.value("kind", std::string("random"));
  const double epsilon = j.value("epsilon", 0.5);
  std::uint64_t seed = j.value("seed", std::uint64_t{0});
  if (seed_given) seed = seed_override;

  std::shared_ptr<const SimultaneousSystem> sys;
  int n = 0, m = 0;
  if (kind == "extension") {
    std::vector<GraphHypersurface> surfaces;
    for (const auto& js : j.at("surfaces"))
      surfaces.push_back(GraphHypersurface::from_json(js.dump()));
    std::vector<Eigen::VectorXd> points;
    for (const auto& jp : j.at("points")) {
      Eigen::VectorXd p(static_cast<Eigen::Index>(jp.size()));
      for (Eigen::Index i = 0; i < p.size(); ++i)
        p(i) = jp[static_cast<std::size_t>(i)].get<double>();
      points.push_back(std::move(p));
    }
    ConeRelationParams params;
    params.epsilon = j.value("epsilon_sep", 0.1);
    params.epsilon_tilde = j.value("epsilon_tilde", 0.1);
    n = static_cast<int>(points.size());
    m = static_cast<int>(surfaces.size());
    sys = std::make_shared<ExtensionSystem>(std::move(surfaces),
                                            j.at("lambda").get<double>(),
                                            std::move(points), params);
  } else {
    n = j.at("n").get<int>();
    m = j.at("m").get<int>();
    if (kind == "random")
      sys = std::make_shared<FiniteSystem>(
          FiniteSystem::random(n, m, j.value("h", 4), seed));
    else if (kind == "diagonal")
      sys = std::make_shared<FiniteSystem>(
          FiniteSystem::diagonal(n, m, j.value("b", 1.0)));
    else if (kind == "rank_one") {
      Eigen::VectorXcd v = Eigen::VectorXcd::Ones(j.value("h", 4));
      sys = std::make_shared<FiniteSystem>(FiniteSystem::rank_one(n, m, v));
    } else {
      throw std::invalid_argument("unknown system kind: " + kind);
    }
  }

  const auto check = check_system_invariants(*sys, n);
  if (!check.ok) {
    std::cerr << "system invariant violation: " << check.detail << '\n';
    return kExitFail;
  }
  const PointSet base = PointSet::abstract(n);
  if (m < 2) throw std::invalid_argument("run-system: need m >= 2");
  std::shared_ptr<const SimultaneousSystem> runnable = sys;
  if (m % 2 != 0) {
    // The averaging machinery wants even M; odd systems get the
    // point-evaluation operator appended first.
    runnable = std::make_shared<EmbeddedOddSystem>(embed_odd_system(runnable, base));
    std::cerr << "odd m: embedded into an m+1 = " << m + 1 << " system\n";
  }
  const auto report = run_saturation_checks(*runnable, base, epsilon);
  std::cout << to_json(report) << '\n';
  const bool ok = report.ones_ok && report.psd_ok && report.trace_ok &&
                  report.census_ok;
  return ok ? kExitPass : kExitFail;
}

int run_kernel_decay(const std::string& surface_path, const std::string& lambdas_csv) {
  using namespace simsat;
  GraphHypersurface surface = surface_path.empty()
                                  ? GraphHypersurface("paraboloid_d2", 2, 0,
                                                      SurfaceKind::paraboloid, 4.0)
                                  : GraphHypersurface::from_json(slurp(surface_path));
  std::vector<double> lambdas;
  std::stringstream ss(lambdas_csv);
  for (std::string item; std::getline(ss, item, ',');)
    lambdas.push_back(std::stod(item));

  Eigen::VectorXd on = surface.nominal_normal();
  Eigen::VectorXd off = Eigen::VectorXd::Zero(surface.ambient_dim());
  off(surface.graph_axis() == 0 ? 1 : 0) = 1.0;

  const auto fit_on = decay_fit(surface, on, lambdas);
  const auto fit_off = decay_fit(surface, off, lambdas);
  std::cout << "surface " << surface.name() << '\n';
  std::cout << "on-cone  R_hat = " << fit_on.r_hat << '\n';
  std::cout << "off-cone R_hat = " << fit_off.r_hat
            << (fit_off.underflow_clamped ? " (clamped)" : "") << '\n';
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    std::cout << "lambda " << lambdas[i] << ": |K_on| = " << fit_on.kernel_magnitudes[i]
              << ", |K_off| = " << fit_off.kernel_magnitudes[i] << '\n';
  return kExitPass;
}

int run_sweep(const std::string& config_path, std::uint64_t seed_override,
              bool seed_given) {
  using namespace simsat;
  ExperimentConfig config = config_from_json(slurp(config_path));
  if (seed_given) config.seed = seed_override;
  config.output_csv = redirect_output(config.output_csv);
  config.output_manifest = redirect_output(config.output_manifest);
  const auto result = restriction_sweep(config);
  for (const auto& r : result.records)
    std::cout << "lambda " << r.lambda << ": norm = " << r.norm << '\n';
  std::cout << "fitted slope = " << result.slope
            << " (target " << config.target_exponent << " + slack " << config.slack
            << ") => " << (result.pass_slope ? "pass" : "FAIL") << '\n';
  if (result.c0_ratio > 0.0)
    std::cout << "shell-0 constant max/min across lambda = " << result.c0_ratio << '\n';
  return result.pass_slope ? kExitPass : kExitFail;
}

int run_report(const std::string& in_path, const std::string& out_path) {
  using namespace simsat;
  const auto records = read_records_csv(in_path);
  std::ofstream os(out_path.empty() ? "/dev/stdout" : redirect_output(out_path));
  os << "log_lambda,log_norm\n";
  os.precision(17);
  for (const auto& r : records)
    os << std::log(r.lambda) << ',' << std::log(r.norm) << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simultaneous-saturation verification and experiment suite"};
  app.require_subcommand(1);

  int n = 2, m = 2;
  std::string dump_dir;
  auto* verify = app.add_subcommand("verify-lemmas",
                                    "exact projector/cycle/weaving lemma suite");
  verify->add_option("--n", n, "permutation degree")->required();
  verify->add_option("--m", m, "multilinearity (even)")->required();
  verify->add_option("--dump-dir", dump_dir, "write sparse triplet dumps here");

  std::string system_config;
  std::uint64_t seed = 0;
  bool seed_given = false;
  auto* run_system = app.add_subcommand("run-system",
                                        "build a finite system and verify the bounds");
  run_system->add_option("--config", system_config, "system config JSON")->required();
  run_system->add_option("--seed", seed, "override config seed")
      ->each([&seed_given](const std::string&) { seed_given = true; });

  std::string surface_path, lambdas_csv = "32,64,128";
  auto* decay = app.add_subcommand("kernel-decay",
                                   "measure on/off-cone kernel decay exponents");
  decay->add_option("--surface", surface_path, "surface config JSON (default paraboloid d=2)");
  decay->add_option("--lambdas", lambdas_csv, "comma-separated lambda list");

  std::string sweep_config;
  auto* sweep = app.add_subcommand("restriction-sweep",
                                   "lambda sweep of the configured product norm");
  sweep->add_option("--config", sweep_config, "experiment config JSON")->required();
  sweep->add_option("--seed", seed, "override config seed")
      ->each([&seed_given](const std::string&) { seed_given = true; });

  std::string report_in, report_out;
  auto* report = app.add_subcommand("report", "emit plot-ready CSV from records");
  report->add_option("--in", report_in, "records CSV")->required();
  report->add_option("--out", report_out, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify_lemmas(n, m, dump_dir);
    if (run_system->parsed()) return run_system_cmd(system_config, seed, seed_given);
    if (decay->parsed()) return run_kernel_decay(surface_path, lambdas_csv);
    if (sweep->parsed()) return run_sweep(sweep_config, seed, seed_given);
    if (report->parsed()) return run_report(report_in, report_out);
  } catch (const simsat::RecordParseException& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad config: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
