// Command-line front end: model validation, Schoenberg/Laplace/Bernstein
// transforms, space-time model checks, spectral simulation and empirical
// estimation. Exit codes: 0 all checks passed, 1 a mathematical check
// failed (witness emitted where available), 2 usage or configuration error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mvrf/definiteness.hpp"
#include "mvrf/estimate.hpp"
#include "mvrf/gneiting.hpp"
#include "mvrf/io.hpp"
#include "mvrf/models.hpp"
#include "mvrf/simulate.hpp"
#include "mvrf/transforms.hpp"

namespace {

using namespace mvrf;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string compact(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", v);
  return buffer;
}

std::string join_points(const PointConfig& config) {
  std::string out;
  for (int i = 0; i < config.size(); ++i) {
    if (i) out += ',';
    const Vec& p = config[i];
    for (Eigen::Index k = 0; k < p.size(); ++k) {
      if (k) out += ' ';
      out += compact(p[k]);
    }
  }
  return out;
}

std::string join_vector(const Eigen::VectorXd& v) {
  std::string out;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += compact(v[k]);
  }
  return out;
}

/// Report sink: CSV rows to a file when a path is given, else stdout.
class ReportWriter {
 public:
  ReportWriter(const std::string& path, std::vector<std::string> header) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw io::ConfigError("cannot open output file '" + path + "'");
    }
    io::write_csv_row(stream(), header);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void row(const std::vector<std::string>& fields) { io::write_csv_row(stream(), fields); }

 private:
  std::ofstream file_;
};

std::vector<PointConfig> random_configs(int count, int dim, std::uint64_t seed, int max_sites) {
  RandomStream rng(mix64(seed));
  std::vector<PointConfig> configs;
  configs.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    const int n = 2 + static_cast<int>(rng.bits() % static_cast<std::uint64_t>(max_sites - 1));
    configs.push_back(PointConfig::random(n, dim, 2.0, rng));
  }
  return configs;
}

std::vector<Vec> random_lags(int count, int dim, std::uint64_t seed) {
  RandomStream rng(mix64(seed ^ 0x5ca1ab1eull));
  std::vector<Vec> lags;
  lags.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    Vec h(dim);
    for (int c = 0; c < dim; ++c) h[c] = rng.uniform(-2.0, 2.0);
    lags.push_back(std::move(h));
  }
  return lags;
}

struct ValidateOptions {
  std::string model_path;
  int configs = 20;
  std::uint64_t seed = 1;
  double tol = -1.0;  // negative: scale-aware default
  std::string out_path;
};

std::optional<double> tol_option(double tol) {
  if (tol < 0.0) return std::nullopt;
  return tol;
}

int run_validate(const ValidateOptions& opt) {
  const PseudoVariogramModel model = io::parse_model(io::load_json_file(opt.model_path));
  const MatrixLagFunction fn = model.lag_function();
  const std::vector<PointConfig> configs =
      random_configs(opt.configs, model.dim(), opt.seed, 8);

  ReportWriter report(opt.out_path,
                      {"check", "config", "detail", "value", "tolerance", "verdict"});
  bool failed = false;

  const Vec origin = Vec::Zero(model.dim());
  for (int i = 0; i < model.variates(); ++i) {
    const double g0 = fn.entry(i, i, origin);
    if (std::abs(g0) > 1e-12) {
      report.row({"diagonal_at_zero", "-", "gamma_" + std::to_string(i + 1) +
                      std::to_string(i + 1) + "(0)",
                  compact(g0), "1e-12", "fail"});
      failed = true;
    }
  }

  for (std::size_t c = 0; c < configs.size(); ++c) {
    try {
      const auto [min_eig, max_eig] =
          projected_eigen_range(fn, configs[c], ConstraintType::GlobalSum);
      const DefinitenessReport r = check_cnd(fn, configs[c], tol_option(opt.tol));
      report.row({"cnd", std::to_string(c),
                  "min_eig=" + compact(min_eig) + ";max_eig=" + compact(max_eig),
                  compact(r.extremal_eigenvalue), compact(r.tolerance), to_string(r.verdict)});
      if (!r.passed()) {
        failed = true;
        if (r.witness) {
          report.row({"witness", std::to_string(c),
                      "points=" + join_points(configs[c]) + "; a=" + join_vector(r.witness->vector) +
                          "; qf=" + compact(r.witness->quadratic_form),
                      compact(r.witness->quadratic_form), compact(r.tolerance), "fail"});
        }
      }
    } catch (const SymmetryViolation& e) {
      report.row({"symmetry", std::to_string(c), e.what(), compact(e.deviation()),
                  compact(e.threshold()), "fail"});
      failed = true;
    }
  }

  try {
    const SqrtInequalityReport sq =
        check_sqrt_inequality(fn, random_lags(1000, model.dim(), opt.seed));
    report.row({"sqrt_inequality", "-",
                sq.negative_entry ? "negative entry" : "worst margin over 1000 lags",
                compact(sq.worst_margin), "1e-12", sq.pass ? "pass" : "fail"});
    if (!sq.pass) failed = true;
  } catch (const std::exception& e) {
    report.row({"sqrt_inequality", "-", e.what(), "-", "-", "fail"});
    failed = true;
  }

  try {
    const double itol = opt.tol >= 0.0 ? opt.tol : 1e-12;
    const IntersectionReport inter = check_intersection_triviality(fn, configs, itol);
    std::string detail;
    switch (inter.status) {
      case IntersectionReport::Status::InIntersection:
        detail = "in intersection; max deviation " + compact(inter.max_equality_deviation);
        break;
      case IntersectionReport::Status::EqualityViolated:
        detail = "not in intersection: " + inter.failed_condition;
        break;
      default:
        detail = "not in intersection: " + inter.failed_condition;
        break;
    }
    report.row({"intersection", "-", detail, compact(inter.max_equality_deviation),
                compact(itol), "info"});
  } catch (const SymmetryViolation& e) {
    report.row({"intersection", "-", e.what(), "-", "-", "info"});
  }

  return failed ? kExitCheckFailed : kExitPass;
}

struct TransformOptions {
  std::string kind;
  std::vector<std::string> params;
  std::string model_path;
  int configs = 20;
  std::uint64_t seed = 1;
  double tol = -1.0;
  std::string out_path;
};

double numeric_param(const std::vector<std::string>& params, std::size_t index,
                     double fallback) {
  if (index >= params.size()) return fallback;
  try {
    return std::stod(params[index]);
  } catch (const std::exception&) {
    throw io::ConfigError("transform parameter '" + params[index] + "' is not a number");
  }
}

int run_transform(const TransformOptions& opt) {
  const PseudoVariogramModel model = io::parse_model(io::load_json_file(opt.model_path));
  MatrixLagFunction mapped;
  std::string label;
  if (opt.kind == "schoenberg") {
    const double t = numeric_param(opt.params, 0, 1.0);
    mapped = schoenberg_map(model.lag_function(), t);
    label = "schoenberg(t=" + compact(t) + ")";
  } else if (opt.kind == "laplace") {
    const double t = numeric_param(opt.params, 0, 1.0);
    const double lambda = numeric_param(opt.params, 1, 1.0);
    mapped = laplace_map(model.lag_function(), t, lambda);
    label = "laplace(t=" + compact(t) + ",lambda=" + compact(lambda) + ")";
  } else if (opt.kind == "bernstein") {
    if (opt.params.empty())
      throw io::ConfigError("transform bernstein needs a Bernstein spec JSON path argument");
    const BernsteinSpec g = io::parse_bernstein(io::load_json_file(opt.params[0]));
    const PseudoVariogramModel composed = bernstein_compose(g, model);
    const double t = numeric_param(opt.params, 1, 1.0);
    mapped = schoenberg_map(composed.lag_function(), t);
    label = "bernstein-compose + schoenberg(t=" + compact(t) + ")";
  } else {
    throw io::ConfigError("unknown transform kind '" + opt.kind + "'");
  }

  const std::vector<PointConfig> configs =
      random_configs(opt.configs, model.dim(), opt.seed, 8);
  ReportWriter report(opt.out_path,
                      {"transform", "config", "min_eigenvalue", "tolerance", "verdict"});
  bool failed = false;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    try {
      const DefinitenessReport r = check_pd(mapped, configs[c], tol_option(opt.tol));
      report.row({label, std::to_string(c), compact(r.extremal_eigenvalue),
                  compact(r.tolerance), to_string(r.verdict)});
      if (!r.passed()) failed = true;
    } catch (const SymmetryViolation& e) {
      report.row({label, std::to_string(c), e.what(), "-", "fail"});
      failed = true;
    }
  }
  return failed ? kExitCheckFailed : kExitPass;
}

struct GneitingOptions {
  std::string model_path;
  int configs = 20;
  std::uint64_t seed = 1;
  double tol = -1.0;
  std::string out_path;
};

int run_gneiting_check(const GneitingOptions& opt) {
  const GneitingModel model = io::parse_gneiting(io::load_json_file(opt.model_path));
  RandomStream rng(mix64(opt.seed));
  ReportWriter report(opt.out_path, {"grid", "order", "min_eigenvalue", "tolerance", "verdict"});
  bool failed = false;
  for (int g = 0; g < opt.configs; ++g) {
    // Random product grid with total order <= 60.
    const int max_nodes = std::max(1, 60 / model.variates());
    const int ns = 1 + static_cast<int>(rng.bits() % 5);
    const int max_nt = std::max(1, max_nodes / ns);
    const int nt = 1 + static_cast<int>(rng.bits() % static_cast<std::uint64_t>(std::min(5, max_nt)));
    std::vector<Vec> spatial, temporal;
    for (int s = 0; s < ns; ++s) {
      Vec x(model.spatial_dim());
      for (int k = 0; k < model.spatial_dim(); ++k) x[k] = rng.uniform(-2.0, 2.0);
      spatial.push_back(std::move(x));
    }
    for (int t = 0; t < nt; ++t) {
      Vec u(model.temporal_dim());
      for (int k = 0; k < model.temporal_dim(); ++k) u[k] = rng.uniform(-2.0, 2.0);
      temporal.push_back(std::move(u));
    }
    try {
      const Mat cov = assemble_spacetime_cov(model, spatial, temporal);
      const DefinitenessReport r = check_psd_matrix(cov, tol_option(opt.tol));
      report.row({std::to_string(g), std::to_string(cov.rows()),
                  compact(r.extremal_eigenvalue), compact(r.tolerance), to_string(r.verdict)});
      if (!r.passed()) failed = true;
    } catch (const SymmetryViolation& e) {
      report.row({std::to_string(g), "-", e.what(), "-", "fail"});
      failed = true;
    }
  }
  return failed ? kExitCheckFailed : kExitPass;
}

bool uniform_grid_step(const std::vector<Vec>& grid, Vec& step) {
  if (grid.size() < 2) {
    step = Vec::Zero(grid.front().size());
    return true;
  }
  step = grid[1] - grid[0];
  for (std::size_t k = 1; k + 1 < grid.size(); ++k) {
    const Vec d = grid[k + 1] - grid[k];
    if ((d - step).cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, step.cwiseAbs().maxCoeff()))
      return false;
  }
  return true;
}

struct LagReportOptions {
  bool include_pseudo_variogram = false;
  double abs_tol = 0.02;
};

/// Pooled-lag empirical vs model table shared by `simulate --empirical`
/// and `estimate`. Requires uniform grids so one index lag means one
/// physical lag.
bool write_lag_report(ReportWriter& report, const std::vector<FieldSample>& samples,
                      const io::PlanFile& file, const LagReportOptions& opt) {
  const SimulationPlan& plan = file.plan;
  Vec space_step, time_step;
  if (!uniform_grid_step(plan.spatial_grid, space_step) ||
      !uniform_grid_step(plan.temporal_grid, time_step))
    throw io::ConfigError("lag report requires uniform spatial and temporal grids");

  const int m = file.model.variates();
  const int ns = static_cast<int>(plan.spatial_grid.size());
  const int nt = static_cast<int>(plan.temporal_grid.size());
  const GneitingModel cov_model(GneitingModel::MultivariateExtended{
      file.phi, file.model, 0.5 * plan.spatial_dim(), plan.spatial_dim()});

  bool all_pass = true;
  const double g110 = cov_model.eval(0, 0, Vec::Zero(plan.spatial_dim()),
                                     Vec::Zero(plan.temporal_dim()));
  (void)g110;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int hs = 0; hs < ns; ++hs)
        for (int ht = -(nt - 1); ht < nt; ++ht) {
          const Vec h = space_step * hs;
          const Vec u = time_step * ht;
          const double model_cov = cov_model.eval(i, j, h, u);
          const double emp_cov = empirical_cross_covariance(samples, i, j, hs, ht);
          const double diff = std::abs(emp_cov - model_cov);
          const bool pass = diff <= opt.abs_tol;
          all_pass = all_pass && pass;
          report.row({"cov", std::to_string(i + 1), std::to_string(j + 1), std::to_string(hs),
                      std::to_string(ht), compact(emp_cov), compact(model_cov), compact(diff),
                      pass ? "pass" : "fail"});
          if (opt.include_pseudo_variogram) {
            const double model_var_i =
                cov_model.eval(i, i, Vec::Zero(plan.spatial_dim()), Vec::Zero(plan.temporal_dim()));
            const double model_var_j =
                cov_model.eval(j, j, Vec::Zero(plan.spatial_dim()), Vec::Zero(plan.temporal_dim()));
            const double model_pvar = 0.5 * (model_var_i + model_var_j) - model_cov;
            const double emp_pvar = empirical_pseudo_variogram(samples, i, j, hs, ht);
            const double pdiff = std::abs(emp_pvar - model_pvar);
            const bool ppass = pdiff <= opt.abs_tol;
            all_pass = all_pass && ppass;
            report.row({"pvar", std::to_string(i + 1), std::to_string(j + 1), std::to_string(hs),
                        std::to_string(ht), compact(emp_pvar), compact(model_pvar),
                        compact(pdiff), ppass ? "pass" : "fail"});
          }
        }
  return all_pass;
}

struct SimulateOptions {
  std::string plan_path;
  std::int64_t seed = -1;
  std::string out_path;
  std::string empirical_path;
  double tol = -1.0;
};

int run_simulate(const SimulateOptions& opt) {
  io::PlanFile file = io::parse_plan(io::load_json_file(opt.plan_path));
  if (opt.seed >= 0) {
    file.plan.seed = static_cast<std::uint64_t>(opt.seed);
    file.has_seed = true;
  }
  if (!file.has_seed)
    throw io::ConfigError("simulate requires a seed (plan field 'seed' or --seed)");

  const SimulationResult result =
      run_simulation(file.plan, file.model.lag_function(), file.phi);

  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path);
    if (!out) throw io::ConfigError("cannot open output file '" + opt.out_path + "'");
    io::write_fields_csv(out, result.replicates);
  }

  bool all_pass = true;
  if (!opt.empirical_path.empty()) {
    const double abs_tol =
        opt.tol >= 0.0 ? opt.tol
                       : std::max(0.02, 4.0 / std::sqrt(static_cast<double>(file.plan.replicates)));
    ReportWriter report(opt.empirical_path, {"kind", "i", "j", "space_lag", "time_lag",
                                             "empirical", "model", "diff", "verdict"});
    LagReportOptions lag_opt;
    lag_opt.abs_tol = abs_tol;
    all_pass = write_lag_report(report, result.replicates, file, lag_opt);
  }

  std::cout << "replicates=" << file.plan.replicates << " seed=" << file.plan.seed
            << " nodes=" << result.empirical_covariance.rows() << "\n";
  return all_pass ? kExitPass : kExitCheckFailed;
}

struct EstimateOptions {
  std::string plan_path;
  std::string fields_path;
  std::string out_path;
  double tol = -1.0;
};

int run_estimate(const EstimateOptions& opt) {
  const io::PlanFile file = io::parse_plan(io::load_json_file(opt.plan_path));
  std::ifstream in(opt.fields_path);
  if (!in) throw io::ConfigError("cannot open fields file '" + opt.fields_path + "'");
  const std::vector<FieldSample> samples = io::read_fields_csv(in);
  if (samples.empty()) throw io::ConfigError("no samples in fields file");
  const FieldSample& first = samples.front();
  if (first.variates != file.model.variates() ||
      first.n_space != static_cast<int>(file.plan.spatial_grid.size()) ||
      first.n_time != static_cast<int>(file.plan.temporal_grid.size()))
    throw io::ConfigError("fields file shape does not match the plan");

  const double abs_tol =
      opt.tol >= 0.0 ? opt.tol
                     : std::max(0.02, 4.0 / std::sqrt(static_cast<double>(samples.size())));
  ReportWriter report(opt.out_path, {"kind", "i", "j", "space_lag", "time_lag", "empirical",
                                     "model", "diff", "verdict"});
  LagReportOptions lag_opt;
  lag_opt.abs_tol = abs_tol;
  lag_opt.include_pseudo_variogram = true;
  const bool all_pass = write_lag_report(report, samples, file, lag_opt);
  return all_pass ? kExitPass : kExitCheckFailed;
}

struct OracleOptions {
  std::string model_path;
  int configs = 5;
  int trials = 10000;
  std::uint64_t seed = 1;
  double tol = -1.0;
  std::string out_path;
};

int run_oracle(const OracleOptions& opt) {
  const PseudoVariogramModel model = io::parse_model(io::load_json_file(opt.model_path));
  const MatrixLagFunction fn = model.lag_function();
  const int max_sites = std::max(2, 6 / model.variates());
  RandomStream rng(mix64(opt.seed));
  ReportWriter report(opt.out_path, {"config", "constraint", "eigen_extremal", "search_max",
                                     "tolerance", "eigen_verdict", "agree"});
  bool all_agree = true;
  for (int c = 0; c < opt.configs; ++c) {
    const int n = std::max(2, 1 + static_cast<int>(rng.bits() %
                                                   static_cast<std::uint64_t>(max_sites)));
    const PointConfig config = PointConfig::random(n, model.dim(), 2.0, rng);
    for (ConstraintType constraint :
         {ConstraintType::GlobalSum, ConstraintType::PerComponentSum}) {
      const DefinitenessReport eig = constraint == ConstraintType::GlobalSum
                                         ? check_cnd(fn, config, tol_option(opt.tol))
                                         : check_almost_nd(fn, config, tol_option(opt.tol));
      const QfSearchResult search = brute_force_qf_search(fn, config, constraint, opt.trials, rng);
      const bool search_pass = search.max_quadratic_form <= eig.tolerance;
      const bool agree = search_pass == eig.passed();
      all_agree = all_agree && agree;
      report.row({std::to_string(c), to_string(constraint), compact(eig.extremal_eigenvalue),
                  compact(search.max_quadratic_form), compact(eig.tolerance),
                  to_string(eig.verdict), agree ? "yes" : "no"});
    }
  }
  return all_agree ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-variogram toolkit: validity checks, Schoenberg-type transforms, "
               "space-time covariance models, spectral simulation and estimation"};
  app.require_subcommand(1);

  ValidateOptions validate_opt;
  CLI::App* validate = app.add_subcommand(
      "validate", "pseudo-variogram checks: conditional negative definiteness on random "
                  "configurations, square-root inequality sweep, intersection report");
  validate->add_option("--model", validate_opt.model_path, "model JSON")->required();
  validate->add_option("--configs", validate_opt.configs, "number of random configurations");
  validate->add_option("--seed", validate_opt.seed, "configuration seed");
  validate->add_option("--tol", validate_opt.tol, "absolute tolerance (default scale-aware)");
  validate->add_option("--out", validate_opt.out_path, "report CSV path (default stdout)");

  TransformOptions transform_opt;
  CLI::App* transform = app.add_subcommand(
      "transform", "apply schoenberg/laplace/bernstein and test positive definiteness");
  transform->add_option("kind", transform_opt.kind, "schoenberg | laplace | bernstein")
      ->required();
  transform->add_option("params", transform_opt.params,
                        "schoenberg: [t]; laplace: [t lambda]; bernstein: SPEC.json [t]");
  transform->add_option("--model", transform_opt.model_path, "model JSON")->required();
  transform->add_option("--configs", transform_opt.configs, "number of random configurations");
  transform->add_option("--seed", transform_opt.seed, "configuration seed");
  transform->add_option("--tol", transform_opt.tol, "absolute tolerance (default scale-aware)");
  transform->add_option("--out", transform_opt.out_path, "report CSV path (default stdout)");

  GneitingOptions gneiting_opt;
  CLI::App* gneiting = app.add_subcommand(
      "gneiting-check", "assemble space-time covariance matrices on random grids and test PSD");
  gneiting->add_option("--model", gneiting_opt.model_path, "space-time model JSON")->required();
  gneiting->add_option("--configs", gneiting_opt.configs, "number of random grids");
  gneiting->add_option("--seed", gneiting_opt.seed, "grid seed");
  gneiting->add_option("--tol", gneiting_opt.tol, "absolute tolerance (default scale-aware)");
  gneiting->add_option("--out", gneiting_opt.out_path, "report CSV path (default stdout)");

  SimulateOptions simulate_opt;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "spectral simulation of the extended space-time model");
  simulate->add_option("--plan", simulate_opt.plan_path, "plan JSON")->required();
  simulate->add_option("--seed", simulate_opt.seed, "master seed (overrides plan)");
  simulate->add_option("--out", simulate_opt.out_path, "sample CSV path");
  simulate->add_option("--empirical", simulate_opt.empirical_path,
                       "empirical-vs-model report CSV path");
  simulate->add_option("--tol", simulate_opt.tol,
                       "absolute comparison tolerance (default max(0.02, 4/sqrt(N)))");

  EstimateOptions estimate_opt;
  CLI::App* estimate = app.add_subcommand(
      "estimate", "re-estimate covariances and pseudo-variograms from saved samples");
  estimate->add_option("--plan", estimate_opt.plan_path, "plan JSON")->required();
  estimate->add_option("--fields", estimate_opt.fields_path, "sample CSV from simulate")
      ->required();
  estimate->add_option("--out", estimate_opt.out_path, "report CSV path (default stdout)");
  estimate->add_option("--tol", estimate_opt.tol, "absolute comparison tolerance");

  OracleOptions oracle_opt;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "randomized quadratic-form search vs projected-eigenvalue verdicts");
  oracle->add_option("--model", oracle_opt.model_path, "model JSON")->required();
  oracle->add_option("--configs", oracle_opt.configs, "number of random configurations");
  oracle->add_option("--trials", oracle_opt.trials, "search trials per configuration");
  oracle->add_option("--seed", oracle_opt.seed, "search seed");
  oracle->add_option("--tol", oracle_opt.tol, "absolute tolerance (default scale-aware)");
  oracle->add_option("--out", oracle_opt.out_path, "report CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(validate_opt);
    if (transform->parsed()) return run_transform(transform_opt);
    if (gneiting->parsed()) return run_gneiting_check(gneiting_opt);
    if (simulate->parsed()) return run_simulate(simulate_opt);
    if (estimate->parsed()) return run_estimate(estimate_opt);
    if (oracle->parsed()) return run_oracle(oracle_opt);
  } catch (const io::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SymmetryViolation& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const CovarianceAssemblyError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::domain_error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
