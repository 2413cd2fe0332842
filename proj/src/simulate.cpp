#include "mvrf/simulate.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <thread>

namespace mvrf {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

int SimulationPlan::spatial_dim() const {
  return spatial_grid.empty() ? 0 : static_cast<int>(spatial_grid.front().size());
}

int SimulationPlan::temporal_dim() const {
  return temporal_grid.empty() ? 0 : static_cast<int>(temporal_grid.front().size());
}

void SimulationPlan::validate() const {
  if (spatial_grid.empty() || temporal_grid.empty())
    throw std::invalid_argument("SimulationPlan: grids must be non-empty");
  if (replicates < 1) throw std::invalid_argument("SimulationPlan: replicates must be >= 1");
  if (workers < 1) throw std::invalid_argument("SimulationPlan: workers must be >= 1");
  for (const auto& x : spatial_grid)
    if (x.size() != spatial_grid.front().size())
      throw std::invalid_argument("SimulationPlan: inconsistent spatial grid");
  for (const auto& t : temporal_grid)
    if (t.size() != temporal_grid.front().size())
      throw std::invalid_argument("SimulationPlan: inconsistent temporal grid");
}

FieldSample FieldSample::zeros(int variates, int n_space, int n_time) {
  FieldSample s;
  s.variates = variates;
  s.n_space = n_space;
  s.n_time = n_time;
  s.values.assign(static_cast<std::size_t>(variates) * static_cast<std::size_t>(n_space) *
                      static_cast<std::size_t>(n_time),
                  0.0);
  return s;
}

Eigen::VectorXd FieldSample::node_vector() const {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  for (int s = 0; s < n_space; ++s)
    for (int t = 0; t < n_time; ++t)
      for (int p = 0; p < variates; ++p) v[(s * n_time + t) * variates + p] = at(p, s, t);
  return v;
}

Mat pinned_covariance(const MatrixLagFunction& gamma, const PointConfig& config) {
  if (gamma.dim != config.dim())
    throw std::invalid_argument("pinned_covariance: config dimension mismatch");
  const int n = config.size();
  const int m = gamma.variates;
  std::vector<Vec> gamma_first;  // gamma_p1(x_i) columns, pin component 0
  gamma_first.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vec col(m);
    for (int p = 0; p < m; ++p) col[p] = gamma.entry(p, 0, config[i]);
    gamma_first.push_back(std::move(col));
  }
  Mat k(n * m, n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec lag = config[i] - config[j];
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
          k(i * m + p, j * m + q) = gamma_first[static_cast<std::size_t>(i)][p] +
                                    gamma_first[static_cast<std::size_t>(j)][q] -
                                    gamma.entry(p, q, lag);
    }
  return k;
}

Mat cholesky_with_jitter(const Mat& cov) {
  const Eigen::Index order = cov.rows();
  double jitter = 0.0;
  for (;;) {
    Mat attempt = cov;
    if (jitter > 0.0) attempt.diagonal().array() += jitter;
    Eigen::LLT<Mat> llt(attempt);
    if (llt.info() == Eigen::Success) return llt.matrixL();
    if (jitter == 0.0) {
      jitter = 1e-12;
    } else if (jitter < 1e-6) {
      jitter *= 10.0;
    } else {
      throw CovarianceAssemblyError(
          "covariance assembly failure: Cholesky did not succeed after maximal jitter "
          "(candidate pseudo-variogram is likely invalid)");
    }
  }
  (void)order;
}

Mat sample_gaussian_pseudo(const MatrixLagFunction& gamma, const PointConfig& config,
                           RandomStream& rng) {
  const Mat chol = cholesky_with_jitter(pinned_covariance(gamma, config));
  const int n = config.size();
  const int m = gamma.variates;
  Eigen::VectorXd normals(n * m);
  for (Eigen::Index k = 0; k < normals.size(); ++k) normals[k] = rng.normal();
  const Eigen::VectorXd stacked = chol * normals;
  Mat field(m, n);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < m; ++p) field(p, i) = stacked[i * m + p];
  return field;
}

SpectralSimulator::SpectralSimulator(SimulationPlan plan, const MatrixLagFunction& gamma,
                                     const CompletelyMonotoneSpec& phi)
    : plan_(std::move(plan)), gamma_(gamma), phi_(phi) {
  plan_.validate();
  if (gamma_.dim != plan_.temporal_dim())
    throw std::invalid_argument("SpectralSimulator: gamma must live on the temporal domain");
  temporal_chol_ =
      cholesky_with_jitter(pinned_covariance(gamma_, PointConfig(plan_.temporal_grid)));
}

FieldSample SpectralSimulator::replicate(std::uint64_t index) const {
  RandomStream rng = RandomStream::for_replicate(plan_.seed, index);
  return replicate_with_stream(rng);
}

FieldSample SpectralSimulator::replicate_with_stream(RandomStream& rng) const {
  const int d = plan_.spatial_dim();
  const int ns = static_cast<int>(plan_.spatial_grid.size());
  const int nt = static_cast<int>(plan_.temporal_grid.size());
  const int m = gamma_.variates;

  // Draw order is part of the reproducibility contract:
  // R, Omega, U, Phi, then the temporal-field normals.
  const double r_draw = phi_.sample_measure(rng);
  Vec omega(d);
  for (int k = 0; k < d; ++k) omega[k] = rng.normal();
  const double u_draw = rng.uniform();
  const double phase = kTwoPi * rng.uniform();
  Eigen::VectorXd normals(nt * m);
  for (Eigen::Index k = 0; k < normals.size(); ++k) normals[k] = rng.normal();
  const Eigen::VectorXd w_stacked = temporal_chol_ * normals;

  const double amplitude = std::sqrt(-2.0 * std::log(u_draw));
  const double spatial_freq = std::sqrt(2.0 * r_draw);
  const double temporal_scale = omega.norm() / std::sqrt(2.0);

  std::vector<double> spatial_phase(static_cast<std::size_t>(ns));
  for (int s = 0; s < ns; ++s)
    spatial_phase[static_cast<std::size_t>(s)] =
        spatial_freq * omega.dot(plan_.spatial_grid[static_cast<std::size_t>(s)]);

  FieldSample out = FieldSample::zeros(m, ns, nt);
  for (int p = 0; p < m; ++p)
    for (int s = 0; s < ns; ++s)
      for (int t = 0; t < nt; ++t)
        out.at(p, s, t) =
            amplitude * std::cos(spatial_phase[static_cast<std::size_t>(s)] +
                                 temporal_scale * w_stacked[t * m + p] + phase);
  return out;
}

FieldSample simulate_spectral_replicate(const SimulationPlan& plan,
                                        const MatrixLagFunction& gamma,
                                        const CompletelyMonotoneSpec& phi, RandomStream& rng) {
  SpectralSimulator sim(plan, gamma, phi);
  return sim.replicate_with_stream(rng);
}

SimulationResult run_simulation(const SimulationPlan& plan, const MatrixLagFunction& gamma,
                                const CompletelyMonotoneSpec& phi) {
  const SpectralSimulator sim(plan, gamma, phi);
  const int n_rep = plan.replicates;
  const int m = gamma.variates;
  const int ns = static_cast<int>(plan.spatial_grid.size());
  const int nt = static_cast<int>(plan.temporal_grid.size());

  SimulationResult result;
  result.replicates.resize(static_cast<std::size_t>(n_rep));

  const int workers = std::min(plan.workers, n_rep);
  if (workers <= 1) {
    for (int r = 0; r < n_rep; ++r)
      result.replicates[static_cast<std::size_t>(r)] =
          sim.replicate(static_cast<std::uint64_t>(r));
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (int r = w; r < n_rep; r += workers)
          result.replicates[static_cast<std::size_t>(r)] =
              sim.replicate(static_cast<std::uint64_t>(r));
      });
    }
    for (auto& th : pool) th.join();
  }

  // Moments are accumulated serially in replicate order so the result does
  // not depend on the worker count.
  const int order = ns * nt * m;
  Mat moments = Mat::Zero(order, order);
  for (const FieldSample& sample : result.replicates) {
    const Eigen::VectorXd z = sample.node_vector();
    moments.noalias() += z * z.transpose();
  }
  result.empirical_covariance = moments / static_cast<double>(n_rep);

  if (plan.normalize) {
    FieldSample total = FieldSample::zeros(m, ns, nt);
    for (const FieldSample& sample : result.replicates)
      for (std::size_t k = 0; k < total.values.size(); ++k) total.values[k] += sample.values[k];
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_rep));
    for (double& v : total.values) v *= scale;
    result.normalized_sum = std::move(total);
  }
  return result;
}

}  // namespace mvrf
