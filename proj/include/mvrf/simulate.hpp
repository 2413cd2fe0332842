#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mvrf/core.hpp"
#include "mvrf/models.hpp"

namespace mvrf {

/// Raised when the pinned covariance cannot be factorized even after the
/// jitter ladder; signals an invalid pseudo-variogram candidate.
class CovarianceAssemblyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grid, replication and seeding layout of one simulation run. The master
/// seed plus replicate index fully determine every draw, so results are
/// identical for any worker count.
struct SimulationPlan {
  std::vector<Vec> spatial_grid;   // subset of R^d
  std::vector<Vec> temporal_grid;  // subset of R^l
  int replicates = 1;
  std::uint64_t seed = 0;
  bool normalize = false;
  int workers = 1;

  int spatial_dim() const;
  int temporal_dim() const;
  void validate() const;
};

/// One replicate of an m-variate field on the product grid; values stored
/// row-major as (component, space index, time index).
struct FieldSample {
  int variates = 0;
  int n_space = 0;
  int n_time = 0;
  std::vector<double> values;

  static FieldSample zeros(int variates, int n_space, int n_time);

  double at(int comp, int s, int t) const {
    return values[static_cast<std::size_t>((comp * n_space + s) * n_time + t)];
  }
  double& at(int comp, int s, int t) {
    return values[static_cast<std::size_t>((comp * n_space + s) * n_time + t)];
  }
  /// Stacked node vector ordered (site * n_time + time) * m + component,
  /// aligned with assemble_spacetime_cov.
  Eigen::VectorXd node_vector() const;
};

/// Pinned-field covariance of the construction Z~_i(x) = Z_i(x) - Z_1(0):
/// K[(i,p),(j,q)] = gamma_p1(x_i) + gamma_q1(x_j) - gamma_pq(x_i - x_j).
Mat pinned_covariance(const MatrixLagFunction& gamma, const PointConfig& config);

/// Lower Cholesky factor of a PSD matrix, adding diagonal jitter 1e-12,
/// escalating tenfold up to 1e-6, before giving up.
Mat cholesky_with_jitter(const Mat& cov);

/// Exact draw of a centred m-variate Gaussian field with pseudo-variogram
/// `gamma` on the sites of `config`. Returns an m x n matrix (component,
/// site). Throws CovarianceAssemblyError when the candidate is invalid.
Mat sample_gaussian_pseudo(const MatrixLagFunction& gamma, const PointConfig& config,
                           RandomStream& rng);

/// Spectral sampler: precomputes the temporal-field factor once, then maps
/// replicate indices to field samples deterministically.
class SpectralSimulator {
 public:
  SpectralSimulator(SimulationPlan plan, const MatrixLagFunction& gamma,
                    const CompletelyMonotoneSpec& phi);

  FieldSample replicate(std::uint64_t index) const;
  FieldSample replicate_with_stream(RandomStream& rng) const;
  const SimulationPlan& plan() const { return plan_; }
  int variates() const { return gamma_.variates; }

 private:
  SimulationPlan plan_;
  MatrixLagFunction gamma_;
  CompletelyMonotoneSpec phi_;
  Mat temporal_chol_;  // factor of the pinned covariance on the temporal grid
};

/// Single replicate of the cosine construction
/// Z_i(x,t) = sqrt(-2 log U) cos(sqrt(2R) <Omega,x> + (||Omega||/sqrt 2) W_i(t) + Phi),
/// with R from phi's measure, Omega standard Gaussian in R^d, and W an exact
/// Gaussian field with pseudo-variogram gamma on the temporal grid.
FieldSample simulate_spectral_replicate(const SimulationPlan& plan,
                                        const MatrixLagFunction& gamma,
                                        const CompletelyMonotoneSpec& phi, RandomStream& rng);

struct SimulationResult {
  std::vector<FieldSample> replicates;
  /// Sample second moments across replicates (fields are centred), indexed
  /// like assemble_spacetime_cov: (site * n_time + time) * m + component.
  Mat empirical_covariance;
  std::optional<FieldSample> normalized_sum;  // (1/sqrt N) * sum of replicates
};

SimulationResult run_simulation(const SimulationPlan& plan, const MatrixLagFunction& gamma,
                                const CompletelyMonotoneSpec& phi);

}  // namespace mvrf
