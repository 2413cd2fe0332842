#pragma once

#include <optional>
#include <vector>

#include "mvrf/core.hpp"
#include "mvrf/definiteness.hpp"
#include "mvrf/models.hpp"

namespace mvrf {

/// Entrywise map h -> exp(-t * gamma_ij(h)). For a valid pseudo-variogram
/// the result is a matrix-valued correlation function for every t > 0.
MatrixLagFunction schoenberg_map(const MatrixLagFunction& gamma, double t);

/// Entrywise map h -> (1 + t * gamma_ij(h))^(-lambda). Requires
/// gamma_ij >= 0 everywhere; a negative entry is rejected at evaluation.
MatrixLagFunction laplace_map(const MatrixLagFunction& gamma, double t, double lambda);

/// Monte Carlo Laplace-transform map: averages exp(-s_k t gamma_ij(h)) over
/// draws s_k from the representing measure of `mu`. The draws are fixed at
/// construction, so evaluation is pure and the per-probe standard error is
/// computable from the same draws.
class GeneralLaplaceMap {
 public:
  GeneralLaplaceMap(MatrixLagFunction gamma, double t, const CompletelyMonotoneSpec& mu,
                    int draws, RandomStream& rng);

  double entry(int i, int j, const Vec& h) const;
  MatrixLagFunction lag_function() const;

  /// Estimate and standard error of the transform at scalar argument x >= 0.
  struct Estimate {
    double value;
    double standard_error;
  };
  Estimate at(double x) const;

  const std::vector<double>& draws() const { return draws_; }

 private:
  MatrixLagFunction gamma_;
  double t_;
  std::vector<double> draws_;
};

MatrixLagFunction general_laplace_map(const MatrixLagFunction& gamma, double t,
                                      const CompletelyMonotoneSpec& mu, int draws,
                                      RandomStream& rng);

/// h -> (1 - exp(-t * gamma_ij(h))) / t. Conditionally negative definite
/// whenever exp(-t gamma) is positive definite, and within
/// t * gamma_ij(h)^2 / 2 of gamma itself.
MatrixLagFunction inverse_schoenberg_residual(const MatrixLagFunction& gamma, double t);

/// Entrywise Bernstein composition g(gamma_ij). Requires g(0) = 0 so the
/// result is again a catalog pseudo-variogram.
PseudoVariogramModel bernstein_compose(const BernsteinSpec& g, const PseudoVariogramModel& gamma);

/// Positive definite kernel built from a conditionally negative definite
/// lag function: C_k(x,y)_ij = gamma_ik(x) + gamma_jk(y) - gamma_ij(x-y)
/// - [subtract_diagonal] * gamma_kk(0). `k` is 0-based.
MatrixKernel build_ck_kernel(const MatrixLagFunction& gamma, int k, bool subtract_diagonal);

struct SchoenbergViolation {
  double t;
  std::size_t config_index;
  double min_eigenvalue;
};

/// Bounded falsification search: scans t over `t_values` and the supplied
/// configs for a configuration where exp(-t gamma) is not PSD. Returns the
/// strongest violation found, if any. Empty result on a conditionally
/// negative definite input is expected; a found violation certifies the
/// input is not conditionally negative definite.
std::optional<SchoenbergViolation> find_schoenberg_violation(
    const MatrixLagFunction& gamma, const std::vector<double>& t_values,
    const std::vector<PointConfig>& configs);

}  // namespace mvrf
