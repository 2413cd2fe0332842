#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvrf/core.hpp"
#include "mvrf/models.hpp"

namespace mvrf {

/// Raised when a block matrix that should be symmetric is not; for lag
/// functions this certifies a violation of gamma_ij(h) = gamma_ji(-h).
class SymmetryViolation : public std::runtime_error {
 public:
  SymmetryViolation(double deviation, double threshold)
      : std::runtime_error("block matrix symmetry violated: |M - M^T| = " +
                           std::to_string(deviation) + " > " + std::to_string(threshold)),
        deviation_(deviation),
        threshold_(threshold) {}
  double deviation() const { return deviation_; }
  double threshold() const { return threshold_; }

 private:
  double deviation_;
  double threshold_;
};

enum class Verdict { Pass, Fail, Inconclusive };

enum class ConstraintType { GlobalSum, PerComponentSum, None };

std::string to_string(Verdict v);
std::string to_string(ConstraintType c);

/// Counterexample vector in R^{n*m} (stacked site blocks), normalized so its
/// first significant coordinate is one. Satisfies its stated linear
/// constraint and reproduces `quadratic_form` against the block matrix.
struct Witness {
  Eigen::VectorXd vector;
  ConstraintType constraint = ConstraintType::None;
  double quadratic_form = 0.0;
};

struct DefinitenessReport {
  Verdict verdict = Verdict::Fail;
  double extremal_eigenvalue = 0.0;  // largest for CND-type tests, smallest for PD
  double tolerance = 0.0;
  std::optional<Witness> witness;
  std::string detail;

  bool passed() const { return verdict == Verdict::Pass; }
};

/// Scale-aware default slack: 1e-8 * max(1, largest |entry|).
double scale_tolerance(const Mat& m);

/// nm x nm block matrix M[(i,p),(j,q)] = gamma_pq(x_i - x_j), site-major
/// stacking (row index i*m + p). Throws SymmetryViolation if
/// max|M - M^T| > 1e-10 * max(1, ||M||_max); symmetrization is never silent.
Mat assemble_gamma_block(const MatrixLagFunction& gamma, const PointConfig& config);

/// Same layout for a two-argument kernel, M[(i,p),(j,q)] = C_pq(x_i, x_j).
Mat assemble_kernel_block(const MatrixKernel& kernel, const PointConfig& config);

/// Orthogonal projector onto {a in R^nm : sum of all components = 0}.
Mat global_sum_projector(int order);

/// Orthogonal projector onto {a : each of the m per-component sums over the
/// n sites is 0} (the weaker, cross-variogram constraint set).
Mat component_sum_projector(int sites, int variates);

/// Conditional negative definiteness on one configuration: pass iff the
/// projected block matrix P M P has all eigenvalues <= tol, with P the
/// global-sum projector. Necessary-condition evidence only; a finite
/// configuration can falsify but never certify all of R^d.
DefinitenessReport check_cnd(const MatrixLagFunction& gamma, const PointConfig& config,
                             std::optional<double> tol = std::nullopt);

/// Almost negative definiteness (per-component sum constraint).
DefinitenessReport check_almost_nd(const MatrixLagFunction& gamma, const PointConfig& config,
                                   std::optional<double> tol = std::nullopt);

/// Positive definiteness of a matrix-valued (stationary) function: all
/// eigenvalues of the block matrix >= -tol.
DefinitenessReport check_pd(const MatrixLagFunction& fn, const PointConfig& config,
                            std::optional<double> tol = std::nullopt);

/// Kernel form of check_pd.
DefinitenessReport check_pd(const MatrixKernel& kernel, const PointConfig& config,
                            std::optional<double> tol = std::nullopt);

/// PSD test on an already-assembled symmetric matrix.
DefinitenessReport check_psd_matrix(const Mat& m, std::optional<double> tol = std::nullopt);

/// Pseudo-variogram falsifier: gamma_ii(0) = 0 within 1e-12 for all i, and
/// check_cnd passes on every supplied configuration. Never inconclusive:
/// the verdict is a necessary-condition certificate over these configs.
DefinitenessReport check_pseudo_variogram(const MatrixLagFunction& gamma,
                                          const std::vector<PointConfig>& configs,
                                          std::optional<double> tol = std::nullopt);

struct SqrtInequalityReport {
  bool pass = false;
  bool negative_entry = false;  // distinct failure kind: gamma_ij(h) < 0 at a probe
  double worst_margin = 0.0;    // max of (sqrt(g_ii) - sqrt(g_ij))^2 - g_ij(0)
  int worst_i = 0;
  int worst_j = 0;
  Vec worst_lag;
  std::string detail;
};

/// (sqrt(gamma_ii(h)) - sqrt(gamma_ij(h)))^2 <= gamma_ij(0) with slack 1e-12
/// at every supplied lag and component pair.
SqrtInequalityReport check_sqrt_inequality(const MatrixLagFunction& gamma,
                                           const std::vector<Vec>& lags);

struct IntersectionReport {
  enum class Status { InIntersection, NotPseudoVariogram, NotCrossVariogram, EqualityViolated };
  Status status = Status::NotPseudoVariogram;
  bool pseudo_membership = false;
  bool cross_membership = false;
  double max_equality_deviation = 0.0;  // max |gamma_ij(h) - gamma_11(h)| when both hold
  std::string failed_condition;

  bool in_intersection() const { return status == Status::InIntersection; }
};

/// Membership test against both classes; when a candidate lies in both, the
/// entries must collapse to a common univariate variogram, and the maximal
/// entrywise deviation from gamma_11 over the probe lags is reported.
/// Probe lags are all pairwise differences of the supplied configurations.
IntersectionReport check_intersection_triviality(const MatrixLagFunction& gamma,
                                                 const std::vector<PointConfig>& configs,
                                                 double tol);

/// (min, max) eigenvalues of the projected block matrix for one constraint.
std::pair<double, double> projected_eigen_range(const MatrixLagFunction& gamma,
                                                const PointConfig& config,
                                                ConstraintType constraint);

struct QfSearchResult {
  double max_quadratic_form = 0.0;
  Eigen::VectorXd argmax;  // unit vector inside the constraint subspace
};

/// Randomized oracle: samples vectors, projects onto the constraint
/// subspace, normalizes, and maximizes a^T M a. Bounded above by the
/// extremal projected eigenvalue, so agreement with check_cnd /
/// check_almost_nd is an invariant, not a coincidence.
QfSearchResult brute_force_qf_search(const MatrixLagFunction& gamma, const PointConfig& config,
                                     ConstraintType constraint, int trials, RandomStream& rng);

}  // namespace mvrf
