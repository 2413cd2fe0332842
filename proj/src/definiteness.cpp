#include "mvrf/definiteness.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

namespace mvrf {

namespace {

constexpr double kSymmetrySlack = 1e-10;

void require_dims(const MatrixLagFunction& fn, const PointConfig& config, const char* what) {
  if (fn.dim != config.dim())
    throw std::invalid_argument(std::string(what) + ": config dimension does not match function");
}

void assert_symmetric(const Mat& m) {
  const double dev = (m - m.transpose()).cwiseAbs().maxCoeff();
  const double threshold = kSymmetrySlack * std::max(1.0, m.cwiseAbs().maxCoeff());
  if (dev > threshold) throw SymmetryViolation(dev, threshold);
}

/// Deterministic witness normalization: sign and scale are fixed by the
/// first coordinate whose magnitude is at least 1e-3 of the largest, which
/// is made exactly +1; the vector is then re-projected so the linear
/// constraint holds to machine precision.
Eigen::VectorXd normalize_witness(Eigen::VectorXd w, const Mat& projector) {
  const double top = w.cwiseAbs().maxCoeff();
  if (top <= 0.0) return w;
  Eigen::Index pivot = 0;
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    if (std::abs(w[k]) >= 1e-3 * top) {
      pivot = k;
      break;
    }
  }
  w /= w[pivot];
  return projector * w;
}

DefinitenessReport projected_negativity_check(const Mat& m, const Mat& projector,
                                              ConstraintType constraint,
                                              std::optional<double> tol_opt) {
  const double tol = tol_opt ? *tol_opt : scale_tolerance(m);
  Mat projected = projector * m * projector;
  projected = 0.5 * (projected + projected.transpose().eval());
  Eigen::SelfAdjointEigenSolver<Mat> eig(projected);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("projected eigen decomposition failed");

  Eigen::Index top_index;
  const double top = eig.eigenvalues().maxCoeff(&top_index);

  DefinitenessReport report;
  report.extremal_eigenvalue = top;
  report.tolerance = tol;
  if (top <= tol) {
    report.verdict = Verdict::Pass;
    return report;
  }
  report.verdict = Verdict::Fail;
  Witness witness;
  witness.constraint = constraint;
  witness.vector = normalize_witness(projector * eig.eigenvectors().col(top_index), projector);
  witness.quadratic_form = witness.vector.dot(m * witness.vector);
  report.witness = std::move(witness);
  report.detail = "projected eigenvalue above tolerance";
  return report;
}

std::vector<Vec> probe_lags_from_configs(const std::vector<PointConfig>& configs) {
  std::vector<Vec> lags;
  for (const auto& config : configs)
    for (int i = 0; i < config.size(); ++i)
      for (int j = 0; j < config.size(); ++j) lags.push_back(config[i] - config[j]);
  return lags;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(ConstraintType c) {
  switch (c) {
    case ConstraintType::GlobalSum: return "global-sum";
    case ConstraintType::PerComponentSum: return "per-component-sum";
    case ConstraintType::None: return "none";
  }
  return "?";
}

double scale_tolerance(const Mat& m) {
  return 1e-8 * std::max(1.0, m.cwiseAbs().maxCoeff());
}

Mat assemble_gamma_block(const MatrixLagFunction& gamma, const PointConfig& config) {
  require_dims(gamma, config, "assemble_gamma_block");
  const int n = config.size();
  const int m = gamma.variates;
  Mat out(n * m, n * m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vec lag = config[i] - config[j];
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) out(i * m + p, j * m + q) = gamma.entry(p, q, lag);
    }
  }
  assert_symmetric(out);
  return out;
}

Mat assemble_kernel_block(const MatrixKernel& kernel, const PointConfig& config) {
  if (kernel.dim != config.dim())
    throw std::invalid_argument("assemble_kernel_block: config dimension does not match kernel");
  const int n = config.size();
  const int m = kernel.variates;
  Mat out(n * m, n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
          out(i * m + p, j * m + q) = kernel.entry(p, q, config[i], config[j]);
  assert_symmetric(out);
  return out;
}

Mat global_sum_projector(int order) {
  if (order < 1) throw std::invalid_argument("global_sum_projector: order must be >= 1");
  Mat p = Mat::Identity(order, order);
  p.array() -= 1.0 / static_cast<double>(order);
  return p;
}

Mat component_sum_projector(int sites, int variates) {
  if (sites < 1 || variates < 1)
    throw std::invalid_argument("component_sum_projector: sizes must be >= 1");
  const int order = sites * variates;
  Mat p = Mat::Identity(order, order);
  const double w = 1.0 / static_cast<double>(sites);
  for (int i = 0; i < sites; ++i)
    for (int j = 0; j < sites; ++j)
      for (int c = 0; c < variates; ++c) p(i * variates + c, j * variates + c) -= w;
  return p;
}

DefinitenessReport check_cnd(const MatrixLagFunction& gamma, const PointConfig& config,
                             std::optional<double> tol) {
  const Mat m = assemble_gamma_block(gamma, config);
  return projected_negativity_check(m, global_sum_projector(static_cast<int>(m.rows())),
                                    ConstraintType::GlobalSum, tol);
}

DefinitenessReport check_almost_nd(const MatrixLagFunction& gamma, const PointConfig& config,
                                   std::optional<double> tol) {
  const Mat m = assemble_gamma_block(gamma, config);
  return projected_negativity_check(m, component_sum_projector(config.size(), gamma.variates),
                                    ConstraintType::PerComponentSum, tol);
}

DefinitenessReport check_psd_matrix(const Mat& m, std::optional<double> tol_opt) {
  assert_symmetric(m);
  const double tol = tol_opt ? *tol_opt : scale_tolerance(m);
  Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (m + m.transpose().eval()));
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("eigen decomposition failed");
  Eigen::Index bottom_index;
  const double bottom = eig.eigenvalues().minCoeff(&bottom_index);

  DefinitenessReport report;
  report.extremal_eigenvalue = bottom;
  report.tolerance = tol;
  if (bottom >= -tol) {
    report.verdict = Verdict::Pass;
    return report;
  }
  report.verdict = Verdict::Fail;
  Witness witness;
  witness.constraint = ConstraintType::None;
  witness.vector = normalize_witness(eig.eigenvectors().col(bottom_index),
                                     Mat::Identity(m.rows(), m.cols()));
  witness.quadratic_form = witness.vector.dot(m * witness.vector);
  report.witness = std::move(witness);
  report.detail = "negative eigenvalue below tolerance";
  return report;
}

DefinitenessReport check_pd(const MatrixLagFunction& fn, const PointConfig& config,
                            std::optional<double> tol) {
  return check_psd_matrix(assemble_gamma_block(fn, config), tol);
}

DefinitenessReport check_pd(const MatrixKernel& kernel, const PointConfig& config,
                            std::optional<double> tol) {
  return check_psd_matrix(assemble_kernel_block(kernel, config), tol);
}

DefinitenessReport check_pseudo_variogram(const MatrixLagFunction& gamma,
                                          const std::vector<PointConfig>& configs,
                                          std::optional<double> tol) {
  const Vec origin = Vec::Zero(gamma.dim);
  for (int i = 0; i < gamma.variates; ++i) {
    const double g0 = gamma.entry(i, i, origin);
    if (std::abs(g0) > 1e-12) {
      DefinitenessReport report;
      report.verdict = Verdict::Fail;
      report.extremal_eigenvalue = g0;
      report.tolerance = 1e-12;
      report.detail = "diagonal-at-zero gate: gamma_" + std::to_string(i + 1) +
                      std::to_string(i + 1) + "(0) = " + std::to_string(g0);
      return report;
    }
  }
  DefinitenessReport worst;
  worst.verdict = Verdict::Pass;
  worst.extremal_eigenvalue = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < configs.size(); ++c) {
    DefinitenessReport report = check_cnd(gamma, configs[c], tol);
    if (!report.passed()) {
      report.detail += " (config " + std::to_string(c) + ")";
      return report;
    }
    if (report.extremal_eigenvalue > worst.extremal_eigenvalue) worst = report;
  }
  if (!std::isfinite(worst.extremal_eigenvalue)) worst.extremal_eigenvalue = 0.0;
  return worst;
}

SqrtInequalityReport check_sqrt_inequality(const MatrixLagFunction& gamma,
                                           const std::vector<Vec>& lags) {
  SqrtInequalityReport report;
  report.worst_margin = -std::numeric_limits<double>::infinity();
  const Vec origin = Vec::Zero(gamma.dim);
  for (const Vec& h : lags) {
    for (int i = 0; i < gamma.variates; ++i) {
      for (int j = 0; j < gamma.variates; ++j) {
        const double gii = gamma.entry(i, i, h);
        const double gij = gamma.entry(i, j, h);
        const double gij0 = gamma.entry(i, j, origin);
        if (gii < 0.0 || gij < 0.0 || gij0 < 0.0) {
          report.negative_entry = true;
          report.pass = false;
          report.worst_i = i;
          report.worst_j = j;
          report.worst_lag = h;
          report.detail = "negative entry at probe lag";
          return report;
        }
        const double lhs = std::pow(std::sqrt(gii) - std::sqrt(gij), 2);
        const double margin = lhs - gij0;
        if (margin > report.worst_margin) {
          report.worst_margin = margin;
          report.worst_i = i;
          report.worst_j = j;
          report.worst_lag = h;
        }
      }
    }
  }
  report.pass = report.worst_margin <= 1e-12;
  if (!report.pass) report.detail = "square-root inequality violated";
  return report;
}

IntersectionReport check_intersection_triviality(const MatrixLagFunction& gamma,
                                                 const std::vector<PointConfig>& configs,
                                                 double tol) {
  IntersectionReport report;
  const std::vector<Vec> probes = probe_lags_from_configs(configs);
  const Vec origin = Vec::Zero(gamma.dim);

  const DefinitenessReport pseudo = check_pseudo_variogram(gamma, configs);
  report.pseudo_membership = pseudo.passed();

  // Cross-variogram membership: vanishing at the origin, full symmetry in
  // both lag and component order, and almost negative definiteness.
  std::string cross_failure;
  for (int i = 0; i < gamma.variates && cross_failure.empty(); ++i)
    for (int j = 0; j < gamma.variates && cross_failure.empty(); ++j) {
      const double g0 = gamma.entry(i, j, origin);
      if (std::abs(g0) > 1e-12)
        cross_failure = "gamma_" + std::to_string(i + 1) + std::to_string(j + 1) +
                        "(0) = " + std::to_string(g0) + " != 0";
    }
  for (const Vec& h : probes) {
    if (!cross_failure.empty()) break;
    for (int i = 0; i < gamma.variates && cross_failure.empty(); ++i)
      for (int j = 0; j < gamma.variates && cross_failure.empty(); ++j) {
        const double g = gamma.entry(i, j, h);
        const double scale = std::max(1.0, std::abs(g));
        if (std::abs(g - gamma.entry(i, j, -h)) > 1e-12 * scale ||
            std::abs(g - gamma.entry(j, i, h)) > 1e-12 * scale)
          cross_failure = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") not symmetric";
      }
  }
  if (cross_failure.empty()) {
    for (std::size_t c = 0; c < configs.size(); ++c) {
      const DefinitenessReport almost = check_almost_nd(gamma, configs[c]);
      if (!almost.passed()) {
        cross_failure = "almost negative definiteness fails on config " + std::to_string(c);
        break;
      }
    }
  }
  report.cross_membership = cross_failure.empty();

  if (!report.pseudo_membership) {
    report.status = IntersectionReport::Status::NotPseudoVariogram;
    report.failed_condition = "pseudo-variogram membership: " + pseudo.detail;
    return report;
  }
  if (!report.cross_membership) {
    report.status = IntersectionReport::Status::NotCrossVariogram;
    report.failed_condition = "cross-variogram membership: " + cross_failure;
    return report;
  }

  double deviation = 0.0;
  for (const Vec& h : probes) {
    const double base = gamma.entry(0, 0, h);
    for (int i = 0; i < gamma.variates; ++i)
      for (int j = 0; j < gamma.variates; ++j)
        deviation = std::max(deviation, std::abs(gamma.entry(i, j, h) - base));
  }
  report.max_equality_deviation = deviation;
  if (deviation <= tol) {
    report.status = IntersectionReport::Status::InIntersection;
  } else {
    report.status = IntersectionReport::Status::EqualityViolated;
    report.failed_condition = "entries do not collapse to a common variogram";
  }
  return report;
}

std::pair<double, double> projected_eigen_range(const MatrixLagFunction& gamma,
                                                const PointConfig& config,
                                                ConstraintType constraint) {
  const Mat m = assemble_gamma_block(gamma, config);
  Mat projector;
  switch (constraint) {
    case ConstraintType::GlobalSum:
      projector = global_sum_projector(static_cast<int>(m.rows()));
      break;
    case ConstraintType::PerComponentSum:
      projector = component_sum_projector(config.size(), gamma.variates);
      break;
    case ConstraintType::None:
      projector = Mat::Identity(m.rows(), m.cols());
      break;
  }
  Mat projected = projector * m * projector;
  projected = 0.5 * (projected + projected.transpose().eval());
  Eigen::SelfAdjointEigenSolver<Mat> eig(projected);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("projected eigen decomposition failed");
  return {eig.eigenvalues().minCoeff(), eig.eigenvalues().maxCoeff()};
}

QfSearchResult brute_force_qf_search(const MatrixLagFunction& gamma, const PointConfig& config,
                                     ConstraintType constraint, int trials, RandomStream& rng) {
  if (trials < 1) throw std::invalid_argument("brute_force_qf_search: trials must be >= 1");
  const Mat m = assemble_gamma_block(gamma, config);
  const int order = static_cast<int>(m.rows());
  Mat projector;
  switch (constraint) {
    case ConstraintType::GlobalSum:
      projector = global_sum_projector(order);
      break;
    case ConstraintType::PerComponentSum:
      projector = component_sum_projector(config.size(), gamma.variates);
      break;
    case ConstraintType::None:
      projector = Mat::Identity(order, order);
      break;
  }

  QfSearchResult result;
  result.max_quadratic_form = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd draw(order);
  for (int t = 0; t < trials; ++t) {
    for (int k = 0; k < order; ++k) draw[k] = rng.normal();
    Eigen::VectorXd a = projector * draw;
    const double norm = a.norm();
    if (norm < 1e-12) continue;
    a /= norm;
    const double qf = a.dot(m * a);
    if (qf > result.max_quadratic_form) {
      result.max_quadratic_form = qf;
      result.argmax = a;
    }
  }
  return result;
}

}  // namespace mvrf
