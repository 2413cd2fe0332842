#include "mvrf/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace mvrf {

MatrixLagFunction schoenberg_map(const MatrixLagFunction& gamma, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("schoenberg_map: t must be > 0");
  MatrixLagFunction out;
  out.variates = gamma.variates;
  out.dim = gamma.dim;
  out.entry = [gamma, t](int i, int j, const Vec& h) {
    return std::exp(-t * gamma.entry(i, j, h));
  };
  return out;
}

MatrixLagFunction laplace_map(const MatrixLagFunction& gamma, double t, double lambda) {
  if (!(t > 0.0) || !(lambda > 0.0))
    throw std::invalid_argument("laplace_map: t and lambda must be > 0");
  MatrixLagFunction out;
  out.variates = gamma.variates;
  out.dim = gamma.dim;
  out.entry = [gamma, t, lambda](int i, int j, const Vec& h) {
    const double g = gamma.entry(i, j, h);
    if (g < 0.0) throw std::domain_error("laplace_map: negative gamma entry encountered");
    return std::pow(1.0 + t * g, -lambda);
  };
  return out;
}

GeneralLaplaceMap::GeneralLaplaceMap(MatrixLagFunction gamma, double t,
                                     const CompletelyMonotoneSpec& mu, int draws,
                                     RandomStream& rng)
    : gamma_(std::move(gamma)), t_(t) {
  if (!(t > 0.0)) throw std::invalid_argument("GeneralLaplaceMap: t must be > 0");
  if (draws < 1) throw std::invalid_argument("GeneralLaplaceMap: needs at least one draw");
  draws_.reserve(static_cast<std::size_t>(draws));
  for (int k = 0; k < draws; ++k) draws_.push_back(mu.sample_measure(rng));
}

double GeneralLaplaceMap::entry(int i, int j, const Vec& h) const {
  const double g = gamma_.entry(i, j, h);
  if (g < 0.0) throw std::domain_error("GeneralLaplaceMap: negative gamma entry encountered");
  return at(t_ * g).value;
}

GeneralLaplaceMap::Estimate GeneralLaplaceMap::at(double x) const {
  if (x < 0.0) throw std::domain_error("GeneralLaplaceMap: negative argument");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double s : draws_) {
    const double v = std::exp(-s * x);
    sum += v;
    sum_sq += v * v;
  }
  const double k = static_cast<double>(draws_.size());
  const double mean = sum / k;
  const double var = std::max(0.0, sum_sq / k - mean * mean);
  return {mean, std::sqrt(var / k)};
}

MatrixLagFunction GeneralLaplaceMap::lag_function() const {
  MatrixLagFunction out;
  out.variates = gamma_.variates;
  out.dim = gamma_.dim;
  out.entry = [map = *this](int i, int j, const Vec& h) { return map.entry(i, j, h); };
  return out;
}

MatrixLagFunction general_laplace_map(const MatrixLagFunction& gamma, double t,
                                      const CompletelyMonotoneSpec& mu, int draws,
                                      RandomStream& rng) {
  return GeneralLaplaceMap(gamma, t, mu, draws, rng).lag_function();
}

MatrixLagFunction inverse_schoenberg_residual(const MatrixLagFunction& gamma, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("inverse_schoenberg_residual: t must be > 0");
  MatrixLagFunction out;
  out.variates = gamma.variates;
  out.dim = gamma.dim;
  out.entry = [gamma, t](int i, int j, const Vec& h) {
    return -std::expm1(-t * gamma.entry(i, j, h)) / t;
  };
  return out;
}

PseudoVariogramModel bernstein_compose(const BernsteinSpec& g, const PseudoVariogramModel& gamma) {
  if (g.at_zero() != 0.0)
    throw std::invalid_argument(
        "bernstein_compose: outer function must vanish at 0 for a pseudo-variogram result");
  PseudoVariogramModel::Composed composed{g, std::make_shared<PseudoVariogramModel>(gamma)};
  return PseudoVariogramModel(std::move(composed));
}

MatrixKernel build_ck_kernel(const MatrixLagFunction& gamma, int k, bool subtract_diagonal) {
  check_component_index(k, gamma.variates, "build_ck_kernel");
  MatrixKernel kernel;
  kernel.variates = gamma.variates;
  kernel.dim = gamma.dim;
  const double diag_at_zero =
      subtract_diagonal ? gamma.entry(k, k, Vec::Zero(gamma.dim)) : 0.0;
  kernel.entry = [gamma, k, diag_at_zero](int i, int j, const Vec& x, const Vec& y) {
    return gamma.entry(i, k, x) + gamma.entry(j, k, y) - gamma.entry(i, j, x - y) - diag_at_zero;
  };
  return kernel;
}

std::optional<SchoenbergViolation> find_schoenberg_violation(
    const MatrixLagFunction& gamma, const std::vector<double>& t_values,
    const std::vector<PointConfig>& configs) {
  std::optional<SchoenbergViolation> worst;
  for (double t : t_values) {
    const MatrixLagFunction mapped = schoenberg_map(gamma, t);
    for (std::size_t c = 0; c < configs.size(); ++c) {
      const DefinitenessReport report = check_pd(mapped, configs[c]);
      if (report.passed()) continue;
      if (!worst || report.extremal_eigenvalue < worst->min_eigenvalue)
        worst = SchoenbergViolation{t, c, report.extremal_eigenvalue};
    }
  }
  return worst;
}

}  // namespace mvrf
