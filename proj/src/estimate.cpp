#include "mvrf/estimate.hpp"

#include <cmath>
#include <stdexcept>

namespace mvrf {

namespace {

void require_replicates(std::size_t n) {
  if (n < 2) throw std::invalid_argument("estimator needs at least two replicates");
}

}  // namespace

double empirical_pseudo_variogram(const std::vector<Mat>& replicates, int i, int j, int lag) {
  require_replicates(replicates.size());
  const Mat& first = replicates.front();
  const int m = static_cast<int>(first.rows());
  const int n = static_cast<int>(first.cols());
  check_component_index(i, m, "empirical_pseudo_variogram");
  check_component_index(j, m, "empirical_pseudo_variogram");

  const int lo = std::max(0, -lag);
  const int hi = std::min(n, n - lag);  // pairs (s, s+lag) with both in range
  if (lo >= hi) throw std::invalid_argument("empirical_pseudo_variogram: empty pair set");

  double acc = 0.0;
  for (const Mat& z : replicates) {
    if (z.rows() != m || z.cols() != n)
      throw std::invalid_argument("empirical_pseudo_variogram: ragged replicates");
    for (int s = lo; s < hi; ++s) {
      const double d = z(i, s + lag) - z(j, s);
      acc += d * d;
    }
  }
  const double pairs = static_cast<double>(hi - lo);
  return acc / (2.0 * static_cast<double>(replicates.size()) * pairs);
}

double empirical_pseudo_variogram(const std::vector<FieldSample>& samples, int i, int j,
                                  int space_lag, int time_lag) {
  require_replicates(samples.size());
  const FieldSample& first = samples.front();
  check_component_index(i, first.variates, "empirical_pseudo_variogram");
  check_component_index(j, first.variates, "empirical_pseudo_variogram");

  const int s_lo = std::max(0, -space_lag);
  const int s_hi = std::min(first.n_space, first.n_space - space_lag);
  const int t_lo = std::max(0, -time_lag);
  const int t_hi = std::min(first.n_time, first.n_time - time_lag);
  if (s_lo >= s_hi || t_lo >= t_hi)
    throw std::invalid_argument("empirical_pseudo_variogram: empty pair set");

  double acc = 0.0;
  for (const FieldSample& z : samples) {
    for (int s = s_lo; s < s_hi; ++s)
      for (int t = t_lo; t < t_hi; ++t) {
        const double d = z.at(i, s + space_lag, t + time_lag) - z.at(j, s, t);
        acc += d * d;
      }
  }
  const double pairs = static_cast<double>(s_hi - s_lo) * static_cast<double>(t_hi - t_lo);
  return acc / (2.0 * static_cast<double>(samples.size()) * pairs);
}

double empirical_cross_covariance(const std::vector<FieldSample>& samples, int i, int j,
                                  int space_lag, int time_lag) {
  require_replicates(samples.size());
  const FieldSample& first = samples.front();
  check_component_index(i, first.variates, "empirical_cross_covariance");
  check_component_index(j, first.variates, "empirical_cross_covariance");

  const int s_lo = std::max(0, -space_lag);
  const int s_hi = std::min(first.n_space, first.n_space - space_lag);
  const int t_lo = std::max(0, -time_lag);
  const int t_hi = std::min(first.n_time, first.n_time - time_lag);
  if (s_lo >= s_hi || t_lo >= t_hi)
    throw std::invalid_argument("empirical_cross_covariance: empty pair set");

  double acc = 0.0;
  for (const FieldSample& z : samples) {
    for (int s = s_lo; s < s_hi; ++s)
      for (int t = t_lo; t < t_hi; ++t)
        acc += z.at(i, s + space_lag, t + time_lag) * z.at(j, s, t);
  }
  const double pairs = static_cast<double>(s_hi - s_lo) * static_cast<double>(t_hi - t_lo);
  return acc / (static_cast<double>(samples.size()) * pairs);
}

CompareReport compare_report(const std::vector<std::string>& labels,
                             const std::vector<double>& empirical,
                             const std::vector<double>& model, double abs_tol, double rel_tol) {
  if (labels.size() != empirical.size() || empirical.size() != model.size())
    throw std::invalid_argument("compare_report: misaligned inputs");
  CompareReport report;
  report.rows.reserve(labels.size());
  for (std::size_t k = 0; k < labels.size(); ++k) {
    CompareRow row;
    row.label = labels[k];
    row.empirical = empirical[k];
    row.model = model[k];
    row.abs_diff = std::abs(empirical[k] - model[k]);
    row.pass = row.abs_diff <= std::max(abs_tol, rel_tol * std::abs(model[k]));
    if (!row.pass) report.all_pass = false;
    if (row.abs_diff > report.worst_diff) {
      report.worst_diff = row.abs_diff;
      report.worst_index = k;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace mvrf
