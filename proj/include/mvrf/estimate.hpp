#pragma once

#include <string>
#include <vector>

#include "mvrf/core.hpp"
#include "mvrf/simulate.hpp"

namespace mvrf {

/// Empirical pseudo-variogram from replicated field draws on a point
/// configuration (each replicate an m x n matrix of component-by-site
/// values): half the mean squared increment over replicates and all site
/// pairs at the given site-index lag. Fields are assumed centred.
double empirical_pseudo_variogram(const std::vector<Mat>& replicates, int i, int j, int lag);

/// Space-time version on FieldSamples with (space, time) index lags.
double empirical_pseudo_variogram(const std::vector<FieldSample>& samples, int i, int j,
                                  int space_lag, int time_lag);

/// Mean over replicates and admissible grid pairs of
/// Z_i(x+h, t+u) * Z_j(x, t) for centred fields.
double empirical_cross_covariance(const std::vector<FieldSample>& samples, int i, int j,
                                  int space_lag, int time_lag);

struct CompareRow {
  std::string label;
  double empirical = 0.0;
  double model = 0.0;
  double abs_diff = 0.0;
  bool pass = false;
};

struct CompareReport {
  std::vector<CompareRow> rows;
  std::size_t worst_index = 0;  // largest absolute difference
  double worst_diff = 0.0;
  bool all_pass = true;
};

/// Per-entry verdict |empirical - model| <= max(abs_tol, rel_tol * |model|),
/// plus a worst-offender summary. Inputs must be aligned.
CompareReport compare_report(const std::vector<std::string>& labels,
                             const std::vector<double>& empirical,
                             const std::vector<double>& model, double abs_tol, double rel_tol);

}  // namespace mvrf
