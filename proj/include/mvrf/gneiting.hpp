#pragma once

#include <variant>
#include <vector>

#include "mvrf/core.hpp"
#include "mvrf/models.hpp"

namespace mvrf {

/// A strictly-positive (or non-negative) conditionally negative definite
/// matrix function built as offset * ones + catalog pseudo-variogram. The
/// constant block leaves the constrained quadratic form untouched, so the
/// sum stays conditionally negative definite while gaining positivity.
struct ShiftedCndFunction {
  double offset = 0.0;
  PseudoVariogramModel model;

  double entry(int i, int j, const Vec& h) const { return offset + model.eval(i, j, h); }
  int variates() const { return model.variates(); }
  int dim() const { return model.dim(); }
};

/// Space-time covariance models of Gneiting type on R^d x R^l.
class GneitingModel {
 public:
  /// G(h,u) = psi(|u|^2)^(-d/2) * phi(||h||^2 / psi(|u|^2)), univariate,
  /// scalar time (l = 1); psi must be positive at 0.
  struct Original {
    CompletelyMonotoneSpec phi;
    BernsteinSpec psi;
    int spatial_dim = 1;
  };
  /// G_ij(h,u) = (1 + gamma_ij(u))^(-r) * phi(||h||^2 / (1 + gamma_ij(u)))
  /// with gamma a pseudo-variogram on R^l and r >= d/2.
  struct MultivariateExtended {
    CompletelyMonotoneSpec phi;
    PseudoVariogramModel gamma;
    double exponent = 0.0;  // r
    int spatial_dim = 1;
  };
  /// G_ij(h,u) = f_ij(u)^(-r) * S_ij(g_ij(h) / f_ij(u)) with S a matrix of
  /// generalized Stieltjes functions of order lambda, g >= 0 and f > 0
  /// conditionally negative definite, and r >= lambda.
  struct Stieltjes {
    StieltjesSpec stieltjes;
    ShiftedCndFunction g;  // on R^d
    ShiftedCndFunction f;  // on R^l, offset > 0
    double exponent = 0.0;  // r
  };
  using Variant = std::variant<Original, MultivariateExtended, Stieltjes>;

  explicit GneitingModel(Original v);
  explicit GneitingModel(MultivariateExtended v);
  explicit GneitingModel(Stieltjes v);

  int variates() const { return variates_; }
  int spatial_dim() const { return spatial_dim_; }
  int temporal_dim() const { return temporal_dim_; }
  const Variant& variant() const { return variant_; }

  double eval(int i, int j, const Vec& h, const Vec& u) const;
  Mat eval_matrix(const Vec& h, const Vec& u) const;

 private:
  Variant variant_;
  int variates_ = 1;
  int spatial_dim_ = 1;
  int temporal_dim_ = 1;
};

double eval_gneiting(const GneitingModel& model, int i, int j, const Vec& h, const Vec& u);

/// Block covariance matrix over the product grid, ordered space-major:
/// row index = (s * n_t + t) * m + p. Symmetry is asserted, never forced.
Mat assemble_spacetime_cov(const GneitingModel& model, const std::vector<Vec>& spatial,
                           const std::vector<Vec>& temporal);

}  // namespace mvrf
