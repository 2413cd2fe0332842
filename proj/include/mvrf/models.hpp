#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "mvrf/core.hpp"

namespace mvrf {

/// Univariate variogram gamma0(h) = scale * ||h||^exponent, exponent in (0,2].
/// scale = 0 gives the degenerate zero variogram (pure-nugget building block).
class UnivariateVariogram {
 public:
  enum class Kind { Power };

  static UnivariateVariogram power(double scale, double exponent);

  double operator()(const Vec& h) const;

  Kind kind() const { return kind_; }
  double scale() const { return scale_; }
  double exponent() const { return exponent_; }

 private:
  UnivariateVariogram(Kind kind, double scale, double exponent)
      : kind_(kind), scale_(scale), exponent_(exponent) {}
  Kind kind_;
  double scale_;
  double exponent_;
};

/// Stationary covariance C(h) = sill * exp(-||h||/range).
class StationaryCovariance {
 public:
  enum class Kind { Exponential };

  static StationaryCovariance exponential(double sill, double range);

  double operator()(const Vec& h) const;
  double at_zero() const { return sill_; }

  Kind kind() const { return kind_; }
  double sill() const { return sill_; }
  double range() const { return range_; }

 private:
  StationaryCovariance(Kind kind, double sill, double range)
      : kind_(kind), sill_(sill), range_(range) {}
  Kind kind_;
  double sill_;
  double range_;
};

/// Bounded completely monotone function with a sampleable representing
/// measure: phi(x) = integral of exp(-s x) over the measure, phi(0) = 1.
class CompletelyMonotoneSpec {
 public:
  enum class Kind { Exp, InversePower };

  /// phi(x) = exp(-rate * x); measure = point mass at `rate`.
  static CompletelyMonotoneSpec exponential(double rate);
  /// phi(x) = (1 + scale*x)^(-shape); measure = Gamma(shape, scale).
  static CompletelyMonotoneSpec inverse_power(double scale, double shape);

  double operator()(double x) const;
  /// One draw from the representing measure.
  double sample_measure(RandomStream& rng) const;

  Kind kind() const { return kind_; }
  double rate() const { return rate_; }
  double scale() const { return scale_; }
  double shape() const { return shape_; }

 private:
  CompletelyMonotoneSpec(Kind kind, double rate, double scale, double shape)
      : kind_(kind), rate_(rate), scale_(scale), shape_(shape) {}
  Kind kind_;
  double rate_ = 0.0;   // Exp
  double scale_ = 0.0;  // InversePower
  double shape_ = 0.0;  // InversePower
};

/// Continuous extension of a Bernstein function on [0, inf).
class BernsteinSpec {
 public:
  enum class Kind { Power, Log, BoundedExp, Affine };

  static BernsteinSpec power(double exponent);            // x^a, a in (0,1]
  static BernsteinSpec log();                             // log(1+x)
  static BernsteinSpec bounded_exp(double rate);          // 1 - exp(-rate x)
  static BernsteinSpec affine(double intercept, double slope);  // a + b x

  double operator()(double x) const;
  double at_zero() const;

  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }
  double rate() const { return rate_; }
  double intercept() const { return intercept_; }
  double slope() const { return slope_; }

 private:
  explicit BernsteinSpec(Kind kind) : kind_(kind) {}
  Kind kind_;
  double exponent_ = 0.0;
  double rate_ = 0.0;
  double intercept_ = 0.0;
  double slope_ = 0.0;
};

/// Matrix of bounded generalized Stieltjes functions of a common order,
/// S_ij(x) = constant + integral (x+v)^(-order) phi_ij(v) dv, with box
/// densities phi_ij(v) = B_ij on [support_lo, support_hi], B symmetric PSD.
/// The bounded support away from 0 gives closed forms for every entry.
class StieltjesSpec {
 public:
  StieltjesSpec(double order, double constant, Mat coefficients, double support_lo,
                double support_hi);

  int variates() const { return static_cast<int>(coefficients_.rows()); }
  double order() const { return order_; }
  double constant() const { return constant_; }
  const Mat& coefficients() const { return coefficients_; }
  double support_lo() const { return support_lo_; }
  double support_hi() const { return support_hi_; }

  double eval(int i, int j, double x) const;
  double density(int i, int j, double v) const;

 private:
  double order_;
  double constant_;
  Mat coefficients_;
  double support_lo_;
  double support_hi_;
};

/// One entry of a Tabulated model: a scalar function of the lag.
struct TabulatedEntry {
  enum class Kind { Zero, Constant, PowerNorm, LinearSum };
  Kind kind = Kind::Zero;
  double coefficient = 0.0;  // Constant value, PowerNorm/LinearSum coefficient
  double exponent = 1.0;     // PowerNorm only

  static TabulatedEntry zero() { return {}; }
  static TabulatedEntry constant(double value);
  static TabulatedEntry power_norm(double coefficient, double exponent);
  static TabulatedEntry linear_sum(double coefficient);

  double eval(const Vec& h) const;
};

/// Matrix-valued function gamma: R^dim -> R^{m x m} from a catalog of
/// constructions that are valid pseudo-variograms by design, plus a
/// Tabulated escape hatch for adversarial candidates. Catalog variants
/// satisfy gamma_ii(0) = 0, gamma_ij(h) = gamma_ji(-h) and gamma_ij >= 0;
/// Tabulated promises nothing and exists to be tested.
class PseudoVariogramModel {
 public:
  struct Shift {
    UnivariateVariogram gamma0;
    std::vector<Vec> delays;  // one per component
  };
  struct NoisyCommon {
    int dim = 1;
    UnivariateVariogram gamma0;
    std::vector<double> noise_variances;
  };
  struct LmcFactor {
    StationaryCovariance covariance;
    Vec loadings;             // one per component
    std::vector<Vec> delays;  // one per component
  };
  struct DelayedLmc {
    int dim = 1;
    std::vector<LmcFactor> factors;
  };
  struct Composed {
    BernsteinSpec outer;  // requires outer(0) = 0
    std::shared_ptr<const PseudoVariogramModel> base;
  };
  struct Tabulated {
    int dim = 1;
    std::vector<std::vector<TabulatedEntry>> entries;  // m x m
  };
  using Variant = std::variant<Shift, NoisyCommon, DelayedLmc, Composed, Tabulated>;

  explicit PseudoVariogramModel(Shift v);
  explicit PseudoVariogramModel(NoisyCommon v);
  explicit PseudoVariogramModel(DelayedLmc v);
  explicit PseudoVariogramModel(Composed v);
  explicit PseudoVariogramModel(Tabulated v);

  int variates() const { return variates_; }
  int dim() const { return dim_; }
  bool is_catalog() const;
  const Variant& variant() const { return variant_; }

  /// gamma_ij(h), 0-based components. Pure; throws on bad index/dimension.
  double eval(int i, int j, const Vec& h) const;
  Mat eval_matrix(const Vec& h) const;

  MatrixLagFunction lag_function() const;

 private:
  Variant variant_;
  int variates_ = 1;
  int dim_ = 1;
};

double eval_pseudo_variogram(const PseudoVariogramModel& model, int i, int j, const Vec& h);

double sample_laplace_measure(const CompletelyMonotoneSpec& spec, RandomStream& rng);

}  // namespace mvrf
