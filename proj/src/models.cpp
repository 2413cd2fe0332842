#include "mvrf/models.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace mvrf {

namespace {

bool is_exact_zero(const Vec& h) {
  for (Eigen::Index k = 0; k < h.size(); ++k)
    if (h[k] != 0.0) return false;
  return true;
}

}  // namespace

UnivariateVariogram UnivariateVariogram::power(double scale, double exponent) {
  if (!(scale >= 0.0)) throw std::invalid_argument("UnivariateVariogram: scale must be >= 0");
  if (!(exponent > 0.0) || exponent > 2.0)
    throw std::invalid_argument("UnivariateVariogram: exponent must lie in (0,2]");
  return UnivariateVariogram(Kind::Power, scale, exponent);
}

double UnivariateVariogram::operator()(const Vec& h) const {
  return scale_ * std::pow(h.norm(), exponent_);
}

StationaryCovariance StationaryCovariance::exponential(double sill, double range) {
  if (!(sill > 0.0)) throw std::invalid_argument("StationaryCovariance: sill must be > 0");
  if (!(range > 0.0)) throw std::invalid_argument("StationaryCovariance: range must be > 0");
  return StationaryCovariance(Kind::Exponential, sill, range);
}

double StationaryCovariance::operator()(const Vec& h) const {
  return sill_ * std::exp(-h.norm() / range_);
}

CompletelyMonotoneSpec CompletelyMonotoneSpec::exponential(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("CompletelyMonotoneSpec: rate must be > 0");
  return CompletelyMonotoneSpec(Kind::Exp, rate, 0.0, 0.0);
}

CompletelyMonotoneSpec CompletelyMonotoneSpec::inverse_power(double scale, double shape) {
  if (!(scale > 0.0)) throw std::invalid_argument("CompletelyMonotoneSpec: scale must be > 0");
  if (!(shape > 0.0)) throw std::invalid_argument("CompletelyMonotoneSpec: shape must be > 0");
  return CompletelyMonotoneSpec(Kind::InversePower, 0.0, scale, shape);
}

double CompletelyMonotoneSpec::operator()(double x) const {
  if (x < 0.0) throw std::domain_error("CompletelyMonotoneSpec: negative argument");
  switch (kind_) {
    case Kind::Exp:
      return std::exp(-rate_ * x);
    case Kind::InversePower:
      return std::pow(1.0 + scale_ * x, -shape_);
  }
  throw std::logic_error("CompletelyMonotoneSpec: unknown kind");
}

double CompletelyMonotoneSpec::sample_measure(RandomStream& rng) const {
  switch (kind_) {
    case Kind::Exp:
      return rate_;  // point mass
    case Kind::InversePower:
      return rng.gamma(shape_, scale_);
  }
  throw std::logic_error("CompletelyMonotoneSpec: unknown kind");
}

BernsteinSpec BernsteinSpec::power(double exponent) {
  if (!(exponent > 0.0) || exponent > 1.0)
    throw std::invalid_argument("BernsteinSpec: power exponent must lie in (0,1]");
  BernsteinSpec g(Kind::Power);
  g.exponent_ = exponent;
  return g;
}

BernsteinSpec BernsteinSpec::log() { return BernsteinSpec(Kind::Log); }

BernsteinSpec BernsteinSpec::bounded_exp(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("BernsteinSpec: rate must be > 0");
  BernsteinSpec g(Kind::BoundedExp);
  g.rate_ = rate;
  return g;
}

BernsteinSpec BernsteinSpec::affine(double intercept, double slope) {
  if (!(intercept >= 0.0) || !(slope >= 0.0))
    throw std::invalid_argument("BernsteinSpec: affine coefficients must be >= 0");
  BernsteinSpec g(Kind::Affine);
  g.intercept_ = intercept;
  g.slope_ = slope;
  return g;
}

double BernsteinSpec::operator()(double x) const {
  if (x < 0.0) throw std::domain_error("BernsteinSpec: negative argument");
  switch (kind_) {
    case Kind::Power:
      return std::pow(x, exponent_);
    case Kind::Log:
      return std::log1p(x);
    case Kind::BoundedExp:
      return -std::expm1(-rate_ * x);
    case Kind::Affine:
      return intercept_ + slope_ * x;
  }
  throw std::logic_error("BernsteinSpec: unknown kind");
}

double BernsteinSpec::at_zero() const {
  return kind_ == Kind::Affine ? intercept_ : 0.0;
}

StieltjesSpec::StieltjesSpec(double order, double constant, Mat coefficients,
                             double support_lo, double support_hi)
    : order_(order),
      constant_(constant),
      coefficients_(std::move(coefficients)),
      support_lo_(support_lo),
      support_hi_(support_hi) {
  if (!(order_ > 0.0)) throw std::invalid_argument("StieltjesSpec: order must be > 0");
  if (!(constant_ >= 0.0)) throw std::invalid_argument("StieltjesSpec: constant must be >= 0");
  if (coefficients_.rows() != coefficients_.cols() || coefficients_.rows() < 1)
    throw std::invalid_argument("StieltjesSpec: coefficient matrix must be square");
  if (!(support_lo_ > 0.0) || !(support_hi_ > support_lo_))
    throw std::invalid_argument("StieltjesSpec: support must satisfy 0 < lo < hi");
  const double scale = std::max(1.0, coefficients_.cwiseAbs().maxCoeff());
  if ((coefficients_ - coefficients_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("StieltjesSpec: coefficient matrix must be symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> eig(coefficients_);
  if (eig.eigenvalues().minCoeff() < -1e-12 * scale)
    throw std::invalid_argument("StieltjesSpec: coefficient matrix must be positive semi-definite");
}

double StieltjesSpec::eval(int i, int j, double x) const {
  check_component_index(i, variates(), "StieltjesSpec::eval");
  check_component_index(j, variates(), "StieltjesSpec::eval");
  if (x < 0.0) throw std::domain_error("StieltjesSpec: negative argument");
  const double b = coefficients_(i, j);
  if (order_ == 1.0) {
    return constant_ + b * std::log((x + support_hi_) / (x + support_lo_));
  }
  const double p = 1.0 - order_;
  return constant_ + b * (std::pow(x + support_lo_, p) - std::pow(x + support_hi_, p)) / (order_ - 1.0);
}

double StieltjesSpec::density(int i, int j, double v) const {
  check_component_index(i, variates(), "StieltjesSpec::density");
  check_component_index(j, variates(), "StieltjesSpec::density");
  return (v >= support_lo_ && v <= support_hi_) ? coefficients_(i, j) : 0.0;
}

TabulatedEntry TabulatedEntry::constant(double value) {
  TabulatedEntry e;
  e.kind = Kind::Constant;
  e.coefficient = value;
  return e;
}

TabulatedEntry TabulatedEntry::power_norm(double coefficient, double exponent) {
  if (!(exponent > 0.0)) throw std::invalid_argument("TabulatedEntry: exponent must be > 0");
  TabulatedEntry e;
  e.kind = Kind::PowerNorm;
  e.coefficient = coefficient;
  e.exponent = exponent;
  return e;
}

TabulatedEntry TabulatedEntry::linear_sum(double coefficient) {
  TabulatedEntry e;
  e.kind = Kind::LinearSum;
  e.coefficient = coefficient;
  return e;
}

double TabulatedEntry::eval(const Vec& h) const {
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::Constant:
      return coefficient;
    case Kind::PowerNorm:
      return coefficient * std::pow(h.norm(), exponent);
    case Kind::LinearSum:
      return coefficient * h.sum();
  }
  throw std::logic_error("TabulatedEntry: unknown kind");
}

PseudoVariogramModel::PseudoVariogramModel(Shift v) : variant_(std::move(v)) {
  const auto& s = std::get<Shift>(variant_);
  if (s.delays.empty()) throw std::invalid_argument("Shift: needs at least one delay");
  const auto d = s.delays.front().size();
  if (d < 1) throw std::invalid_argument("Shift: delay dimension must be >= 1");
  for (const auto& tau : s.delays)
    if (tau.size() != d) throw std::invalid_argument("Shift: inconsistent delay dimensions");
  variates_ = static_cast<int>(s.delays.size());
  dim_ = static_cast<int>(d);
}

PseudoVariogramModel::PseudoVariogramModel(NoisyCommon v) : variant_(std::move(v)) {
  const auto& s = std::get<NoisyCommon>(variant_);
  if (s.dim < 1) throw std::invalid_argument("NoisyCommon: dim must be >= 1");
  if (s.noise_variances.empty())
    throw std::invalid_argument("NoisyCommon: needs at least one noise variance");
  for (double sig2 : s.noise_variances)
    if (!(sig2 >= 0.0)) throw std::invalid_argument("NoisyCommon: noise variances must be >= 0");
  variates_ = static_cast<int>(s.noise_variances.size());
  dim_ = s.dim;
}

PseudoVariogramModel::PseudoVariogramModel(DelayedLmc v) : variant_(std::move(v)) {
  const auto& s = std::get<DelayedLmc>(variant_);
  if (s.dim < 1) throw std::invalid_argument("DelayedLmc: dim must be >= 1");
  if (s.factors.empty()) throw std::invalid_argument("DelayedLmc: needs at least one factor");
  const auto m = s.factors.front().loadings.size();
  if (m < 1) throw std::invalid_argument("DelayedLmc: needs at least one component");
  for (const auto& f : s.factors) {
    if (f.loadings.size() != m) throw std::invalid_argument("DelayedLmc: inconsistent loadings");
    if (static_cast<Eigen::Index>(f.delays.size()) != m)
      throw std::invalid_argument("DelayedLmc: one delay per component required");
    for (const auto& tau : f.delays)
      if (tau.size() != s.dim) throw std::invalid_argument("DelayedLmc: delay dimension mismatch");
  }
  variates_ = static_cast<int>(m);
  dim_ = s.dim;
}

PseudoVariogramModel::PseudoVariogramModel(Composed v) : variant_(std::move(v)) {
  const auto& s = std::get<Composed>(variant_);
  if (!s.base) throw std::invalid_argument("Composed: base model required");
  if (s.outer.at_zero() != 0.0)
    throw std::invalid_argument("Composed: outer function must vanish at 0");
  variates_ = s.base->variates();
  dim_ = s.base->dim();
}

PseudoVariogramModel::PseudoVariogramModel(Tabulated v) : variant_(std::move(v)) {
  const auto& s = std::get<Tabulated>(variant_);
  if (s.dim < 1) throw std::invalid_argument("Tabulated: dim must be >= 1");
  const auto m = s.entries.size();
  if (m == 0) throw std::invalid_argument("Tabulated: entries must be non-empty");
  for (const auto& row : s.entries)
    if (row.size() != m) throw std::invalid_argument("Tabulated: entries must be square");
  variates_ = static_cast<int>(m);
  dim_ = s.dim;
}

bool PseudoVariogramModel::is_catalog() const {
  return !std::holds_alternative<Tabulated>(variant_);
}

double PseudoVariogramModel::eval(int i, int j, const Vec& h) const {
  check_component_index(i, variates_, "PseudoVariogramModel::eval");
  check_component_index(j, variates_, "PseudoVariogramModel::eval");
  check_lag_dim(h, dim_, "PseudoVariogramModel::eval");

  struct Visitor {
    int i, j;
    const Vec& h;
    double operator()(const Shift& s) const {
      return s.gamma0(h + s.delays[static_cast<std::size_t>(i)] -
                      s.delays[static_cast<std::size_t>(j)]);
    }
    double operator()(const NoisyCommon& s) const {
      const bool nugget = (i != j) || !is_exact_zero(h);
      const double extra =
          nugget ? 0.5 * (s.noise_variances[static_cast<std::size_t>(i)] +
                          s.noise_variances[static_cast<std::size_t>(j)])
                 : 0.0;
      return s.gamma0(h) + extra;
    }
    double operator()(const DelayedLmc& s) const {
      double acc = 0.0;
      for (const auto& f : s.factors) {
        const double ai = f.loadings[i];
        const double aj = f.loadings[j];
        const Vec lag = h + f.delays[static_cast<std::size_t>(i)] -
                        f.delays[static_cast<std::size_t>(j)];
        acc += (ai * ai + aj * aj) * f.covariance.at_zero() - 2.0 * ai * aj * f.covariance(lag);
      }
      return 0.5 * acc;
    }
    double operator()(const Composed& s) const { return s.outer(s.base->eval(i, j, h)); }
    double operator()(const Tabulated& s) const {
      return s.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(h);
    }
  };
  return std::visit(Visitor{i, j, h}, variant_);
}

Mat PseudoVariogramModel::eval_matrix(const Vec& h) const {
  Mat out(variates_, variates_);
  for (int i = 0; i < variates_; ++i)
    for (int j = 0; j < variates_; ++j) out(i, j) = eval(i, j, h);
  return out;
}

MatrixLagFunction PseudoVariogramModel::lag_function() const {
  MatrixLagFunction fn;
  fn.variates = variates_;
  fn.dim = dim_;
  fn.entry = [model = *this](int i, int j, const Vec& h) { return model.eval(i, j, h); };
  return fn;
}

double eval_pseudo_variogram(const PseudoVariogramModel& model, int i, int j, const Vec& h) {
  return model.eval(i, j, h);
}

double sample_laplace_measure(const CompletelyMonotoneSpec& spec, RandomStream& rng) {
  return spec.sample_measure(rng);
}

}  // namespace mvrf
