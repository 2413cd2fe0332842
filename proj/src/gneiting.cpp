#include "mvrf/gneiting.hpp"

#include <cmath>
#include <stdexcept>

#include "mvrf/definiteness.hpp"

namespace mvrf {

GneitingModel::GneitingModel(Original v) : variant_(std::move(v)) {
  const auto& s = std::get<Original>(variant_);
  if (s.spatial_dim < 1) throw std::invalid_argument("GneitingModel: spatial_dim must be >= 1");
  if (!(s.psi.at_zero() > 0.0))
    throw std::invalid_argument("GneitingModel: psi must be positive at 0");
  variates_ = 1;
  spatial_dim_ = s.spatial_dim;
  temporal_dim_ = 1;
}

GneitingModel::GneitingModel(MultivariateExtended v) : variant_(std::move(v)) {
  const auto& s = std::get<MultivariateExtended>(variant_);
  if (s.spatial_dim < 1) throw std::invalid_argument("GneitingModel: spatial_dim must be >= 1");
  if (!(s.exponent >= 0.5 * s.spatial_dim))
    throw std::invalid_argument("GneitingModel: exponent must be >= spatial_dim / 2");
  if (!s.gamma.is_catalog())
    throw std::invalid_argument("GneitingModel: gamma must be a catalog pseudo-variogram");
  variates_ = s.gamma.variates();
  spatial_dim_ = s.spatial_dim;
  temporal_dim_ = s.gamma.dim();
}

GneitingModel::GneitingModel(Stieltjes v) : variant_(std::move(v)) {
  const auto& s = std::get<Stieltjes>(variant_);
  if (!(s.exponent >= s.stieltjes.order()))
    throw std::invalid_argument("GneitingModel: exponent must be >= Stieltjes order");
  if (!(s.f.offset > 0.0))
    throw std::invalid_argument("GneitingModel: f must carry a positive offset");
  if (!(s.g.offset >= 0.0))
    throw std::invalid_argument("GneitingModel: g offset must be >= 0");
  if (!s.f.model.is_catalog() || !s.g.model.is_catalog())
    throw std::invalid_argument("GneitingModel: f and g must be catalog-based");
  const int m = s.stieltjes.variates();
  if (s.f.variates() != m || s.g.variates() != m)
    throw std::invalid_argument("GneitingModel: component counts of S, f, g must agree");
  variates_ = m;
  spatial_dim_ = s.g.dim();
  temporal_dim_ = s.f.dim();
}

double GneitingModel::eval(int i, int j, const Vec& h, const Vec& u) const {
  check_component_index(i, variates_, "GneitingModel::eval");
  check_component_index(j, variates_, "GneitingModel::eval");
  check_lag_dim(h, spatial_dim_, "GneitingModel::eval (spatial)");
  check_lag_dim(u, temporal_dim_, "GneitingModel::eval (temporal)");

  struct Visitor {
    int i, j;
    const Vec& h;
    const Vec& u;
    double operator()(const Original& s) const {
      const double psi = s.psi(u.squaredNorm());
      return std::pow(psi, -0.5 * s.spatial_dim) * s.phi(h.squaredNorm() / psi);
    }
    double operator()(const MultivariateExtended& s) const {
      const double denom = 1.0 + s.gamma.eval(i, j, u);
      return std::pow(denom, -s.exponent) * s.phi(h.squaredNorm() / denom);
    }
    double operator()(const Stieltjes& s) const {
      const double f = s.f.entry(i, j, u);
      if (!(f > 0.0)) throw std::domain_error("GneitingModel: f_ij(u) must be > 0");
      return std::pow(f, -s.exponent) * s.stieltjes.eval(i, j, s.g.entry(i, j, h) / f);
    }
  };
  return std::visit(Visitor{i, j, h, u}, variant_);
}

Mat GneitingModel::eval_matrix(const Vec& h, const Vec& u) const {
  Mat out(variates_, variates_);
  for (int i = 0; i < variates_; ++i)
    for (int j = 0; j < variates_; ++j) out(i, j) = eval(i, j, h, u);
  return out;
}

double eval_gneiting(const GneitingModel& model, int i, int j, const Vec& h, const Vec& u) {
  return model.eval(i, j, h, u);
}

Mat assemble_spacetime_cov(const GneitingModel& model, const std::vector<Vec>& spatial,
                           const std::vector<Vec>& temporal) {
  if (spatial.empty() || temporal.empty())
    throw std::invalid_argument("assemble_spacetime_cov: grids must be non-empty");
  const int ns = static_cast<int>(spatial.size());
  const int nt = static_cast<int>(temporal.size());
  const int m = model.variates();
  const int order = ns * nt * m;
  Mat out(order, order);
  for (int si = 0; si < ns; ++si)
    for (int ti = 0; ti < nt; ++ti)
      for (int sj = 0; sj < ns; ++sj)
        for (int tj = 0; tj < nt; ++tj) {
          const Vec h = spatial[static_cast<std::size_t>(si)] - spatial[static_cast<std::size_t>(sj)];
          const Vec u = temporal[static_cast<std::size_t>(ti)] - temporal[static_cast<std::size_t>(tj)];
          const Mat block = model.eval_matrix(h, u);
          const int row0 = (si * nt + ti) * m;
          const int col0 = (sj * nt + tj) * m;
          out.block(row0, col0, m, m) = block;
        }
  const double dev = (out - out.transpose()).cwiseAbs().maxCoeff();
  const double threshold = 1e-10 * std::max(1.0, out.cwiseAbs().maxCoeff());
  if (dev > threshold) throw SymmetryViolation(dev, threshold);
  return out;
}

}  // namespace mvrf
