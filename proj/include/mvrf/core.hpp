#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvrf/rng.hpp"

namespace mvrf {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline Vec vec1(double x) {
  Vec v(1);
  v[0] = x;
  return v;
}

/// A finite set of evaluation sites in R^dim with consistent dimension.
class PointConfig {
 public:
  PointConfig() = default;
  explicit PointConfig(std::vector<Vec> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("PointConfig: needs at least one point");
    const auto d = points_.front().size();
    for (const auto& p : points_) {
      if (p.size() != d) throw std::invalid_argument("PointConfig: inconsistent dimensions");
      if (!p.allFinite()) throw std::invalid_argument("PointConfig: non-finite point");
    }
  }

  static PointConfig line(std::initializer_list<double> xs) {
    std::vector<Vec> pts;
    for (double x : xs) pts.push_back(vec1(x));
    return PointConfig(std::move(pts));
  }

  static PointConfig random(int n, int dim, double box, RandomStream& rng) {
    std::vector<Vec> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      Vec p(dim);
      for (int k = 0; k < dim; ++k) p[k] = rng.uniform(-box, box);
      pts.push_back(std::move(p));
    }
    return PointConfig(std::move(pts));
  }

  int size() const { return static_cast<int>(points_.size()); }
  int dim() const { return static_cast<int>(points_.front().size()); }
  const Vec& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
  const std::vector<Vec>& points() const { return points_; }

 private:
  std::vector<Vec> points_;
};

/// A matrix-valued function of a lag, h -> (F_ij(h)) in R^{m x m}.
/// The common currency between models, transforms and definiteness checks.
struct MatrixLagFunction {
  int variates = 1;  // m
  int dim = 1;       // domain dimension
  std::function<double(int, int, const Vec&)> entry;  // 0-based component indices

  double operator()(int i, int j, const Vec& h) const { return entry(i, j, h); }

  Mat matrix(const Vec& h) const {
    Mat out(variates, variates);
    for (int i = 0; i < variates; ++i)
      for (int j = 0; j < variates; ++j) out(i, j) = entry(i, j, h);
    return out;
  }
};

/// A matrix-valued kernel of two arguments, (x,y) -> (C_ij(x,y)).
struct MatrixKernel {
  int variates = 1;
  int dim = 1;
  std::function<double(int, int, const Vec&, const Vec&)> entry;

  double operator()(int i, int j, const Vec& x, const Vec& y) const {
    return entry(i, j, x, y);
  }
};

/// Entrywise product; both operands must share shape.
inline MatrixLagFunction hadamard(const MatrixLagFunction& a, const MatrixLagFunction& b) {
  if (a.variates != b.variates || a.dim != b.dim)
    throw std::invalid_argument("hadamard: mismatched shapes");
  MatrixLagFunction out;
  out.variates = a.variates;
  out.dim = a.dim;
  out.entry = [a, b](int i, int j, const Vec& h) { return a.entry(i, j, h) * b.entry(i, j, h); };
  return out;
}

inline void check_component_index(int i, int m, const char* what) {
  if (i < 0 || i >= m) throw std::out_of_range(std::string(what) + ": component index out of range");
}

inline void check_lag_dim(const Vec& h, int dim, const char* what) {
  if (h.size() != dim) throw std::invalid_argument(std::string(what) + ": lag dimension mismatch");
  if (!h.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite lag");
}

}  // namespace mvrf
