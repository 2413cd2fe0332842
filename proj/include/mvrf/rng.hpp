#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace mvrf {

/// Bit-mixes a 64-bit value (splitmix64 finalizer). Used to derive
/// well-separated stream seeds from (master seed, index) pairs.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// A self-contained random stream. All distribution transforms are written
/// out explicitly so that a (seed, call sequence) pair yields the same draws
/// on every platform and standard library. Streams are cheap to construct
/// and must not be shared between concurrent callers.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  /// Stream for one replicate, decorrelated from its neighbours.
  static RandomStream for_replicate(std::uint64_t master_seed,
                                    std::uint64_t replicate_index) {
    return RandomStream(mix64(master_seed ^ mix64(replicate_index)));
  }

  std::uint64_t bits() { return gen_(); }

  /// Uniform on the open interval (0,1); never returns 0 or 1, so logs are safe.
  double uniform() {
    return (static_cast<double>(gen_() >> 12) + 0.5) * 0x1.0p-52;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; consumes exactly two uniforms per call.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Gamma(shape, scale) via Marsaglia-Tsang squeeze, with the usual
  /// power-of-uniform boost for shape < 1.
  double gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0)) {
      throw std::invalid_argument("RandomStream::gamma: shape and scale must be positive");
    }
    if (shape < 1.0) {
      const double u = uniform();
      return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return scale * d * v;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mvrf
