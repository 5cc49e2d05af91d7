#ifndef CSIFACTOR_RNG_HPP_
#define CSIFACTOR_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>

#include "csifactor/common.hpp"

namespace csifactor {

/// splitmix64 step; used both as a seed scrambler and to derive
/// independent child seeds from (master, stream ids).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic child-seed derivation. Mixing is order-sensitive, so
/// derive_seed(s, a, b) != derive_seed(s, b, a).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a) {
  return splitmix64(master ^ splitmix64(a + 0x517cc1b727220a95ULL));
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  return derive_seed(derive_seed(master, a), b);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                                 std::uint64_t c) {
  return derive_seed(derive_seed(master, a, b), c);
}

/// Seeded generator with a self-contained Gaussian sampler.
///
/// std::normal_distribution is implementation-defined, which would make
/// outputs differ across standard libraries; Box-Muller on top of
/// mt19937_64 keeps every byte of generated data reproducible anywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Uniform double in [0, 1).
  double uniform() {
    return (engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (second deviate cached).
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace csifactor

#endif  // CSIFACTOR_RNG_HPP_
