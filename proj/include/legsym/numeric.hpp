#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace legsym {

/// Residual tolerance for inputs normalized so structure constants are O(1).
inline constexpr double kDefaultTol = 1e-9;

/// Relative singular-value threshold for rank decisions.
inline constexpr double kRankRelTol = 1e-8;

/// Relative gap below which two eigenvalue clusters are considered ambiguous.
inline constexpr double kClusterRelGap = 1e-6;

/// Default tolerance for group-level form identities (one Ad conjugation deep).
inline constexpr double kFormsTol = 1e-8;

/// Largest basis-change condition number accepted by change_basis.
inline constexpr double kMaxBasisCond = 1e8;

/// Deterministic RNG: all draws reduce to raw mt19937_64 output, so streams
/// are identical across platforms and standard-library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    // Rejection sampling keeps the distribution exact.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  /// Standard normal via Box-Muller.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so the logarithm is finite.
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

} // namespace legsym
