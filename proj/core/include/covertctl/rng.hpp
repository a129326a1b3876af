#pragma once

#include <cstdint>

namespace covertctl {

/// Counter-based deterministic random stream. The algorithm is fixed so that
/// traces are reproducible across implementations, not just across runs:
///
///   state_0 = seed
///   state_{i+1} = state_i + 0x9E3779B97F4A7C15            (splitmix64 walk)
///   z = state_{i+1}
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   out_i = z ^ (z >> 31)
///
/// uniform():  u = (out >> 11) * 2^-53, in [0, 1)
/// gaussian(): Box-Muller on consecutive uniforms u1, u2 with u1 shifted to
///             (0, 1]: g1 = sqrt(-2 ln u1) cos(2 pi u2),
///             g2 = sqrt(-2 ln u1) sin(2 pi u2); g2 is cached and returned by
///             the next call.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal deviate (Box-Muller, pair-cached).
  double gaussian();

 private:
  std::uint64_t state_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace covertctl
