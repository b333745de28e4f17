#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace gtminer {

/// xoshiro256** (Blackman & Vigna, 2018), seeded through splitmix64.
///
/// All randomized procedures in the library draw from this generator so
/// results are bit-identical across platforms and standard libraries; no
/// std:: distribution is used anywhere on a result path.
///
///   splitmix64:  z += 0x9e3779b97f4a7c15;
///                z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9;
///                z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
///                return z ^ (z >> 31);
///   xoshiro256**: result = rotl(s1 * 5, 7) * 9;
///                 t = s1 << 17; s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3;
///                 s2 ^= t; s3 = rotl(s3, 45);
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;

  /// Uniform double in [0, 1) built from the top 53 bits.
  double uniform() noexcept;

  /// Uniform integer in [0, bound). `bound` must be positive. Uses
  /// rejection sampling, so there is no modulo bias.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  /// Standard normal deviate (Box-Muller, one value per call).
  double normal() noexcept;

 private:
  std::uint64_t s_[4];
};

/// Fisher-Yates shuffle driven by `rng`.
template <typename T>
void shuffle(std::span<T> items, Rng& rng) noexcept {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace gtminer
