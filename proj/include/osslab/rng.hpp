#pragma once

#include <cmath>
#include <cstdint>

namespace osslab {

/// Counter-based pseudo-random generator: the SplitMix64 output function
/// applied to an affine counter walk. Draw i from a generator keyed by
/// (seed, stream) is a pure function of (seed, stream, i), so sampled
/// corpora are bit-stable across runs, platforms and thread counts.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Key derivation for independent sub-streams.
  static std::uint64_t derive(std::uint64_t key, std::uint64_t salt) {
    return mix(key ^ mix(salt * kGamma + 0xD1B54A32D192ED03ull));
  }

  CounterRng() = default;
  explicit CounterRng(std::uint64_t key) : key_(key) {}
  CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(derive(seed, stream)) {}

  std::uint64_t next_u64() { return mix(key_ + ++counter_ * kGamma); }

  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Standard normal via Box-Muller; generates values in pairs.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - next_unit();  // (0, 1], keeps log finite
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Stream tags keying independent draw families; values are arbitrary but fixed.
namespace rng_stream {
inline constexpr std::uint64_t kSampleVectors = 0x53414d50ull;
inline constexpr std::uint64_t kRandomTensor = 0x54454e53ull;
inline constexpr std::uint64_t kEigenspaceProbe = 0x50524f42ull;
inline constexpr std::uint64_t kCorpus = 0x434f5250ull;
}  // namespace rng_stream

}  // namespace osslab
