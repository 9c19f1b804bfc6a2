#pragma once

#include <cstdint>
#include <random>

namespace pcmlab {

/// Deterministic random source. std::mt19937_64 is bit-exact across
/// platforms; the standard *distributions* are not, so uniform doubles are
/// derived from raw engine bits here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform index in [0, bound). bound must be nonzero.
  std::size_t index(std::size_t bound) {
    return static_cast<std::size_t>(engine_() % bound);
  }

 private:
  std::mt19937_64 engine_;
};

/// Mixes (seed, stream) into an independent seed, so per-trial generators can
/// be derived without correlation and independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace pcmlab
