#include "pcmlab/rng.hpp"

namespace pcmlab {

namespace {

// splitmix64 step; the standard finalizer of Steele et al.
std::uint64_t mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return mix(mix(seed) ^ mix(stream + 0x7f4a7c15ULL));
}

}  // namespace pcmlab
