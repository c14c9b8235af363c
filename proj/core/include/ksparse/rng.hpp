#pragma once

#include <cstdint>

namespace ksparse {

// Counter-free splittable generator (splitmix64). Every consumer derives an
// independent substream from (seed, stream index), so sampling order never
// affects results and per-component draws can run concurrently.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform integer in [lo, hi] inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Derives the seed of substream `stream` of `seed`. Two mixing rounds keep
// adjacent streams uncorrelated.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed);
  const std::uint64_t a = g.next();
  SplitMix64 h(a ^ (stream * 0x9e3779b97f4a7c15ULL + 0xd1b54a32d192ed03ULL));
  return h.next();
}

// Identifier written into sampling metadata so outputs are reproducible
// across versions.
inline const char* rng_algorithm_id() { return "splitmix64"; }

}  // namespace ksparse
