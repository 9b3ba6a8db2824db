#pragma once

#include <cstdint>
#include <span>

#include "homfree/terms.hpp"

namespace homfree {

/// SplitMix64. `stream(seed, i)` gives independent per-sample generators, so
/// sampling loops produce the same words in any thread layout.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (index * 0xD1B54A32D192ED03ULL));
    g.next();
    return g;
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

/// Length uniform on [1, max_len], letters and bits uniform.
Word random_word(SplitMix64& rng, std::span<const GeneratorId> alphabet, std::size_t max_len);

}  // namespace homfree
