#pragma once

#include <cstdint>

namespace cgt {

/// Seeded pseudo-random stream (splitmix64). Self-contained so that runs are
/// bit-reproducible across platforms and standard library versions.
///
/// Streams are never shared between threads; every consumer owns its own.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from {0, ..., bound-1}; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  /// Derive an independent stream, advancing this one once.
  RandomStream fork() { return RandomStream(next() ^ 0xD1B54A32D192ED03ULL); }

private:
  std::uint64_t state_;
};

}  // namespace cgt
