#pragma once

#include <cstdint>
#include <random>

namespace toporing {

/// Seeded generator whose output sequence is fixed across standard libraries: only the raw
/// mt19937_64 stream is used, never the implementation-defined distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = 0;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }
  bool coin() { return (engine_() >> 63U) != 0; }
  /// Derives an independent seed for a sub-task.
  std::uint64_t fork() { return engine_() ^ 0x9e3779b97f4a7c15ULL; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace toporing
