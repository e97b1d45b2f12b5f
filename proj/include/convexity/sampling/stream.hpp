#pragma once

#include "convexity/geometry/primitives.hpp"

#include <cstdint>
#include <random>

namespace convexity {

/// Names one reproducible random stream. Streams with distinct ids are seeded
/// through a SplitMix64 hash of (seed, stream_id, batch), so they do not share
/// state and can be consumed from different threads.
struct SeededStream {
  std::uint64_t seed = 42;
  std::uint64_t stream_id = 0;

  /// A child stream whose id is derived from this one and `child`.
  SeededStream split(std::uint64_t child) const;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Random source for one batch of one stream. The engine is std::mt19937_64,
/// whose integer sequence is fixed by the standard; uniform doubles are built
/// from its bits directly rather than through std::uniform_real_distribution.
class Generator {
 public:
  Generator(const SeededStream& stream, std::uint64_t batch);

  std::uint64_t next() { return engine_(); }
  /// The underlying engine, for library distributions with a fixed algorithm.
  std::mt19937_64& engine() { return engine_; }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  Point uniform_in(const Box& box) {
    const double x = uniform(box.min.x(), box.max.x());
    return {x, uniform(box.min.y(), box.max.y())};
  }
  /// Uniform index in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace convexity
