#include "convexity/sampling/stream.hpp"

namespace convexity {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SeededStream SeededStream::split(std::uint64_t child) const {
  return {seed, splitmix64(stream_id ^ splitmix64(child + 0x632be59bd9b4e019ULL))};
}

Generator::Generator(const SeededStream& stream, std::uint64_t batch) {
  const std::uint64_t h = splitmix64(splitmix64(splitmix64(stream.seed) ^ stream.stream_id) ^ batch);
  std::seed_seq seq{static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(stream.stream_id)};
  engine_.seed(seq);
}

std::uint64_t Generator::below(std::uint64_t n) {
  // Rejection to avoid modulo bias.
  const std::uint64_t limit = n * (UINT64_MAX / n);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

}  // namespace convexity
