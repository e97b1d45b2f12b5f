#pragma once

#include "convexity/error.hpp"
#include "convexity/sampling/stream.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace convexity {

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t n_hits = 0;

  static McEstimate from_counts(std::uint64_t hits, std::uint64_t n) {
    const double v = static_cast<double>(hits) / static_cast<double>(n);
    return {v, std::sqrt(v * (1.0 - v) / static_cast<double>(n)), n, hits};
  }
};

struct McOptions {
  std::uint64_t batch_size = 4096;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Estimates P(event) from n independent trials. `event(gen)` draws whatever
/// tuple it needs from `gen` and returns whether the event holds.
///
/// Trials are cut into fixed batches; batch b always runs on
/// Generator(stream, b) and per-batch hit counts are integers, so the result is
/// bit-identical whatever the thread count or completion order.
template <typename Event>
McEstimate mc_probability(Event&& event, const SeededStream& stream, std::uint64_t n, McOptions options = {}) {
  if (n < 100) throw Error(ErrorCode::InvariantViolation, "Monte Carlo estimation needs at least 100 trials");
  const std::uint64_t batch = std::max<std::uint64_t>(1, options.batch_size);
  const std::uint64_t batches = (n + batch - 1) / batch;
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, batches));

  std::vector<std::uint64_t> hits(batches, 0);
  auto run_batch = [&](std::uint64_t b) {
    Generator gen(stream, b);
    const std::uint64_t count = std::min(batch, n - b * batch);
    std::uint64_t h = 0;
    for (std::uint64_t i = 0; i < count; ++i) h += event(gen) ? 1 : 0;
    hits[b] = h;
  };

  if (threads <= 1) {
    for (std::uint64_t b = 0; b < batches; ++b) run_batch(b);
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::uint64_t b = t; b < batches; b += threads) run_batch(b);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  return McEstimate::from_counts(total, n);
}

}  // namespace convexity
