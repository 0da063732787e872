#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wickwave {

// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = hardware
// concurrency). Indices are handed out dynamically; callers write results by
// index so the output does not depend on the schedule. The first exception is
// rethrown after all workers stop.
template <class Fn>
void parallelFor(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = unsigned(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex errorMutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(errorMutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace wickwave

#include <cstdint>

#include <json.hpp>

#include "wickwave/stochastic/noise.hpp"

namespace wickwave {

// Bookkeeping of the Philox substreams an experiment draws from: one entry per
// (seed, purpose) with a half-open member range.
struct SubstreamRange {
  std::uint64_t seed = 0;
  Purpose purpose = Purpose::Generic;
  std::uint32_t memberBegin = 0;
  std::uint32_t memberEnd = 0;
};

class SubstreamRegistry {
 public:
  void add(std::uint64_t seed, Purpose purpose, std::uint32_t begin, std::uint32_t end);
  const std::vector<SubstreamRange>& ranges() const { return ranges_; }
  // True if some substream id appears in both registries.
  bool overlaps(const SubstreamRegistry& other) const;
  nlohmann::json toJson() const;
  static SubstreamRegistry fromJson(const nlohmann::json& j);

 private:
  std::vector<SubstreamRange> ranges_;
};

}  // namespace wickwave
