#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace bipc4 {

/// Runs fn(i) for every i in [0, count), spreading indices across up to
/// `jobs` worker threads with dynamic assignment. fn is called exactly once
/// per index and must be safe to run concurrently for distinct indices; it
/// must not throw (record failures into per-index slots instead, so callers
/// can aggregate in index order and stay schedule-independent).
template <class Fn>
void parallel_for_indexed(std::uint64_t count, int jobs, Fn&& fn) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> threads;
  std::uint64_t spawn = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), count);
  threads.reserve(static_cast<std::size_t>(spawn));
  for (std::uint64_t t = 0; t < spawn; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
}

}  // namespace bipc4
