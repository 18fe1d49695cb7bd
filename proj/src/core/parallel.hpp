#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "permutation.hpp"

namespace meshperm {

// Chunks handed to the pool per worker; more chunks than workers keeps the
// tail balanced when per-permutation cost is uneven.
inline constexpr int kChunksPerWorker = 4;

// Runs task(i) for i in [0, count) on up to `jobs` threads. Results are
// written to their own slot so the caller can fold them in index order.
template <class Result, class Task>
std::vector<Result> run_indexed(std::size_t count, int jobs, Task&& task) {
  std::vector<Result> results(count);
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = task(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

// Splits S_n by lexicographic rank and maps `task(range)` over the chunks.
// The returned vector is in rank order regardless of `jobs`.
template <class Result, class Task>
std::vector<Result> map_rank_chunks(int n, int jobs, Task&& task) {
  const int chunks = jobs <= 1 ? 1 : jobs * kChunksPerWorker;
  const std::vector<RankRange> ranges = split_ranks(n, chunks);
  return run_indexed<Result>(ranges.size(), jobs, [&](std::size_t i) { return task(ranges[i]); });
}

}  // namespace meshperm
