#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ncqm {

inline int worker_count() {
  if (const char* env = std::getenv("NCQM_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(begin, end) over a fixed partition of [0, n) into one chunk per
/// worker. Chunk boundaries depend only on n and the worker count, so results
/// assembled per chunk and combined in chunk order are reproducible for a
/// fixed thread count.
template <class Fn>
void parallel_chunks(std::int64_t n, const Fn& fn) {
  const int workers = worker_count();
  if (workers <= 1 || n < 2) {
    fn(0, std::int64_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::int64_t step = (n + workers - 1) / workers;
  int chunk = 0;
  for (std::int64_t lo = 0; lo < n; lo += step, ++chunk) {
    const std::int64_t hi = std::min(n, lo + step);
    pool.emplace_back([&fn, chunk, lo, hi] { fn(chunk, lo, hi); });
  }
  for (auto& t : pool) t.join();
}

inline int chunk_count(std::int64_t n) {
  const int workers = worker_count();
  if (workers <= 1 || n < 2) return 1;
  const std::int64_t step = (n + workers - 1) / workers;
  return static_cast<int>((n + step - 1) / step);
}

}  // namespace ncqm
