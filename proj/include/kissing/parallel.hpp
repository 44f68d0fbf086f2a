#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace kissing {

/// 0 means "use available hardware parallelism".
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(worker, worker_count) on `workers` threads (inline when 1).
template <typename F>
void run_workers(unsigned workers, F&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1) {
    fn(0u, 1u);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&fn, w, workers] { fn(w, workers); });
  for (auto& t : pool) t.join();
}

}  // namespace kissing
