// levelzero: deterministic parallel map. Work items are indexed; results go
// into a pre-sized vector slot per index, so the output is identical for any
// worker count. The worker count comes from LEVELZERO_THREADS (default 1).
#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace levelzero {

inline int configured_threads() {
  const char* env = std::getenv("LEVELZERO_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

// Apply fn to every index in [0, count) and collect results by index.
template <typename T>
std::vector<T> parallel_map(int count, const std::function<T(int)>& fn,
                            int threads = configured_threads()) {
  std::vector<T> out(static_cast<size_t>(count));
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) out[static_cast<size_t>(i)] = fn(i);
    return out;
  }
  std::atomic<int> next(0);
  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      out[static_cast<size_t>(i)] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  int nw = std::min(threads, count);
  pool.reserve(static_cast<size_t>(nw));
  for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace levelzero
