#pragma once

// Minimal fork-join helper. Worker count: explicit argument, else the
// TDK_WORKERS environment variable, else hardware concurrency. Results are
// independent of the worker count (static index partition).

#include <cstdlib>
#include <thread>
#include <vector>

namespace tdk {

inline int worker_count(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TDK_WORKERS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

template <class F>
void parallel_for(int n, F&& fn, int workers = 0) {
  int w = std::min(worker_count(workers), n > 0 ? n : 1);
  if (w <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (int t = 0; t < w; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += w) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace tdk
