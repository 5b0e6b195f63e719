#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace elastodisk::detail {

inline thread_local int parallel_depth = 0;

// Chunked parallel loop with deterministic work assignment; nested calls run
// serially on the calling thread.
inline void parallel_for(int n, const std::function<void(int)>& body, int serial_below = 64) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (parallel_depth > 0 || hw == 1 || n < serial_below) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  int chunk = (n + int(hw) - 1) / int(hw);
  for (unsigned t = 0; t < hw; ++t) {
    int lo = int(t) * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      ++parallel_depth;
      for (int i = lo; i < hi; ++i) body(i);
      --parallel_depth;
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace elastodisk::detail
