#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace smdedge::detail {

// Runs fn(lo, hi) over contiguous chunks of [begin, end), one chunk per
// worker. The caller's thread takes the first chunk. fn must only write to
// locations owned by its indices; with that, results cannot depend on the
// schedule.
template <typename Fn>
void parallel_chunks(int begin, int end, int threads, Fn&& fn) {
  const int n = end - begin;
  if (n <= 0) return;
  threads = std::clamp(threads, 1, n);
  if (threads == 1) {
    fn(begin, end);
    return;
  }
  const int chunk = (n + threads - 1) / threads;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads) - 1);
  for (int t = 1; t < threads; ++t) {
    const int lo = begin + t * chunk;
    const int hi = std::min(end, lo + chunk);
    if (lo < hi) pool.emplace_back([lo, hi, &fn] { fn(lo, hi); });
  }
  fn(begin, std::min(end, begin + chunk));
  for (auto& worker : pool) worker.join();
}

}  // namespace smdedge::detail
