#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace evslam {

// EVSLAM_THREADS env override, else hardware concurrency (at least 1).
int default_thread_count();

// Runs f(chunk) for chunk in [0, n_chunks) across up to n_threads workers.
// Chunks are claimed through an atomic counter; each chunk index is processed
// exactly once. Callers that reduce floating-point results must store
// per-chunk partials and merge them in chunk order, which makes the reduction
// independent of scheduling and thread count.
template <class F>
void parallel_chunks(int n_chunks, int n_threads, F&& f) {
  if (n_chunks <= 0) return;
  if (n_threads <= 0) n_threads = default_thread_count();
  n_threads = std::min(n_threads, n_chunks);
  if (n_threads <= 1) {
    for (int c = 0; c < n_chunks; ++c) f(c);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) f(c);
  };
  std::vector<std::thread> pool;
  pool.reserve(n_threads - 1);
  for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace evslam
