// Chunked parallel reduction with a deterministic combination order: chunk
// partials are produced by whichever thread gets there first but are always
// combined in chunk order, so results are bit-stable across thread counts.
#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace wl {

/// Global parallelism cap; 0 means hardware concurrency.  Set once by the
/// CLI before any computation starts.
int thread_cap();
void set_thread_cap(int threads);

inline std::size_t effective_threads(std::size_t work_items) {
  int cap = thread_cap();
  std::size_t hw = cap > 0 ? static_cast<std::size_t>(cap)
                           : std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return work_items < hw ? (work_items == 0 ? 1 : work_items) : hw;
}

/// Runs fn(index) for index in [0, count), pulling indices from a shared
/// queue.  fn must only write to its own slot of any output.
template <class Fn>
void parallel_for_index(std::size_t count, Fn&& fn) {
  std::size_t nthreads = effective_threads(count);
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

/// Deterministic chunked reduction over [0, n): `chunk_fn(begin, end)` returns
/// the partial for one chunk; partials are combined left to right.
template <class Partial, class ChunkFn, class CombineFn>
Partial chunked_reduce(std::size_t n, std::size_t chunk_size, Partial init,
                       ChunkFn&& chunk_fn, CombineFn&& combine) {
  if (chunk_size == 0) chunk_size = 1;
  std::size_t nchunks = (n + chunk_size - 1) / chunk_size;
  std::vector<Partial> partials(nchunks, init);
  parallel_for_index(nchunks, [&](std::size_t c) {
    std::size_t b = c * chunk_size;
    std::size_t e = b + chunk_size < n ? b + chunk_size : n;
    partials[c] = chunk_fn(b, e);
  });
  Partial acc = init;
  for (std::size_t c = 0; c < nchunks; ++c) acc = combine(acc, partials[c]);
  return acc;
}

}  // namespace wl
