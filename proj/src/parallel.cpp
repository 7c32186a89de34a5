#include "parallel.hpp"

namespace wl {

namespace {
std::atomic<int> g_thread_cap{0};
}

int thread_cap() { return g_thread_cap.load(std::memory_order_relaxed); }

void set_thread_cap(int threads) {
  g_thread_cap.store(threads < 0 ? 0 : threads, std::memory_order_relaxed);
}

}  // namespace wl
