#include "fpword/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace fpw {

namespace {
std::atomic<int> g_workers{0};
}

int default_workers() {
  int w = g_workers.load();
  if (w > 0) return w;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_default_workers(int w) { g_workers.store(w); }

void parallel_chunks(std::size_t n, int workers,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
  if (workers <= 0) workers = default_workers();
  workers = static_cast<int>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
  if (workers <= 1 || n == 0) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    std::size_t begin = chunk * static_cast<std::size_t>(t);
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back(fn, begin, end);
  }
  for (auto& th : threads) th.join();
}

}  // namespace fpw
