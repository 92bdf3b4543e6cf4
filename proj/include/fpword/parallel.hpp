#pragma once

#include <cstddef>
#include <functional>

namespace fpw {

/// Worker count used when a caller passes workers = 0.
int default_workers();
void set_default_workers(int w);

/// Runs fn(begin, end) over contiguous chunks of [0, n) on `workers` threads.
/// With workers <= 1 the call degenerates to fn(0, n) on the calling thread.
void parallel_chunks(std::size_t n, int workers,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace fpw
