#pragma once

#include <cstddef>
#include <functional>

namespace stylescope {

// Worker count: STYLESCOPE_THREADS when set (minimum 1), else the hardware
// concurrency.
std::size_t thread_budget();

// Runs fn(i) for i in [0, n) across the thread budget. Work items must be
// independent; callers preserve determinism by writing to index i only.
// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace stylescope
