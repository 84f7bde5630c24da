#pragma once

#include <cstddef>
#include <functional>

namespace qr {

// QREALITY_JOBS when set (>= 1), else hardware concurrency, else 1.
int default_jobs();

// Runs fn(0..count-1), each index exactly once, on up to `jobs` threads.
// Callers keep determinism by writing results into per-index slots. The first
// exception thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace qr
