#pragma once
// Deterministic fork/join helper honoring GORPOLY_THREADS (0 or unset = all
// hardware threads). Results must be written by index; exceptions are
// propagated after join.

#include <cstddef>
#include <functional>

namespace gorpoly {

// Number of worker threads to use.
unsigned thread_count();

// Runs fn(i) for i in [0, n), possibly concurrently. fn must only write to
// per-index state. The first exception thrown (if any) is rethrown here.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace gorpoly
