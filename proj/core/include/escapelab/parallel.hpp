#pragma once

#include <cstddef>
#include <functional>

namespace escapelab {

// Worker count: ESCAPELAB_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t worker_count();

// Runs body(i) for i in [0, n) on up to `workers` threads (0 = worker_count()).
// The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, std::size_t workers = 0);

}  // namespace escapelab
