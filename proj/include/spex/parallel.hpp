#pragma once

#include <cstddef>
#include <functional>

namespace spex {

/// Worker cap: SPEX_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int worker_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers. Results must be
/// written to per-index slots so output order never depends on scheduling.
/// The first exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, int threads = worker_count());

}  // namespace spex
