#pragma once

#include <cstddef>
#include <functional>

namespace svet {

/// Worker count from SVET_THREADS, or the hardware concurrency when unset.
/// Throws std::invalid_argument if SVET_THREADS is not a positive integer.
unsigned thread_count();

/// Calls body(i) for every i in [0, n) on up to `threads` workers. Indices
/// are claimed dynamically; body must only write to per-index state.
/// The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace svet
