#ifndef EULERSPEC_THREAD_POOL_HPP
#define EULERSPEC_THREAD_POOL_HPP

#include <cstddef>
#include <functional>

namespace eulerspec {

/// Worker count used by parallel_for when threads == 0: hardware concurrency,
/// capped by the EULER_SPEC_THREADS environment variable when set.
unsigned default_thread_count();

/// Runs fn(0..count-1) on a pool of workers pulling indices from a shared
/// counter. Results must be written to per-index slots by the caller; the
/// first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  unsigned threads = 0);

}  // namespace eulerspec

#endif
