#pragma once

#include <cstddef>
#include <functional>

namespace thetagr {

/// Worker count: THETA_GRADED_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

/// Runs fn(0..count-1) on up to worker_count() threads. The first exception is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace thetagr
