#pragma once

#include <cstddef>
#include <functional>

namespace longtube {

// Worker count: LONGTUBE_THREADS if set and positive, else the hardware concurrency.
unsigned thread_count();

// Runs body(i) for i in [0, n) across thread_count() workers. Each index runs exactly once;
// the first exception thrown by any body is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace longtube
