#pragma once

// Minimal fan-out helper. Results are written by index, so output order never
// depends on scheduling.

#include <cstddef>
#include <functional>

namespace gaudin {

/// 0 means "use hardware concurrency".
void set_worker_count(int workers);
int worker_count();

/// Calls f(i) for i in [0, n) on up to worker_count() threads; rethrows the first exception.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace gaudin
