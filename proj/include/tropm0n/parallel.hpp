#pragma once

#include <cstddef>
#include <functional>

namespace tropm0n {

// Worker count for data-parallel loops, from TROPM0N_THREADS when set (a
// positive integer), otherwise the hardware concurrency.
int worker_count();

// Runs fn(0..count-1) across workers.  Callers get determinism by writing
// result i into slot i.  The first exception, if any, is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace tropm0n
