#pragma once

#include <cstddef>
#include <functional>

namespace hecke {

// Worker count: HECKE_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int thread_count();

// Runs fn(0), ..., fn(count - 1), splitting the indices over the workers.
// Serial when one worker suffices. The first exception is rethrown after all
// workers finish; fn must only touch data owned by its index.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace hecke
