#pragma once

#include <cstddef>
#include <functional>

namespace grpkit {

// Runs fn(0..n-1) on up to `threads` workers (0: hardware concurrency).
// Indices are claimed dynamically; the first exception thrown is rethrown
// after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, unsigned threads = 0);

}  // namespace grpkit
