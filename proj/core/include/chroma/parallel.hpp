#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace chroma {

// Worker count: CHROMA_THREADS if set to a positive integer, else the hardware concurrency.
std::size_t thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads. Work items are
// claimed dynamically; the first exception thrown by any item is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace chroma
