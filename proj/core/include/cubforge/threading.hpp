#pragma once

#include <cstddef>
#include <functional>

namespace cubforge {

// Worker count resolution order: explicit argument > CUBFORGE_THREADS env
// var > hardware concurrency.
int effective_thread_count(int requested = 0);

// Runs body(i) for i in [0, n) across workers. Chunked by index; any
// exception is rethrown on the caller thread. Results must be written to
// per-index slots by the body so the output is order-independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  int threads = 0);

}  // namespace cubforge
