#pragma once

#include <cstddef>
#include <functional>

namespace lfim {

// Requested worker count, with 0 meaning the hardware concurrency.
unsigned effective_threads(unsigned requested);

// Runs body(0..count-1) across up to `threads` workers. Each index must touch
// only its own state/output slot, so results never depend on the worker
// count. If any iteration throws, the exception from the lowest failing index
// is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace lfim
