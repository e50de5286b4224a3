#ifndef ZLAB_PARALLEL_HPP
#define ZLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace zlab {

// Worker budget: ZLAB_THREADS if set (clamped to >= 1), otherwise the
// hardware concurrency.
int thread_budget();

// Runs fn(0..count-1), possibly on several threads. Tasks must write to
// disjoint slots; completion order is not observable, so output stays
// deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace zlab

#endif
