#ifndef NCHOPF_PARALLEL_HPP_
#define NCHOPF_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace nchopf {

// Worker count: NCHOPF_WORKERS if set to a positive integer, else 1.
int worker_count();

// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index
// runs exactly once; callers write results into per-index slots so the
// outcome does not depend on scheduling. The first exception thrown by any
// body is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace nchopf

#endif  // NCHOPF_PARALLEL_HPP_
