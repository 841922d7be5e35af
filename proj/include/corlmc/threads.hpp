#ifndef CORLMC_THREADS_HPP
#define CORLMC_THREADS_HPP

#include <cstdint>
#include <functional>

namespace corlmc {

// Worker-thread cap: CORLMC_THREADS if set, otherwise hardware concurrency.
int worker_threads();

// Runs fn(i) for i in [0, count) on up to `threads` threads in contiguous
// chunks. Caller guarantees disjoint writes; results are slot-addressed so
// the outcome does not depend on the thread count.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn,
                  int threads = 0);

// Deterministic pairwise-tree sum, independent of how values were produced.
double pairwise_sum(const double* data, std::int64_t count);

} // namespace corlmc

#endif
