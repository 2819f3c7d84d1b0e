#pragma once

#include <atomic>
#include <cstdint>
#include <exception>

namespace alpec {

/// Effective worker count: `requested` when > 0, otherwise all available
/// cores; either way capped by the ALPEC_THREADS environment variable
/// when it is set to a positive integer.
int resolve_threads(int requested = 0);

/// OpenMP-backed parallel loop over [0, jobs). Each job writes only its
/// own slots, so results never depend on the thread count. The first
/// exception thrown by a job is rethrown after the loop drains.
template <typename Fn>
void parallel_for(std::int64_t jobs, int threads, Fn&& fn) {
    std::atomic<bool> failed{false};
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t j = 0; j < jobs; ++j) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            fn(j);
        } catch (...) {
#pragma omp critical(alpec_parallel_for_error)
            {
                if (!error) error = std::current_exception();
            }
            failed.store(true, std::memory_order_relaxed);
        }
    }
    if (error) std::rethrow_exception(error);
}

} // namespace alpec
