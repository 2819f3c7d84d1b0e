#include "alpec/parallel.hpp"

#include <cstdlib>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace alpec {

int resolve_threads(int requested) {
#ifdef _OPENMP
    int const available = omp_get_max_threads();
#else
    int const available = std::max(1u, std::thread::hardware_concurrency());
#endif
    int n = requested > 0 ? requested : available;
    if (char const* env = std::getenv("ALPEC_THREADS")) {
        int const cap = std::atoi(env);
        if (cap > 0 && cap < n) n = cap;
    }
    return n < 1 ? 1 : n;
}

} // namespace alpec
