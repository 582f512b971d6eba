#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace retro {

// OpenMP wrapper for element-partitioned loops. Every iteration must be
// independent and compute its output with a fixed internal summation order,
// so results are bit-identical for any thread count (and to the serial
// reference kernels kept alongside the parallel ones).
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, std::size_t grain = 256) {
#ifdef _OPENMP
    if (n >= grain) {
        const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < nn; ++i) fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)grain;
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

inline int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace retro
