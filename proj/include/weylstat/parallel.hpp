#pragma once

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weylstat {

/// Execution policy for the enumeration kernels. Every parallel entry point
/// also has a serial path that is kept as the reference implementation; tests
/// assert the two agree, and tools/bench.cpp times them against each other.
enum class Exec { serial, parallel };

/// Run body(0..count-1). With Exec::parallel the iterations are distributed
/// over OpenMP threads; callers keep determinism by writing only to slot i.
/// Exceptions are captured per index and the lowest-index one is rethrown, so
/// failure behaviour is identical to the serial path.
template <typename F>
void parallel_for(std::size_t count, Exec exec, F&& body) {
#ifdef _OPENMP
    if (exec == Exec::parallel && count > 1) {
        std::vector<std::exception_ptr> errors(count);
        bool failed = false;
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(count); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
#pragma omp atomic write
                failed = true;
            }
        }
        if (failed)
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        return;
    }
#endif
    (void)exec;
    for (std::size_t i = 0; i < count; ++i) body(i);
}

inline int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace weylstat
