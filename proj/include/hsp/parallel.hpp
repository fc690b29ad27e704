#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hsp {

/// Execution mode for the data-parallel kernels. Serial is the reference
/// path; Parallel must produce bit-identical results (loop bodies are
/// independent and write disjoint slots, so thread count cannot matter).
enum class Exec { Serial, Parallel };

template <class Fn>
void parallel_for(std::size_t count, Exec exec, Fn&& body) {
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
        // exceptions may not unwind out of the OpenMP region: hold the one
        // from the lowest index (deterministic) and rethrow after the join
        std::exception_ptr failure;
        std::size_t failure_index = count;
        std::mutex failure_mtx;
        #pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mtx);
                if (static_cast<std::size_t>(i) < failure_index) {
                    failure_index = static_cast<std::size_t>(i);
                    failure = std::current_exception();
                }
            }
        }
        if (failure) std::rethrow_exception(failure);
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i) body(i);
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_thread_count(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

} // namespace hsp
