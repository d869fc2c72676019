#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nlcs {

enum class Execution { Serial, Parallel };

// Index-parallel loop over independent work items. Each item writes only its
// own output slot, so serial and parallel execution are bit-identical; the
// serial path is the reference the tests compare against.
template <typename Fn>
void for_each_index(std::size_t count, Execution mode, Fn&& fn) {
#ifdef _OPENMP
    if (mode == Execution::Parallel) {
        // Exceptions may not cross the OpenMP region; capture the first one
        // and rethrow on the calling thread.
        std::exception_ptr failure;
        std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < long(count); ++i) {
            try {
                fn(std::size_t(i));
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace nlcs
