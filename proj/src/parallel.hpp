#pragma once

#include <atomic>
#include <cstdint>
#include <exception>

namespace kronstab::detail {

// OpenMP loop over [0, count) with dynamic scheduling. The first exception
// thrown by any iteration is rethrown on the calling thread.
template <class F> void parallel_for(std::int64_t count, F &&body, int chunk = 1) {
    std::exception_ptr error;
    std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic, chunk)
    for (std::int64_t i = 0; i < count; ++i) {
        if (failed.load(std::memory_order_relaxed))
            continue;
        try {
            body(i);
        } catch (...) {
#pragma omp critical(kronstab_parallel_error)
            if (!error)
                error = std::current_exception();
            failed.store(true);
        }
    }
    if (error)
        std::rethrow_exception(error);
}

} // namespace kronstab::detail
