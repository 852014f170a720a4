#pragma once

#include <cstddef>
#include <exception>
#include <limits>

#include "k3/deadline.hpp"

namespace k3 {

// Runs fn(i) for i in [0, n) across OpenMP threads. The caller's deadline is
// installed in every worker; the exception of the smallest failing index is rethrown.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    auto deadline = current_deadline();
    std::exception_ptr err;
    std::size_t err_index = std::numeric_limits<std::size_t>::max();
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) {
        DeadlineScope scope(deadline);
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(k3_parallel_error)
            if (static_cast<std::size_t>(i) < err_index) {
                err_index = static_cast<std::size_t>(i);
                err = std::current_exception();
            }
        }
    }
    if (err) std::rethrow_exception(err);
}

template <class Fn>
void serial_for(std::size_t n, Fn&& fn) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace k3
