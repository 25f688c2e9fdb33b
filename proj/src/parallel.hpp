#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

#include "pcf/harness.hpp"

namespace pcf::detail {

/// out[i] = fn(i) for i in [0, count).  Under the parallel policy the loop
/// is distributed with OpenMP; results land in index order either way.  The
/// exception of the lowest failing index is rethrown after the loop.
template <class Fn>
auto map_indexed(std::size_t count, ExecutionPolicy policy, Fn&& fn) {
    using R = std::invoke_result_t<Fn&, std::size_t>;
    std::vector<R> out(count);
    std::vector<std::exception_ptr> errors(count);
    auto body = [&](std::size_t i) {
        try {
            out[i] = fn(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    const auto n = static_cast<long long>(count);
    if (policy == ExecutionPolicy::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
    } else {
        for (long long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace pcf::detail
