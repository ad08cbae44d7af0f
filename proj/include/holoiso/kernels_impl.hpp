#pragma once

#include <exception>
#include <mutex>

namespace holoiso {

template <class T, class Fn>
std::vector<T> map_indices(int count, Exec exec, Fn&& fn) {
    std::vector<T> out(static_cast<std::size_t>(count));
    if (exec == Exec::Serial) {
        for (int i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::exception_ptr error;
    int error_index = count;
    std::mutex guard;
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < count; ++i) {
        try {
            out[i] = fn(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(guard);
            // Keep the lowest failing index so the error matches the serial run.
            if (i < error_index) {
                error_index = i;
                error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace holoiso
