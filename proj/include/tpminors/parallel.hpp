#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace tpm {

/// Splits [0, total) into `threads` contiguous ranges and runs
/// fn(begin, end, slot) for each, one slot per range. Slot results are meant
/// to be merged by the caller in slot order. The first exception thrown by
/// any worker is rethrown after all workers finish.
template <typename F>
void parallel_ranges(std::size_t total, std::size_t threads, F&& fn) {
    threads = std::max<std::size_t>(1, std::min(threads, total == 0 ? std::size_t{1} : total));
    if (threads == 1) {
        fn(std::size_t{0}, total, std::size_t{0});
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t s = 0; s < threads; ++s) {
            std::size_t b = total * s / threads;
            std::size_t e = total * (s + 1) / threads;
            pool.emplace_back([&, b, e, s] {
                try {
                    fn(b, e, s);
                } catch (...) {
                    errors[s] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

inline std::size_t default_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

}  // namespace tpm
