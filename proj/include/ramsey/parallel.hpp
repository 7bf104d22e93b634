#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ramsey {

/// Runs fn(i) for i in [0, count) on `threads` workers with static
/// interleaved assignment. fn must write results by index only, so the
/// outcome does not depend on the worker count. The first exception (by
/// lowest index) is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
    workers = std::min(workers, std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::mutex mu;
    std::size_t error_index = count;
    std::exception_ptr error;
    auto body = [&](std::size_t w) {
        for (std::size_t i = w; i < count; i += workers) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

/// Default worker count: hardware concurrency, at least 1.
inline int default_threads() {
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

} // namespace ramsey
