#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace shnn {

/// Worker count: SAMPLED_HNN_THREADS caps the pool, hardware concurrency otherwise.
inline std::size_t worker_count() {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("SAMPLED_HNN_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1 && static_cast<std::size_t>(v) < n) n = static_cast<std::size_t>(v);
        if (v >= 1 && static_cast<std::size_t>(v) >= n) n = static_cast<std::size_t>(v);
    }
    return n;
}

/// Runs fn(i) for i in [0, n) on a shared worker pool. Each index owns its own
/// state; results must be written to index-addressed slots so output order is
/// deterministic regardless of scheduling. The first exception is rethrown.
inline void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn,
                               std::size_t workers = 0) {
    if (workers == 0) workers = worker_count();
    if (workers > n) workers = n == 0 ? 1 : n;
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace shnn
