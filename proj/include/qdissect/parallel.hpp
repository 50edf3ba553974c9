#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qdissect::detail {

/// out[i] = fn(i) for i < n, on up to `jobs` threads (0 = hardware
/// concurrency). Results land by index, so the output does not depend on
/// scheduling. The first exception thrown by fn is rethrown.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, Fn fn)
{
    std::vector<T> out(n);
    if (jobs == 0) {
        jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = fn(i);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) {
        pool.emplace_back(worker);
    }
    for (auto &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

} // namespace qdissect::detail
