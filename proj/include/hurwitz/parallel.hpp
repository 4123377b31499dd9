#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hurwitz {

inline std::size_t default_jobs() {
    auto h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : h;
}

/// out[i] = fn(items[i]) on up to `jobs` threads; the first exception is rethrown.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, std::size_t jobs, Fn fn) {
    using R = decltype(fn(items.front()));
    std::vector<R> out(items.size());
    jobs = std::max<std::size_t>(1, std::min(jobs, items.size()));
    if (jobs == 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < items.size();) {
                try {
                    out[i] = fn(items[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

} // namespace hurwitz
