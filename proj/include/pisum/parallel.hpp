#pragma once

// Work-stealing-free parallel index loop: a shared atomic cursor hands out
// indices; which thread runs which index never affects observable results as
// long as fn(i) writes only slot i. First exception wins and is rethrown on
// the calling thread.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pisum::detail {

template <typename Fn>
inline void parallel_for(unsigned threads, std::size_t n, Fn&& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex err_mu;
    auto worker = [&] {
        try {
            for (std::size_t i;
                 (i = next.fetch_add(1, std::memory_order_relaxed)) < n && !failed;)
                fn(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!first_error) first_error = std::current_exception();
            failed = true;
        }
    };
    const unsigned nt = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::vector<std::thread> pool;
    pool.reserve(nt - 1);
    for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace pisum::detail
