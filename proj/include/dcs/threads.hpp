// Thread-count resolution and a minimal parallel loop.
//
// Work items must be independent and write only to caller-preallocated,
// per-index storage; under that discipline results are bit-identical for
// every thread count.  The first exception thrown by any item is captured,
// remaining items are abandoned, and the exception is rethrown on the
// calling thread after all workers join.

#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace dcs {

// Explicit request first, then the DCS_THREADS environment variable, then
// hardware concurrency (at least 1).
inline unsigned resolve_thread_count(long requested) {
    if (requested > 0) return static_cast<unsigned>(requested);
    if (const char* env = std::getenv("DCS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

inline void parallel_for(std::size_t count, unsigned threads,
                         const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    if (threads <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> bail{false};
    std::mutex mu;
    std::exception_ptr first;
    auto worker = [&] {
        while (!bail.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!first) first = std::current_exception();
                bail.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    const std::size_t n = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first) std::rethrow_exception(first);
}

}  // namespace dcs
