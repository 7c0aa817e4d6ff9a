#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ramanqed {

// Worker count resolution: explicit request > RAMANQED_WORKERS > hardware.
int resolve_workers(int requested);

// Runs fn(i) for i in [0, count) across a fixed pool. Each call owns its
// result slot, so output order never depends on scheduling. On failure the
// pool drains and the exception from the lowest failing index is rethrown.
template <class Fn>
void parallel_for_indexed(std::size_t count, int workers, Fn fn) {
    if (count == 0) return;
    auto n_threads = static_cast<std::size_t>(workers < 1 ? 1 : workers);
    if (n_threads > count) n_threads = count;
    if (n_threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::vector<std::exception_ptr> errors(count);
    auto worker = [&]() {
        while (!stop.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) break;
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
                stop.store(true, std::memory_order_relaxed);
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t k = 0; k < n_threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
    }
}

}  // namespace ramanqed
