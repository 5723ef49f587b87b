#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

#include "arcwalk/rng.hpp"

namespace arcwalk {

// Worker cap for embarrassingly parallel sampling: the ARCWALK_THREADS
// environment variable when set to a positive integer, otherwise the
// hardware concurrency; never more than n_tasks.
unsigned worker_count(std::size_t n_tasks);

/**
 * Runs sample(stream, i) for i in [0, n) across worker threads and returns
 * the results ordered by index. Replicate i always uses a stream seeded with
 * derive_seed(master_seed, i), so the output is identical for every worker
 * count and schedule.
 */
template <class T, class Fn>
std::vector<T> parallel_mc(std::uint64_t master_seed, std::size_t n, Fn&& sample) {
    std::vector<T> out(n);
    const unsigned workers = worker_count(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            rng stream(derive_seed(master_seed, i));
            out[i] = sample(stream, i);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) return;
            rng stream(derive_seed(master_seed, i));
            out[i] = sample(stream, i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    return out;
}

} // namespace arcwalk
