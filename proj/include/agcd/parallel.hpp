#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace agcd::core {

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Callers store results
// indexed by i and aggregate in index order afterwards, so the outcome is
// identical for every jobs value.
inline void parallel_for(size_t n, unsigned jobs, const std::function<void(size_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    unsigned nthreads = std::min<size_t>(jobs, n);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

} // namespace agcd::core
