#ifndef SKYRCERT_PARALLEL_HPP
#define SKYRCERT_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace skyr {

// Worker count for the fan-out stages (grid evaluation, domain subdivision,
// large polynomial products). Defaults to the available parallelism and can
// be overridden with the SKYRCERT_WORKERS environment variable.
inline unsigned worker_count() {
    if (const char* env = std::getenv("SKYRCERT_WORKERS")) {
        long n = std::atol(env);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned n = std::thread::hardware_concurrency();
    return n ? n : 1;
}

// Runs fn(i) for i in [0, n), split into contiguous chunks across workers.
// All uses are pure computations on disjoint outputs, so the result does not
// depend on the schedule.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = lo + chunk < n ? lo + chunk : n;
        if (lo >= hi) break;
        threads.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : threads) t.join();
}

}  // namespace skyr

#endif  // SKYRCERT_PARALLEL_HPP
