#include "corlmc/threads.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace corlmc {

int worker_threads() {
    if (const char* env = std::getenv("CORLMC_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn, int threads) {
    if (threads <= 0) threads = worker_threads();
    threads = static_cast<int>(std::min<std::int64_t>(threads, std::max<std::int64_t>(count, 1)));
    if (threads == 1 || count < 2) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::int64_t chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::int64_t lo = t * chunk;
        std::int64_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::int64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

double pairwise_sum(const double* data, std::int64_t count) {
    if (count <= 0) return 0.0;
    if (count <= 8) {
        double s = 0.0;
        for (std::int64_t i = 0; i < count; ++i) s += data[i];
        return s;
    }
    std::int64_t half = count / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, count - half);
}

} // namespace corlmc
