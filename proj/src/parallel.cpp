#include "sqfdist/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>

namespace sqf {

int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SQFDIST_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void run_sharded(std::uint64_t n_shards, int jobs,
                 const std::function<void(std::uint64_t)>& fn) {
    jobs = resolve_jobs(jobs);
    if (n_shards == 0) return;
    if (jobs == 1 || n_shards == 1) {
        for (std::uint64_t i = 0; i < n_shards; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n_shards) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int n_workers = static_cast<int>(std::min<std::uint64_t>(jobs, n_shards));
    pool.reserve(n_workers);
    for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace sqf
