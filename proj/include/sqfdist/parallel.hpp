#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace sqf {

// Worker count: flag value if positive, else SQFDIST_JOBS, else hardware.
int resolve_jobs(int requested);

// Runs fn(shard_index) for every index in [0, n_shards) across `jobs`
// workers. Indices are handed out atomically; callers that need ordered
// output store results per index and merge afterwards.
void run_sharded(std::uint64_t n_shards, int jobs,
                 const std::function<void(std::uint64_t)>& fn);

}  // namespace sqf
