#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace chanspace {

inline int resolve_worker_count(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, total) into one contiguous chunk per worker and collects the
// chunk results in chunk order, so the combined outcome never depends on
// the worker count. `fn(begin, end)` must be pure over its range.
template <typename Result, typename Fn>
std::vector<Result> map_chunks(std::uint64_t total, int workers, Fn fn) {
    workers = resolve_worker_count(workers);
    if (total == 0) return {};
    const std::uint64_t chunk_count =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total);
    std::vector<Result> results(chunk_count);
    if (chunk_count == 1) {
        results[0] = fn(std::uint64_t(0), total);
        return results;
    }
    std::vector<std::thread> threads;
    threads.reserve(chunk_count);
    const std::uint64_t base = total / chunk_count;
    const std::uint64_t extra = total % chunk_count;
    std::uint64_t begin = 0;
    for (std::uint64_t c = 0; c < chunk_count; ++c) {
        std::uint64_t end = begin + base + (c < extra ? 1 : 0);
        threads.emplace_back(
            [&results, c, begin, end, &fn]() { results[c] = fn(begin, end); });
        begin = end;
    }
    for (auto& t : threads) t.join();
    return results;
}

}  // namespace chanspace
