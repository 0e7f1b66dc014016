#ifndef ALTSUM_PARALLEL_HPP
#define ALTSUM_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace altsum {

/// Number of chunks the index range [0, total) is cut into. Depends only on
/// `total`, never on the worker count, so partial results are identical for
/// every thread setting.
inline std::uint64_t chunk_count(std::uint64_t total) {
    constexpr std::uint64_t max_chunks = 1024;
    return std::max<std::uint64_t>(1, std::min(total, max_chunks));
}

/// [begin, end) of chunk `index` out of chunk_count(total).
inline std::pair<std::uint64_t, std::uint64_t> chunk_bounds(std::uint64_t total, std::uint64_t index) {
    const std::uint64_t chunks = chunk_count(total);
    const std::uint64_t base = total / chunks;
    const std::uint64_t extra = total % chunks;
    const std::uint64_t begin = index * base + std::min(index, extra);
    return {begin, begin + base + (index < extra ? 1 : 0)};
}

/// Evaluates `partial(begin, end)` on every chunk of [0, total) using up to
/// `threads` workers and folds the chunk results in chunk order with
/// `combine`. The first exception thrown by any chunk is rethrown.
template <typename T, typename Partial, typename Combine>
T chunked_reduce(std::uint64_t total, std::size_t threads, T init, Partial partial, Combine combine) {
    const std::uint64_t chunks = total == 0 ? 0 : chunk_count(total);
    std::vector<T> results(chunks, init);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::atomic<bool> failed{false};

    auto worker = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const std::uint64_t index = next.fetch_add(1);
            if (index >= chunks) return;
            try {
                const auto [begin, end] = chunk_bounds(total, index);
                results[index] = partial(begin, end);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                failed = true;
                return;
            }
        }
    };

    const std::size_t workers = static_cast<std::size_t>(std::min<std::uint64_t>(std::max<std::size_t>(threads, 1), chunks));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    T acc = std::move(init);
    for (auto& r : results) acc = combine(std::move(acc), r);
    return acc;
}

} // namespace altsum

#endif // ALTSUM_PARALLEL_HPP
