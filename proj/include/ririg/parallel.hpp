#pragma once

// Minimal fork-join helpers. Results never depend on the worker count: work
// is split into fixed index ranges and merged in index order.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace ririg {

inline std::size_t resolve_jobs(std::size_t jobs) {
    if (jobs != 0) return jobs;
    const auto hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Calls body(i) for i in [0, count) on up to `jobs` threads (0 = hardware).
/// The first exception thrown by any worker is rethrown.
template <class Body>
void parallel_for(std::size_t count, std::size_t jobs, Body&& body) {
    jobs = std::min(resolve_jobs(jobs), count);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            next = count;
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

/// Maps [0, count) through fn in parallel, keeping index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, std::size_t jobs, Fn&& fn) {
    std::vector<std::optional<T>> slots(count);
    parallel_for(count, jobs, [&](std::size_t i) { slots[i].emplace(fn(i)); });
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

/// Least index in [0, count) with pred(i), or nullopt. Workers skip indices
/// above the best hit found so far.
template <class Pred>
std::optional<std::size_t> parallel_find_first(std::size_t count, std::size_t jobs, Pred&& pred) {
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best{none};
    parallel_for(count, jobs, [&](std::size_t i) {
        if (i > best.load()) return;
        if (!pred(i)) return;
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
    });
    if (best.load() == none) return std::nullopt;
    return best.load();
}

}  // namespace ririg
