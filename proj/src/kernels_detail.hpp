#ifndef SCLD_SRC_KERNELS_DETAIL_HPP
#define SCLD_SRC_KERNELS_DETAIL_HPP

#include <atomic>
#include <cstdint>
#include <vector>

#include "scld/code.hpp"

namespace scld::kernels::detail {

// A unit of parallel work: every coalition of `size` members whose smallest
// member is `first`. Tasks are generated in coalition order, so reducing
// per-task results in task order reproduces a serial scan.
struct Task {
    std::size_t size;
    std::size_t first;
    std::uint64_t rank_begin;  // global rank of the task's first coalition
};

inline std::vector<Task> make_tasks(std::size_t M, std::size_t min_size, std::size_t max_size) {
    std::vector<Task> tasks;
    std::uint64_t rank = 0;
    for (std::size_t s = 1; s < min_size && s <= M; ++s) rank += binomial(M, s);
    for (std::size_t s = std::max<std::size_t>(min_size, 1); s <= std::min(max_size, M); ++s) {
        for (std::size_t f = 0; f + s <= M; ++f) {
            tasks.push_back({s, f, rank});
            rank += binomial(M - 1 - f, s - 1);
        }
    }
    return tasks;
}

inline std::uint64_t task_total(const std::vector<Task>& tasks, std::size_t M) {
    if (tasks.empty()) return 0;
    const auto& last = tasks.back();
    return last.rank_begin + binomial(M - 1 - last.first, last.size - 1) - tasks.front().rank_begin;
}

// Visits the task's coalitions in order; fn(span) returns false to stop.
// Returns the number of coalitions visited.
template <class Fn>
std::uint64_t walk_task(std::size_t M, const Task& task, std::vector<std::size_t>& combo, Fn&& fn) {
    const std::size_t s = task.size;
    combo.resize(s);
    for (std::size_t i = 0; i < s; ++i) combo[i] = task.first + i;
    std::uint64_t visited = 0;
    while (true) {
        ++visited;
        if (!fn(std::span<const std::size_t>(combo))) return visited;
        std::size_t i = s;
        bool advanced = false;
        while (i > 1) {
            --i;
            if (combo[i] < M - s + i) {
                ++combo[i];
                for (std::size_t j = i + 1; j < s; ++j) combo[j] = combo[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return visited;
    }
}

inline void atomic_min(std::atomic<std::size_t>& target, std::size_t value) {
    std::size_t cur = target.load(std::memory_order_relaxed);
    while (value < cur && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
}

}  // namespace scld::kernels::detail

#endif  // SCLD_SRC_KERNELS_DETAIL_HPP
