#include "scld/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "kernels_detail.hpp"

namespace scld::kernels {

using detail::Task;
using detail::atomic_min;
using detail::make_tasks;
using detail::walk_task;

namespace {

void check_budget(std::size_t M, std::size_t max_size) {
    if (coalition_count(M, max_size) > kCoalitionBudget) {
        throw std::length_error("coalition budget exceeded (" + std::to_string(coalition_count(M, max_size)) +
                                " > " + std::to_string(kCoalitionBudget) + ")");
    }
}

CoalitionIndexSet to_set(std::span<const std::size_t> c) { return CoalitionIndexSet({c.begin(), c.end()}); }

CoalitionIndexSet map_through(std::span<const std::size_t> positions, const CoalitionIndexSet& candidates) {
    std::vector<std::size_t> out;
    out.reserve(positions.size());
    for (auto p : positions) out.push_back(candidates[p]);
    return CoalitionIndexSet(std::move(out));
}

// Global rank -> coalition, for ranks over sizes 1..t.
CoalitionIndexSet unrank_global(std::size_t M, std::uint64_t rank) {
    std::size_t s = 1;
    while (rank >= binomial(M, s)) {
        rank -= binomial(M, s);
        ++s;
    }
    return CoalitionIndexSet(unrank_combination(M, s, rank));
}

struct HashedRank {
    std::uint64_t hash;
    std::uint64_t rank;
    bool operator<(const HashedRank& o) const { return hash != o.hash ? hash < o.hash : rank < o.rank; }
};

// Classes (>= 2 members, ranks ascending) of coalitions with equal descendants.
std::vector<std::vector<std::uint64_t>> equal_descendant_classes(const Code& code, std::size_t t) {
    const std::size_t M = code.size();
    check_budget(M, t);
    const auto tasks = make_tasks(M, 1, t);
    const std::uint64_t total = coalition_count(M, t);
    std::vector<HashedRank> hashed(total);

#pragma omp parallel
    {
        EvidenceVector scratch(code.alphabet(), code.length());
        std::vector<std::size_t> combo;
#pragma omp for schedule(dynamic)
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            std::uint64_t r = tasks[i].rank_begin;
            walk_task(M, tasks[i], combo, [&](std::span<const std::size_t> c) {
                desc_into(code, c, scratch);
                hashed[r] = {scratch.hash(), r};
                ++r;
                return true;
            });
        }
    }
    std::sort(hashed.begin(), hashed.end());

    std::vector<std::vector<std::uint64_t>> classes;
    for (std::size_t lo = 0; lo < hashed.size();) {
        std::size_t hi = lo + 1;
        while (hi < hashed.size() && hashed[hi].hash == hashed[lo].hash) ++hi;
        if (hi - lo >= 2) {
            // Exact re-check: split the run into true equality classes.
            std::vector<std::pair<EvidenceVector, std::vector<std::uint64_t>>> groups;
            for (std::size_t k = lo; k < hi; ++k) {
                auto d = desc(code, unrank_global(M, hashed[k].rank));
                auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == d; });
                if (it == groups.end()) {
                    groups.push_back({std::move(d), {hashed[k].rank}});
                } else {
                    it->second.push_back(hashed[k].rank);
                }
            }
            for (auto& g : groups) {
                if (g.second.size() >= 2) classes.push_back(std::move(g.second));
            }
        }
        lo = hi;
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a[1] < b[1]; });
    return classes;
}

}  // namespace

std::vector<std::size_t> unrank_combination(std::size_t M, std::size_t k, std::uint64_t rank) {
    std::vector<std::size_t> out;
    out.reserve(k);
    std::size_t c = 0;
    for (std::size_t i = 0; i < k; ++i) {
        while (true) {
            const std::uint64_t block = binomial(M - 1 - c, k - 1 - i);
            if (rank < block) break;
            rank -= block;
            ++c;
        }
        out.push_back(c);
        ++c;
    }
    return out;
}

std::size_t count_covered(const Code& code, const EvidenceVector& d, std::size_t stop_above) {
    const std::size_t n = code.length();
    const auto bits = d.raw();
    const std::size_t words = d.words_per_position();
    std::size_t count = 0;
    for (std::size_t j = 0; j < code.size(); ++j) {
        const Symbol* w = code.codeword(j).data();
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            ok = (bits[i * words + w[i] / 64] >> (w[i] % 64)) & 1u;
        }
        if (ok && ++count > stop_above) return count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Parallel kernels

ResidualExtreme max_residual(const Code& code, std::size_t min_size, std::size_t max_size) {
    const std::size_t M = code.size();
    check_budget(M, max_size);
    const auto tasks = make_tasks(M, min_size, max_size);
    std::vector<ResidualExtreme> per(tasks.size());

#pragma omp parallel
    {
        EvidenceVector scratch(code.alphabet(), code.length());
        std::vector<std::size_t> combo;
#pragma omp for schedule(dynamic)
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            ResidualExtreme& local = per[i];
            std::vector<std::size_t> best;
            walk_task(M, tasks[i], combo, [&](std::span<const std::size_t> c) {
                desc_into(code, c, scratch);
                const std::size_t r = count_covered(code, scratch);
                if (r > local.max_residual) {
                    local.max_residual = r;
                    best.assign(c.begin(), c.end());
                }
                ++local.examined;
                return true;
            });
            local.argmax = CoalitionIndexSet(std::move(best));
        }
    }

    ResidualExtreme out;
    for (auto& r : per) {
        out.examined += r.examined;
        if (r.max_residual > out.max_residual) {
            out.max_residual = r.max_residual;
            out.argmax = std::move(r.argmax);
        }
    }
    return out;
}

std::optional<Framing> find_framing(const Code& code, std::size_t t) {
    const std::size_t M = code.size();
    check_budget(M, t);
    const auto tasks = make_tasks(M, t, t);
    std::vector<std::optional<Framing>> per(tasks.size());
    std::atomic<std::size_t> earliest{SIZE_MAX};

#pragma omp parallel
    {
        EvidenceVector scratch(code.alphabet(), code.length());
        std::vector<std::size_t> combo;
#pragma omp for schedule(dynamic)
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            if (i > earliest.load(std::memory_order_relaxed)) continue;
            walk_task(M, tasks[i], combo, [&](std::span<const std::size_t> c) {
                desc_into(code, c, scratch);
                for (std::size_t j = 0; j < M; ++j) {
                    if (std::find(c.begin(), c.end(), j) != c.end()) continue;
                    if (covers(code.codeword(j), scratch)) {
                        per[i] = Framing{to_set(c), j};
                        atomic_min(earliest, i);
                        return false;
                    }
                }
                return true;
            });
        }
    }
    for (auto& f : per) {
        if (f) return f;
    }
    return std::nullopt;
}

std::optional<Collision> find_collision(const Code& code, std::size_t t) {
    const auto classes = equal_descendant_classes(code, t);
    if (classes.empty()) return std::nullopt;
    const std::size_t M = code.size();
    return Collision{unrank_global(M, classes.front()[0]), unrank_global(M, classes.front()[1])};
}

std::vector<std::vector<CoalitionIndexSet>> collision_groups(const Code& code, std::size_t t) {
    std::vector<std::vector<CoalitionIndexSet>> out;
    for (const auto& cls : equal_descendant_classes(code, t)) {
        std::vector<CoalitionIndexSet> group;
        for (auto r : cls) group.push_back(unrank_global(code.size(), r));
        out.push_back(std::move(group));
    }
    return out;
}

std::vector<CoalitionIndexSet> coalitions_exceeding(const Code& code, std::size_t min_size, std::size_t max_size,
                                                    std::size_t L) {
    const std::size_t M = code.size();
    check_budget(M, max_size);
    const auto tasks = make_tasks(M, min_size, max_size);
    std::vector<std::vector<CoalitionIndexSet>> per(tasks.size());

#pragma omp parallel
    {
        EvidenceVector scratch(code.alphabet(), code.length());
        std::vector<std::size_t> combo;
#pragma omp for schedule(dynamic)
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            walk_task(M, tasks[i], combo, [&](std::span<const std::size_t> c) {
                desc_into(code, c, scratch);
                if (count_covered(code, scratch, L) > L) per[i].push_back(to_set(c));
                return true;
            });
        }
    }
    std::vector<CoalitionIndexSet> out;
    for (auto& v : per) {
        for (auto& s : v) out.push_back(std::move(s));
    }
    return out;
}

SubsetMatch first_matching_subset(const Code& code, const CoalitionIndexSet& candidates, std::size_t t,
                                  const EvidenceVector& d) {
    const std::size_t w = candidates.size();
    SubsetMatch out;
    if (w == 0) return out;
    check_budget(w, t);
    const auto tasks = make_tasks(w, 1, t);
    std::vector<std::optional<std::uint64_t>> hit_rank(tasks.size());
    std::vector<std::optional<CoalitionIndexSet>> hit(tasks.size());
    std::atomic<std::size_t> earliest{SIZE_MAX};

#pragma omp parallel
    {
        std::vector<std::size_t> combo;
        std::vector<std::size_t> mapped;
#pragma omp for schedule(dynamic)
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            if (i > earliest.load(std::memory_order_relaxed)) continue;
            std::uint64_t r = tasks[i].rank_begin;
            walk_task(w, tasks[i], combo, [&](std::span<const std::size_t> c) {
                mapped.clear();
                for (auto p : c) mapped.push_back(candidates[p]);
                if (desc_equals(code, mapped, d)) {
                    hit_rank[i] = r;
                    hit[i] = CoalitionIndexSet(mapped);
                    atomic_min(earliest, i);
                    return false;
                }
                ++r;
                return true;
            });
        }
    }
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (hit[i]) {
            out.match = std::move(hit[i]);
            out.tested = *hit_rank[i] + 1;
            return out;
        }
    }
    out.tested = detail::task_total(tasks, w);
    return out;
}

std::vector<CoalitionIndexSet> all_matching_subsets(const Code& code, const CoalitionIndexSet& candidates,
                                                    std::size_t t, const EvidenceVector& d) {
    const std::size_t w = candidates.size();
    if (w == 0) return {};
    check_budget(w, t);
    const auto tasks = make_tasks(w, 1, t);
    std::vector<std::vector<CoalitionIndexSet>> per(tasks.size());

#pragma omp parallel
    {
        std::vector<std::size_t> combo;
#pragma omp for schedule(dynamic)
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            walk_task(w, tasks[i], combo, [&](std::span<const std::size_t> c) {
                auto s = map_through(c, candidates);
                if (desc_equals(code, s.members(), d)) per[i].push_back(std::move(s));
                return true;
            });
        }
    }
    std::vector<CoalitionIndexSet> out;
    for (auto& v : per) {
        for (auto& s : v) out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Serial reference implementations

namespace reference {

ResidualExtreme max_residual(const Code& code, std::size_t min_size, std::size_t max_size) {
    check_budget(code.size(), max_size);
    ResidualExtreme out;
    CoalitionEnumerator e(code.size(), min_size, max_size);
    while (e.next()) {
        const auto s = to_set(e.current());
        const std::size_t r = residual(code, desc(code, s)).size();
        ++out.examined;
        if (r > out.max_residual) {
            out.max_residual = r;
            out.argmax = s;
        }
    }
    return out;
}

std::optional<Framing> find_framing(const Code& code, std::size_t t) {
    check_budget(code.size(), t);
    CoalitionEnumerator e(code.size(), t, t);
    while (e.next()) {
        const auto s = to_set(e.current());
        const auto d = desc(code, s);
        for (auto j : residual(code, d)) {
            if (!s.contains(j)) return Framing{s, j};
        }
    }
    return std::nullopt;
}

std::optional<Collision> find_collision(const Code& code, std::size_t t) {
    check_budget(code.size(), t);
    std::vector<CoalitionIndexSet> seen;
    std::vector<EvidenceVector> descs;
    CoalitionEnumerator e(code.size(), t);
    while (e.next()) {
        auto s = to_set(e.current());
        auto d = desc(code, s);
        for (std::size_t a = 0; a < descs.size(); ++a) {
            if (descs[a] == d) return Collision{seen[a], s};
        }
        seen.push_back(std::move(s));
        descs.push_back(std::move(d));
    }
    return std::nullopt;
}

std::vector<CoalitionIndexSet> coalitions_exceeding(const Code& code, std::size_t min_size, std::size_t max_size,
                                                    std::size_t L) {
    check_budget(code.size(), max_size);
    std::vector<CoalitionIndexSet> out;
    CoalitionEnumerator e(code.size(), min_size, max_size);
    while (e.next()) {
        auto s = to_set(e.current());
        if (residual(code, desc(code, s)).size() > L) out.push_back(std::move(s));
    }
    return out;
}

SubsetMatch first_matching_subset(const Code& code, const CoalitionIndexSet& candidates, std::size_t t,
                                  const EvidenceVector& d) {
    SubsetMatch out;
    CoalitionEnumerator e(candidates.size(), t);
    while (e.next()) {
        ++out.tested;
        auto s = map_through(e.current(), candidates);
        if (desc(code, s) == d) {
            out.match = std::move(s);
            return out;
        }
    }
    return out;
}

}  // namespace reference

}  // namespace scld::kernels
