#ifndef SCLD_TESTS_ORACLES_HPP
#define SCLD_TESTS_ORACLES_HPP

// Deliberately naive reference implementations. They share nothing with the
// library beyond the Code container: std::set per position, explicit
// subset lists, pairwise comparison.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "scld/code.hpp"

namespace oracle {

using Sets = std::vector<std::set<scld::Symbol>>;

inline Sets desc(const scld::Code& c, const std::vector<std::size_t>& J) {
    Sets d(c.length());
    for (auto j : J) {
        for (std::size_t i = 0; i < c.length(); ++i) d[i].insert(c.codeword(j)[i]);
    }
    return d;
}

inline bool covered(const scld::Code& c, std::size_t j, const Sets& d) {
    for (std::size_t i = 0; i < c.length(); ++i) {
        if (!d[i].count(c.codeword(j)[i])) return false;
    }
    return true;
}

inline std::vector<std::size_t> residual(const scld::Code& c, const Sets& d) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (covered(c, j, d)) out.push_back(j);
    }
    return out;
}

/// All subsets of {0..M-1} with sizes in [lo, hi], via bit masks (M < 32).
inline std::vector<std::vector<std::size_t>> subsets(std::size_t M, std::size_t lo, std::size_t hi) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 1; mask < (1u << M); ++mask) {
        const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
        if (k < lo || k > hi) continue;
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < M; ++i) {
            if (mask >> i & 1u) s.push_back(i);
        }
        out.push_back(std::move(s));
    }
    return out;
}

inline bool separable(const scld::Code& c, std::size_t t) {
    const auto all = subsets(c.size(), 1, t);
    for (std::size_t a = 0; a < all.size(); ++a) {
        const auto da = desc(c, all[a]);
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            if (desc(c, all[b]) == da) return false;
        }
    }
    return true;
}

inline bool frameproof(const scld::Code& c, std::size_t t) {
    for (const auto& J : subsets(c.size(), 1, t)) {
        for (auto j : residual(c, desc(c, J))) {
            if (!std::count(J.begin(), J.end(), j)) return false;
        }
    }
    return true;
}

inline std::size_t max_residual(const scld::Code& c, std::size_t lo, std::size_t hi) {
    std::size_t best = 0;
    for (const auto& J : subsets(c.size(), lo, hi)) best = std::max(best, residual(c, desc(c, J)).size());
    return best;
}

/// Random code with distinct rows (M may shrink when the space is small).
inline scld::Code random_code(std::mt19937_64& rng, std::size_t q, std::size_t n, std::size_t M) {
    std::uniform_int_distribution<scld::Symbol> sym(0, static_cast<scld::Symbol>(q - 1));
    std::set<std::vector<scld::Symbol>> seen;
    std::vector<std::vector<scld::Symbol>> rows;
    for (std::size_t tries = 0; rows.size() < M && tries < 50 * M; ++tries) {
        std::vector<scld::Symbol> r(n);
        for (auto& s : r) s = sym(rng);
        if (seen.insert(r).second) rows.push_back(std::move(r));
    }
    return scld::Code::from_rows(q, rows);
}

}  // namespace oracle

#endif  // SCLD_TESTS_ORACLES_HPP
