#include "scld/code.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace scld {

CoalitionIndexSet::CoalitionIndexSet(std::vector<std::size_t> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

CoalitionIndexSet::CoalitionIndexSet(std::initializer_list<std::size_t> members)
    : CoalitionIndexSet(std::vector<std::size_t>(members)) {}

bool CoalitionIndexSet::contains(std::size_t index) const {
    return std::binary_search(members_.begin(), members_.end(), index);
}

bool CoalitionIndexSet::is_subset_of(const CoalitionIndexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::string to_string(const CoalitionIndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// ---------------------------------------------------------------------------

namespace {

struct RowHash {
    std::size_t n;
    const Symbol* base;
    std::size_t operator()(std::size_t row) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < n; ++i) {
            h ^= base[row * n + i];
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct RowEq {
    std::size_t n;
    const Symbol* base;
    bool operator()(std::size_t a, std::size_t b) const {
        return std::equal(base + a * n, base + (a + 1) * n, base + b * n);
    }
};

}  // namespace

Code::Code(std::size_t q, std::size_t n, std::vector<Symbol> symbols, std::string provenance)
    : q_(q), n_(n), m_(0), symbols_(std::move(symbols)), provenance_(std::move(provenance)) {
    if (q < 2) throw ShapeError("alphabet size must be at least 2");
    if (n < 1) throw ShapeError("code length must be at least 1");
    if (symbols_.size() % n != 0) throw ShapeError("codeword length mismatch");
    m_ = symbols_.size() / n;
    if (m_ < 1) throw ShapeError("code must contain at least one codeword");
    for (Symbol s : symbols_) {
        if (s >= q) throw ShapeError("symbol out of range");
    }
    std::unordered_set<std::size_t, RowHash, RowEq> seen(m_ * 2, RowHash{n_, symbols_.data()},
                                                           RowEq{n_, symbols_.data()});
    for (std::size_t i = 0; i < m_; ++i) {
        if (!seen.insert(i).second) throw ShapeError("duplicate codeword");
    }
}

Code Code::from_rows(std::size_t q, const std::vector<std::vector<Symbol>>& rows, std::string provenance) {
    if (rows.empty()) throw ShapeError("code must contain at least one codeword");
    const std::size_t n = rows.front().size();
    std::vector<Symbol> flat;
    flat.reserve(rows.size() * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw ShapeError("codeword length mismatch");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return Code(q, n, std::move(flat), std::move(provenance));
}

std::vector<std::vector<Symbol>> Code::rows() const {
    std::vector<std::vector<Symbol>> out;
    out.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) {
        auto w = codeword(i);
        out.emplace_back(w.begin(), w.end());
    }
    return out;
}

Code Code::prefix(std::size_t count) const {
    if (count < 1 || count > m_) throw ShapeError("prefix size out of range");
    return Code(q_, n_, std::vector<Symbol>(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(count * n_)),
                provenance_);
}

Code Code::subcode(const CoalitionIndexSet& keep) const {
    std::vector<Symbol> flat;
    flat.reserve(keep.size() * n_);
    for (auto i : keep) {
        if (i >= m_) throw ShapeError("codeword index out of range");
        auto w = codeword(i);
        flat.insert(flat.end(), w.begin(), w.end());
    }
    return Code(q_, n_, std::move(flat), provenance_);
}

double Code::rate() const {
    return std::log(static_cast<double>(m_)) / std::log(static_cast<double>(q_)) / static_cast<double>(n_);
}

// ---------------------------------------------------------------------------

EvidenceVector::EvidenceVector(std::size_t q, std::size_t n)
    : q_(q), n_(n), words_((q + 63) / 64), bits_(n * ((q + 63) / 64), 0) {}

EvidenceVector EvidenceVector::from_sets(std::size_t q, const std::vector<std::vector<Symbol>>& sets) {
    if (q < 2) throw ShapeError("alphabet size must be at least 2");
    if (sets.empty()) throw ShapeError("evidence length must be at least 1");
    EvidenceVector d(q, sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].empty()) throw ShapeError("empty position set");
        for (Symbol s : sets[i]) {
            if (s >= q) throw ShapeError("symbol out of range");
            d.insert(i, s);
        }
    }
    return d;
}

std::size_t EvidenceVector::set_size(std::size_t pos) const {
    std::size_t c = 0;
    for (Word w : position(pos)) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::vector<Symbol> EvidenceVector::symbols(std::size_t pos) const {
    std::vector<Symbol> out;
    for (Symbol s = 0; s < q_; ++s) {
        if (contains(pos, s)) out.push_back(s);
    }
    return out;
}

std::vector<std::vector<Symbol>> EvidenceVector::sets() const {
    std::vector<std::vector<Symbol>> out;
    out.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) out.push_back(symbols(i));
    return out;
}

void EvidenceVector::clear() { std::fill(bits_.begin(), bits_.end(), Word{0}); }

std::uint64_t EvidenceVector::hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (q_ * 0x100000001b3ull) ^ n_;
    for (Word w : bits_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    return h ^ (h >> 33);
}

// ---------------------------------------------------------------------------

void desc_into(const Code& code, std::span<const std::size_t> indices, EvidenceVector& out) {
    out.clear();
    const std::size_t n = code.length();
    const std::size_t words = out.words_per_position();
    auto bits = out.raw();
    for (auto j : indices) {
        const Symbol* w = code.codeword(j).data();
        for (std::size_t i = 0; i < n; ++i) {
            bits[i * words + w[i] / 64] |= EvidenceVector::Word{1} << (w[i] % 64);
        }
    }
}

EvidenceVector desc(const Code& code, const CoalitionIndexSet& coalition) {
    if (coalition.empty()) throw ShapeError("empty coalition");
    if (coalition.members().back() >= code.size()) throw ShapeError("codeword index out of range");
    EvidenceVector d(code.alphabet(), code.length());
    desc_into(code, coalition.members(), d);
    return d;
}

bool desc_equals(const Code& code, std::span<const std::size_t> indices, const EvidenceVector& d) {
    const std::size_t n = code.length();
    const std::size_t words = d.words_per_position();
    auto bits = d.raw();
    if (words == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            EvidenceVector::Word acc = 0;
            for (auto j : indices) acc |= EvidenceVector::Word{1} << code.codeword(j)[i];
            if (acc != bits[i]) return false;
        }
        return true;
    }
    std::vector<EvidenceVector::Word> acc(words);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (auto j : indices) {
            const Symbol s = code.codeword(j)[i];
            acc[s / 64] |= EvidenceVector::Word{1} << (s % 64);
        }
        if (!std::equal(acc.begin(), acc.end(), bits.begin() + static_cast<std::ptrdiff_t>(i * words))) {
            return false;
        }
    }
    return true;
}

bool covers(std::span<const Symbol> word, const EvidenceVector& d) {
    if (word.size() != d.length()) throw ShapeError("shape error");
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] >= d.alphabet() || !d.contains(i, word[i])) return false;
    }
    return true;
}

CoalitionIndexSet residual(const Code& code, const EvidenceVector& d) {
    if (code.length() != d.length() || code.alphabet() != d.alphabet()) throw ShapeError("shape error");
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < code.size(); ++j) {
        if (covers(code.codeword(j), d)) out.push_back(j);
    }
    return CoalitionIndexSet(std::move(out));
}

// ---------------------------------------------------------------------------

__extension__ using u128 = unsigned __int128;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t coalition_count(std::size_t M, std::size_t t) {
    std::uint64_t total = 0;
    for (std::size_t s = 1; s <= std::min(t, M); ++s) {
        const std::uint64_t b = binomial(M, s);
        if (b > std::numeric_limits<std::uint64_t>::max() - total) return std::numeric_limits<std::uint64_t>::max();
        total += b;
    }
    return total;
}

bool next_combination(std::vector<std::size_t>& combo, std::size_t M) {
    const std::size_t k = combo.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (combo[i] < M - k + i) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

CoalitionEnumerator::CoalitionEnumerator(std::size_t M, std::size_t t) : CoalitionEnumerator(M, 1, t) {}

CoalitionEnumerator::CoalitionEnumerator(std::size_t M, std::size_t min_size, std::size_t max_size)
    : m_(M), max_size_(std::min(max_size, M)), size_(std::max<std::size_t>(min_size, 1)) {}

bool CoalitionEnumerator::next() {
    if (!started_) {
        started_ = true;
        if (size_ > max_size_) return false;
        current_.resize(size_);
        std::iota(current_.begin(), current_.end(), std::size_t{0});
        return true;
    }
    if (current_.empty()) return false;
    if (next_combination(current_, m_)) return true;
    if (++size_ > max_size_) {
        current_.clear();
        return false;
    }
    current_.resize(size_);
    std::iota(current_.begin(), current_.end(), std::size_t{0});
    return true;
}

}  // namespace scld
