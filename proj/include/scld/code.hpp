#ifndef SCLD_CODE_HPP
#define SCLD_CODE_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace scld {

using Symbol = std::uint32_t;

/// Violated precondition on shapes or contents (mismatched n/q, bad index,
/// broken invariant). Distinct from "the answer is negative".
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free set of codeword indices.
class CoalitionIndexSet {
public:
    CoalitionIndexSet() = default;
    explicit CoalitionIndexSet(std::vector<std::size_t> members);
    CoalitionIndexSet(std::initializer_list<std::size_t> members);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(std::size_t index) const;
    std::span<const std::size_t> members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    std::size_t operator[](std::size_t i) const { return members_[i]; }

    /// True when every member of this set is in `other`.
    bool is_subset_of(const CoalitionIndexSet& other) const;

    friend bool operator==(const CoalitionIndexSet&, const CoalitionIndexSet&) = default;
    friend auto operator<=>(const CoalitionIndexSet&, const CoalitionIndexSet&) = default;

private:
    std::vector<std::size_t> members_;
};

std::string to_string(const CoalitionIndexSet& s);

/// An (n, M, q) code: M distinct length-n words over {0, ..., q-1}, stored
/// row-major in construction order.
class Code {
public:
    /// Validates every invariant; throws ShapeError naming the violated one
    /// ("symbol out of range", "duplicate codeword", ...).
    Code(std::size_t q, std::size_t n, std::vector<Symbol> symbols, std::string provenance = {});

    static Code from_rows(std::size_t q, const std::vector<std::vector<Symbol>>& rows,
                          std::string provenance = {});

    std::size_t alphabet() const { return q_; }
    std::size_t length() const { return n_; }
    std::size_t size() const { return m_; }
    const std::string& provenance() const { return provenance_; }
    void set_provenance(std::string tag) { provenance_ = std::move(tag); }

    std::span<const Symbol> codeword(std::size_t i) const {
        return {symbols_.data() + i * n_, n_};
    }
    std::span<const Symbol> symbols() const { return symbols_; }
    std::vector<std::vector<Symbol>> rows() const;

    /// Code made of the first `count` codewords.
    Code prefix(std::size_t count) const;
    /// Code made of the given codewords, in index order.
    Code subcode(const CoalitionIndexSet& keep) const;

    /// Information rate log_q(M) / n.
    double rate() const;

    friend bool operator==(const Code& a, const Code& b) {
        return a.q_ == b.q_ && a.n_ == b.n_ && a.symbols_ == b.symbols_;
    }

private:
    std::size_t q_;
    std::size_t n_;
    std::size_t m_;
    std::vector<Symbol> symbols_;
    std::string provenance_;
};

/// Length-n vector of nonempty subsets of the alphabet. Each position is a
/// bit mask of ceil(q / 64) words; for q <= 64 a position is a single word.
class EvidenceVector {
public:
    using Word = std::uint64_t;

    EvidenceVector() = default;
    /// All-empty vector; only valid as scratch space until filled.
    EvidenceVector(std::size_t q, std::size_t n);

    /// Throws ShapeError on empty sets or out-of-range symbols.
    static EvidenceVector from_sets(std::size_t q, const std::vector<std::vector<Symbol>>& sets);

    std::size_t alphabet() const { return q_; }
    std::size_t length() const { return n_; }
    std::size_t words_per_position() const { return words_; }

    bool contains(std::size_t pos, Symbol s) const {
        return (bits_[pos * words_ + s / 64] >> (s % 64)) & 1u;
    }
    void insert(std::size_t pos, Symbol s) { bits_[pos * words_ + s / 64] |= Word{1} << (s % 64); }
    std::span<const Word> position(std::size_t pos) const {
        return {bits_.data() + pos * words_, words_};
    }
    std::size_t set_size(std::size_t pos) const;
    std::vector<Symbol> symbols(std::size_t pos) const;
    std::vector<std::vector<Symbol>> sets() const;
    std::span<const Word> raw() const { return bits_; }
    std::span<Word> raw() { return bits_; }
    void clear();

    std::uint64_t hash() const;

    friend bool operator==(const EvidenceVector& a, const EvidenceVector& b) {
        return a.q_ == b.q_ && a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    std::size_t q_ = 0;
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> bits_;
};

/// Positionwise symbol sets of the coalition. Throws ShapeError("empty
/// coalition") or ShapeError on an index outside the code.
EvidenceVector desc(const Code& code, const CoalitionIndexSet& coalition);

/// Overwrites `out` (which must already have the code's shape) with the
/// descendant of the given indices. No validation.
void desc_into(const Code& code, std::span<const std::size_t> indices, EvidenceVector& out);

/// desc(indices) == d, without materialising the descendant; stops at the
/// first differing position.
bool desc_equals(const Code& code, std::span<const std::size_t> indices, const EvidenceVector& d);

/// a(i) in d(i) for every position. Throws ShapeError("shape error") on
/// mismatched dimensions.
bool covers(std::span<const Symbol> word, const EvidenceVector& d);

/// Indices of every codeword covered by d, ascending.
CoalitionIndexSet residual(const Code& code, const EvidenceVector& d);

/// Number of nonempty subsets of size at most t of an M-set.
std::uint64_t coalition_count(std::size_t M, std::size_t t);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Streams every subset of {0..M-1} with sizes 1..t, sizes ascending and
/// lexicographic within a size. Single consumer.
///
///   CoalitionEnumerator e(M, t);
///   while (e.next()) use(e.current());
class CoalitionEnumerator {
public:
    CoalitionEnumerator(std::size_t M, std::size_t t);
    /// Like the above, but only sizes in [min_size, max_size].
    CoalitionEnumerator(std::size_t M, std::size_t min_size, std::size_t max_size);

    bool next();
    std::span<const std::size_t> current() const { return current_; }

private:
    std::size_t m_;
    std::size_t max_size_;
    std::size_t size_;
    bool started_ = false;
    std::vector<std::size_t> current_;
};

/// Advances `combo` (sorted, entries < M) to the next combination of the
/// same size in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::size_t>& combo, std::size_t M);

}  // namespace scld

#endif  // SCLD_CODE_HPP
