#ifndef SCLD_KERNELS_HPP
#define SCLD_KERNELS_HPP

// Coalition-scanning kernels shared by verification, tracing and
// expurgation. Each kernel has an OpenMP implementation (scld::kernels) and a
// plain serial one (scld::kernels::reference) that the tests and benchmarks
// hold it against. Both return identical results, including which witness is
// reported: ties are always broken by the fixed coalition order (sizes
// ascending, lexicographic within a size).

#include <cstdint>
#include <optional>
#include <vector>

#include "scld/code.hpp"

namespace scld::kernels {

/// Hard cap on the number of coalitions a single scan may visit.
inline constexpr std::uint64_t kCoalitionBudget = 100'000'000;

struct ResidualExtreme {
    std::size_t max_residual = 0;
    CoalitionIndexSet argmax;  // first coalition attaining the maximum
    std::uint64_t examined = 0;
};

struct Framing {
    CoalitionIndexSet coalition;
    std::size_t framed = 0;
};

struct Collision {
    CoalitionIndexSet first;
    CoalitionIndexSet second;
};

struct SubsetMatch {
    std::optional<CoalitionIndexSet> match;  // indices into the candidate list's codewords
    std::uint64_t tested = 0;               // subsets up to and including the match
};

/// Max |residual(desc(S))| over coalitions S with min_size <= |S| <= max_size.
ResidualExtreme max_residual(const Code& code, std::size_t min_size, std::size_t max_size);

/// First coalition of size exactly t whose descendant covers an outside codeword.
std::optional<Framing> find_framing(const Code& code, std::size_t t);

/// Two distinct coalitions of size <= t with equal descendants, via hashing
/// with exact re-check. Reports the pair whose later member comes first in
/// coalition order (the pair a pairwise scan would find first).
std::optional<Collision> find_collision(const Code& code, std::size_t t);

/// Every class of >= 2 coalitions of size <= t sharing one descendant.
std::vector<std::vector<CoalitionIndexSet>> collision_groups(const Code& code, std::size_t t);

/// Every coalition with min_size <= |S| <= max_size whose residual exceeds L.
std::vector<CoalitionIndexSet> coalitions_exceeding(const Code& code, std::size_t min_size, std::size_t max_size,
                                                    std::size_t L);

/// First subset S of `candidates` with 1 <= |S| <= t and desc(S) == d, in
/// coalition order over positions within `candidates`; returned indices are
/// codeword indices.
SubsetMatch first_matching_subset(const Code& code, const CoalitionIndexSet& candidates, std::size_t t,
                                  const EvidenceVector& d);

/// All such subsets (diagnostic use).
std::vector<CoalitionIndexSet> all_matching_subsets(const Code& code, const CoalitionIndexSet& candidates,
                                                    std::size_t t, const EvidenceVector& d);

namespace reference {

ResidualExtreme max_residual(const Code& code, std::size_t min_size, std::size_t max_size);
std::optional<Framing> find_framing(const Code& code, std::size_t t);
/// O(N^2) pairwise descendant comparison.
std::optional<Collision> find_collision(const Code& code, std::size_t t);
std::vector<CoalitionIndexSet> coalitions_exceeding(const Code& code, std::size_t min_size, std::size_t max_size,
                                                    std::size_t L);
SubsetMatch first_matching_subset(const Code& code, const CoalitionIndexSet& candidates, std::size_t t,
                                  const EvidenceVector& d);

}  // namespace reference

/// Lexicographic rank <-> combination for fixed size k over {0..M-1}.
std::vector<std::size_t> unrank_combination(std::size_t M, std::size_t k, std::uint64_t rank);

/// Covered-codeword count, stopping once it exceeds `stop_above`.
std::size_t count_covered(const Code& code, const EvidenceVector& d, std::size_t stop_above = SIZE_MAX);

}  // namespace scld::kernels

#endif  // SCLD_KERNELS_HPP
