#ifndef SCLD_CONSTRUCTIONS_HPP
#define SCLD_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scld/code.hpp"
#include "scld/gf.hpp"

namespace scld {

/// Set system on points {0..v-1}. A packing when every block size lies in
/// `sizes` and each pair of points shares at most one block.
struct PackingDesign {
    std::size_t v = 0;
    std::vector<std::vector<std::size_t>> blocks;  // each sorted
    std::set<std::size_t> sizes;
};

/// Throws ShapeError naming the first broken packing condition.
void validate_packing(const PackingDesign& design);

/// PG(2, q): points are the nonzero triples over GF(q) whose first nonzero
/// coordinate is 1, numbered in lexicographic order; block i is the set of
/// points on the line with the same coordinates as point i.
PackingDesign projective_plane(std::uint32_t q);

/// PG(2, q) minus its last block and that block's least point, renumbered.
PackingDesign truncate_plane(std::uint32_t q);

/// Length-2 code over alphabet v: codewords (i, b) for b in block i, ordered
/// by i then b. Requires as many blocks as points.
Code packing_to_scld(const PackingDesign& design);

/// Evaluations at elements 0..l-1 of GF(q) of every polynomial of degree
/// < ceil(l/t). Polynomial number j has coefficient i equal to the i-th
/// base-q digit of j.
Code fpc_poly_eval(std::uint32_t q, std::size_t l, std::size_t t);

/// Two-part frameproof code over {inf} u GF(m)^2 with q = m^2 + 1 symbols
/// (inf -> 0, (a, b) -> 1 + a*m + b). beta0, beta1 are elements 0 and 1;
/// alpha_i is element i + 1.
Code fpc_construction4(std::uint32_t m, std::size_t l);

/// Replaces each outer symbol s by inner codeword s (the first q' inner
/// codewords serve as the bijection).
Code concatenate(const Code& inner, const Code& outer);

/// {(x, x^3)} over GF(2^l); codeword i is x with integer value i. Bit j of x
/// is position j, bit j of x^3 is position l + j.
Code x3_code(std::uint32_t l);
std::vector<Symbol> x3_codeword(const GaloisField& field, FieldElement x);

enum class ExpurgationTarget { Sc, Scld, Hld };

struct ExpurgationParams {
    std::size_t n = 0;
    std::size_t q = 2;
    std::size_t initial_size = 0;
    /// Binary Bernoulli(p) symbols; uniform symbols when empty.
    std::optional<double> p;
    std::size_t t = 2;
    ExpurgationTarget target = ExpurgationTarget::Sc;
    /// List size for Scld/Hld targets.
    std::size_t L = 0;
    /// Keep only words of weight floor(p (n + 1)) (binary mode).
    bool weight_filter = false;
    std::uint64_t seed = 0;
};

struct ExpurgationReport {
    std::size_t initial_size = 0;
    std::size_t removed_bad_weight = 0;
    std::size_t removed_bad_pairs = 0;  // includes repeated samples
    std::size_t removed_bad_sets = 0;
    std::size_t rounds = 0;
    std::size_t final_size = 0;
    ExpurgationParams params;
};

struct ExpurgatedCode {
    Code code;
    ExpurgationReport report;
};

/// Random code with expurgation: sample, optionally filter by weight, then
/// repeatedly delete the largest index of every colliding coalition pair
/// (Sc, Scld) and of every coalition whose residual exceeds L (Scld: sizes
/// 1..t, Hld: size t) until none remain. The result is checked with the
/// matching oracle. Throws std::runtime_error("expurgated to empty").
ExpurgatedCode random_expurgated(const ExpurgationParams& params);

}  // namespace scld

#endif  // SCLD_CONSTRUCTIONS_HPP
