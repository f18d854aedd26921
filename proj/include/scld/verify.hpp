#ifndef SCLD_VERIFY_HPP
#define SCLD_VERIFY_HPP

// Exhaustive property oracles. Every check enumerates coalitions, so the
// cost is governed by sum_{s<=t} C(M, s); scans beyond
// kernels::kCoalitionBudget throw std::length_error.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scld/code.hpp"

namespace scld {

enum class Property { Frameproof, Separable, Hld, Scld };

std::string_view to_string(Property p);
/// Accepts the CLI spellings fpc, sc, hld, scld.
Property property_from_string(std::string_view name);

struct Witness {
    CoalitionIndexSet coalition;
    /// Separability failures: the second coalition with the same descendant.
    std::optional<CoalitionIndexSet> other;
    /// Frameproof failures: the covered outside codeword.
    std::optional<std::size_t> framed;
    /// List-size failures: the residual of `coalition`'s descendant.
    std::optional<std::size_t> residual_size;
};

struct VerifyReport {
    Property property = Property::Scld;
    std::size_t t = 0;
    bool holds = false;
    /// HLD/SCLD: largest residual over the scanned coalitions.
    std::optional<std::size_t> minimal_list_size;
    /// The L the property was checked against, if one was given.
    std::optional<std::size_t> list_bound;
    /// Which coalitions produced minimal_list_size: "exact-t" or "1..t".
    std::string convention;
    std::optional<Witness> witness;
    std::uint64_t coalitions_examined = 0;
};

/// Throws ShapeError("t too large") unless 1 <= t < M.
VerifyReport is_frameproof(const Code& code, std::size_t t);
VerifyReport is_separable(const Code& code, std::size_t t);
/// Residuals over coalitions of size exactly t. Without L the report only
/// measures the list size (holds = true).
VerifyReport is_hld(const Code& code, std::size_t t, std::optional<std::size_t> L = std::nullopt);
/// Separable, with residuals measured over sizes 1..t.
VerifyReport is_scld(const Code& code, std::size_t t, std::optional<std::size_t> L = std::nullopt);

VerifyReport verify(const Code& code, std::size_t t, Property property, std::optional<std::size_t> L = std::nullopt);

std::string to_json(const VerifyReport& report);

struct Lemma1Report {
    bool consistent = true;
    std::vector<std::string> violations;
};

/// Checks the relations between the four properties on one code:
///   FPC(t)  <=>  SCLD(t) with list size <= t        (only when t < M)
///   SC(t)   <=>  SCLD(t) ignoring list size
///   SCLD(t; L) <=> SC(t) and HLD(t; L), both list-size conventions agree
///   SCLD(t; L) => SCLD(t; L') for L' >= L, and fails for L' < L
Lemma1Report lemma1_crosscheck(const Code& code, std::size_t t);

}  // namespace scld

#endif  // SCLD_VERIFY_HPP
