#ifndef SCLD_TRACE_HPP
#define SCLD_TRACE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "scld/code.hpp"
#include "scld/gf.hpp"

namespace scld {

enum class TraceStatus { Identified, NoMatch, InvalidEvidence };

std::string_view to_string(TraceStatus s);

struct TraceResult {
    TraceStatus status = TraceStatus::NoMatch;
    CoalitionIndexSet coalition;      // set when identified
    std::size_t candidate_count = 0;  // |W| for the residual-based tracers
    std::uint64_t subsets_tested = 0;
    std::string algorithm;
};

/// The residual exceeded the list size the caller promised.
class ListOverflow : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Diagnostic mode found more than one matching coalition.
class AmbiguousEvidence : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Two steps: W = residual(d); then the first S subset of W, |S| <= t, with
/// desc(S) = d. Throws ListOverflow when |W| > L. With `diagnostic` set,
/// every subset of W is tested and a second match throws AmbiguousEvidence.
TraceResult trace_scld(const Code& code, std::size_t t, std::size_t L, const EvidenceVector& d,
                       bool diagnostic = false);

/// For frameproof codes the residual is the coalition.
TraceResult trace_fpc(const Code& code, std::size_t t, const EvidenceVector& d);

/// Scans every coalition of size <= t of the whole code.
TraceResult trace_sc(const Code& code, std::size_t t, const EvidenceVector& d, bool diagnostic = false);

/// Algebraic decoder for the {(x, x^3)} code over `field` (characteristic 2),
/// for coalitions of size <= 2. Coalition indices are the integer values of
/// the x components, matching x3_code().
TraceResult fast_trace_x3(const GaloisField& field, const EvidenceVector& d);
TraceResult fast_trace_x3(std::uint32_t l, const EvidenceVector& d);

std::string to_json(const TraceResult& r);

}  // namespace scld

#endif  // SCLD_TRACE_HPP
