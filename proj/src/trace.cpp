#include "scld/trace.hpp"

#include "json.hpp"
#include "scld/constructions.hpp"
#include "scld/kernels.hpp"

namespace scld {

namespace {

void check_shape(const Code& code, const EvidenceVector& d) {
    if (d.alphabet() != code.alphabet() || d.length() != code.length()) throw ShapeError("shape error");
}

TraceResult scan_candidates(const Code& code, const CoalitionIndexSet& W, std::size_t t, const EvidenceVector& d,
                            bool diagnostic, std::string algorithm) {
    TraceResult r;
    r.algorithm = std::move(algorithm);
    r.candidate_count = W.size();
    if (diagnostic) {
        const auto all = kernels::all_matching_subsets(code, W, t, d);
        if (all.size() > 1) {
            throw AmbiguousEvidence("evidence matches " + to_string(all[0]) + " and " + to_string(all[1]));
        }
    }
    const auto m = kernels::first_matching_subset(code, W, t, d);
    r.subsets_tested = m.tested;
    if (m.match) {
        r.status = TraceStatus::Identified;
        r.coalition = *m.match;
    }
    return r;
}

}  // namespace

std::string_view to_string(TraceStatus s) {
    switch (s) {
        case TraceStatus::Identified: return "identified";
        case TraceStatus::NoMatch: return "no-match";
        case TraceStatus::InvalidEvidence: return "invalid-evidence";
    }
    return "?";
}

TraceResult trace_scld(const Code& code, std::size_t t, std::size_t L, const EvidenceVector& d, bool diagnostic) {
    check_shape(code, d);
    const auto W = residual(code, d);
    if (W.size() > L) {
        throw ListOverflow("list overflow: " + std::to_string(W.size()) + " candidates exceed L = " +
                           std::to_string(L));
    }
    return scan_candidates(code, W, t, d, diagnostic, "scld");
}

TraceResult trace_fpc(const Code& code, std::size_t t, const EvidenceVector& d) {
    check_shape(code, d);
    TraceResult r;
    r.algorithm = "fpc";
    auto W = residual(code, d);
    r.candidate_count = W.size();
    r.subsets_tested = 1;
    if (W.empty() || W.size() > t || !(desc(code, W) == d)) {
        r.status = TraceStatus::InvalidEvidence;
        return r;
    }
    r.status = TraceStatus::Identified;
    r.coalition = std::move(W);
    return r;
}

TraceResult trace_sc(const Code& code, std::size_t t, const EvidenceVector& d, bool diagnostic) {
    check_shape(code, d);
    std::vector<std::size_t> everyone(code.size());
    for (std::size_t i = 0; i < everyone.size(); ++i) everyone[i] = i;
    auto r = scan_candidates(code, CoalitionIndexSet(std::move(everyone)), t, d, diagnostic, "sc");
    r.candidate_count = code.size();
    return r;
}

TraceResult fast_trace_x3(const GaloisField& field, const EvidenceVector& d) {
    if (field.characteristic() != 2) throw FieldError("characteristic 2 required");
    const std::uint32_t l = field.degree();
    if (d.alphabet() != 2 || d.length() != 2 * l) throw ShapeError("shape error");

    TraceResult r;
    r.algorithm = "x3";
    r.subsets_tested = 1;
    auto invalid = [&] {
        r.status = TraceStatus::InvalidEvidence;
        r.coalition = {};
        return r;
    };

    // u (v): bit i set where position i of the first (second) half holds both symbols.
    std::uint32_t u = 0, v = 0, x_single = 0;
    for (std::uint32_t i = 0; i < l; ++i) {
        if (d.set_size(i) == 2) u |= 1u << i;
        if (d.contains(i, 1)) x_single |= 1u << i;
        if (d.set_size(l + i) == 2) v |= 1u << i;
    }

    std::vector<FieldElement> members;
    if (u == 0) {
        if (v != 0) return invalid();
        members.push_back({x_single});
    } else {
        const FieldElement U{u}, V{v};
        const FieldElement c = field.add(field.one(), field.div(V, field.pow(U, 3)));
        FieldElement z;
        try {
            z = field.solve_quadratic(c);
        } catch (const FieldError&) {
            return invalid();
        }
        const FieldElement x = field.mul(U, z);
        const FieldElement y = field.add(x, U);
        members = {x, y};
    }

    // Re-check the candidate coalition against every position of d.
    EvidenceVector check(2, 2 * l);
    for (auto x : members) {
        const auto word = x3_codeword(field, x);
        for (std::size_t i = 0; i < word.size(); ++i) check.insert(i, word[i]);
    }
    if (!(check == d)) return invalid();

    std::vector<std::size_t> idx;
    for (auto x : members) idx.push_back(x.value);
    r.status = TraceStatus::Identified;
    r.coalition = CoalitionIndexSet(std::move(idx));
    r.candidate_count = r.coalition.size();
    return r;
}

TraceResult fast_trace_x3(std::uint32_t l, const EvidenceVector& d) { return fast_trace_x3(GaloisField(2, l), d); }

std::string to_json(const TraceResult& r) {
    nlohmann::ordered_json j;
    j["status"] = std::string(to_string(r.status));
    j["algorithm"] = r.algorithm;
    if (r.status == TraceStatus::Identified) {
        j["coalition"] = std::vector<std::size_t>(r.coalition.begin(), r.coalition.end());
    } else {
        j["coalition"] = nullptr;
    }
    j["candidate_count"] = r.candidate_count;
    j["subsets_tested"] = r.subsets_tested;
    return j.dump() + "\n";
}

}  // namespace scld
