#include "scld/verify.hpp"

#include "json.hpp"
#include "scld/kernels.hpp"

namespace scld {

namespace {

void check_t(const Code& code, std::size_t t) {
    if (t == 0) throw ShapeError("t must be at least 1");
    if (t > code.size()) throw ShapeError("t too large");
}

// Position of a size-|c| combination in lexicographic order.
std::uint64_t rank_combination(std::size_t M, const CoalitionIndexSet& c) {
    std::uint64_t rank = 0;
    const std::size_t k = c.size();
    std::size_t prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t v = (i == 0 ? 0 : prev + 1); v < c[i]; ++v) rank += binomial(M - 1 - v, k - 1 - i);
        prev = c[i];
    }
    return rank;
}

}  // namespace

std::string_view to_string(Property p) {
    switch (p) {
        case Property::Frameproof: return "fpc";
        case Property::Separable: return "sc";
        case Property::Hld: return "hld";
        case Property::Scld: return "scld";
    }
    return "?";
}

Property property_from_string(std::string_view name) {
    if (name == "fpc") return Property::Frameproof;
    if (name == "sc") return Property::Separable;
    if (name == "hld") return Property::Hld;
    if (name == "scld") return Property::Scld;
    throw std::invalid_argument("unknown property \"" + std::string(name) + "\"");
}

VerifyReport is_frameproof(const Code& code, std::size_t t) {
    if (t == 0) throw ShapeError("t must be at least 1");
    if (t >= code.size()) throw ShapeError("t too large");
    VerifyReport r;
    r.property = Property::Frameproof;
    r.t = t;
    auto framing = kernels::find_framing(code, t);
    r.holds = !framing;
    if (framing) {
        r.witness = Witness{framing->coalition, std::nullopt, framing->framed, std::nullopt};
        r.coalitions_examined = rank_combination(code.size(), framing->coalition) + 1;
    } else {
        r.coalitions_examined = binomial(code.size(), t);
    }
    return r;
}

VerifyReport is_separable(const Code& code, std::size_t t) {
    check_t(code, t);
    VerifyReport r;
    r.property = Property::Separable;
    r.t = t;
    auto collision = kernels::find_collision(code, t);
    r.holds = !collision;
    if (collision) r.witness = Witness{collision->first, collision->second, std::nullopt, std::nullopt};
    r.coalitions_examined = coalition_count(code.size(), t);
    return r;
}

VerifyReport is_hld(const Code& code, std::size_t t, std::optional<std::size_t> L) {
    check_t(code, t);
    VerifyReport r;
    r.property = Property::Hld;
    r.t = t;
    r.convention = "exact-t";
    r.list_bound = L;
    const auto ext = kernels::max_residual(code, t, t);
    r.minimal_list_size = ext.max_residual;
    r.coalitions_examined = ext.examined;
    r.holds = !L || ext.max_residual <= *L;
    if (!r.holds) r.witness = Witness{ext.argmax, std::nullopt, std::nullopt, ext.max_residual};
    return r;
}

VerifyReport is_scld(const Code& code, std::size_t t, std::optional<std::size_t> L) {
    check_t(code, t);
    VerifyReport r;
    r.property = Property::Scld;
    r.t = t;
    r.convention = "1..t";
    r.list_bound = L;
    const auto sep = is_separable(code, t);
    const auto ext = kernels::max_residual(code, 1, t);
    r.minimal_list_size = ext.max_residual;
    r.coalitions_examined = ext.examined;
    if (!sep.holds) {
        r.holds = false;
        r.witness = sep.witness;
    } else if (L && ext.max_residual > *L) {
        r.holds = false;
        r.witness = Witness{ext.argmax, std::nullopt, std::nullopt, ext.max_residual};
    } else {
        r.holds = true;
    }
    return r;
}

VerifyReport verify(const Code& code, std::size_t t, Property property, std::optional<std::size_t> L) {
    switch (property) {
        case Property::Frameproof: return is_frameproof(code, t);
        case Property::Separable: return is_separable(code, t);
        case Property::Hld: return is_hld(code, t, L);
        case Property::Scld: return is_scld(code, t, L);
    }
    throw std::logic_error("unreachable");
}

std::string to_json(const VerifyReport& r) {
    using json = nlohmann::ordered_json;
    json j;
    j["property"] = std::string(to_string(r.property));
    j["t"] = r.t;
    j["holds"] = r.holds;
    j["minimal_list_size"] = r.minimal_list_size ? json(*r.minimal_list_size) : json(nullptr);
    if (r.list_bound) j["list_bound"] = *r.list_bound;
    if (!r.convention.empty()) j["list_size_convention"] = r.convention;
    if (r.witness) {
        const auto& w = *r.witness;
        json jw;
        jw["coalition"] = std::vector<std::size_t>(w.coalition.begin(), w.coalition.end());
        if (w.other) jw["other"] = std::vector<std::size_t>(w.other->begin(), w.other->end());
        if (w.framed) jw["framed"] = *w.framed;
        if (w.residual_size) jw["residual_size"] = *w.residual_size;
        j["witness"] = std::move(jw);
    } else {
        j["witness"] = nullptr;
    }
    j["coalitions_examined"] = r.coalitions_examined;
    return j.dump() + "\n";
}

Lemma1Report lemma1_crosscheck(const Code& code, std::size_t t) {
    Lemma1Report out;
    auto fail = [&](std::string msg) {
        out.consistent = false;
        out.violations.push_back(std::move(msg));
    };

    const auto sc = is_separable(code, t);
    const auto scld = is_scld(code, t);
    const auto hld = is_hld(code, t);
    const std::size_t L = *scld.minimal_list_size;

    if (t < code.size()) {
        const bool fpc = is_frameproof(code, t).holds;
        const bool scld_t = is_scld(code, t, t).holds;
        if (fpc != scld_t) fail("FPC(t) disagrees with SCLD(t) at list size t");
    }
    if (sc.holds != scld.holds) fail("SC(t) disagrees with SCLD(t) ignoring list size");

    if (*hld.minimal_list_size != L) {
        fail("exact-t list size " + std::to_string(*hld.minimal_list_size) + " != 1..t list size " +
             std::to_string(L));
    }
    if (is_scld(code, t, L).holds != (sc.holds && is_hld(code, t, L).holds)) {
        fail("SCLD(t; L) disagrees with SC(t) and HLD(t; L)");
    }

    if (sc.holds) {
        if (!is_scld(code, t, L + 1).holds) fail("SCLD list size not monotone upward");
        if (L > 0 && is_scld(code, t, L - 1).holds) fail("SCLD holds below its measured list size");
    }
    return out;
}

}  // namespace scld
