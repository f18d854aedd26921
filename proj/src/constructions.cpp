#include "scld/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <sstream>

#include "scld/kernels.hpp"
#include "scld/verify.hpp"

namespace scld {

namespace {

// Horner evaluation; coeffs low-order first.
FieldElement evaluate(const GaloisField& F, const std::vector<FieldElement>& coeffs, FieldElement x) {
    FieldElement acc = F.zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
    return acc;
}

// Polynomial number j: coefficient i is the i-th base-q digit of j.
std::vector<FieldElement> polynomial(const GaloisField& F, std::uint64_t j, std::size_t terms) {
    std::vector<FieldElement> c(terms);
    for (std::size_t i = 0; i < terms; ++i) {
        c[i] = F.element(static_cast<std::uint32_t>(j % F.order()));
        j /= F.order();
    }
    return c;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

void validate_packing(const PackingDesign& d) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        const auto& blk = d.blocks[b];
        if (!d.sizes.empty() && !d.sizes.count(blk.size())) {
            throw ShapeError("block " + std::to_string(b) + " has size outside K");
        }
        for (std::size_t i = 0; i < blk.size(); ++i) {
            if (blk[i] >= d.v) throw ShapeError("block point out of range");
            if (i > 0 && blk[i] <= blk[i - 1]) throw ShapeError("block not sorted/distinct");
            for (std::size_t j = 0; j < i; ++j) {
                if (!seen.emplace(std::pair{blk[j], blk[i]}, b).second) {
                    throw ShapeError("pair {" + std::to_string(blk[j]) + "," + std::to_string(blk[i]) +
                                     "} in two blocks");
                }
            }
        }
    }
}

PackingDesign projective_plane(std::uint32_t q) {
    const auto F = GaloisField::of_order(q);
    std::vector<std::array<FieldElement, 3>> pts;
    for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = 0; b < q; ++b) {
            for (std::uint32_t c = 0; c < q; ++c) {
                const std::array<std::uint32_t, 3> v{a, b, c};
                const auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
                if (lead == v.end() || *lead != 1) continue;
                pts.push_back({F.element(a), F.element(b), F.element(c)});
            }
        }
    }
    PackingDesign d;
    d.v = pts.size();
    d.sizes = {q + 1};
    for (const auto& line : pts) {
        std::vector<std::size_t> blk;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            FieldElement dot = F.zero();
            for (int k = 0; k < 3; ++k) dot = F.add(dot, F.mul(line[k], pts[i][k]));
            if (dot == F.zero()) blk.push_back(i);
        }
        d.blocks.push_back(std::move(blk));
    }
    return d;
}

PackingDesign truncate_plane(std::uint32_t q) {
    auto plane = projective_plane(q);
    const std::size_t gone = plane.blocks.back().front();
    plane.blocks.pop_back();
    PackingDesign d;
    d.v = plane.v - 1;
    d.sizes = {q, q + 1};
    for (const auto& blk : plane.blocks) {
        std::vector<std::size_t> nb;
        for (auto p : blk) {
            if (p != gone) nb.push_back(p > gone ? p - 1 : p);
        }
        d.blocks.push_back(std::move(nb));
    }
    return d;
}

Code packing_to_scld(const PackingDesign& design) {
    if (design.blocks.size() != design.v) throw ShapeError("block count mismatch");
    std::vector<Symbol> sym;
    for (std::size_t i = 0; i < design.v; ++i) {
        for (auto b : design.blocks[i]) {
            sym.push_back(static_cast<Symbol>(i));
            sym.push_back(static_cast<Symbol>(b));
        }
    }
    std::ostringstream tag;
    tag << "packing v=" << design.v << " b=" << design.blocks.size();
    return Code(design.v, 2, std::move(sym), tag.str());
}

Code fpc_poly_eval(std::uint32_t q, std::size_t l, std::size_t t) {
    if (t < 2) throw ShapeError("t must be at least 2");
    if (l < 2) throw ShapeError("l must be at least 2");
    const auto F = GaloisField::of_order(q);
    if (l > q) throw ShapeError("not enough evaluation points");
    const std::size_t terms = (l + t - 1) / t;
    const std::uint64_t count = ipow(q, terms);
    if (count > (1u << 24)) throw ShapeError("code too large");
    std::vector<Symbol> sym;
    sym.reserve(count * l);
    for (std::uint64_t j = 0; j < count; ++j) {
        const auto f = polynomial(F, j, terms);
        for (std::size_t i = 0; i < l; ++i) sym.push_back(evaluate(F, f, F.element(static_cast<std::uint32_t>(i))).value);
    }
    std::ostringstream tag;
    tag << "poly-fpc q=" << q << " l=" << l << " t=" << t;
    return Code(q, l, std::move(sym), tag.str());
}

Code fpc_construction4(std::uint32_t m, std::size_t l) {
    if (l < 4 || l % 2) throw ShapeError("l must be an even integer >= 4");
    if (m < l + 1) throw ShapeError("m must be at least l + 1");
    const auto F = GaloisField::of_order(m);
    const std::size_t h = l / 2;
    auto pair_symbol = [m](FieldElement a, FieldElement b) { return static_cast<Symbol>(1 + a.value * m + b.value); };
    const FieldElement beta0 = F.element(0), beta1 = F.element(1);
    std::vector<FieldElement> alpha;
    for (std::size_t i = 1; i < l; ++i) alpha.push_back(F.element(static_cast<std::uint32_t>(i + 1)));

    std::vector<Symbol> sym;
    // Part 1: deg f = h - 1 exactly, deg g <= h - 1.
    const std::uint64_t nf = ipow(m, h), ng = ipow(m, h);
    for (std::uint64_t jf = 0; jf < nf; ++jf) {
        const auto f = polynomial(F, jf, h);
        if (f.back() == F.zero()) continue;
        for (std::uint64_t jg = 0; jg < ng; ++jg) {
            const auto g = polynomial(F, jg, h);
            sym.push_back(0);
            for (auto a : alpha) sym.push_back(pair_symbol(evaluate(F, f, a), evaluate(F, g, a)));
        }
    }
    // Part 2: deg s <= h - 2, deg t <= h.
    const std::uint64_t ns = ipow(m, h - 1), nt = ipow(m, h + 1);
    for (std::uint64_t js = 0; js < ns; ++js) {
        const auto s = polynomial(F, js, h - 1);
        for (std::uint64_t jt = 0; jt < nt; ++jt) {
            const auto tp = polynomial(F, jt, h + 1);
            sym.push_back(pair_symbol(evaluate(F, tp, beta0), evaluate(F, tp, beta1)));
            for (auto a : alpha) sym.push_back(pair_symbol(evaluate(F, s, a), evaluate(F, tp, a)));
        }
    }
    std::ostringstream tag;
    tag << "c4-fpc m=" << m << " l=" << l;
    return Code(static_cast<std::size_t>(m) * m + 1, l, std::move(sym), tag.str());
}

Code concatenate(const Code& inner, const Code& outer) {
    if (inner.size() < outer.alphabet()) throw ShapeError("bijection impossible");
    const std::size_t n1 = inner.length();
    std::vector<Symbol> sym;
    sym.reserve(outer.size() * outer.length() * n1);
    for (std::size_t j = 0; j < outer.size(); ++j) {
        for (auto s : outer.codeword(j)) {
            const auto w = inner.codeword(s);
            sym.insert(sym.end(), w.begin(), w.end());
        }
    }
    std::string tag = "concat(" + inner.provenance() + " | " + outer.provenance() + ")";
    return Code(inner.alphabet(), outer.length() * n1, std::move(sym), std::move(tag));
}

std::vector<Symbol> x3_codeword(const GaloisField& field, FieldElement x) {
    const std::uint32_t l = field.degree();
    const std::uint32_t cube = field.pow(x, 3).value;
    std::vector<Symbol> w(2 * l);
    for (std::uint32_t j = 0; j < l; ++j) {
        w[j] = (x.value >> j) & 1u;
        w[l + j] = (cube >> j) & 1u;
    }
    return w;
}

Code x3_code(std::uint32_t l) {
    if (l < 2) throw FieldError("field unsupported");
    const GaloisField F(2, l);
    std::vector<Symbol> sym;
    sym.reserve(std::size_t{F.order()} * 2 * l);
    for (std::uint32_t i = 0; i < F.order(); ++i) {
        const auto w = x3_codeword(F, F.element(i));
        sym.insert(sym.end(), w.begin(), w.end());
    }
    return Code(2, 2 * l, std::move(sym), "x3 l=" + std::to_string(l));
}

// ---------------------------------------------------------------------------

namespace {

std::string target_name(ExpurgationTarget t) {
    switch (t) {
        case ExpurgationTarget::Sc: return "sc";
        case ExpurgationTarget::Scld: return "scld";
        case ExpurgationTarget::Hld: return "hld";
    }
    return "?";
}

}  // namespace

ExpurgatedCode random_expurgated(const ExpurgationParams& prm) {
    if (prm.n == 0 || prm.q < 2) throw ShapeError("need n >= 1 and q >= 2");
    if (prm.p && (prm.q != 2 || !(*prm.p > 0.0 && *prm.p < 1.0))) {
        throw ShapeError("Bernoulli mode needs q = 2 and 0 < p < 1");
    }
    if (prm.weight_filter && !prm.p) throw ShapeError("weight filter needs p");
    if (prm.target != ExpurgationTarget::Sc && prm.L < prm.t) throw ShapeError("L must be at least t");

    ExpurgationReport rep;
    rep.params = prm;
    rep.initial_size = prm.initial_size;

    std::mt19937_64 rng(prm.seed);
    std::vector<std::vector<Symbol>> rows(prm.initial_size, std::vector<Symbol>(prm.n));
    if (prm.p) {
        std::bernoulli_distribution bit(*prm.p);
        for (auto& r : rows) {
            for (auto& s : r) s = bit(rng) ? 1 : 0;
        }
    } else {
        std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(prm.q - 1));
        for (auto& r : rows) {
            for (auto& s : r) s = sym(rng);
        }
    }

    if (prm.weight_filter) {
        const auto w = static_cast<std::size_t>(*prm.p * static_cast<double>(prm.n + 1));
        const auto before = rows.size();
        std::erase_if(rows, [w](const auto& r) {
            return static_cast<std::size_t>(std::count(r.begin(), r.end(), Symbol{1})) != w;
        });
        rep.removed_bad_weight = before - rows.size();
    }

    // A repeated sample is the smallest bad pair: two singletons with equal descendants.
    {
        std::vector<std::vector<Symbol>> kept;
        std::set<std::vector<Symbol>> seen;
        for (auto& r : rows) {
            if (seen.insert(r).second) {
                kept.push_back(std::move(r));
            } else {
                ++rep.removed_bad_pairs;
            }
        }
        rows = std::move(kept);
    }

    const bool check_pairs = prm.target != ExpurgationTarget::Hld;
    while (!rows.empty()) {
        const Code code = Code::from_rows(prm.q, rows);
        const std::size_t t = std::min(prm.t, code.size());
        std::set<std::size_t> from_pairs, from_sets;
        if (check_pairs) {
            for (const auto& group : kernels::collision_groups(code, t)) {
                for (std::size_t a = 0; a < group.size(); ++a) {
                    for (std::size_t b = a + 1; b < group.size(); ++b) {
                        from_pairs.insert(std::max(group[a].members().back(), group[b].members().back()));
                    }
                }
            }
        }
        if (prm.target != ExpurgationTarget::Sc) {
            const std::size_t lo = prm.target == ExpurgationTarget::Hld ? prm.t : 1;
            if (lo <= code.size()) {
                for (const auto& s : kernels::coalitions_exceeding(code, lo, t, prm.L)) {
                    if (!from_pairs.count(s.members().back())) from_sets.insert(s.members().back());
                }
            }
        }
        if (from_pairs.empty() && from_sets.empty()) break;
        ++rep.rounds;
        rep.removed_bad_pairs += from_pairs.size();
        rep.removed_bad_sets += from_sets.size();
        std::vector<std::vector<Symbol>> kept;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!from_pairs.count(i) && !from_sets.count(i)) kept.push_back(std::move(rows[i]));
        }
        rows = std::move(kept);
    }
    if (rows.empty()) throw std::runtime_error("expurgated to empty");

    std::ostringstream tag;
    tag << "random target=" << target_name(prm.target) << " n=" << prm.n << " q=" << prm.q;
    if (prm.p) tag << " p=" << *prm.p;
    tag << " t=" << prm.t;
    if (prm.target != ExpurgationTarget::Sc) tag << " L=" << prm.L;
    if (prm.weight_filter) tag << " weight-filter";
    tag << " M0=" << prm.initial_size << " seed=" << prm.seed;
    Code code = Code::from_rows(prm.q, rows, tag.str());
    rep.final_size = code.size();

    const std::size_t t = std::min(prm.t, code.size());
    bool ok = true;
    switch (prm.target) {
        case ExpurgationTarget::Sc: ok = is_separable(code, t).holds; break;
        case ExpurgationTarget::Scld: ok = is_scld(code, t, prm.L).holds; break;
        case ExpurgationTarget::Hld: ok = prm.t > code.size() || is_hld(code, t, prm.L).holds; break;
    }
    if (!ok) throw std::logic_error("expurgated code fails its oracle");
    return {std::move(code), rep};
}

}  // namespace scld
