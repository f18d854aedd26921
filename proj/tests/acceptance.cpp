// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "scld/attack.hpp"
#include "scld/bounds.hpp"
#include "scld/constructions.hpp"
#include "scld/dynamic.hpp"
#include "scld/seed.hpp"
#include "scld/trace.hpp"
#include "scld/verify.hpp"

using namespace scld;
using namespace scld::bounds;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget_seconds) {
        out.pass = false;
        out.detail += " (over time budget " + std::to_string(budget_seconds) + " s)";
    }
    if (!out.pass) ++failures;
    std::printf("%s %2d %-28s %8.3f s  %s\n", out.pass ? "PASS" : "FAIL", id, name, secs, out.detail.c_str());
    std::fflush(stdout);
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

Code c1() { return Code::from_rows(2, {{0, 0, 1}, {1, 0, 1}, {1, 1, 0}}); }
Code c2() { return Code::from_rows(2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

// Every coalition of size <= 2 traced back; returns the number of failures.
std::size_t trace_all(const Code& c, std::size_t L) {
    std::size_t bad = 0;
    CoalitionEnumerator e(c.size(), 2);
    while (e.next()) {
        const CoalitionIndexSet J(std::vector<std::size_t>(e.current().begin(), e.current().end()));
        const auto r = trace_scld(c, 2, L, desc(c, J));
        bad += r.status != TraceStatus::Identified || r.coalition != J;
    }
    return bad;
}

Outcome example1() {
    const auto a = is_scld(c1(), 2), b = is_scld(c2(), 2);
    const bool ok = a.holds && a.minimal_list_size == 3u && b.holds && b.minimal_list_size == 3u;
    return {ok, "C1 L=" + std::to_string(a.minimal_list_size.value_or(0)) +
                    ", C2 L=" + std::to_string(b.minimal_list_size.value_or(0))};
}

Outcome lemma1() {
    std::mt19937_64 rng(20240501);
    std::size_t bad = 0;
    for (int i = 0; i < 500; ++i) {
        std::uniform_int_distribution<std::size_t> qd(2, 3), nd(1, 6), md(2, 10);
        const std::size_t q = qd(rng), n = nd(rng);
        std::size_t cap = 1;
        for (std::size_t k = 0; k < n; ++k) cap *= q;
        const auto c = oracle::random_code(rng, q, n, std::min(md(rng), cap));
        bad += !lemma1_crosscheck(c, 2).consistent;
    }
    return {bad == 0, std::to_string(bad) + " inconsistencies over 500 codes"};
}

Outcome traceability() {
    std::vector<std::pair<std::string, Code>> fixtures{{"C1", c1()}, {"C2", c2()}};
    for (std::uint32_t q : {2u, 3u, 4u}) {
        fixtures.emplace_back("plane" + std::to_string(q), packing_to_scld(projective_plane(q)));
        fixtures.emplace_back("truncated" + std::to_string(q), packing_to_scld(truncate_plane(q)));
    }
    for (std::uint32_t l : {3u, 4u, 5u, 6u}) fixtures.emplace_back("x3_" + std::to_string(l), x3_code(l));
    fixtures.emplace_back("concat", concatenate(fpc_poly_eval(4, 4, 2), packing_to_scld(projective_plane(2))));

    std::size_t bad = 0, checked = 0;
    for (const auto& [name, c] : fixtures) {
        const auto report = is_scld(c, 2);
        if (!report.holds) return {false, name + " is not 2-SCLD"};
        bad += trace_all(c, *report.minimal_list_size);
        checked += c.size() + c.size() * (c.size() - 1) / 2;
    }
    return {bad == 0, std::to_string(checked) + " coalitions over " + std::to_string(fixtures.size()) +
                          " codes, " + std::to_string(bad) + " failures"};
}

Outcome packing_sizes() {
    std::ostringstream msg;
    bool ok = true;
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const auto full = packing_to_scld(projective_plane(q));
        const auto cut = packing_to_scld(truncate_plane(q));
        ok &= full.size() == (q + 1) * (q * q + q + 1);
        ok &= cut.size() == q * q * q + 2 * q * q;
        for (const auto* c : {&full, &cut}) {
            const auto r = is_scld(*c, 2);
            ok &= r.holds && *r.minimal_list_size <= 3;
        }
        msg << "q=" << q << ": " << full.size() << "/" << cut.size() << " ";
    }
    return {ok, msg.str()};
}

Outcome fast_decoding() {
    std::size_t bad = 0, pairs = 0;
    for (std::uint32_t l : {3u, 4u, 5u, 6u, 8u}) {
        const auto c = x3_code(l);
        CoalitionEnumerator e(c.size(), 2);
        while (e.next()) {
            const CoalitionIndexSet J(std::vector<std::size_t>(e.current().begin(), e.current().end()));
            const auto d = desc(c, J);
            const auto fast = fast_trace_x3(l, d);
            const auto slow = trace_scld(c, 2, c.size(), d);
            bad += fast.status != TraceStatus::Identified || fast.coalition != slow.coalition ||
                   slow.coalition != J;
            pairs += J.size() == 2;
        }
    }

    // Timed large-field decodes; evidence is built outside the clock.
    const GaloisField f(2, 16);
    std::mt19937_64 rng(16);
    std::uniform_int_distribution<std::uint32_t> pick(0, 65535);
    std::vector<EvidenceVector> evidence;
    std::vector<CoalitionIndexSet> expected;
    for (int i = 0; i < 10000; ++i) {
        std::uint32_t a = pick(rng), b = pick(rng);
        while (b == a) b = pick(rng);
        const auto wa = x3_codeword(f, f.element(a)), wb = x3_codeword(f, f.element(b));
        std::vector<std::vector<Symbol>> sets(wa.size());
        for (std::size_t k = 0; k < wa.size(); ++k) {
            sets[k] = {wa[k]};
            if (wb[k] != wa[k]) sets[k] = {0, 1};
        }
        evidence.push_back(EvidenceVector::from_sets(2, sets));
        expected.push_back({std::min(a, b), std::max(a, b)});
    }
    const auto start = std::chrono::steady_clock::now();
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < evidence.size(); ++i) wrong += fast_trace_x3(f, evidence[i]).coalition != expected[i];
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {bad == 0 && wrong == 0 && secs < 5.0,
            std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches; l=16: 10^4 decodes in " +
                fmt(secs) + " s, " + std::to_string(wrong) + " wrong"};
}

Outcome table2() {
    const double sc[] = {0.13834, 0.06198, 0.03138, 0.02003};
    const double scld[] = {0.44452, 0.13205, 0.05770, 0.03105, 0.01997};
    double worst = 0;
    for (std::size_t t = 3; t <= 6; ++t) worst = std::max(worst, std::abs(rate_sc_lower(t).value - sc[t - 3]));
    for (std::size_t t = 2; t <= 6; ++t)
        worst = std::max(worst, std::abs(rate_scld_alpha_lower(t, 1.0 / t).value - scld[t - 2]));
    return {worst <= 5e-5, "max |error| " + fmt(worst)};
}

Outcome table3() {
    const double ref[2][5] = {{0.245655, 0.263492, 0.274428, 0.281927, 0.287402},
                              {0.115118, 0.126598, 0.129504, 0.130385, 0.130601}};
    double worst = 0, residual = 0;
    for (std::size_t t = 2; t <= 3; ++t) {
        for (std::size_t i = 0; i < 5; ++i) {
            const auto r = rate_scld_constL_lower(t, t + 1 + i);
            worst = std::max(worst, std::abs(r.value - ref[t - 2][i]));
            residual = std::max(residual, r.z_residual.value_or(1.0));
        }
    }
    std::ostringstream msg;
    msg << "max |error| " << fmt(worst) << ", max z residual " << residual;
    return {worst <= 1e-4 && residual < 1e-10, msg.str()};
}

Outcome theorem3() {
    double worst = 0;
    for (std::size_t t = 2; t <= 10; ++t) {
        const auto r = rate_hld_alpha_lower(t, 0.5);
        worst = std::max(worst, std::abs(*r.numeric_p_star - r.p_star));
    }
    const double v = rate_hld_alpha_lower(100, 0.01).value;
    const double target = 0.530738 / (100 * 0.99);
    const double rel = std::abs(v / target - 1);
    std::ostringstream msg;
    msg << "max |dp| " << worst << ", t=100 relative gap " << fmt(rel);
    return {worst < 1e-6 && rel < 0.05, msg.str()};
}

Outcome tables45() {
    const double t4[] = {0.16778, 0.10224, 0.07245};
    const double t4s[] = {0.13258, 0.05783, 0.03106};
    const double t5[] = {0.16722, 0.10202, 0.07236};
    double worst = 0, product = 0;
    std::string interp;
    for (std::size_t t = 3; t <= 5; ++t) {
        const auto a = tdtt_optimize(t, TdttMode::MaxRate);
        const auto b = tdtt_optimize(t, TdttMode::LinearTime);
        worst = std::max({worst, std::abs(a.value - t4[t - 3]), std::abs(b.value - t5[t - 3]),
                          std::abs(a.scld_alpha_value.value_or(0) - t4s[t - 3])});
        product = std::max(product, std::abs(*b.alpha * *b.beta - 1.0 / t));
        interp = b.interpretation;
    }
    std::ostringstream msg;
    msg << "max |error| " << fmt(worst) << ", max |alpha*beta - 1/t| " << product << ", interpretation " << interp;
    return {worst <= 2e-3 && product <= 1e-12, msg.str()};
}

Outcome construction4() {
    const auto c = fpc_construction4(5, 4);
    const double q = c.alphabet();
    const bool identity = 2 * (q - 1) * (q - 1) * (1 - 1 / (2 * std::sqrt(q - 1))) == 1125.0;
    std::mt19937_64 rng(1125);
    std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
    std::size_t probes = 0, violations = 0;
    while (probes < 1000) {
        const auto a = pick(rng), b = pick(rng), x = pick(rng);
        if (a == b || x == a || x == b) continue;
        ++probes;
        violations += covers(c.codeword(x), desc(c, {std::min(a, b), std::max(a, b)}));
    }
    return {c.size() == 1125 && identity && violations == 0,
            "M=" + std::to_string(c.size()) + ", " + std::to_string(violations) + " violations in 1000 probes"};
}

Outcome expurgation() {
    std::vector<ExpurgationParams> sets;
    for (double p : {0.1, 0.2, 0.3}) {
        for (std::size_t n : {20u, 30u}) {
            ExpurgationParams e;
            e.n = n;
            e.p = p;
            e.initial_size = 80;
            e.target = ExpurgationTarget::Sc;
            sets.push_back(e);
        }
    }
    for (std::size_t q : {5u, 7u}) {
        for (std::size_t n : {10u, 15u}) {
            ExpurgationParams e;
            e.n = n;
            e.q = q;
            e.initial_size = 120;
            e.target = ExpurgationTarget::Scld;
            e.L = 3;
            sets.push_back(e);
        }
    }
    const std::size_t base = sets.size();
    for (std::size_t i = 0; i < base; ++i) sets.push_back(sets[i]);
    std::size_t ok = 0, removed = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        sets[i].seed = derive_seed(7, "acceptance-expurgation", i);
        const auto r = random_expurgated(sets[i]);
        const bool holds = sets[i].target == ExpurgationTarget::Sc
                               ? is_separable(r.code, 2).holds
                               : is_scld(r.code, 2, sets[i].L).holds;
        ok += holds;
        removed += r.report.initial_size - r.report.final_size;
    }
    return {ok == sets.size(), std::to_string(ok) + "/" + std::to_string(sets.size()) + " pass their oracle, " +
                                   std::to_string(removed) + " codewords expurgated"};
}

Outcome dynamic() {
    const auto cfg = plan_session(64, 2, 64);
    const auto runs = simulate(cfg, 100, 64);
    bool contained = true;
    for (const auto& tr : runs) contained &= tr.planted.is_subset_of(tr.candidates) && tr.candidates.size() <= cfg.list_size;
    const auto s = summarize(runs);
    std::ostringstream msg;
    msg << s.recovered << "/100 recovered, L1=" << cfg.list_size << ", mean |W|=" << s.mean_candidates;
    return {s.recovered == 100 && contained, msg.str()};
}

Outcome signal() {
    const auto c = x3_code(4);
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::size_t> kd(1, 3), pick(0, c.size() - 1);
    std::size_t agree = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto model = make_signal_model(c.length(), 2 * c.length(), derive_seed(13, "signal", trial));
        const auto k = kd(rng);
        std::vector<std::size_t> members;
        while (members.size() < k) {
            const auto x = pick(rng);
            if (std::find(members.begin(), members.end(), x) == members.end()) members.push_back(x);
        }
        std::sort(members.begin(), members.end());
        const AttackSpec spec{CoalitionIndexSet(members), dirichlet_weights(k, rng)};
        agree += signal_pipeline(model, c, spec, 1e-6) == symbolic_attack(c, spec.coalition);
    }
    return {agree == 1000, std::to_string(agree) + "/1000 identical"};
}

}  // namespace

int main() {
    criterion(1, "example-codes", 1, example1);
    criterion(2, "random-equivalences", 30, lemma1);
    criterion(3, "complete-traceability", 120, traceability);
    criterion(4, "packing-code-sizes", 120, packing_sizes);
    criterion(5, "fast-x3-decoding", 600, fast_decoding);
    criterion(6, "sc-scld-rates", 120, table2);
    criterion(7, "constant-list-rates", 600, table3);
    criterion(8, "hld-optimum", 600, theorem3);
    criterion(9, "two-stage-rates", 600, tables45);
    criterion(10, "c4-frameproof", 600, construction4);
    criterion(11, "expurgation", 600, expurgation);
    criterion(12, "dynamic-tracing", 600, dynamic);
    criterion(13, "signal-model", 600, signal);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
