#include "scld/dynamic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "scld/attack.hpp"
#include "scld/bounds.hpp"
#include "scld/constructions.hpp"
#include "scld/seed.hpp"
#include "scld/trace.hpp"
#include "scld/verify.hpp"

namespace scld {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t ceil_log2(std::size_t x) {
    std::size_t l = 0;
    while ((std::size_t{1} << l) < x) ++l;
    return l;
}

std::vector<std::size_t> as_vector(const CoalitionIndexSet& s) { return {s.begin(), s.end()}; }

}  // namespace

Code stage2_code(std::size_t w, std::size_t t, std::uint64_t seed) {
    if (w == 0) throw ShapeError("empty candidate set");
    if (t == 2) {
        const auto l = static_cast<std::uint32_t>(std::max<std::size_t>(2, ceil_log2(w)));
        Code c = x3_code(l).prefix(w);
        c.set_provenance("x3 l=" + std::to_string(l) + " prefix=" + std::to_string(w));
        return c;
    }
    ExpurgationParams prm;
    prm.q = 2;
    prm.t = t;
    prm.target = ExpurgationTarget::Sc;
    prm.initial_size = 2 * w + 4;
    prm.n = 4 * t * std::max<std::size_t>(1, ceil_log2(w + 1));
    for (int attempt = 0; attempt < 32; ++attempt) {
        prm.seed = derive_seed(seed, "stage2", static_cast<std::uint64_t>(attempt));
        try {
            auto out = random_expurgated(prm);
            if (out.code.size() >= w) {
                Code c = out.code.prefix(w);
                c.set_provenance(out.code.provenance() + " prefix=" + std::to_string(w));
                return c;
            }
        } catch (const std::runtime_error&) {
        }
        prm.n += t;
    }
    throw std::runtime_error("stage-2 generator failed");
}

DynamicSessionConfig plan_session(Code stage1, std::size_t t, std::uint64_t seed) {
    if (t == 0) throw ShapeError("t must be at least 1");
    const std::size_t users = stage1.size();
    const std::size_t L = *is_hld(stage1, std::min(t, users)).minimal_list_size;
    const double alpha =
        users > 1 ? std::log(static_cast<double>(L)) / std::log(static_cast<double>(users)) : 0.0;
    return DynamicSessionConfig{users, t, std::move(stage1), L, alpha, seed};
}

DynamicSessionConfig plan_session(std::size_t M, std::size_t t, std::uint64_t seed) {
    if (M == 0) throw ShapeError("need at least one user");
    if (t < 2) throw ShapeError("t must be at least 2");
    if (M == 1) return plan_session(Code(2, 1, {0}, "single user"), t, seed);

    // Screen codes aim for list size about sqrt(M), with Bernoulli bits at the
    // rate that maximizes the list-decoding exponent.
    ExpurgationParams prm;
    prm.q = 2;
    prm.t = t;
    prm.p = bounds::hld_p_star(t);
    prm.target = ExpurgationTarget::Hld;
    prm.L = std::max<std::size_t>(t + 1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(M)))));
    prm.initial_size = 2 * M;
    prm.n = 2 * t * ceil_log2(M);
    for (int attempt = 0; attempt < 64; ++attempt) {
        prm.seed = derive_seed(seed, "stage1", static_cast<std::uint64_t>(attempt));
        try {
            auto out = random_expurgated(prm);
            if (out.code.size() >= M) {
                Code c = out.code.prefix(M);
                c.set_provenance(out.code.provenance() + " prefix=" + std::to_string(M));
                return plan_session(std::move(c), t, seed);
            }
        } catch (const std::runtime_error&) {
        }
        prm.n += 2;
    }
    throw std::runtime_error("stage-1 generator failed");
}

DynamicTranscript run_two_stage(const DynamicSessionConfig& cfg, const CoalitionIndexSet& planted, std::uint64_t seed) {
    if (planted.empty()) throw ShapeError("empty coalition");
    if (planted.size() > cfg.t) throw ShapeError("coalition larger than t");
    DynamicTranscript tr;
    tr.planted = planted;
    auto fail = [&](std::string why) {
        tr.success = false;
        tr.failure = std::move(why);
        return tr;
    };

    auto t0 = Clock::now();
    tr.evidence1 = symbolic_attack(cfg.stage1, planted);
    tr.candidates = residual(cfg.stage1, tr.evidence1);
    tr.stage1_seconds = seconds_since(t0);
    if (!planted.is_subset_of(tr.candidates)) return fail("planted coalition not in candidate set");
    if (tr.candidates.size() > cfg.list_size) return fail("candidate set exceeds measured list size");

    t0 = Clock::now();
    const std::size_t w = tr.candidates.size();
    const Code c2 = stage2_code(w, cfg.t, derive_seed(seed, "stage2-code"));
    tr.stage2_provenance = c2.provenance();
    tr.stage2_length = c2.length();
    tr.assignment = as_vector(tr.candidates);

    std::vector<std::size_t> local;
    for (auto u : planted) {
        local.push_back(static_cast<std::size_t>(
            std::lower_bound(tr.assignment.begin(), tr.assignment.end(), u) - tr.assignment.begin()));
    }
    tr.evidence2 = symbolic_attack(c2, CoalitionIndexSet(std::move(local)));
    const auto res = trace_scld(c2, std::min(cfg.t, c2.size()), w, tr.evidence2);
    tr.stage2_seconds = seconds_since(t0);
    tr.subsets_tested = res.subsets_tested;
    if (res.status != TraceStatus::Identified) return fail("stage 2 did not identify a coalition");

    std::vector<std::size_t> users;
    for (auto k : res.coalition) users.push_back(tr.assignment[k]);
    tr.traced = CoalitionIndexSet(std::move(users));
    if (!(tr.traced == planted)) return fail("traced coalition differs from the planted one");
    tr.success = true;
    return tr;
}

CoalitionIndexSet random_coalition(std::size_t users, std::size_t t, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min(t, users))(rng);
    std::vector<std::size_t> all(users);
    for (std::size_t i = 0; i < users; ++i) all[i] = i;
    std::vector<std::size_t> pick;
    std::sample(all.begin(), all.end(), std::back_inserter(pick), k, rng);
    return CoalitionIndexSet(std::move(pick));
}

std::vector<DynamicTranscript> simulate(const DynamicSessionConfig& cfg, std::size_t trials, std::uint64_t seed) {
    std::vector<DynamicTranscript> out(trials);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < trials; ++k) {
        const auto J = random_coalition(cfg.users, cfg.t, derive_seed(seed, "coalition", k));
        out[k] = run_two_stage(cfg, J, derive_seed(seed, "trial", k));
    }
    return out;
}

DynamicSummary summarize(const std::vector<DynamicTranscript>& trs) {
    DynamicSummary s;
    s.trials = trs.size();
    for (const auto& tr : trs) {
        s.recovered += tr.success ? 1 : 0;
        s.mean_candidates += static_cast<double>(tr.candidates.size());
        s.max_candidates = std::max(s.max_candidates, tr.candidates.size());
        s.stage1_seconds += tr.stage1_seconds;
        s.stage2_seconds += tr.stage2_seconds;
    }
    if (s.trials) s.mean_candidates /= static_cast<double>(s.trials);
    return s;
}

std::string to_json(const DynamicTranscript& tr, std::size_t trial) {
    nlohmann::ordered_json j;
    j["trial"] = trial;
    j["planted"] = as_vector(tr.planted);
    j["evidence1"] = tr.evidence1.sets();
    j["candidates"] = as_vector(tr.candidates);
    j["stage2_code"] = tr.stage2_provenance;
    j["stage2_length"] = tr.stage2_length;
    j["assignment"] = tr.assignment;
    if (tr.evidence2.length() > 0) j["evidence2"] = tr.evidence2.sets();
    j["traced"] = as_vector(tr.traced);
    j["subsets_tested"] = tr.subsets_tested;
    j["status"] = tr.success ? "success" : "failure";
    if (!tr.success) j["failure"] = tr.failure;
    return j.dump() + "\n";
}

std::string to_json(const DynamicSummary& s, const DynamicSessionConfig& cfg, bool with_timings) {
    nlohmann::ordered_json j;
    j["summary"] = true;
    j["users"] = cfg.users;
    j["t"] = cfg.t;
    j["stage1_code"] = cfg.stage1.provenance();
    j["stage1_length"] = cfg.stage1.length();
    j["list_size"] = cfg.list_size;
    j["alpha"] = cfg.alpha;
    j["trials"] = s.trials;
    j["recovered"] = s.recovered;
    j["recovery_rate"] = s.trials ? static_cast<double>(s.recovered) / static_cast<double>(s.trials) : 0.0;
    j["mean_candidates"] = s.mean_candidates;
    j["max_candidates"] = s.max_candidates;
    if (with_timings) {
        j["stage1_seconds"] = s.stage1_seconds;
        j["stage2_seconds"] = s.stage2_seconds;
    }
    return j.dump() + "\n";
}

}  // namespace scld
