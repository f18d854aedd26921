// scld: construct, verify, attack and trace fingerprinting codes; evaluate
// rate bounds; simulate two-stage tracing. Exit status 0 on success, 1 on a
// domain error (no match, invalid evidence, infeasible parameters), 2 on a
// usage error.

#include <omp.h>

#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "scld/attack.hpp"
#include "scld/bounds.hpp"
#include "scld/constructions.hpp"
#include "scld/dynamic.hpp"
#include "scld/io.hpp"
#include "scld/seed.hpp"
#include "scld/trace.hpp"
#include "scld/verify.hpp"

using namespace scld;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::istringstream is(item);
        T v;
        if (!(is >> v) || !(is >> std::ws).eof()) throw UsageError(std::string("bad ") + what + " list: " + text);
        out.push_back(v);
    }
    if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
    return out;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
    } else {
        io::write_file(path, text);
    }
}

Code load_code(const std::string& path) {
    try {
        return io::load_code(path);
    } catch (const io::ParseError& e) {
        throw UsageError(path + ": " + e.what());
    } catch (const io::ValidationError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

EvidenceVector load_evidence(const std::string& path) {
    try {
        return io::load_evidence(path);
    } catch (const io::ParseError& e) {
        throw UsageError(path + ": " + e.what());
    } catch (const io::ValidationError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Separable codes with list decoding: constructions, oracles, tracing and rate bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t seed = 0;
    int threads = 0;
    app.add_option("--seed", seed, "Global 64-bit seed")->capture_default_str();
    app.add_option("--threads", threads, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);

    // construct
    auto* construct = app.add_subcommand("construct", "Build a code and save it as JSON");
    std::string family, out_path, inner_path, outer_path, target = "sc";
    std::uint32_t q = 0, m = 0, l = 0;
    std::size_t t_c = 2, n = 0, size = 0, L_c = 0;
    std::optional<double> p;
    bool weight_filter = false;
    construct->add_option("--family", family, "plane | truncated-plane | poly-fpc | c4-fpc | concat | x3 | random")
        ->required()
        ->check(CLI::IsMember({"plane", "truncated-plane", "poly-fpc", "c4-fpc", "concat", "x3", "random"}));
    construct->add_option("--q", q, "Field order / alphabet size");
    construct->add_option("--m", m, "Field order for c4-fpc");
    construct->add_option("--l", l, "Length parameter (poly-fpc, c4-fpc) or field degree (x3)");
    construct->add_option("--t", t_c, "Coalition bound")->capture_default_str();
    construct->add_option("--inner", inner_path, "Inner frameproof code (concat)")->check(CLI::ExistingFile);
    construct->add_option("--outer", outer_path, "Outer code (concat)")->check(CLI::ExistingFile);
    construct->add_option("--n", n, "Length (random)");
    construct->add_option("--size", size, "Initial number of samples (random)");
    construct->add_option("--p", p, "Bernoulli bias; uniform symbols when omitted (random)");
    construct->add_option("--target", target, "sc | scld | hld (random)")
        ->check(CLI::IsMember({"sc", "scld", "hld"}))
        ->capture_default_str();
    construct->add_option("--L", L_c, "List size (random scld/hld)");
    construct->add_flag("--weight-filter", weight_filter, "Keep words of weight floor(p(n+1)) only (random)");
    construct->add_option("--out", out_path, "Output file (stdout when omitted)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Decide a code property by exhaustive search");
    std::string code_path, property;
    std::size_t t_v = 2;
    std::optional<std::size_t> L_v;
    verify_cmd->add_option("--code", code_path)->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("--t", t_v)->required();
    verify_cmd->add_option("--property", property)->required()->check(CLI::IsMember({"fpc", "sc", "hld", "scld"}));
    verify_cmd->add_option("--L", L_v, "List size to check against (hld, scld)");

    // trace
    auto* trace_cmd = app.add_subcommand("trace", "Identify the coalition behind an evidence vector");
    std::string evidence_path, algo = "scld";
    std::size_t t_t = 2;
    std::optional<std::size_t> L_t;
    bool diagnostic = false;
    trace_cmd->add_option("--code", code_path)->required()->check(CLI::ExistingFile);
    trace_cmd->add_option("--evidence", evidence_path)->required()->check(CLI::ExistingFile);
    trace_cmd->add_option("--t", t_t)->capture_default_str();
    trace_cmd->add_option("--L", L_t, "List size bound (default: code size)");
    trace_cmd->add_option("--algo", algo)->check(CLI::IsMember({"scld", "fpc", "sc", "x3"}))->capture_default_str();
    trace_cmd->add_flag("--diagnostic", diagnostic, "Scan every subset and insist on a unique match");

    // attack
    auto* attack_cmd = app.add_subcommand("attack", "Produce the evidence left by a coalition");
    std::string coalition_text, weights_text;
    bool signal = false;
    double epsilon = 1e-6;
    std::size_t host_dim = 0;
    attack_cmd->add_option("--code", code_path)->required()->check(CLI::ExistingFile);
    attack_cmd->add_option("--coalition", coalition_text, "Comma-separated codeword indices")->required();
    attack_cmd->add_option("--weights", weights_text, "Comma-separated convex weights (default: equal)");
    attack_cmd->add_flag("--signal", signal, "Run the real-valued embedding / averaging model");
    attack_cmd->add_option("--epsilon", epsilon)->capture_default_str();
    attack_cmd->add_option("--host-dim", host_dim, "Host dimension (default: 2n)");
    attack_cmd->add_option("--out", out_path, "Output file (stdout when omitted)");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate rate lower bounds");
    int table = 0;
    std::string bfamily, mode = "max-rate";
    std::size_t t_b = 2;
    double alpha = 0.5;
    std::size_t L_b = 3;
    auto* table_opt = bounds_cmd->add_option("--table", table, "Emit table 2, 3, 4 or 5 as CSV")
                          ->check(CLI::IsMember({2, 3, 4, 5}));
    auto* family_opt =
        bounds_cmd->add_option("--family", bfamily, "sc | hld-alpha | scld-alpha | scld-constL | qary | tdtt")
            ->check(CLI::IsMember({"sc", "hld-alpha", "scld-alpha", "scld-constL", "qary", "tdtt"}));
    table_opt->excludes(family_opt);
    bounds_cmd->add_option("--t", t_b)->capture_default_str();
    bounds_cmd->add_option("--alpha", alpha)->capture_default_str();
    bounds_cmd->add_option("--L", L_b)->capture_default_str();
    bounds_cmd->add_option("--mode", mode, "tdtt mode")
        ->check(CLI::IsMember({"max-rate", "linear-time"}))
        ->capture_default_str();

    // dynamic-sim
    auto* dyn = app.add_subcommand("dynamic-sim", "Simulate two-stage dynamic tracing");
    std::size_t users = 64, t_d = 2, trials = 100;
    bool timings = false;
    dyn->add_option("--users", users)->capture_default_str();
    dyn->add_option("--t", t_d)->capture_default_str();
    dyn->add_option("--trials", trials)->capture_default_str();
    dyn->add_flag("--timings", timings, "Add stage timings to the summary line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (threads > 0) omp_set_num_threads(threads);

    try {
        if (*construct) {
            std::optional<Code> code;
            if (family == "plane") {
                code = packing_to_scld(projective_plane(q));
                code->set_provenance("plane q=" + std::to_string(q));
            } else if (family == "truncated-plane") {
                code = packing_to_scld(truncate_plane(q));
                code->set_provenance("truncated-plane q=" + std::to_string(q));
            } else if (family == "poly-fpc") {
                code = fpc_poly_eval(q, l, t_c);
            } else if (family == "c4-fpc") {
                code = fpc_construction4(m, l);
            } else if (family == "concat") {
                if (inner_path.empty() || outer_path.empty()) throw UsageError("concat needs --inner and --outer");
                code = concatenate(load_code(inner_path), load_code(outer_path));
            } else if (family == "x3") {
                code = x3_code(l);
            } else {
                if (n == 0 || size == 0) throw UsageError("random needs --n and --size");
                ExpurgationParams prm;
                prm.n = n;
                prm.q = q == 0 ? 2 : q;
                prm.initial_size = size;
                prm.p = p;
                prm.t = t_c;
                prm.target = target == "sc" ? ExpurgationTarget::Sc
                                            : (target == "scld" ? ExpurgationTarget::Scld : ExpurgationTarget::Hld);
                prm.L = L_c;
                prm.weight_filter = weight_filter;
                prm.seed = derive_seed(seed, "construct");
                auto out = random_expurgated(prm);
                const auto& r = out.report;
                std::cerr << "expurgation: initial " << r.initial_size << ", bad weight " << r.removed_bad_weight
                          << ", bad pairs " << r.removed_bad_pairs << ", bad sets " << r.removed_bad_sets
                          << ", final " << r.final_size << "\n";
                code = std::move(out.code);
            }
            emit(io::to_json(*code), out_path);
        } else if (*verify_cmd) {
            const Code code = load_code(code_path);
            std::cout << to_json(verify(code, t_v, property_from_string(property), L_v));
        } else if (*trace_cmd) {
            const Code code = load_code(code_path);
            const EvidenceVector d = load_evidence(evidence_path);
            TraceResult r;
            if (algo == "scld") {
                try {
                    r = trace_scld(code, t_t, L_t.value_or(code.size()), d, diagnostic);
                } catch (const ListOverflow& e) {
                    throw DomainFailure(e.what());
                }
            } else if (algo == "fpc") {
                r = trace_fpc(code, t_t, d);
            } else if (algo == "sc") {
                r = trace_sc(code, t_t, d, diagnostic);
            } else {
                if (code.alphabet() != 2 || code.length() % 2) throw UsageError("x3 needs a binary code of even length");
                r = fast_trace_x3(static_cast<std::uint32_t>(code.length() / 2), d);
            }
            std::cout << to_json(r);
            if (r.status != TraceStatus::Identified) return 1;
        } else if (*attack_cmd) {
            const Code code = load_code(code_path);
            const auto members = parse_list<std::size_t>(coalition_text, "coalition");
            const CoalitionIndexSet J(members);
            if (J.size() != members.size()) throw UsageError("repeated coalition member");
            EvidenceVector d;
            if (signal) {
                AttackSpec spec{J, {}};
                if (weights_text.empty()) {
                    spec.weights.assign(J.size(), 1.0 / static_cast<double>(J.size()));
                } else {
                    spec.weights = parse_list<double>(weights_text, "weight");
                }
                const auto model = make_signal_model(code.length(), host_dim ? host_dim : 2 * code.length(),
                                                     derive_seed(seed, "signal"));
                d = signal_pipeline(model, code, spec, epsilon, true);
            } else {
                if (!weights_text.empty()) throw UsageError("--weights needs --signal");
                d = symbolic_attack(code, J);
            }
            emit(io::to_json(d), out_path);
        } else if (*bounds_cmd) {
            if (table) {
                std::cout << bounds::table_csv(table);
            } else if (bfamily.empty()) {
                throw UsageError("bounds needs --table or --family");
            } else if (bfamily == "sc") {
                std::cout << bounds::to_json(bounds::rate_sc_lower(t_b));
            } else if (bfamily == "hld-alpha") {
                std::cout << bounds::to_json(bounds::rate_hld_alpha_lower(t_b, alpha));
            } else if (bfamily == "scld-alpha") {
                std::cout << bounds::to_json(bounds::rate_scld_alpha_lower(t_b, alpha));
            } else if (bfamily == "scld-constL") {
                std::cout << bounds::to_json(bounds::rate_scld_constL_lower(t_b, L_b));
            } else if (bfamily == "qary") {
                nlohmann::ordered_json j;
                j["family"] = "qary-scld";
                j["t"] = t_b;
                j["L"] = L_b;
                j["value"] = bounds::rate_qary_scld(t_b, L_b);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << bounds::to_json(bounds::tdtt_optimize(
                    t_b, mode == "max-rate" ? bounds::TdttMode::MaxRate : bounds::TdttMode::LinearTime));
            }
        } else if (*dyn) {
            const auto cfg = plan_session(users, t_d, derive_seed(seed, "dynamic-plan"));
            const auto trs = simulate(cfg, trials, derive_seed(seed, "dynamic-trials"));
            for (std::size_t k = 0; k < trs.size(); ++k) std::cout << to_json(trs[k], k);
            const auto s = summarize(trs);
            std::cout << to_json(s, cfg, timings);
            if (s.recovered != s.trials) return 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
