#include "scld/attack.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace scld {

namespace {

void check_spec(const Code& code, const AttackSpec& spec) {
    if (spec.coalition.empty()) throw ShapeError("empty coalition");
    if (spec.coalition.members().back() >= code.size()) throw ShapeError("coalition index out of range");
    if (spec.weights.size() != spec.coalition.size()) throw ShapeError("one weight per coalition member required");
    const double sum = std::accumulate(spec.weights.begin(), spec.weights.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-12) throw ShapeError("weights must sum to 1");
    for (double w : spec.weights) {
        const bool ok = spec.weights.size() == 1 ? w == 1.0 : (w > 0.0 && w < 1.0);
        if (!ok) throw ShapeError("weights must lie in (0, 1)");
    }
}

}  // namespace

SignalModel make_signal_model(std::size_t n, std::size_t m, std::uint64_t seed, bool canonical) {
    if (n == 0 || m < n) throw ShapeError("need m >= n >= 1");
    SignalModel model;
    model.seed = seed;
    model.canonical = canonical;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    const auto M = static_cast<Eigen::Index>(m), N = static_cast<Eigen::Index>(n);
    model.host.resize(M);
    for (Eigen::Index i = 0; i < M; ++i) model.host(i) = 10.0 * g(rng);
    if (canonical) {
        model.basis = Eigen::MatrixXd::Identity(M, N);
    } else {
        Eigen::MatrixXd raw(M, N);
        for (Eigen::Index c = 0; c < N; ++c) {
            for (Eigen::Index r = 0; r < M; ++r) raw(r, c) = g(rng);
        }
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(raw);
        model.basis = qr.householderQ() * Eigen::MatrixXd::Identity(M, N);
    }
    return model;
}

void validate(const SignalModel& model) {
    if (model.host.size() != model.basis.rows()) throw ShapeError("host and basis dimensions differ");
    const Eigen::MatrixXd gram = model.basis.transpose() * model.basis;
    const double err = (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    if (err > 1e-9) throw ShapeError("basis not orthonormal");
}

std::vector<double> dirichlet_weights(std::size_t k, std::mt19937_64& rng) {
    if (k == 0) throw ShapeError("empty coalition");
    if (k == 1) return {1.0};
    std::gamma_distribution<double> gamma(1.0, 1.0);
    std::vector<double> w(k);
    double sum = 0;
    for (auto& x : w) sum += (x = gamma(rng));
    for (auto& x : w) x /= sum;
    // Renormalize the last entry so the sum is 1 to the last bit we can get.
    w.back() = 1.0 - std::accumulate(w.begin(), w.end() - 1, 0.0);
    return w;
}

EvidenceVector symbolic_attack(const Code& code, const CoalitionIndexSet& coalition) {
    return desc(code, coalition);
}

Eigen::VectorXd forge(const SignalModel& model, const Code& code, const AttackSpec& spec) {
    check_spec(code, spec);
    if (model.length() != code.length()) throw ShapeError("shape error");
    // Each copy is x + sum_i c_j(i) u_i; the forgery is their convex combination.
    Eigen::VectorXd y = Eigen::VectorXd::Zero(model.host.size());
    for (std::size_t k = 0; k < spec.coalition.size(); ++k) {
        const auto word = code.codeword(spec.coalition[k]);
        Eigen::VectorXd copy = model.host;
        for (std::size_t i = 0; i < word.size(); ++i) {
            copy += static_cast<double>(word[i]) * model.basis.col(static_cast<Eigen::Index>(i));
        }
        y += spec.weights[k] * copy;
    }
    return y;
}

Eigen::VectorXd extract(const SignalModel& model, const Eigen::VectorXd& forged) {
    return model.basis.transpose() * (forged - model.host);
}

EvidenceVector signal_pipeline(const SignalModel& model, const Code& code, const AttackSpec& spec, double eps,
                               bool diagnostic) {
    if (code.alphabet() != 2) throw ShapeError("signal model needs a binary code");
    check_spec(code, spec);
    const double min_w = *std::min_element(spec.weights.begin(), spec.weights.end());
    if (!(eps > 0) || eps >= min_w) throw std::invalid_argument("ambiguous threshold");
    validate(model);

    const Eigen::VectorXd s = extract(model, forge(model, code, spec));
    EvidenceVector d(2, code.length());
    for (std::size_t i = 0; i < code.length(); ++i) {
        const double v = s(static_cast<Eigen::Index>(i));
        if (std::abs(v) < eps) {
            d.insert(i, 0);
        } else if (std::abs(v - 1.0) < eps) {
            d.insert(i, 1);
        } else {
            d.insert(i, 0);
            d.insert(i, 1);
        }
    }
    if (diagnostic && !(d == symbolic_attack(code, spec.coalition))) {
        throw std::logic_error("signal evidence differs from the symbolic attack");
    }
    return d;
}

}  // namespace scld
