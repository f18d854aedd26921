#ifndef SCLD_BOUNDS_HPP
#define SCLD_BOUNDS_HPP

// Random-coding rate lower bounds for binary separable / list-decoding codes
// and the two-stage tracing trade-off. Rates are in bits per symbol.
//
// Every max over p uses the same deterministic protocol: a grid with step
// 1e-3, then golden-section refinement around the best grid point until the
// bracket is narrower than 1e-9.

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace scld::bounds {

struct Maximum {
    double value = 0;
    double arg = 0;
};

/// Grid + golden-section maximization of f over [lo, hi] (grid points lo,
/// lo + step, ..., hi). f must be safe to call concurrently.
template <class F>
Maximum maximize(F&& f, double lo, double hi, double step = 1e-3, double tol = 1e-9);

struct TdttCandidate {
    std::string interpretation;  // "decoupled" or "coupled"
    double alpha = 0;
    double beta = 0;
    double value = 0;
    double p = 0;  // shared p (coupled only)
    std::optional<double> reference_error;
};

struct RateBoundReport {
    std::string family;
    std::size_t t = 0;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<std::size_t> L;
    double value = 0;
    double p_star = 0;
    /// (t1, t2, m) attaining the separability minimum at p_star.
    std::optional<std::array<int, 3>> sc_witness;
    std::optional<double> z;
    std::optional<double> z_residual;
    std::optional<int> z_sign_changes;
    /// Numeric cross-check of a closed form.
    std::optional<double> numeric_value;
    std::optional<double> numeric_p_star;
    /// Two-stage extras: the constraint side and the list-decoding rate at alpha.
    std::optional<double> scld_beta_value;
    std::optional<double> scld_alpha_value;
    std::optional<double> cost_exponent;
    std::string interpretation;
    std::vector<TdttCandidate> candidates;
    double tolerance = 1e-9;
};

double entropy(double x);

/// Collision probability of a (t1, t2, m) pair of coalitions.
double pair_probability(double p, int t1, int t2, int m);

/// min over (t1, t2, m) of -log2(1 - P_g) / (t1 + t2 - m - 1).
double rate_sc(std::size_t t, double p, std::array<int, 3>* witness = nullptr);

/// h(p) - t p h(1/t).
double hld_exponent(std::size_t t, double p);
/// 1 / (2^{t h(1/t)} + 1), the maximizer of hld_exponent.
double hld_p_star(std::size_t t);

RateBoundReport rate_sc_lower(std::size_t t);
RateBoundReport rate_hld_alpha_lower(std::size_t t, double alpha);
/// alpha = 1 drops the list-size term (separability only).
RateBoundReport rate_scld_alpha_lower(std::size_t t, double alpha);

struct ZRoot {
    double z = 0;
    double residual = 0;
    int sign_changes = 0;
};
/// Root in (0, 1) of p (q1(z) + q2(z)) = (1 - p)(q1(1-z) + q2(1-z)).
/// Throws std::runtime_error("root bracket failure ...").
ZRoot z_root(std::size_t t, std::size_t L, double p);
double rate_hld_const_list(std::size_t t, std::size_t L, double p, ZRoot* root = nullptr);
RateBoundReport rate_scld_constL_lower(std::size_t t, std::size_t L);

/// q-ary rate: 2/3 for t = 2, L >= 3; 1/(t-1) for t > 2, L >= t + 1.
double rate_qary_scld(std::size_t t, std::size_t L);

enum class TdttMode { MaxRate, LinearTime };
RateBoundReport tdtt_optimize(std::size_t t, TdttMode mode);

std::string to_json(const RateBoundReport& r);

/// CSV for tables 2..5 (6 fractional digits).
std::string table_csv(int table);

}  // namespace scld::bounds

#include "scld/bounds_impl.hpp"

#endif  // SCLD_BOUNDS_HPP
