#ifndef SCLD_ATTACK_HPP
#define SCLD_ATTACK_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "scld/code.hpp"

namespace scld {

/// Host signal plus n orthonormal carrier signals of dimension m >= n.
struct SignalModel {
    Eigen::VectorXd host;   // length m
    Eigen::MatrixXd basis;  // m x n, orthonormal columns
    std::uint64_t seed = 0;
    bool canonical = false;

    std::size_t dimension() const { return static_cast<std::size_t>(basis.rows()); }
    std::size_t length() const { return static_cast<std::size_t>(basis.cols()); }
};

/// Gaussian host and basis (orthonormalized by QR), reproducible per seed.
/// With `canonical`, the basis is the first n unit vectors.
SignalModel make_signal_model(std::size_t n, std::size_t m, std::uint64_t seed, bool canonical = false);

/// Throws ShapeError("basis not orthonormal") beyond 1e-9.
void validate(const SignalModel& model);

struct AttackSpec {
    CoalitionIndexSet coalition;
    std::vector<double> weights;  // one per member, in member order
};

/// Positive weights summing to 1; a single member gets weight 1.
std::vector<double> dirichlet_weights(std::size_t k, std::mt19937_64& rng);

/// The noiseless marking outcome: desc(code, coalition).
EvidenceVector symbolic_attack(const Code& code, const CoalitionIndexSet& coalition);

/// x + sum_i (sum_j lambda_j c_j(i)) u_i.
Eigen::VectorXd forge(const SignalModel& model, const Code& code, const AttackSpec& spec);

/// <y - x, u_i> for every carrier.
Eigen::VectorXd extract(const SignalModel& model, const Eigen::VectorXd& forged);

/// Embeds, mixes, extracts and classifies each carrier: |s| < eps -> {0},
/// |s - 1| < eps -> {1}, otherwise {0,1}. Binary codes only. Throws
/// std::invalid_argument("ambiguous threshold") when eps >= min weight.
/// With `diagnostic`, asserts the result equals symbolic_attack.
EvidenceVector signal_pipeline(const SignalModel& model, const Code& code, const AttackSpec& spec,
                               double eps = 1e-6, bool diagnostic = false);

}  // namespace scld

#endif  // SCLD_ATTACK_HPP
