#ifndef SCLD_GF_HPP
#define SCLD_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace scld {

/// Element of GF(p^k) in polynomial-basis form, packed as the integer
/// sum(c_i * p^i). For p = 2 this is exactly the k-bit coefficient string.
struct FieldElement {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite field GF(p^k) with a fixed primitive modulus, so that element
/// numbering (and every code built on top of it) is reproducible.
///
/// Immutable after construction; every member is safe to call concurrently.
class GaloisField {
public:
    /// Largest supported order.
    static constexpr std::uint32_t kMaxOrder = 1u << 20;

    /// Throws FieldError("p not prime") or FieldError("field unsupported").
    GaloisField(std::uint32_t p, std::uint32_t k);

    /// Builds GF(q) for a prime power q.
    static GaloisField of_order(std::uint32_t q);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint32_t order() const { return q_; }
    /// Monic modulus, low-order coefficient first (length k + 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    /// The class of x modulo the modulus (a primitive element). For k = 1
    /// this is the root of the linear modulus instead.
    FieldElement generator() const { return generator_; }
    /// i-th element in the deterministic enumeration 0..q-1.
    FieldElement element(std::uint32_t index) const;

    std::vector<std::uint32_t> coefficients(FieldElement a) const;
    FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    /// Throws FieldError("zero divisor") for a == 0.
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    FieldElement square(FieldElement a) const { return mul(a, a); }

    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(FieldElement a) const;
    bool is_primitive(FieldElement a) const;

    /// Absolute trace to GF(2); requires characteristic 2.
    int trace(FieldElement a) const;

    /// Least element (in enumeration order) that is primitive and has trace 1.
    /// Requires characteristic 2 and degree >= 2.
    FieldElement primitive_trace_one() const;

    /// Root z of z^2 + z + c = 0 via the closed-form case analysis on the
    /// degree. The other root is z + 1. Requires characteristic 2.
    /// Throws FieldError("no root in field") when trace(c) = 1 and
    /// FieldError("formula mismatch") if the computed root fails to verify.
    FieldElement solve_quadratic(FieldElement c) const;

    bool operator==(const GaloisField& other) const {
        return p_ == other.p_ && k_ == other.k_;
    }

private:
    void check(FieldElement a) const;
    FieldElement mul_slow(FieldElement a, FieldElement b) const;
    FieldElement mul_binary(FieldElement a, FieldElement b) const;
    FieldElement frobenius_power(FieldElement a, unsigned i) const;

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::uint32_t modulus_bits_ = 0;  // p = 2 only: modulus as a bit mask
    FieldElement generator_{};
    // log/antilog tables, present for q <= 2^16
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::uint32_t primitive_trace_one_ = 0;
};

bool is_prime(std::uint32_t n);

/// Returns (p, k) with q = p^k, or throws FieldError("not a prime power").
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint32_t q);

}  // namespace scld

#endif  // SCLD_GF_HPP
