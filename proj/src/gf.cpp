#include "scld/gf.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace scld {

namespace {

// Lowest-weight primitive polynomials over GF(2), as bit masks including the
// leading term. Index = degree.
constexpr std::array<std::uint32_t, 21> kBinaryPrimitive = {
    0,
    (1u << 1) | 1u,                                        // x + 1
    (1u << 2) | (1u << 1) | 1u,                            // x^2 + x + 1
    (1u << 3) | (1u << 1) | 1u,                            // x^3 + x + 1
    (1u << 4) | (1u << 1) | 1u,                            // x^4 + x + 1
    (1u << 5) | (1u << 2) | 1u,                            // x^5 + x^2 + 1
    (1u << 6) | (1u << 1) | 1u,                            // x^6 + x + 1
    (1u << 7) | (1u << 1) | 1u,                            // x^7 + x + 1
    (1u << 8) | (1u << 4) | (1u << 3) | (1u << 2) | 1u,    // x^8 + x^4 + x^3 + x^2 + 1
    (1u << 9) | (1u << 4) | 1u,                            // x^9 + x^4 + 1
    (1u << 10) | (1u << 3) | 1u,                           // x^10 + x^3 + 1
    (1u << 11) | (1u << 2) | 1u,                           // x^11 + x^2 + 1
    (1u << 12) | (1u << 6) | (1u << 4) | (1u << 1) | 1u,   // x^12 + x^6 + x^4 + x + 1
    (1u << 13) | (1u << 4) | (1u << 3) | (1u << 1) | 1u,   // x^13 + x^4 + x^3 + x + 1
    (1u << 14) | (1u << 10) | (1u << 6) | (1u << 1) | 1u,  // x^14 + x^10 + x^6 + x + 1
    (1u << 15) | (1u << 1) | 1u,                           // x^15 + x + 1
    (1u << 16) | (1u << 12) | (1u << 3) | (1u << 1) | 1u,  // x^16 + x^12 + x^3 + x + 1
    (1u << 17) | (1u << 3) | 1u,                           // x^17 + x^3 + 1
    (1u << 18) | (1u << 7) | 1u,                           // x^18 + x^7 + 1
    (1u << 19) | (1u << 5) | (1u << 2) | (1u << 1) | 1u,   // x^19 + x^5 + x^2 + x + 1
    (1u << 20) | (1u << 3) | 1u,                           // x^20 + x^3 + 1
};

constexpr std::uint32_t kTableLimit = 1u << 16;

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(static_cast<std::uint32_t>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

using Poly = std::vector<std::uint32_t>;

// Product of a and b reduced modulo the monic polynomial f over GF(p).
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    const std::size_t k = f.size() - 1;
    std::vector<std::uint64_t> prod(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) prod[i + j] += std::uint64_t{a[i]} * b[j];
    }
    for (auto& c : prod) c %= p;
    for (std::size_t d = 2 * k - 1; d >= k; --d) {
        const std::uint64_t lead = prod[d];
        if (lead == 0) continue;
        prod[d] = 0;
        for (std::size_t i = 0; i < k; ++i) {
            prod[d - k + i] = (prod[d - k + i] + (p - f[i]) * lead) % p;
        }
    }
    return Poly(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(k));
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly r(f.size() - 1, 0);
    r[0] = 1;
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

bool is_unit_poly(const Poly& a) {
    if (a[0] != 1) return false;
    return std::all_of(a.begin() + 1, a.end(), [](std::uint32_t c) { return c == 0; });
}

// x generates (GF(p)[x]/f)^* with order p^k - 1 exactly when f is primitive.
bool is_primitive_poly(const Poly& f, std::uint32_t p, std::uint64_t group_order,
                       const std::vector<std::uint32_t>& factors) {
    const std::size_t k = f.size() - 1;
    if (f[0] == 0) return false;
    Poly x(k, 0);
    if (k == 1) {
        x[0] = (p - f[0]) % p;  // root of x + f0
    } else {
        x[1] = 1;
    }
    if (!is_unit_poly(poly_powmod(x, group_order, f, p))) return false;
    for (auto r : factors) {
        if (is_unit_poly(poly_powmod(x, group_order / r, f, p))) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint32_t q) {
    if (q < 2) throw FieldError("not a prime power: " + std::to_string(q));
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t k = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw FieldError("not a prime power: " + std::to_string(q));
    return {p, k};
}

GaloisField GaloisField::of_order(std::uint32_t q) {
    auto [p, k] = prime_power_decompose(q);
    return GaloisField(p, k);
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k), q_(1) {
    if (!is_prime(p)) throw FieldError("p not prime");
    if (k == 0) throw FieldError("field unsupported");
    for (std::uint32_t i = 0; i < k; ++i) {
        if (std::uint64_t{q_} * p > kMaxOrder) throw FieldError("field unsupported");
        q_ *= p;
    }
    const auto factors = prime_factors(q_ - 1);

    modulus_.assign(k + 1, 0);
    if (p == 2) {
        modulus_bits_ = kBinaryPrimitive[k];
        for (std::uint32_t i = 0; i <= k; ++i) modulus_[i] = (modulus_bits_ >> i) & 1u;
    } else {
        // Least monic primitive polynomial, lower coefficients read as a
        // base-p integer.
        modulus_[k] = 1;
        bool found = false;
        for (std::uint32_t idx = 1; idx < q_ && !found; ++idx) {
            std::uint32_t v = idx;
            for (std::uint32_t i = 0; i < k; ++i) {
                modulus_[i] = v % p;
                v /= p;
            }
            found = is_primitive_poly(modulus_, p, q_ - 1, factors);
        }
        if (!found) throw FieldError("field unsupported");
    }

    if (k == 1) {
        generator_ = FieldElement{(p - modulus_[0]) % p};
    } else {
        generator_ = FieldElement{p};
    }

    if (q_ <= kTableLimit) {
        exp_.assign(2 * (q_ - 1), 0);
        log_.assign(q_, 0);
        FieldElement x = one();
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = x.value;
            log_[x.value] = i;
            x = (p_ == 2) ? mul_binary(x, generator_) : mul_slow(x, generator_);
        }
        for (std::uint32_t i = q_ - 1; i < 2 * (q_ - 1); ++i) exp_[i] = exp_[i - (q_ - 1)];
    }

    if (p == 2 && k >= 2) {
        for (std::uint32_t v = 2; v < q_; ++v) {
            const FieldElement a{v};
            if (trace(a) == 1 && is_primitive(a)) {
                primitive_trace_one_ = v;
                break;
            }
        }
        if (primitive_trace_one_ == 0) {
            throw FieldError("internal: no primitive element of trace one");
        }
    }
}

void GaloisField::check(FieldElement a) const {
    if (a.value >= q_) throw FieldError("element outside field");
}

FieldElement GaloisField::element(std::uint32_t index) const {
    FieldElement a{index};
    check(a);
    return a;
}

std::vector<std::uint32_t> GaloisField::coefficients(FieldElement a) const {
    check(a);
    std::vector<std::uint32_t> c(k_);
    std::uint32_t v = a.value;
    for (std::uint32_t i = 0; i < k_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

FieldElement GaloisField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != k_) throw FieldError("coefficient vector has wrong length");
    std::uint32_t v = 0;
    for (std::size_t i = k_; i-- > 0;) {
        if (coeffs[i] >= p_) throw FieldError("coefficient outside prime field");
        v = v * p_ + coeffs[i];
    }
    return FieldElement{v};
}

FieldElement GaloisField::add(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    if (p_ == 2) return FieldElement{a.value ^ b.value};
    std::uint32_t out = 0, scale = 1, x = a.value, y = b.value;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return FieldElement{out};
}

FieldElement GaloisField::neg(FieldElement a) const {
    check(a);
    if (p_ == 2) return a;
    std::uint32_t out = 0, scale = 1, x = a.value;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += ((p_ - x % p_) % p_) * scale;
        x /= p_;
        scale *= p_;
    }
    return FieldElement{out};
}

FieldElement GaloisField::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement GaloisField::mul_binary(FieldElement a, FieldElement b) const {
    std::uint32_t x = a.value, y = b.value, r = 0;
    const std::uint32_t top = 1u << k_;
    while (y) {
        if (y & 1u) r ^= x;
        y >>= 1;
        x <<= 1;
        if (x & top) x ^= modulus_bits_;
    }
    return FieldElement{r};
}

FieldElement GaloisField::mul_slow(FieldElement a, FieldElement b) const {
    if (k_ == 1) {
        return FieldElement{static_cast<std::uint32_t>((std::uint64_t{a.value} * b.value) % p_)};
    }
    const Poly prod = poly_mulmod(coefficients(a), coefficients(b), modulus_, p_);
    return from_coefficients(prod);
}

FieldElement GaloisField::mul(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    if (a.value == 0 || b.value == 0) return zero();
    if (!exp_.empty()) return FieldElement{exp_[log_[a.value] + log_[b.value]]};
    return p_ == 2 ? mul_binary(a, b) : mul_slow(a, b);
}

FieldElement GaloisField::inv(FieldElement a) const {
    check(a);
    if (a.value == 0) throw FieldError("zero divisor");
    if (!exp_.empty()) return FieldElement{exp_[(q_ - 1 - log_[a.value]) % (q_ - 1)]};
    return pow(a, q_ - 2);
}

FieldElement GaloisField::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement GaloisField::pow(FieldElement a, std::uint64_t e) const {
    check(a);
    if (e == 0) return one();
    if (a.value == 0) return zero();
    if (!exp_.empty()) {
        const std::uint64_t idx = (std::uint64_t{log_[a.value]} * (e % (q_ - 1))) % (q_ - 1);
        return FieldElement{exp_[idx]};
    }
    FieldElement r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t GaloisField::multiplicative_order(FieldElement a) const {
    check(a);
    if (a.value == 0) throw FieldError("zero has no multiplicative order");
    std::uint64_t order = q_ - 1;
    for (auto r : prime_factors(q_ - 1)) {
        while (order % r == 0 && pow(a, order / r) == one()) order /= r;
    }
    return order;
}

bool GaloisField::is_primitive(FieldElement a) const {
    return a.value != 0 && multiplicative_order(a) == q_ - 1;
}

FieldElement GaloisField::frobenius_power(FieldElement a, unsigned i) const {
    for (unsigned s = 0; s < i; ++s) a = mul(a, a);
    return a;
}

int GaloisField::trace(FieldElement a) const {
    if (p_ != 2) throw FieldError("trace requires characteristic 2");
    check(a);
    FieldElement sum = zero();
    FieldElement term = a;
    for (std::uint32_t i = 0; i < k_; ++i) {
        sum = add(sum, term);
        term = mul(term, term);
    }
    if (sum.value > 1) throw FieldError("internal: trace outside GF(2)");
    return static_cast<int>(sum.value);
}

FieldElement GaloisField::primitive_trace_one() const {
    if (p_ != 2 || k_ < 2) {
        throw FieldError("primitive trace-one element needs GF(2^l) with l >= 2");
    }
    return FieldElement{primitive_trace_one_};
}

FieldElement GaloisField::solve_quadratic(FieldElement c) const {
    if (p_ != 2) throw FieldError("quadratic solver requires characteristic 2");
    check(c);
    if (c.value == 0) return zero();
    if (trace(c) == 1) throw FieldError("no root in field");

    const int l = static_cast<int>(k_);
    FieldElement z = zero();
    if (l % 2 == 1) {
        for (int i = 0; i <= (l - 1) / 2; ++i) z = add(z, frobenius_power(c, 2 * i));
    } else {
        FieldElement T = zero();
        for (int i = 0; i <= (l - 2) / 2; ++i) T = add(T, frobenius_power(c, 2 * i));
        if (T.value > 1) throw FieldError("no root in field");
        const FieldElement w = primitive_trace_one();

        if (l % 4 == 2) {
            const FieldElement base = add(c, square(c));
            for (int i = 0; i <= (l - 6) / 4; ++i) z = add(z, frobenius_power(base, 2 + 4 * i));
            if (T == one()) z = add(z, pow(w, (q_ - 1) / 3));
        } else {
            // l = 0 mod 4; the T = 0 branch shifts the constant by w + w^2.
            const FieldElement kk = (T == one()) ? c : add(add(w, square(w)), c);
            const int quarter = l / 4;
            const int half = l / 2;
            FieldElement S = zero();
            for (int j = 1; j <= quarter - 1; ++j) {
                for (int i = j; i <= quarter - 1; ++i) {
                    S = add(S, mul(frobenius_power(kk, 2 * i - 1 + half), frobenius_power(kk, 2 * j - 2)));
                }
            }
            FieldElement inner = one();
            for (int i = 0; i <= quarter - 1; ++i) inner = add(inner, frobenius_power(kk, 2 * i + half));
            z = add(add(S, square(S)), mul(frobenius_power(kk, l - 1), inner));
            if (T == zero()) z = add(z, w);
        }
    }

    if (add(add(square(z), z), c) != zero()) throw FieldError("formula mismatch");
    return z;
}

}  // namespace scld
