// gf2m.hpp
//
// Arithmetic in F = GF(2^m) and its quadratic extension K = F(i), where i is a
// root of z^2 + z + delta with tr(delta) = 1, so that T(i) = i + i^q = 1.
//
// F elements are bit vectors in the power basis of the modulus.  K elements are
// pairs (a, b) meaning a + b*i.  In this basis conjugation, the relative trace
// T, the norm N and the bilinear form <x,y> = T(x*conj(y)) all have short closed
// forms:
//
//     conj(a + b i) = (a + b) + b i
//     T(a + b i)    = b
//     N(a + b i)    = a^2 + a b + delta b^2
//
// The unit circle S = { u : N(u) = 1 } is stored as the cyclic sequence
// w^0, w^1, ..., w^q for a fixed generator w.  For odd m the generator is chosen
// so that w^((q+1)/3) equals the basis element i, i.e. i = omega.
//
// -----------------------------------------------------------------------------
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <unordered_map>
#include <vector>

namespace niho {

struct FieldElement {
    std::uint32_t bits = 0;

    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint32_t b) : bits(b) {}

    constexpr bool is_zero() const { return bits == 0; }
    friend constexpr bool operator==(FieldElement, FieldElement) = default;
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
    friend constexpr FieldElement operator+(FieldElement x, FieldElement y) { return FieldElement{x.bits ^ y.bits}; }
    constexpr FieldElement& operator+=(FieldElement y) {
        bits ^= y.bits;
        return *this;
    }
};

/// z = a + b*i.
struct ExtElement {
    FieldElement a;
    FieldElement b;

    constexpr ExtElement() = default;
    constexpr ExtElement(FieldElement a_, FieldElement b_) : a(a_), b(b_) {}
    constexpr explicit ExtElement(FieldElement a_) : a(a_) {}

    constexpr bool is_zero() const { return a.is_zero() && b.is_zero(); }
    constexpr bool in_base() const { return b.is_zero(); }
    friend constexpr bool operator==(ExtElement, ExtElement) = default;
    friend constexpr auto operator<=>(ExtElement x, ExtElement y) {
        // canonical order: b-bits high, a-bits low
        if (auto c = x.b <=> y.b; c != 0) return c;
        return x.a <=> y.a;
    }
    friend constexpr ExtElement operator+(ExtElement x, ExtElement y) { return {x.a + y.a, x.b + y.b}; }
    constexpr ExtElement& operator+=(ExtElement y) {
        a += y.a;
        b += y.b;
        return *this;
    }
};

// -----------------------------------------------------------------------------
// Exponent arithmetic.
// -----------------------------------------------------------------------------

/// Canonical non-negative residue of e modulo n.
inline std::uint64_t reduce_exponent(std::int64_t e, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("reduce_exponent: zero modulus");
    auto r = static_cast<std::int64_t>(static_cast<std::uint64_t>(e < 0 ? -(e + 1) : e) % n);
    if (e < 0) r = static_cast<std::int64_t>(n) - 1 - r;
    return static_cast<std::uint64_t>(r);
}

/// Inverse of e modulo n; throws std::domain_error if gcd(e, n) != 1.
inline std::uint64_t inverse_exponent(std::int64_t e, std::uint64_t n) {
    if (n == 1) return 0;
    std::int64_t a = static_cast<std::int64_t>(reduce_exponent(e, n));
    std::int64_t b = static_cast<std::int64_t>(n);
    std::int64_t x0 = 1, x1 = 0;
    while (b != 0) {
        std::int64_t t = a / b;
        std::tie(a, b) = std::make_pair(b, a - t * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - t * x1);
    }
    if (a != 1)
        throw std::domain_error("exponent " + std::to_string(e) + " is not invertible modulo " + std::to_string(n));
    return reduce_exponent(x0, n);
}

/// (1 - 2^r)^{-1} mod 2^m - 1 through the closed form -sum_{j<s} 2^{rj}, rs = 1 (mod m).
inline std::uint64_t translation_inverse_closed_form(int m, int r) {
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    const auto s = static_cast<std::int64_t>(inverse_exponent(r, static_cast<std::uint64_t>(m)));
    std::uint64_t sum = 0;
    for (std::int64_t j = 0; j < s; ++j) sum = (sum + (std::uint64_t{1} << ((r * j) % m))) % n;
    return (n - sum) % n;
}

// -----------------------------------------------------------------------------
// Binary polynomials (for modulus validation).
// -----------------------------------------------------------------------------
namespace gf2poly {

inline int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

inline std::uint64_t mod(std::uint64_t a, std::uint64_t p) {
    const int dp = degree(p);
    for (int da = degree(a); da >= dp; da = degree(a)) a ^= p << (da - dp);
    return a;
}

/// Trial division by every polynomial of degree 1..deg/2.
inline bool is_irreducible(std::uint64_t p) {
    const int d = degree(p);
    if (d < 1) return false;
    for (std::uint64_t f = 2; degree(f) <= d / 2; ++f)
        if (mod(p, f) == 0) return false;
    return true;
}

}  // namespace gf2poly

/// Lexicographically least primitive polynomial of each degree 1..16.
inline constexpr std::array<std::uint32_t, 17> kDefaultModulus = {
    0,      0x3,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,    0x11d,
    0x211,  0x409,  0x805,  0x1053, 0x201b, 0x402b, 0x8003, 0x1002d,
};

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// -----------------------------------------------------------------------------
// Field
// -----------------------------------------------------------------------------

struct UnitCircle {
    std::vector<ExtElement> elements;  // elements[k] = w^k
    ExtElement generator;
};

/// F = GF(2^m) and K = F(i).  Immutable after construction.
class Field {
public:
    static constexpr int kMaxDegree = 16;

    explicit Field(int m, std::optional<std::uint32_t> modulus = std::nullopt) : m_(m) {
        if (m < 1 || m > kMaxDegree) throw std::invalid_argument("field degree m must be in [1, 16]");
        modulus_ = modulus.value_or(kDefaultModulus[static_cast<std::size_t>(m)]);
        if (gf2poly::degree(modulus_) != m)
            throw std::invalid_argument("modulus must have degree m = " + std::to_string(m));
        if (!gf2poly::is_irreducible(modulus_)) throw std::invalid_argument("modulus is reducible");
        q_ = std::uint32_t{1} << m;
        build_log_tables();
        build_trace_mask();
        build_artin_schreier();
        for (std::uint32_t d = 1; d < q_; ++d) {
            if (tr(FieldElement{d})) {
                delta_ = FieldElement{d};
                break;
            }
        }
        build_unit_circle();
    }

    int m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t modulus() const { return modulus_; }
    FieldElement delta() const { return delta_; }
    /// |K*| = q^2 - 1.
    std::uint64_t ext_order() const { return std::uint64_t{q_} * q_ - 1; }

    // ---- F ------------------------------------------------------------------

    FieldElement one() const { return FieldElement{1}; }
    FieldElement primitive() const { return FieldElement{exp_[1]}; }
    FieldElement from_log(std::uint64_t k) const { return FieldElement{exp_[k % (q_ - 1)]}; }
    std::uint32_t log(FieldElement x) const {
        if (x.is_zero()) throw std::domain_error("log of zero");
        return log_[x.bits];
    }

    FieldElement mul(FieldElement x, FieldElement y) const {
        if (x.is_zero() || y.is_zero()) return {};
        return FieldElement{exp_[log_[x.bits] + log_[y.bits]]};
    }
    FieldElement sq(FieldElement x) const { return mul(x, x); }
    FieldElement inv(FieldElement x) const {
        if (x.is_zero()) throw std::domain_error("inverse of zero in GF(2^m)");
        return FieldElement{exp_[(q_ - 1 - log_[x.bits]) % (q_ - 1)]};
    }
    /// Multiplicative inverse extended by 0 -> 0 (the value of x^(q-2)).
    FieldElement inv0(FieldElement x) const { return x.is_zero() ? FieldElement{} : inv(x); }
    FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }

    /// x^e with 0^0 = 1.
    FieldElement pow(FieldElement x, std::uint64_t e) const {
        if (x.is_zero()) return e == 0 ? one() : FieldElement{};
        return FieldElement{exp_[static_cast<std::uint32_t>((std::uint64_t{log_[x.bits]} * (e % (q_ - 1))) % (q_ - 1))]};
    }
    /// x^e for a signed exponent, 0^e = 0 for every e != 0.
    FieldElement powz(FieldElement x, std::int64_t e) const {
        if (x.is_zero()) return e == 0 ? one() : FieldElement{};
        return pow(x, reduce_exponent(e, q_ - 1));
    }
    FieldElement sqrt(FieldElement x) const { return pow(x, q_ >> 1); }

    /// Absolute trace F -> GF(2).
    int tr(FieldElement x) const { return std::popcount(x.bits & trace_mask_) & 1; }

    // ---- K ------------------------------------------------------------------

    ExtElement i() const { return {FieldElement{}, one()}; }
    ExtElement kone() const { return ExtElement{one()}; }
    ExtElement embed(FieldElement x) const { return ExtElement{x}; }

    /// Packed index a | b << m, the canonical bit order of K.
    std::uint32_t pack(ExtElement z) const { return z.a.bits | (z.b.bits << m_); }
    ExtElement unpack(std::uint32_t v) const { return {FieldElement{v & (q_ - 1)}, FieldElement{v >> m_}}; }

    ExtElement mul(ExtElement x, ExtElement y) const {
        // (a + b i)(c + d i) = ac + bd delta + (ad + bc + bd) i
        const FieldElement bd = mul(x.b, y.b);
        return {mul(x.a, y.a) + mul(bd, delta_), mul(x.a, y.b) + mul(x.b, y.a) + bd};
    }
    ExtElement mul(FieldElement l, ExtElement x) const { return {mul(l, x.a), mul(l, x.b)}; }
    ExtElement sq(ExtElement x) const {
        const FieldElement b2 = sq(x.b);
        return {sq(x.a) + mul(b2, delta_), b2};
    }
    ExtElement conj(ExtElement x) const { return {x.a + x.b, x.b}; }
    FieldElement T(ExtElement x) const { return x.b; }
    FieldElement N(ExtElement x) const { return sq(x.a) + mul(x.a, x.b) + mul(delta_, sq(x.b)); }
    /// Absolute trace K -> GF(2).
    int Tr(ExtElement x) const { return tr(T(x)); }

    ExtElement inv(ExtElement x) const {
        if (x.is_zero()) throw std::domain_error("inverse of zero in GF(2^2m)");
        return mul(inv(N(x)), conj(x));
    }
    ExtElement inv0(ExtElement x) const { return x.is_zero() ? ExtElement{} : inv(x); }
    ExtElement div(ExtElement x, ExtElement y) const { return mul(x, inv(y)); }

    /// x^e with 0^0 = 1.
    ExtElement pow(ExtElement x, std::uint64_t e) const {
        if (x.is_zero()) return e == 0 ? kone() : ExtElement{};
        e %= ext_order();
        ExtElement r = kone();
        while (e) {
            if (e & 1) r = mul(r, x);
            x = sq(x);
            e >>= 1;
        }
        return r;
    }
    ExtElement powz(ExtElement x, std::int64_t e) const {
        if (x.is_zero()) return e == 0 ? kone() : ExtElement{};
        return pow(x, reduce_exponent(e, ext_order()));
    }
    ExtElement sqrt(ExtElement x) const {
        for (int k = 0; k < 2 * m_ - 1; ++k) x = sq(x);
        return x;
    }
    /// x -> x^(2^j).
    ExtElement frobenius(ExtElement x, int j) const {
        j = ((j % (2 * m_)) + 2 * m_) % (2 * m_);
        for (int k = 0; k < j; ++k) x = sq(x);
        return x;
    }

    /// <x,y> = x conj(y) + conj(x) y.
    FieldElement bilinear(ExtElement x, ExtElement y) const { return T(mul(x, conj(y))); }

    /// A root z in K of z^2 + z = c.  z lies in F exactly when tr(c) = 0.
    ExtElement solve_artin_schreier(FieldElement c) const {
        if (tr(c) == 0) return ExtElement{FieldElement{as_root_[c.bits]}};
        return {FieldElement{as_root_[(c + delta_).bits]}, one()};
    }

    // ---- unit circle --------------------------------------------------------

    const UnitCircle& circle() const { return circle_; }
    std::uint32_t circle_size() const { return q_ + 1; }
    const ExtElement& unit(std::uint32_t k) const { return circle_.elements[k % (q_ + 1)]; }
    /// Index k with w^k = u; throws if u is not on the unit circle.
    std::uint32_t unit_index(ExtElement u) const {
        auto it = circle_index_.find(pack(u));
        if (it == circle_index_.end()) throw std::domain_error("element is not on the unit circle");
        return it->second;
    }
    bool on_circle(ExtElement u) const { return circle_index_.count(pack(u)) != 0; }
    /// u^e for u = w^k, e reduced modulo q+1.
    std::uint32_t unit_pow_index(std::uint32_t k, std::int64_t e) const {
        return static_cast<std::uint32_t>((std::uint64_t{k} * reduce_exponent(e, q_ + 1)) % (q_ + 1));
    }
    /// omega = w^((q+1)/3); only defined for odd m, where it equals i.
    ExtElement omega() const {
        if (m_ % 2 == 0) throw std::domain_error("omega lies on the unit circle only for odd m");
        return unit((q_ + 1) / 3);
    }

    /// Polar form x = lambda * u with lambda in F*, u in S.
    std::pair<FieldElement, ExtElement> polar(ExtElement x) const {
        if (x.is_zero()) throw std::domain_error("polar decomposition of zero");
        const FieldElement lambda = sqrt(N(x));
        return {lambda, mul(inv(lambda), x)};
    }

private:
    FieldElement mul_poly(FieldElement x, FieldElement y) const {
        std::uint32_t r = 0, a = x.bits, b = y.bits;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a & q_) a ^= modulus_;
        }
        return FieldElement{r};
    }

    void build_log_tables() {
        const std::uint32_t n = q_ - 1;
        exp_.assign(2 * std::size_t{n} + 1, 0);
        log_.assign(q_, 0);
        if (n == 1) {
            exp_[0] = exp_[1] = exp_[2] = 1;
            return;
        }
        const auto factors = prime_factors(n);
        // least generator of F*, found with plain polynomial arithmetic
        for (std::uint32_t g = 2; g < q_; ++g) {
            auto power = [&](std::uint64_t e) {
                FieldElement r{1}, x{g};
                while (e) {
                    if (e & 1) r = mul_poly(r, x);
                    x = mul_poly(x, x);
                    e >>= 1;
                }
                return r;
            };
            if (std::all_of(factors.begin(), factors.end(), [&](std::uint64_t p) { return power(n / p).bits != 1; })) {
                FieldElement x{1};
                for (std::uint32_t k = 0; k < n; ++k) {
                    exp_[k] = exp_[k + n] = x.bits;
                    log_[x.bits] = k;
                    x = mul_poly(x, FieldElement{g});
                }
                exp_[2 * n] = 1;
                return;
            }
        }
        throw std::logic_error("no generator of F* found");
    }

    void build_trace_mask() {
        trace_mask_ = 0;
        for (int j = 0; j < m_; ++j) {
            FieldElement x{std::uint32_t{1} << j}, s{};
            for (int k = 0; k < m_; ++k) {
                s += x;
                x = sq(x);
            }
            if (s.bits & 1) trace_mask_ |= std::uint32_t{1} << j;
        }
    }

    void build_artin_schreier() {
        as_root_.assign(q_, 0);
        for (std::uint32_t z = q_; z-- > 0;) {
            const FieldElement x{z};
            as_root_[(sq(x) + x).bits] = z;
        }
    }

    void build_unit_circle() {
        const std::uint64_t n = ext_order();
        const auto factors = prime_factors(n);
        ExtElement v;
        for (std::uint32_t c = 2;; ++c) {
            v = unpack(c);
            if (std::all_of(factors.begin(), factors.end(), [&](std::uint64_t p) { return pow(v, n / p) != kone(); }))
                break;
        }
        ExtElement w = pow(v, q_ - 1);
        if (m_ % 2 == 1 && pow(w, (q_ + 1) / 3) != i()) w = conj(w);
        if (m_ % 2 == 1 && pow(w, (q_ + 1) / 3) != i()) throw std::logic_error("omega != i");
        circle_.generator = w;
        circle_.elements.resize(q_ + 1);
        ExtElement x = kone();
        for (std::uint32_t k = 0; k <= q_; ++k) {
            circle_.elements[k] = x;
            circle_index_.emplace(pack(x), k);
            x = mul(x, w);
        }
        if (x != kone()) throw std::logic_error("unit circle generator has wrong order");
    }

    int m_;
    std::uint32_t q_ = 0;
    std::uint32_t modulus_ = 0;
    FieldElement delta_;
    std::uint32_t trace_mask_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> as_root_;
    UnitCircle circle_;
    std::unordered_map<std::uint32_t, std::uint32_t> circle_index_;
};

/// Field element from a polynomial written as its bit list, e.g. {0,2} -> 1 + x^2.
inline FieldElement field_element_from_bits(std::uint32_t bits) { return FieldElement{bits}; }

// -----------------------------------------------------------------------------
// Dickson polynomials over F.
//
// D_k(y + 1/y) = y^k + y^-k, with y a root of y^2 + x y + 1 in K.  For x in F the
// root lies in F* or in S, so D_k only depends on k modulo q^2 - 1 and the
// inverse of D_s as a map on F is D_{s'} with s s' = 1 (mod q^2 - 1).
// -----------------------------------------------------------------------------
inline FieldElement dickson_eval(const Field& F, std::uint64_t k, FieldElement x) {
    if (x.is_zero()) {
        // y = 1; y^k + y^-k = 0 in characteristic 2
        return {};
    }
    // y = x z with z^2 + z = 1/x^2
    const ExtElement z = F.solve_artin_schreier(F.inv(F.sq(x)));
    const ExtElement y = F.mul(x, z);
    const std::uint64_t e = k % F.ext_order();
    const ExtElement r = F.pow(y, e) + F.pow(F.inv(y), e);
    if (!r.in_base()) throw std::logic_error("Dickson value left the base field");
    return r.a;
}

/// D_{1/s} as a map on F: the index 1/s is taken modulo q^2 - 1.
inline FieldElement dickson_inverse_eval(const Field& F, std::int64_t s, FieldElement x) {
    return dickson_eval(F, inverse_exponent(s, F.ext_order()), x);
}

}  // namespace niho
