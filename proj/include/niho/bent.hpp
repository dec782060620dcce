// bent.hpp
//
// Niho bent functions f(lambda u) = tr(lambda g(u)) as truth tables over K
// (index = packed bits of x), their Walsh spectra with the scalar product
// b.x = tr<b,x>, duals, and the univariate polynomial forms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "niho/gf2m.hpp"
#include "niho/gfun.hpp"

namespace niho {

struct BooleanFn {
    int m = 0;                        // n = 2m variables
    std::vector<std::uint8_t> bits;   // bits[pack(x)] = f(x)

    std::size_t size() const { return bits.size(); }
    friend bool operator==(const BooleanFn&, const BooleanFn&) = default;
};

using WalshSpectrum = std::vector<std::int32_t>;

inline BooleanFn tabulate_fn(const Field& F, auto fn) {
    BooleanFn f{F.m(), std::vector<std::uint8_t>(std::size_t{F.q()} * F.q())};
    for (std::uint32_t v = 0; v < f.bits.size(); ++v) f.bits[v] = static_cast<std::uint8_t>(fn(F.unpack(v)) & 1);
    return f;
}

inline BooleanFn bent_from_g(const Field& F, const GFunction& g) {
    if (g.size() != F.circle_size()) throw std::invalid_argument("bent_from_g: g table size");
    BooleanFn f{F.m(), std::vector<std::uint8_t>(std::size_t{F.q()} * F.q(), 0)};
    for (std::uint32_t k = 0; k < F.circle_size(); ++k) {
        const ExtElement& u = F.unit(k);
        for (std::uint32_t l = 1; l < F.q(); ++l) {
            const FieldElement lambda{l};
            f.bits[F.pack(F.mul(lambda, u))] = static_cast<std::uint8_t>(F.tr(F.mul(lambda, g[k])));
        }
    }
    return f;
}

/// g with f(lambda u) = tr(lambda g(u)), or nothing if f is not linear on every line uF.
inline std::optional<GFunction> g_from_bent(const Field& F, const BooleanFn& f) {
    if (f.bits.at(0) != 0) return std::nullopt;
    GFunction g;
    g.label = "bent";
    for (std::uint32_t k = 0; k < F.circle_size(); ++k) {
        const ExtElement& u = F.unit(k);
        std::optional<FieldElement> found;
        for (std::uint32_t c = 0; c < F.q() && !found; ++c) {
            bool ok = true;
            for (std::uint32_t l = 1; l < F.q() && ok; ++l)
                ok = f.bits[F.pack(F.mul(FieldElement{l}, u))] == F.tr(F.mul(FieldElement{l}, FieldElement{c}));
            if (ok) found = FieldElement{c};
        }
        if (!found) return std::nullopt;
        g.values.push_back(*found);
    }
    return g;
}

// -----------------------------------------------------------------------------
// Walsh transform
// -----------------------------------------------------------------------------

/// Row masks of the symmetric GF(2) matrix M with tr<b,x> = b^T M x.
inline std::vector<std::uint32_t> scalar_product_matrix(const Field& F) {
    const int n = 2 * F.m();
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (F.tr(F.bilinear(F.unpack(1u << j), F.unpack(1u << k)))) rows[j] |= 1u << k;
    return rows;
}

inline std::uint32_t apply_matrix(const std::vector<std::uint32_t>& rows, std::uint32_t b) {
    std::uint32_t y = 0;
    for (std::size_t j = 0; b; ++j, b >>= 1)
        if (b & 1) y ^= rows[j];
    return y;
}

/// In-place Walsh-Hadamard butterfly on +-1 values.
inline void fwht(std::vector<std::int32_t>& a) {
    for (std::size_t h = 1; h < a.size(); h <<= 1)
        for (std::size_t i = 0; i < a.size(); i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) {
                const std::int32_t x = a[j], y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
}

/// W(b) = sum_x (-1)^(f(x) + tr<b,x>).
inline WalshSpectrum walsh_spectrum(const Field& F, const BooleanFn& f) {
    std::vector<std::int32_t> a(f.bits.size());
    for (std::size_t v = 0; v < a.size(); ++v) a[v] = f.bits[v] ? -1 : 1;
    fwht(a);
    const auto rows = scalar_product_matrix(F);
    WalshSpectrum w(a.size());
    for (std::uint32_t b = 0; b < w.size(); ++b) w[b] = a[apply_matrix(rows, b)];
    return w;
}

/// The O(4^n) definition, for cross-checks.
inline WalshSpectrum walsh_spectrum_naive(const Field& F, const BooleanFn& f) {
    WalshSpectrum w(f.bits.size(), 0);
    for (std::uint32_t b = 0; b < w.size(); ++b) {
        const ExtElement bb = F.unpack(b);
        std::int32_t s = 0;
        for (std::uint32_t x = 0; x < w.size(); ++x) s += ((f.bits[x] ^ F.tr(F.bilinear(bb, F.unpack(x)))) & 1) ? -1 : 1;
        w[b] = s;
    }
    return w;
}

struct SpectrumSummary {
    std::int32_t min = 0;
    std::int32_t max = 0;
    bool is_bent = false;
};

inline SpectrumSummary summarize(const Field& F, const WalshSpectrum& w) {
    SpectrumSummary s;
    s.min = *std::min_element(w.begin(), w.end());
    s.max = *std::max_element(w.begin(), w.end());
    const auto q = static_cast<std::int32_t>(F.q());
    s.is_bent = std::all_of(w.begin(), w.end(), [q](std::int32_t v) { return v == q || v == -q; });
    return s;
}

inline bool is_bent(const Field& F, const BooleanFn& f) { return summarize(F, walsh_spectrum(F, f)).is_bent; }

/// (-1)^dual(b) q = W(b).
inline BooleanFn dual(const Field& F, const BooleanFn& f) {
    const auto w = walsh_spectrum(F, f);
    if (!summarize(F, w).is_bent) throw std::invalid_argument("dual: function is not bent");
    BooleanFn d{f.m, std::vector<std::uint8_t>(w.size())};
    for (std::size_t b = 0; b < w.size(); ++b) d.bits[b] = w[b] < 0 ? 1 : 0;
    return d;
}

// -----------------------------------------------------------------------------
// Validation: bentness, line oval, oval with nucleus 0
// -----------------------------------------------------------------------------

struct GValidation {
    bool bent = false;
    bool line_oval = false;
    bool oval = false;

    bool valid() const { return bent && line_oval && oval; }
    bool consistent() const { return bent == line_oval && line_oval == oval; }
};

inline GValidation validate_g(const Field& F, const GFunction& g) {
    return {is_bent(F, bent_from_g(F, g)), line_oval_condition(F, g), oval_condition(F, g)};
}

struct DualLineOvalReport {
    bool equal = false;
    std::size_t zero_count = 0;
    std::size_t expected = 0;
};

/// The zeros of the dual are exactly E({L(u,g(u))}).
inline DualLineOvalReport dual_lineoval_check(const Field& F, const GFunction& g) {
    const auto lines = line_set(F, g);
    if (!is_line_oval(F, lines)) throw std::invalid_argument("dual_lineoval_check: g is not a g-function");
    const auto E = line_oval_points(F, lines);
    const BooleanFn d = dual(F, bent_from_g(F, g));
    std::vector<std::uint8_t> in_e(d.bits.size(), 0);
    for (const auto& x : E) in_e[F.pack(x)] = 1;
    DualLineOvalReport r;
    r.expected = std::size_t{F.q()} * (F.q() + 1) / 2;
    r.equal = E.size() == r.expected;
    for (std::size_t v = 0; v < d.bits.size(); ++v) {
        const bool zero = d.bits[v] == 0;
        r.zero_count += zero;
        if (zero != static_cast<bool>(in_e[v])) r.equal = false;
    }
    return r;
}

// -----------------------------------------------------------------------------
// Polynomials over K
// -----------------------------------------------------------------------------

/// sum c_e x^e, exponents reduced into [1, q^2-1] (0 stays 0).  0^0 = 1, 0^e = 0.
struct NihoPolynomial {
    std::map<std::uint64_t, ExtElement> terms;

    void add(const Field& F, std::uint64_t e, ExtElement c) {
        if (e != 0) e = (e - 1) % F.ext_order() + 1;
        auto& slot = terms[e];
        slot += c;
        if (slot.is_zero()) terms.erase(e);
    }
};

inline ExtElement eval_poly(const Field& F, const NihoPolynomial& p, ExtElement x) {
    ExtElement s;
    for (const auto& [e, c] : p.terms) s += F.mul(c, F.pow(x, e));
    return s;
}

enum class TraceKind {
    None,      // the value itself lies in GF(2)
    Relative,  // tr of a value in F
    Absolute,  // Tr over K
};

inline BooleanFn poly_to_fn(const Field& F, const NihoPolynomial& p, TraceKind kind) {
    return tabulate_fn(F, [&](ExtElement x) -> int {
        const ExtElement v = eval_poly(F, p, x);
        switch (kind) {
            case TraceKind::Absolute: return F.Tr(v);
            case TraceKind::Relative:
                if (!v.in_base()) throw std::domain_error("polynomial value outside F under tr");
                return F.tr(v.a);
            case TraceKind::None:
                if (!v.in_base() || v.a.bits > 1) throw std::domain_error("polynomial value is not in GF(2)");
                return static_cast<int>(v.a.bits);
        }
        return 0;
    });
}

/// Tr(sum c x^e) from (exponent, coefficient) pairs.
inline NihoPolynomial make_poly(const Field& F, const std::vector<std::pair<std::uint64_t, ExtElement>>& terms) {
    NihoPolynomial p;
    for (const auto& [e, c] : terms) p.add(F, e, c);
    return p;
}

namespace detail {

/// sum_j sum_i (sum_t w_t^(2^j) / b_t^(i(q-1)+2^j)) x^(i(q-1)+2^j).
inline NihoPolynomial niho_power_sums(const Field& F, const std::vector<WeightedBase>& terms) {
    NihoPolynomial p;
    const std::uint64_t q = F.q();
    for (int j = 0; j < F.m(); ++j) {
        const std::uint64_t pj = std::uint64_t{1} << j;
        std::vector<ExtElement> c(q + 1);
        for (const auto& t : terms) {
            const ExtElement binv = F.inv(t.base);
            const ExtElement step = F.pow(binv, q - 1);
            ExtElement cur = F.mul(F.pow(t.weight, pj), F.pow(binv, pj));
            for (std::uint64_t i = 0; i <= q; ++i) {
                c[i] += cur;
                cur = F.mul(cur, step);
            }
        }
        for (std::uint64_t i = 0; i <= q; ++i)
            if (!c[i].is_zero()) p.add(F, i * (q - 1) + pj, c[i]);
    }
    return p;
}

}  // namespace detail

/// The bent function of an affine oval with nucleus at the origin, as a polynomial.
/// The sum over j already is the trace, so values lie in GF(2): evaluate with TraceKind::None.
inline NihoPolynomial f_univariate(const Field& F, const std::vector<ExtElement>& O) {
    if (!is_affine_oval_origin_nucleus(F, O)) throw std::invalid_argument("f_univariate: not an oval with nucleus 0");
    std::vector<detail::WeightedBase> terms;
    for (const auto& v : O) terms.push_back({F.kone(), v});
    return detail::niho_power_sums(F, terms);
}

/// The bent function of the oval O_s through the nucleus-shift coefficient formula.
inline NihoPolynomial f_shift(const Field& F, const GFunction& g, std::uint32_t s) {
    if (!zero_free(g)) throw std::invalid_argument("f_shift: g has zeros; apply fix_zeros first");
    const ExtElement su = F.unit(s);
    std::vector<detail::WeightedBase> terms;
    terms.push_back({F.embed(g[s]), su});
    for (std::uint32_t k = 0; k < F.circle_size(); ++k) {
        if (k == s) continue;
        terms.push_back({F.embed(F.mul(g[s], g[k])), F.mul(g[s], F.unit(k)) + F.mul(g[k], su)});
    }
    return detail::niho_power_sums(F, terms);
}

// -----------------------------------------------------------------------------
// Translation functions f_r
// -----------------------------------------------------------------------------

/// Piecewise: tr(sqrt(x xbar)) on F, tr((x x^e + xbar xbar^e)/(x^e + xbar^e)) off F, e = 2^(m-r).
inline BooleanFn f_translation_piecewise(const Field& F, int r) {
    const std::uint64_t e = std::uint64_t{1} << (F.m() - r);
    return tabulate_fn(F, [&](ExtElement x) -> int {
        if (r == 1 || x.in_base()) return F.tr(F.sqrt(F.N(x)));
        const ExtElement xe = F.pow(x, e);
        return F.tr(F.div(F.T(F.mul(x, xe)), F.T(xe)));
    });
}

/// Tr(a x^(q+1) + sum_{i=1}^{2^(r-1)-1} x^(d_i)), 2^r d_i = (q-1) i + 2^r.
inline NihoPolynomial f_translation_poly(const Field& F, int r, std::optional<ExtElement> a = std::nullopt) {
    const ExtElement aa = a.value_or(F.i());
    if (F.T(aa) != F.one()) throw std::invalid_argument("f_translation: a + conj(a) must be 1");
    NihoPolynomial p;
    const std::uint64_t n = F.ext_order();
    p.add(F, F.q() + 1, aa);
    const auto inv2r = static_cast<std::uint64_t>(inverse_exponent(std::int64_t{1} << r, n));
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << (r - 1)); ++i) {
        const auto base = static_cast<unsigned __int128>((F.q() - 1) * i + (std::uint64_t{1} << r));
        p.add(F, static_cast<std::uint64_t>((base * inv2r) % n), F.kone());
    }
    return p;
}

inline BooleanFn f_translation(const Field& F, int r) {
    if (r < 1 || r >= std::max(2, F.m())) throw std::invalid_argument("f_translation: requires 1 <= r < m");
    BooleanFn piecewise = f_translation_piecewise(F, r);
    BooleanFn poly = poly_to_fn(F, f_translation_poly(F, r), TraceKind::Absolute);
    if (piecewise != poly) throw std::logic_error("f_translation: piecewise and Niho-exponent forms disagree");
    return poly;
}

}  // namespace niho
