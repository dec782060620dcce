// gfun.hpp
//
// g-functions S -> F.  A g-function is stored as a table indexed by the circle
// index k of u = w^k.  Constructions: from an o-polynomial, from an affine oval
// with nucleus at the origin, from a nucleus shift, and the closed forms of the
// known hyperoval families.  Validity is checked geometrically here (line oval,
// oval with nucleus 0); bentness lives in bent.hpp.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "niho/geometry.hpp"
#include "niho/gf2m.hpp"
#include "niho/opoly.hpp"

namespace niho {

struct GFunction {
    std::vector<FieldElement> values;  // values[k] = g(w^k)
    std::string label;

    FieldElement operator[](std::uint32_t k) const { return values.at(k); }
    std::size_t size() const { return values.size(); }
    bool same_table(const GFunction& o) const { return values == o.values; }
};

inline GFunction tabulate_g(const Field& F, auto fn, std::string label) {
    GFunction g;
    g.label = std::move(label);
    g.values.reserve(F.circle_size());
    for (std::uint32_t k = 0; k < F.circle_size(); ++k) g.values.push_back(fn(k, F.unit(k)));
    return g;
}

inline GFunction constant_g(const Field& F, FieldElement c, std::string label = "constant") {
    return tabulate_g(F, [&](std::uint32_t, const ExtElement&) { return c; }, std::move(label));
}

// -----------------------------------------------------------------------------
// Trace polynomials  c0 + sum T(c_k u^e_k)
// -----------------------------------------------------------------------------

struct TraceTerm {
    std::int64_t exp;
    ExtElement coeff;
};

struct TracePoly {
    FieldElement constant;
    std::vector<TraceTerm> terms;
};

inline FieldElement eval_trace_poly(const Field& F, const TracePoly& p, std::uint32_t k) {
    FieldElement s = p.constant;
    for (const auto& t : p.terms) s += F.T(F.mul(t.coeff, F.unit(F.unit_pow_index(k, t.exp))));
    return s;
}

inline GFunction g_trace_poly(const Field& F, const TracePoly& p, std::string label = "trace polynomial") {
    return tabulate_g(F, [&](std::uint32_t k, const ExtElement&) { return eval_trace_poly(F, p, k); },
                      std::move(label));
}

/// g + <c, u>.
inline GFunction linear_shift(const Field& F, const GFunction& g, ExtElement c) {
    GFunction out = g;
    for (std::uint32_t k = 0; k < F.circle_size(); ++k) out.values[k] += F.bilinear(c, F.unit(k));
    return out;
}

/// The c with g2 = g1 + <c,u>, if there is one.
inline std::optional<ExtElement> equal_up_to_linear_shift(const Field& F, const GFunction& g1, const GFunction& g2) {
    if (g1.size() != F.circle_size() || g2.size() != F.circle_size()) throw std::invalid_argument("g table size");
    // <c,u> = c_a <1,u> + c_b <i,u>; at u = 1 this is c_b.
    const FieldElement cb = g1[0] + g2[0];
    ExtElement c{FieldElement{}, cb};
    if (F.circle_size() > 1) {
        const ExtElement& u = F.unit(1);
        const FieldElement d = g1[1] + g2[1] + F.mul(cb, F.bilinear(F.i(), u));
        c.a = F.div(d, F.bilinear(F.kone(), u));
    }
    for (std::uint32_t k = 0; k < F.circle_size(); ++k)
        if (g1[k] + g2[k] != F.bilinear(c, F.unit(k))) return std::nullopt;
    return c;
}

// -----------------------------------------------------------------------------
// Geometry of a g-function
// -----------------------------------------------------------------------------

/// { u/g(u) }, with u_inf (the point at infinity in direction u) where g(u) = 0.
inline std::vector<ProjPointH> oval_points_h(const Field& F, const GFunction& g) {
    std::vector<ProjPointH> pts;
    pts.reserve(F.circle_size());
    for (std::uint32_t k = 0; k < F.circle_size(); ++k) {
        const ExtElement& u = F.unit(k);
        pts.push_back(g[k].is_zero() ? to_h(F, infinite_point(F, u)) : to_h(F, affine_point(F, F.mul(F.inv(g[k]), u))));
    }
    return pts;
}

/// { u/g(u) } is an oval whose nucleus is the origin.
inline bool oval_condition(const Field& F, const GFunction& g) {
    auto pts = oval_points_h(F, g);
    pts.push_back({FieldElement{}, FieldElement{}, F.one()});
    return is_hyperoval(F, pts);
}

inline std::vector<AffineLineK> line_set(const Field& F, const GFunction& g) {
    std::vector<AffineLineK> lines;
    lines.reserve(F.circle_size());
    for (std::uint32_t k = 0; k < F.circle_size(); ++k) lines.push_back({F.unit(k), g[k]});
    return lines;
}

/// { L(u, g(u)) } is a line oval.
inline bool line_oval_condition(const Field& F, const GFunction& g) { return is_line_oval(F, line_set(F, g)); }

inline bool zero_free(const GFunction& g) {
    return std::none_of(g.values.begin(), g.values.end(), [](FieldElement v) { return v.is_zero(); });
}

/// Affine oval { u/g(u) } in K, ordered by circle index.  Requires g nowhere zero.
inline std::vector<ExtElement> affine_oval(const Field& F, const GFunction& g) {
    if (!zero_free(g)) throw std::invalid_argument("affine_oval: g has zeros");
    std::vector<ExtElement> out;
    out.reserve(F.circle_size());
    for (std::uint32_t k = 0; k < F.circle_size(); ++k) out.push_back(F.mul(F.inv(g[k]), F.unit(k)));
    return out;
}

/// The hyperoval { u/g(u) } u { 0 } in the H-model; the origin is the last point.
inline std::vector<ProjPointH> hyperoval_points(const Field& F, const GFunction& g) {
    std::vector<ProjPointH> pts;
    for (const auto& x : affine_oval(F, g)) pts.push_back(to_h(F, affine_point(F, x)));
    pts.push_back({FieldElement{}, FieldElement{}, F.one()});
    return pts;
}

inline std::vector<ProjPointH> to_h(const Field& F, const std::vector<ExtElement>& xs) {
    std::vector<ProjPointH> pts;
    pts.reserve(xs.size());
    for (const auto& x : xs) pts.push_back(to_h(F, affine_point(F, x)));
    return pts;
}

/// q+1 distinct nonzero points which together with 0 form a hyperoval.
inline bool is_affine_oval_origin_nucleus(const Field& F, const std::vector<ExtElement>& O) {
    if (O.size() != F.circle_size()) return false;
    for (const auto& v : O)
        if (v.is_zero()) return false;
    auto pts = to_h(F, O);
    pts.push_back({FieldElement{}, FieldElement{}, F.one()});
    return is_hyperoval(F, pts);
}

// -----------------------------------------------------------------------------
// g from an affine oval:  g(u) = sum_i a_i u^(i+1),  a_i = sum_v w_v b_v^((q-1)i/2 - 1)
// -----------------------------------------------------------------------------

namespace detail {

struct WeightedBase {
    ExtElement weight;
    ExtElement base;
};

/// a_i = sum weight * base^((q-1) i / 2 - 1), i = 0..q, halving taken modulo q^2-1.
inline std::vector<ExtElement> power_sum_coefficients(const Field& F, const std::vector<WeightedBase>& terms) {
    const std::uint64_t n = F.ext_order();
    const std::uint64_t half = (n + 1) / 2;  // 1/2 mod q^2-1
    const std::uint64_t step = static_cast<std::uint64_t>((static_cast<unsigned __int128>(F.q() - 1) * half) % n);
    std::vector<ExtElement> a(F.circle_size());
    for (const auto& t : terms) {
        if (t.base.is_zero()) throw std::invalid_argument("oval point at the origin");
        const ExtElement r = F.pow(t.base, step);
        ExtElement cur = F.mul(t.weight, F.inv(t.base));
        for (std::uint32_t i = 0; i <= F.q(); ++i) {
            a[i] += cur;
            cur = F.mul(cur, r);
        }
    }
    return a;
}

inline GFunction g_from_coefficients(const Field& F, const std::vector<ExtElement>& a, std::string label) {
    GFunction g;
    g.label = std::move(label);
    g.values.reserve(F.circle_size());
    for (std::uint32_t k = 0; k < F.circle_size(); ++k) {
        const ExtElement& u = F.unit(k);
        ExtElement s, up = u;
        for (std::uint32_t i = 0; i <= F.q(); ++i) {
            s += F.mul(a[i], up);
            up = F.mul(up, u);
        }
        if (!s.in_base()) throw std::invalid_argument("point set is not an oval with nucleus at the origin");
        g.values.push_back(s.a);
    }
    return g;
}

}  // namespace detail

inline GFunction g_from_oval(const Field& F, const std::vector<ExtElement>& O) {
    if (!is_affine_oval_origin_nucleus(F, O))
        throw std::invalid_argument("g_from_oval: not an oval with nucleus at the origin");
    std::vector<detail::WeightedBase> terms;
    terms.reserve(O.size());
    for (const auto& v : O) terms.push_back({F.kone(), v});
    return detail::g_from_coefficients(F, detail::power_sum_coefficients(F, terms), "oval");
}

// -----------------------------------------------------------------------------
// Nucleus shift: the oval O_s = { v/g(v) + s/g(s) : v != s } u { s/g(s) }
// -----------------------------------------------------------------------------

inline std::vector<ExtElement> shifted_oval(const Field& F, const GFunction& g, std::uint32_t s) {
    const auto H = affine_oval(F, g);
    const ExtElement p = H.at(s);
    std::vector<ExtElement> out;
    out.reserve(H.size());
    for (std::uint32_t k = 0; k < H.size(); ++k) out.push_back(k == s ? p : H[k] + p);
    return out;
}

/// g_s through the coefficient formula a_i = g(s) s^e + g(s) sum g(v)(g(s)v + s g(v))^e.
inline GFunction g_shift(const Field& F, const GFunction& g, std::uint32_t s) {
    if (!zero_free(g)) throw std::invalid_argument("g_shift: g has zeros; apply fix_zeros first");
    if (s >= F.circle_size()) throw std::out_of_range("g_shift: circle index");
    const ExtElement su = F.unit(s);
    const ExtElement gs = F.embed(g[s]);
    std::vector<detail::WeightedBase> terms;
    terms.reserve(F.circle_size());
    terms.push_back({gs, su});
    for (std::uint32_t k = 0; k < F.circle_size(); ++k) {
        if (k == s) continue;
        const ExtElement base = F.mul(g[s], F.unit(k)) + F.mul(g[k], su);
        terms.push_back({F.mul(g[s], F.embed(g[k])), base});
    }
    return detail::g_from_coefficients(F, detail::power_sum_coefficients(F, terms),
                                       g.label + "; shift s=" + std::to_string(s));
}

/// g_s by building O_s and reading g off the oval.
inline GFunction g_shift_direct(const Field& F, const GFunction& g, std::uint32_t s) {
    GFunction out = g_from_oval(F, shifted_oval(F, g, s));
    out.label = g.label + "; shift s=" + std::to_string(s);
    return out;
}

// -----------------------------------------------------------------------------
// Zero removal
// -----------------------------------------------------------------------------

/// g + <c,u> nowhere zero; c is the first of 0, lambda*i (lambda in F*), then all of K.
inline std::pair<GFunction, ExtElement> fix_zeros(const Field& F, const GFunction& g) {
    auto try_c = [&](ExtElement c) -> std::optional<GFunction> {
        GFunction h = linear_shift(F, g, c);
        if (zero_free(h)) return h;
        return std::nullopt;
    };
    if (zero_free(g)) return {g, ExtElement{}};
    for (std::uint32_t l = 1; l < F.q(); ++l) {
        const ExtElement c{FieldElement{}, FieldElement{l}};
        if (auto h = try_c(c)) return {*h, c};
    }
    for (std::uint32_t v = 1; v < F.q() * F.q(); ++v)
        if (auto h = try_c(F.unpack(v))) return {*h, F.unpack(v)};
    throw std::invalid_argument("fix_zeros: no zero-free linear shift exists, so g is not a g-function");
}

// -----------------------------------------------------------------------------
// From o-polynomials
// -----------------------------------------------------------------------------

enum class GVariant {
    WithI,  // h^-1(<i,u>/<1,u>) <1,u> + <i,u>, g(1) = 1
    Plain,  // h^-1(<i,u>/<1,u>) <1,u>,         g(1) = 0
};

/// g from the functional inverse table of an o-polynomial.
inline GFunction g_from_inverse(const Field& F, const OPolyTable& hinv, GVariant variant, std::string label) {
    return tabulate_g(
        F,
        [&](std::uint32_t, const ExtElement& u) {
            const FieldElement xi = F.bilinear(F.i(), u);
            const FieldElement x1 = F.bilinear(F.kone(), u);
            FieldElement v = x1.is_zero() ? FieldElement{} : F.mul(hinv(F.div(xi, x1)), x1);
            if (variant == GVariant::WithI) v += xi;
            return v;
        },
        std::move(label));
}

inline GFunction g_from_opoly(const Field& F, const OPolyTable& h, GVariant variant = GVariant::WithI,
                              std::string label = "o-polynomial") {
    if (!is_opolynomial(F, h)) throw std::invalid_argument("g_from_opoly: not an o-polynomial");
    return g_from_inverse(F, inverse_table(h), variant, std::move(label));
}

/// <i,u>^(1/s) <1,u>^(q - 1/s), 1/s modulo q-1.  Equals the Plain variant for h = t^s.
/// iota replaces i (any iota with T(iota) = 1, e.g. conj(i)).
inline GFunction g_monomial(const Field& F, std::int64_t s, std::optional<ExtElement> iota = std::nullopt) {
    const std::int64_t n = F.q() - 1;
    const ExtElement io = iota.value_or(F.i());
    if (F.T(io) != F.one()) throw std::invalid_argument("g_monomial: T(iota) must be 1");
    if (n == 1) return g_from_inverse(F, monomial_table(F, 1), GVariant::Plain, "monomial s=" + std::to_string(s));
    const auto si = static_cast<std::int64_t>(inverse_exponent(s, n));
    return tabulate_g(
        F,
        [&](std::uint32_t, const ExtElement& u) {
            return F.mul(F.powz(F.bilinear(io, u), si), F.powz(F.bilinear(F.kone(), u), F.q() - si));
        },
        "monomial s=" + std::to_string(s));
}

// -----------------------------------------------------------------------------
// Closed forms of the known families
// -----------------------------------------------------------------------------

/// Translation g_r(u) = (u u^(2^(m-r)) + conj) / (u^(2^(m-r)) + conj), g_r(1) = 1; g_1 = 1.
inline GFunction g_translation(const Field& F, int r) {
    if (r < 1 || r >= std::max(2, F.m())) throw std::invalid_argument("translation: requires 1 <= r < m");
    if (r == 1) return constant_g(F, F.one(), "translation r=1");
    const std::int64_t e = std::int64_t{1} << (F.m() - r);
    return tabulate_g(
        F,
        [&](std::uint32_t k, const ExtElement& u) {
            if (k == 0) return F.one();
            const ExtElement ue = F.unit(F.unit_pow_index(k, e));
            const FieldElement num = F.T(F.mul(u, ue));
            const FieldElement den = F.T(ue);
            return F.div(num, den);
        },
        "translation r=" + std::to_string(r));
}

/// Third translation class <i,u>^(1/(1-2^r)) <1,u>^(q - 1/(1-2^r)).
inline GFunction g_translation_third(const Field& F, int r) {
    GFunction g = g_monomial(F, 1 - (std::int64_t{1} << r));
    g.label = "translation third class r=" + std::to_string(r);
    return g;
}

/// 1 + T(w^j u^5); j = 0 always valid, j = 1 the second hyperoval for m = 2 (mod 4).
inline GFunction g_subiaco(const Field& F, int j) {
    TracePoly p{F.one(), {{5, F.unit(static_cast<std::uint32_t>(j))}}};
    return g_trace_poly(F, p, "subiaco j=" + std::to_string(j));
}

/// 1 + w^j u^5 + conj(w)^5j conj(u)^5, the alternative reading for j = 1; not F-valued in general.
inline std::optional<GFunction> g_subiaco_alt(const Field& F, int j) {
    GFunction g;
    g.label = "subiaco alt j=" + std::to_string(j);
    const ExtElement c = F.unit(static_cast<std::uint32_t>(j));
    const ExtElement cb5 = F.pow(F.conj(c), 5);
    for (std::uint32_t k = 0; k < F.circle_size(); ++k) {
        const ExtElement u5 = F.unit(F.unit_pow_index(k, 5));
        const ExtElement v = F.kone() + F.mul(c, u5) + F.mul(cb5, F.conj(u5));
        if (!v.in_base()) return std::nullopt;
        g.values.push_back(v.a);
    }
    return g;
}

/// 1 + T(u^((q-1)/3)), m even.
inline GFunction g_adelaide(const Field& F) {
    if (F.m() % 2 != 0) throw std::invalid_argument("adelaide: requires even m");
    TracePoly p{F.one(), {{static_cast<std::int64_t>((F.q() - 1) / 3), F.kone()}}};
    return g_trace_poly(F, p, "adelaide");
}

/// The oval { u + u^3 + u^-3 } in K (the hyperoval with 0 added).
inline std::vector<ExtElement> payne_oval(const Field& F) {
    std::vector<ExtElement> out;
    for (std::uint32_t k = 0; k < F.circle_size(); ++k)
        out.push_back(F.unit(k) + F.unit(F.unit_pow_index(k, 3)) + F.unit(F.unit_pow_index(k, -3)));
    return out;
}

inline GFunction g_payne(const Field& F) {
    GFunction g = g_from_oval(F, payne_oval(F));
    g.label = "payne";
    return g;
}

/// Least root in K of e^10 + e^6 + e^5 + e^3 + e^2 + e + 1 (m = 5).
inline ExtElement okeefe_penttila_epsilon(const Field& F) {
    if (F.m() != 5) throw std::invalid_argument("okeefe-penttila: defined for m = 5");
    static constexpr int kExps[] = {10, 6, 5, 3, 2, 1, 0};
    for (std::uint32_t v = 1; v < F.q() * F.q(); ++v) {
        const ExtElement e = F.unpack(v);
        ExtElement s;
        for (int x : kExps) s += F.pow(e, static_cast<std::uint64_t>(x));
        if (s.is_zero()) return e;
    }
    throw std::logic_error("epsilon polynomial has no root in K");
}

/// 1 + T(e^123 u^9) + T(u^12).
inline GFunction g_okeefe_penttila(const Field& F) {
    const ExtElement c = F.pow(okeefe_penttila_epsilon(F), 123);
    TracePoly p{F.one(), {{9, c}, {12, F.kone()}}};
    return g_trace_poly(F, p, "okeefe-penttila");
}

enum class GFamily {
    Hyperconic,
    Translation,
    TranslationThird,
    Segre,
    Glynn1,
    Glynn2,
    Payne,
    Cherowitzo,
    Subiaco,
    Adelaide,
    OKeefePenttila,
    LunelliSce,
};

struct GFamilySpec {
    GFamily family = GFamily::Hyperconic;
    int r = 1;  // Translation r; Subiaco coefficient index j
};

inline std::string to_string(GFamily f) {
    switch (f) {
        case GFamily::Hyperconic: return "hyperconic";
        case GFamily::Translation: return "translation";
        case GFamily::TranslationThird: return "translation-third";
        case GFamily::Segre: return "segre";
        case GFamily::Glynn1: return "glynn1";
        case GFamily::Glynn2: return "glynn2";
        case GFamily::Payne: return "payne";
        case GFamily::Cherowitzo: return "cherowitzo";
        case GFamily::Subiaco: return "subiaco";
        case GFamily::Adelaide: return "adelaide";
        case GFamily::OKeefePenttila: return "okeefe-penttila";
        case GFamily::LunelliSce: return "lunelli-sce";
    }
    return "?";
}

inline GFamily parse_gfamily(const std::string& s) {
    for (int k = 0; k <= static_cast<int>(GFamily::LunelliSce); ++k)
        if (to_string(static_cast<GFamily>(k)) == s) return static_cast<GFamily>(k);
    throw std::invalid_argument("unknown family '" + s + "'");
}

inline GFunction g_catalog(const Field& F, const GFamilySpec& spec) {
    const int m = F.m();
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(to_string(spec.family) + ": " + what);
    };
    auto named = [&](GFunction g) {
        g.label = to_string(spec.family);
        return g;
    };
    switch (spec.family) {
        case GFamily::Hyperconic: return constant_g(F, F.one(), "hyperconic");
        case GFamily::Translation: return g_translation(F, spec.r);
        case GFamily::TranslationThird:
            need(spec.r > 1 && spec.r < m - 1, "requires 1 < r < m-1");
            return g_translation_third(F, spec.r);
        case GFamily::Segre:
            need(m % 2 == 1 && m >= 5, "requires odd m >= 5");
            return named(g_monomial(F, 6));
        case GFamily::Glynn1:
            need(m % 2 == 1 && m >= 7, "requires odd m >= 7");
            return named(g_monomial(F, static_cast<std::int64_t>(3 * glynn_sigma(m) + 4)));
        case GFamily::Glynn2:
            need(m % 2 == 1 && m >= 7, "requires odd m >= 7");
            return named(g_monomial(F, static_cast<std::int64_t>(glynn_sigma(m) + glynn_gamma(m))));
        case GFamily::Payne:
            need(m % 2 == 1 && m >= 5, "requires odd m >= 5");
            return g_payne(F);
        case GFamily::Cherowitzo:
            need(m % 2 == 1 && m >= 5, "requires odd m >= 5");
            return g_from_inverse(F, *closed_form_inverse(F, OPolyFamily::of(OPolyKind::Cherowitzo)), GVariant::WithI,
                                  "cherowitzo");
        case GFamily::Subiaco:
            need(spec.r == 0 || (spec.r == 1 && m % 4 == 2), "coefficient index j must be 0, or 1 when m = 2 (mod 4)");
            return g_subiaco(F, spec.r);
        case GFamily::Adelaide:
            need(m % 2 == 0 && m >= 4, "requires even m >= 4");
            return g_adelaide(F);
        case GFamily::OKeefePenttila: return g_okeefe_penttila(F);
        case GFamily::LunelliSce:
            need(m == 4, "defined for m = 4");
            return named(g_subiaco(F, 0));
    }
    throw std::logic_error("unknown g family");
}

}  // namespace niho
