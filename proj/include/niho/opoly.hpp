// opoly.hpp
//
// O-polynomials as evaluation tables F -> F: the catalog of known families,
// closed-form inverses, the three quadrangle transforms and the o-polynomial
// predicate (D(h) is a hyperoval).
//
// Fractional and negative exponents are reduced modulo q-1 and a zero base maps
// to zero, which agrees with evaluating the reduced monomial as a polynomial.
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "niho/geometry.hpp"
#include "niho/gf2m.hpp"

namespace niho {

enum class OPolyKind {
    Hyperconic,
    Translation,
    Segre,
    Glynn1,
    Glynn2,
    Payne,
    Cherowitzo,
    Subiaco,
    Adelaide,
    Table,
};

struct OPolyTable {
    std::vector<FieldElement> values;  // h(t) at t = 0 .. q-1 (bit order)

    FieldElement operator()(FieldElement t) const { return values.at(t.bits); }
    std::size_t size() const { return values.size(); }
    friend bool operator==(const OPolyTable&, const OPolyTable&) = default;
};

struct OPolyFamily {
    OPolyKind kind = OPolyKind::Hyperconic;
    int r = 1;                          // Translation: h = t^(2^r)
    std::optional<FieldElement> d;      // Subiaco parameter, tr(1/d) = 1
    std::optional<ExtElement> b;        // Adelaide parameter, b in S \ {1}
    int k_sign = 1;                     // Adelaide: k = k_sign (q-1)/3
    OPolyTable table;                   // Table

    static OPolyFamily hyperconic() { return {}; }
    static OPolyFamily translation(int r) {
        OPolyFamily f;
        f.kind = OPolyKind::Translation;
        f.r = r;
        return f;
    }
    static OPolyFamily of(OPolyKind k) {
        OPolyFamily f;
        f.kind = k;
        return f;
    }
    static OPolyFamily from_table(OPolyTable t) {
        OPolyFamily f;
        f.kind = OPolyKind::Table;
        f.table = std::move(t);
        return f;
    }
};

inline std::string to_string(OPolyKind k) {
    switch (k) {
        case OPolyKind::Hyperconic: return "hyperconic";
        case OPolyKind::Translation: return "translation";
        case OPolyKind::Segre: return "segre";
        case OPolyKind::Glynn1: return "glynn1";
        case OPolyKind::Glynn2: return "glynn2";
        case OPolyKind::Payne: return "payne";
        case OPolyKind::Cherowitzo: return "cherowitzo";
        case OPolyKind::Subiaco: return "subiaco";
        case OPolyKind::Adelaide: return "adelaide";
        case OPolyKind::Table: return "table";
    }
    return "?";
}

/// sigma = 2^((m+1)/2) for odd m.
inline std::uint64_t glynn_sigma(int m) { return std::uint64_t{1} << ((m + 1) / 2); }

/// gamma = 2^k for m = 4k-1, 2^(3k+1) for m = 4k+1.
inline std::uint64_t glynn_gamma(int m) {
    if (m % 4 == 3) return std::uint64_t{1} << ((m + 1) / 4);
    return std::uint64_t{1} << (3 * ((m - 1) / 4) + 1);
}

inline bool in_gf4(const Field& F, FieldElement x) { return F.pow(x, 4) == x; }

/// Least d (bit order) with tr(1/d) = 1, outside GF(4) when m = 2 (mod 4).
inline FieldElement default_subiaco_d(const Field& F) {
    for (std::uint32_t v = 1; v < F.q(); ++v) {
        const FieldElement d{v};
        if (F.tr(F.inv(d)) != 1) continue;
        if (F.m() % 4 == 2 && in_gf4(F, d)) continue;
        return d;
    }
    throw std::domain_error("no Subiaco parameter d exists for this field");
}

inline void validate_family(const Field& F, const OPolyFamily& fam) {
    const int m = F.m();
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(to_string(fam.kind) + ": " + what + " (m = " + std::to_string(m) + ")");
    };
    switch (fam.kind) {
        case OPolyKind::Hyperconic: break;
        case OPolyKind::Translation: need(fam.r >= 1 && fam.r < m, "requires 1 <= r < m"); break;
        case OPolyKind::Segre:
        case OPolyKind::Payne:
        case OPolyKind::Cherowitzo: need(m % 2 == 1 && m >= 5, "requires odd m >= 5"); break;
        case OPolyKind::Glynn1:
        case OPolyKind::Glynn2: need(m % 2 == 1 && m >= 7, "requires odd m >= 7"); break;
        case OPolyKind::Subiaco:
            if (fam.d) {
                need(!fam.d->is_zero() && F.tr(F.inv(*fam.d)) == 1, "requires tr(1/d) = 1");
                need(m % 4 != 2 || !in_gf4(F, *fam.d), "requires d outside GF(4) when m = 2 (mod 4)");
            } else {
                (void)default_subiaco_d(F);
            }
            break;
        case OPolyKind::Adelaide:
            need(m % 2 == 0 && m >= 2, "requires even m");
            need(fam.k_sign == 1 || fam.k_sign == -1, "k must be +-(q-1)/3");
            if (fam.b) need(F.on_circle(*fam.b) && *fam.b != F.kone(), "requires b in S, b != 1");
            break;
        case OPolyKind::Table: need(fam.table.size() == F.q(), "table must have q entries"); break;
    }
}

namespace detail {

inline FieldElement adelaide_eval(const Field& F, ExtElement b, int k_sign, FieldElement t) {
    const std::int64_t k = k_sign * static_cast<std::int64_t>((F.q() - 1) / 3);
    const FieldElement Tb = F.T(b);
    const FieldElement inv_Tb = F.inv(Tb);
    const FieldElement rt = F.sqrt(t);
    const FieldElement first = F.mul(F.mul(F.T(F.powz(b, k)), inv_Tb), t + F.one());
    const ExtElement inner = F.mul(t, b) + F.conj(b);
    const FieldElement base = t + F.mul(Tb, rt) + F.one();
    const FieldElement second = F.mul(F.mul(F.T(F.powz(inner, k)), inv_Tb), F.powz(base, 1 - k));
    return first + second + rt;
}

inline FieldElement subiaco_eval(const Field& F, FieldElement d, FieldElement t) {
    const FieldElement d2 = F.sq(d);
    const FieldElement c = F.mul(d2, F.one() + d + d2);
    const FieldElement t2 = F.sq(t), t3 = F.mul(t2, t), t4 = F.sq(t2);
    const FieldElement num = F.mul(d2, t4) + F.mul(c, t3) + F.mul(c, t2) + F.mul(d2, t);
    const FieldElement den = F.sq(t2 + F.mul(d, t) + F.one());
    return F.mul(num, F.inv(den)) + F.sqrt(t);
}

}  // namespace detail

/// Default Adelaide parameter: first b = w^j (j = 1, 2, ...) giving an o-polynomial.
inline OPolyTable opoly_table(const Field& F, const OPolyFamily& fam);
inline bool is_opolynomial(const Field& F, const OPolyTable& h);

inline ExtElement default_adelaide_b(const Field& F, int k_sign) {
    for (std::uint32_t j = 1; j <= F.q(); ++j) {
        OPolyFamily fam = OPolyFamily::of(OPolyKind::Adelaide);
        fam.b = F.unit(j);
        fam.k_sign = k_sign;
        try {
            if (is_opolynomial(F, opoly_table(F, fam))) return F.unit(j);
        } catch (const std::domain_error&) {
        }
    }
    throw std::domain_error("no Adelaide parameter b found");
}

inline FieldElement opoly_eval(const Field& F, const OPolyFamily& fam, FieldElement t) {
    const std::int64_t n = F.q() - 1;
    switch (fam.kind) {
        case OPolyKind::Hyperconic: return F.sq(t);
        case OPolyKind::Translation: return F.pow(t, std::uint64_t{1} << fam.r);
        case OPolyKind::Segre: return F.pow(t, 6);
        case OPolyKind::Glynn1: return F.pow(t, 3 * glynn_sigma(F.m()) + 4);
        case OPolyKind::Glynn2: return F.pow(t, glynn_sigma(F.m()) + glynn_gamma(F.m()));
        case OPolyKind::Payne: {
            const auto sixth = static_cast<std::int64_t>(inverse_exponent(6, n));
            const auto half = static_cast<std::int64_t>(inverse_exponent(2, n));
            return F.powz(t, sixth) + F.powz(t, half) + F.powz(t, 5 * sixth);
        }
        case OPolyKind::Cherowitzo: {
            const auto s = glynn_sigma(F.m());
            return F.pow(t, s) + F.pow(t, s + 2) + F.pow(t, 3 * s + 4);
        }
        // no value_or here: the defaults are searched for, and the Adelaide search calls back into this
        case OPolyKind::Subiaco: return detail::subiaco_eval(F, fam.d ? *fam.d : default_subiaco_d(F), t);
        case OPolyKind::Adelaide:
            return detail::adelaide_eval(F, fam.b ? *fam.b : default_adelaide_b(F, fam.k_sign), fam.k_sign, t);
        case OPolyKind::Table: return fam.table(t);
    }
    throw std::logic_error("unknown o-polynomial family");
}

inline OPolyTable opoly_table(const Field& F, const OPolyFamily& fam) {
    validate_family(F, fam);
    OPolyFamily resolved = fam;
    if (fam.kind == OPolyKind::Subiaco && !fam.d) resolved.d = default_subiaco_d(F);
    if (fam.kind == OPolyKind::Adelaide && !fam.b) resolved.b = default_adelaide_b(F, fam.k_sign);
    OPolyTable h;
    h.values.reserve(F.q());
    for (std::uint32_t t = 0; t < F.q(); ++t) h.values.push_back(opoly_eval(F, resolved, FieldElement{t}));
    return h;
}

inline OPolyTable monomial_table(const Field& F, std::int64_t e) {
    OPolyTable h;
    for (std::uint32_t t = 0; t < F.q(); ++t) h.values.push_back(F.powz(FieldElement{t}, e));
    return h;
}

inline bool is_permutation(const OPolyTable& h) {
    std::vector<char> seen(h.size(), 0);
    for (auto v : h.values) {
        if (v.bits >= h.size() || seen[v.bits]) return false;
        seen[v.bits] = 1;
    }
    return true;
}

/// Functional inverse of a permutation table.
inline OPolyTable inverse_table(const OPolyTable& h) {
    if (!is_permutation(h)) throw std::invalid_argument("inverse_table: not a permutation");
    OPolyTable inv;
    inv.values.resize(h.size());
    for (std::uint32_t t = 0; t < h.size(); ++t) inv.values[h.values[t].bits] = FieldElement{t};
    return inv;
}

inline bool is_opolynomial(const Field& F, const OPolyTable& h) {
    if (h.size() != F.q() || !is_permutation(h)) return false;
    return is_hyperoval(F, hyperoval_from_opoly(F, h.values));
}

/// Closed-form inverse where one is known: hyperconic, translation, monomial
/// families, Payne (D_{1/5}(t))^6 and Cherowitzo t (t^(s+1) + t^3 + t)^(s/2-1).
inline std::optional<OPolyTable> closed_form_inverse(const Field& F, const OPolyFamily& fam) {
    validate_family(F, fam);
    const std::int64_t n = F.q() - 1;
    OPolyTable out;
    auto fill = [&](auto fn) {
        for (std::uint32_t t = 0; t < F.q(); ++t) out.values.push_back(fn(FieldElement{t}));
        return std::optional<OPolyTable>{out};
    };
    switch (fam.kind) {
        case OPolyKind::Hyperconic: return fill([&](FieldElement t) { return F.sqrt(t); });
        case OPolyKind::Translation:
            return fill([&](FieldElement t) { return F.pow(t, std::uint64_t{1} << (F.m() - fam.r)); });
        case OPolyKind::Segre:
            return fill([&](FieldElement t) { return F.powz(t, static_cast<std::int64_t>(inverse_exponent(6, n))); });
        case OPolyKind::Glynn1:
        case OPolyKind::Glynn2: {
            const std::uint64_t e = fam.kind == OPolyKind::Glynn1 ? 3 * glynn_sigma(F.m()) + 4
                                                                  : glynn_sigma(F.m()) + glynn_gamma(F.m());
            const auto ie = static_cast<std::int64_t>(inverse_exponent(static_cast<std::int64_t>(e), n));
            return fill([&](FieldElement t) { return F.powz(t, ie); });
        }
        case OPolyKind::Payne:
            return fill([&](FieldElement t) { return F.pow(dickson_inverse_eval(F, 5, t), 6); });
        case OPolyKind::Cherowitzo: {
            const std::uint64_t s = glynn_sigma(F.m());
            return fill([&](FieldElement t) {
                const FieldElement inner = F.pow(t, s + 1) + F.pow(t, 3) + t;
                return F.mul(t, F.pow(inner, s / 2 - 1));
            });
        }
        default: return std::nullopt;
    }
}

/// Inverse of h3 = pi3(t^6): (D_{1/5}(t + 1))^(q^2-2) + 1.
inline OPolyTable segre_pi3_inverse_closed_form(const Field& F) {
    OPolyTable out;
    for (std::uint32_t t = 0; t < F.q(); ++t)
        out.values.push_back(F.inv0(dickson_inverse_eval(F, 5, FieldElement{t} + F.one())) + F.one());
    return out;
}

/// Inverse table of a family: closed form when available, table inversion otherwise.
inline OPolyTable opoly_inverse(const Field& F, const OPolyFamily& fam) {
    if (auto c = closed_form_inverse(F, fam)) return *c;
    return inverse_table(opoly_table(F, fam));
}

/// pi1: h^-1;  pi2: t h(1/t), 0 -> 0;  pi3: t + (t+1) h(t/(t+1)), 1 -> 1.
inline OPolyTable transform_pi(const Field& F, int k, const OPolyTable& h) {
    if (!is_opolynomial(F, h)) throw std::invalid_argument("transform_pi: input is not an o-polynomial");
    OPolyTable out;
    out.values.resize(F.q());
    switch (k) {
        case 1: return inverse_table(h);
        case 2:
            for (std::uint32_t v = 0; v < F.q(); ++v) {
                const FieldElement t{v};
                out.values[v] = t.is_zero() ? FieldElement{} : F.mul(t, h(F.inv(t)));
            }
            return out;
        case 3:
            for (std::uint32_t v = 0; v < F.q(); ++v) {
                const FieldElement t{v};
                const FieldElement t1 = t + F.one();
                out.values[v] = t1.is_zero() ? F.one() : t + F.mul(t1, h(F.div(t, t1)));
            }
            return out;
        default: throw std::invalid_argument("transform_pi: k must be 1, 2 or 3");
    }
}

}  // namespace niho
