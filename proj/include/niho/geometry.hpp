// geometry.hpp
//
// PG(2,q) in two coordinate models:
//
//   H-model  points (x : y : z) and lines [a : b : c] over F, incidence ax+by+cz = 0;
//   K-model  points (x : z), x in K, z in F, and lines [alpha : beta], incidence
//            <alpha, x> + beta z = 0.
//
// The models are identified through (x : y : z) <-> (x + y i : z).  Because the
// K-model coordinates are F-linear in (x, y) every predicate is evaluated in the
// H-model and the K-model converts first.
//
// Hyperovals, ovals and line ovals live here as well.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "niho/gf2m.hpp"

namespace niho {

/// Homogeneous triple, last nonzero coordinate scaled to 1.  Also used for lines.
struct ProjPointH {
    FieldElement x, y, z;
    friend constexpr bool operator==(const ProjPointH&, const ProjPointH&) = default;
};
using LineH = ProjPointH;

inline ProjPointH normalize(const Field& F, ProjPointH p) {
    FieldElement s;
    if (!p.z.is_zero()) s = p.z;
    else if (!p.y.is_zero()) s = p.y;
    else if (!p.x.is_zero()) s = p.x;
    else throw std::domain_error("(0:0:0) is not a projective point");
    if (s == F.one()) return p;
    const FieldElement t = F.inv(s);
    return {F.mul(t, p.x), F.mul(t, p.y), F.mul(t, p.z)};
}

/// Dense index in [0, q^2+q+1) of a normalized point: (x:y:1) -> x + yq,
/// (x:1:0) -> q^2 + x, (1:0:0) -> q^2 + q.
inline std::uint32_t point_index(const Field& F, const ProjPointH& p) {
    const std::uint32_t q = F.q();
    if (!p.z.is_zero()) return p.x.bits + p.y.bits * q;
    if (!p.y.is_zero()) return q * q + p.x.bits;
    return q * q + q;
}

inline ProjPointH point_from_index(const Field& F, std::uint32_t k) {
    const std::uint32_t q = F.q();
    if (k < q * q) return {FieldElement{k % q}, FieldElement{k / q}, F.one()};
    if (k < q * q + q) return {FieldElement{k - q * q}, F.one(), FieldElement{}};
    return {F.one(), FieldElement{}, FieldElement{}};
}

inline std::uint32_t plane_size(const Field& F) { return F.q() * F.q() + F.q() + 1; }

inline bool incident(const Field& F, const ProjPointH& p, const LineH& l) {
    return (F.mul(l.x, p.x) + F.mul(l.y, p.y) + F.mul(l.z, p.z)).is_zero();
}

/// Cross product: the line through two points, or the meet of two lines.
inline ProjPointH join(const Field& F, const ProjPointH& p, const ProjPointH& r) {
    return normalize(F, {F.mul(p.y, r.z) + F.mul(p.z, r.y), F.mul(p.z, r.x) + F.mul(p.x, r.z),
                         F.mul(p.x, r.y) + F.mul(p.y, r.x)});
}

inline FieldElement det3(const Field& F, const ProjPointH& a, const ProjPointH& b, const ProjPointH& c) {
    return F.mul(a.x, F.mul(b.y, c.z) + F.mul(b.z, c.y)) + F.mul(a.y, F.mul(b.x, c.z) + F.mul(b.z, c.x)) +
           F.mul(a.z, F.mul(b.x, c.y) + F.mul(b.y, c.x));
}

inline bool collinear(const Field& F, const ProjPointH& a, const ProjPointH& b, const ProjPointH& c) {
    return det3(F, a, b, c).is_zero();
}

inline std::vector<ProjPointH> all_points(const Field& F) {
    std::vector<ProjPointH> out;
    out.reserve(plane_size(F));
    for (std::uint32_t k = 0; k < plane_size(F); ++k) out.push_back(point_from_index(F, k));
    return out;
}

/// The q+1 points of a line.
inline std::vector<ProjPointH> points_on_line(const Field& F, const LineH& l) {
    std::vector<ProjPointH> out;
    for (std::uint32_t k = 0; k < plane_size(F); ++k) {
        auto p = point_from_index(F, k);
        if (incident(F, p, l)) out.push_back(p);
    }
    return out;
}

/// Sorted by point index, duplicates removed.
inline std::vector<ProjPointH> canonical(const Field& F, std::vector<ProjPointH> pts) {
    for (auto& p : pts) p = normalize(F, p);
    std::sort(pts.begin(), pts.end(),
              [&](const ProjPointH& a, const ProjPointH& b) { return point_index(F, a) < point_index(F, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// -----------------------------------------------------------------------------
// K-model
// -----------------------------------------------------------------------------

/// (x : z); z = 1 for affine points, otherwise z = 0 and x on the unit circle.
struct ProjPointK {
    ExtElement x;
    FieldElement z;
    friend constexpr bool operator==(const ProjPointK&, const ProjPointK&) = default;
};

inline ProjPointK normalize(const Field& F, ProjPointK p) {
    if (!p.z.is_zero()) {
        const FieldElement t = F.inv(p.z);
        return {F.mul(t, p.x), F.one()};
    }
    if (p.x.is_zero()) throw std::domain_error("(0:0) is not a projective point");
    return {F.polar(p.x).second, FieldElement{}};
}

inline ProjPointK affine_point(const Field& F, ExtElement x) { return {x, F.one()}; }
/// The point at infinity in direction u.
inline ProjPointK infinite_point(const Field& F, ExtElement u) { return normalize(F, ProjPointK{u, FieldElement{}}); }

inline ProjPointK to_k(const Field& F, const ProjPointH& p) { return normalize(F, ProjPointK{{p.x, p.y}, p.z}); }
inline ProjPointH to_h(const Field& F, const ProjPointK& p) { return normalize(F, ProjPointH{p.x.a, p.x.b, p.z}); }

/// Line [alpha : beta]: <alpha, x> + beta z = 0.
struct LineK {
    ExtElement alpha;
    FieldElement beta;
};

inline bool incident(const Field& F, const ProjPointK& p, const LineK& l) {
    return (F.bilinear(l.alpha, p.x) + F.mul(l.beta, p.z)).is_zero();
}

/// <alpha, x + y i> = x <alpha,1> + y <alpha,i>, so [alpha : beta] = [<alpha,1> : <alpha,i> : beta].
inline LineH to_h(const Field& F, const LineK& l) {
    return normalize(F, LineH{F.bilinear(l.alpha, F.kone()), F.bilinear(l.alpha, F.i()), l.beta});
}

/// Affine line L(u, mu) = { x in K : <u,x> + mu = 0 }, u on the unit circle.
struct AffineLineK {
    ExtElement u;
    FieldElement mu;
};

inline LineK as_line(const AffineLineK& l) { return {l.u, l.mu}; }

/// The q affine points (lambda + mu i) u, lambda in F.
inline std::vector<ExtElement> points_on_line(const Field& F, const AffineLineK& l) {
    std::vector<ExtElement> out;
    out.reserve(F.q());
    for (std::uint32_t lam = 0; lam < F.q(); ++lam) out.push_back(F.mul(ExtElement{FieldElement{lam}, l.mu}, l.u));
    return out;
}

// -----------------------------------------------------------------------------
// Arcs: hyperovals and ovals
// -----------------------------------------------------------------------------

/// Exhaustive O(n^3) check over all triples.
inline bool no_three_collinear_triples(const Field& F, const std::vector<ProjPointH>& pts) {
    const std::size_t n = pts.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                if (collinear(F, pts[a], pts[b], pts[c])) return false;
    return true;
}

/// O(n^2): through each point every other point must lie on a different line.
inline bool no_three_collinear_secants(const Field& F, const std::vector<ProjPointH>& pts) {
    std::vector<std::uint32_t> stamp(plane_size(F), 0);
    std::uint32_t round = 0;
    for (std::size_t a = 0; a < pts.size(); ++a) {
        ++round;
        for (std::size_t b = 0; b < pts.size(); ++b) {
            if (a == b) continue;
            const std::uint32_t l = point_index(F, join(F, pts[a], pts[b]));
            if (stamp[l] == round) return false;
            stamp[l] = round;
        }
    }
    return true;
}

inline bool all_distinct(const Field& F, const std::vector<ProjPointH>& pts) {
    return canonical(F, pts).size() == pts.size();
}

/// q+2 distinct points, no three collinear.  Triple check for m <= 4, secant bitmap above.
inline bool is_hyperoval(const Field& F, const std::vector<ProjPointH>& pts) {
    if (pts.size() != F.q() + 2) throw std::invalid_argument("a hyperoval has q+2 points");
    if (!all_distinct(F, pts)) return false;
    return F.m() <= 4 ? no_three_collinear_triples(F, pts) : no_three_collinear_secants(F, pts);
}

inline bool is_arc(const Field& F, const std::vector<ProjPointH>& pts) {
    return all_distinct(F, pts) && no_three_collinear_secants(F, pts);
}

inline bool is_oval(const Field& F, const std::vector<ProjPointH>& pts) {
    if (pts.size() != F.q() + 1) throw std::invalid_argument("an oval has q+1 points");
    return is_arc(F, pts);
}

/// The tangent line of an arc of q+1 points at pts[a].
inline LineH tangent(const Field& F, const std::vector<ProjPointH>& pts, std::size_t a) {
    std::vector<char> secant(plane_size(F), 0);
    for (std::size_t b = 0; b < pts.size(); ++b)
        if (b != a) secant[point_index(F, join(F, pts[a], pts[b]))] = 1;
    // the lines through P are P x R for R on any line not through P
    const ProjPointH& p = pts[a];
    LineH far{F.one(), FieldElement{}, FieldElement{}};
    if (incident(F, p, far)) far = {FieldElement{}, F.one(), FieldElement{}};
    if (incident(F, p, far)) far = {FieldElement{}, FieldElement{}, F.one()};
    for (const auto& r : points_on_line(F, far)) {
        const LineH l = join(F, p, r);
        if (!secant[point_index(F, l)]) return l;
    }
    throw std::logic_error("no tangent line found");
}

/// Common point of all tangents of an oval.
inline ProjPointH nucleus(const Field& F, const std::vector<ProjPointH>& oval) {
    if (!is_oval(F, oval)) throw std::invalid_argument("nucleus: point set is not an oval");
    const ProjPointH n = join(F, tangent(F, oval, 0), tangent(F, oval, 1));
    for (std::size_t a = 2; a < oval.size(); ++a)
        if (!incident(F, n, tangent(F, oval, a))) throw std::logic_error("oval tangents do not concur");
    return n;
}

struct Oval {
    std::vector<ProjPointH> points;
    ProjPointH nucleus;
};

inline Oval make_oval(const Field& F, std::vector<ProjPointH> pts) {
    ProjPointH n = nucleus(F, pts);
    return {canonical(F, std::move(pts)), n};
}

/// Hyperoval as a canonical point set; throws if the points do not form one.
inline std::vector<ProjPointH> make_hyperoval(const Field& F, std::vector<ProjPointH> pts) {
    if (!is_hyperoval(F, pts)) throw std::invalid_argument("point set is not a hyperoval");
    return canonical(F, std::move(pts));
}

inline std::vector<ProjPointH> to_h(const Field& F, const std::vector<ProjPointK>& pts) {
    std::vector<ProjPointH> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(to_h(F, p));
    return out;
}

/// D(h) = { (t : h(t) : 1) } u { (1:0:0), (0:1:0) }.
inline std::vector<ProjPointH> hyperoval_from_opoly(const Field& F, const std::vector<FieldElement>& h) {
    std::vector<ProjPointH> pts;
    pts.reserve(F.q() + 2);
    for (std::uint32_t t = 0; t < F.q(); ++t) pts.push_back({FieldElement{t}, h[t], F.one()});
    pts.push_back({F.one(), FieldElement{}, FieldElement{}});
    pts.push_back({FieldElement{}, F.one(), FieldElement{}});
    return pts;
}

// -----------------------------------------------------------------------------
// Line ovals in AG(2,q) = K
// -----------------------------------------------------------------------------

/// Multiplicity of every affine point of K (packed index) over the given lines.
inline std::vector<std::uint8_t> line_multiplicity(const Field& F, const std::vector<AffineLineK>& lines) {
    std::vector<std::uint8_t> mult(std::size_t{F.q()} * F.q(), 0);
    for (const auto& l : lines)
        for (const auto& x : points_on_line(F, l)) {
            auto& c = mult[F.pack(x)];
            if (c < 255) ++c;
        }
    return mult;
}

/// q+1 lines with pairwise distinct directions, no three concurrent.
inline bool is_line_oval(const Field& F, const std::vector<AffineLineK>& lines) {
    if (lines.size() != F.q() + 1) throw std::invalid_argument("a line oval has q+1 lines");
    std::vector<char> seen(F.q() + 1, 0);
    for (const auto& l : lines) {
        auto k = F.unit_index(l.u);
        if (seen[k]) return false;
        seen[k] = 1;
    }
    const auto mult = line_multiplicity(F, lines);
    return std::all_of(mult.begin(), mult.end(), [](std::uint8_t c) { return c <= 2; });
}

/// E(O): the affine points covered by the lines of a line oval, sorted.
inline std::vector<ExtElement> line_oval_points(const Field& F, const std::vector<AffineLineK>& lines) {
    if (!is_line_oval(F, lines)) throw std::invalid_argument("line_oval_points: not a line oval");
    const auto mult = line_multiplicity(F, lines);
    std::vector<ExtElement> out;
    for (std::uint32_t v = 0; v < mult.size(); ++v) {
        if (mult[v] == 0) continue;
        if (mult[v] != 2) throw std::logic_error("line oval point with multiplicity != 2");
        out.push_back(F.unpack(v));
    }
    return out;
}

}  // namespace niho
