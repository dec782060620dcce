// equiv.hpp
//
// Collineations of PG(2,q), hyperoval stabilizers and their point orbits,
// projective equivalence of hyperovals and of ovals with a marked nucleus, and
// the classification of the bent functions attached to one hyperoval.
//
// Search: fix four points P0..P3 of the source set A.  A collineation M s^j with
// M P_k^(2^j) = Q_k for an ordered 4-tuple Q of the target set B is unique, so
// running over j and all ordered 4-tuples of B finds every map A -> B.  Each
// candidate is rejected as soon as one further image leaves B.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "niho/bent.hpp"
#include "niho/geometry.hpp"
#include "niho/gf2m.hpp"
#include "niho/gfun.hpp"

namespace niho {

using Vec3 = std::array<FieldElement, 3>;
using Mat3 = std::array<FieldElement, 9>;  // row major

/// p -> M p^(2^frob).
struct Collineation {
    Mat3 M{};
    int frob = 0;
    friend bool operator==(const Collineation&, const Collineation&) = default;
};

namespace detail {

inline Vec3 to_vec(const ProjPointH& p) { return {p.x, p.y, p.z}; }
inline ProjPointH to_point(const Vec3& v) { return {v[0], v[1], v[2]}; }

inline FieldElement frob_elem(const Field& F, FieldElement x, int j) {
    for (int k = 0; k < j; ++k) x = F.sq(x);
    return x;
}

inline Vec3 frob_vec(const Field& F, Vec3 v, int j) {
    for (auto& x : v) x = frob_elem(F, x, j);
    return v;
}

inline Mat3 frob_mat(const Field& F, Mat3 m, int j) {
    for (auto& x : m) x = frob_elem(F, x, j);
    return m;
}

inline Vec3 mat_vec(const Field& F, const Mat3& m, const Vec3& v) {
    return {F.mul(m[0], v[0]) + F.mul(m[1], v[1]) + F.mul(m[2], v[2]),
            F.mul(m[3], v[0]) + F.mul(m[4], v[1]) + F.mul(m[5], v[2]),
            F.mul(m[6], v[0]) + F.mul(m[7], v[1]) + F.mul(m[8], v[2])};
}

inline Mat3 mat_mul(const Field& F, const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 3; ++k)
            for (int t = 0; t < 3; ++t) c[3 * r + k] += F.mul(a[3 * r + t], b[3 * t + k]);
    return c;
}

inline FieldElement mat_det(const Field& F, const Mat3& a) {
    return F.mul(a[0], F.mul(a[4], a[8]) + F.mul(a[5], a[7])) + F.mul(a[1], F.mul(a[3], a[8]) + F.mul(a[5], a[6])) +
           F.mul(a[2], F.mul(a[3], a[7]) + F.mul(a[4], a[6]));
}

/// Inverse via the adjugate; throws on a singular matrix.
inline Mat3 mat_inv(const Field& F, const Mat3& a) {
    const FieldElement d = mat_det(F, a);
    if (d.is_zero()) throw std::domain_error("singular matrix");
    const FieldElement di = F.inv(d);
    auto cof = [&](int r0, int r1, int c0, int c1) {
        return F.mul(a[3 * r0 + c0], a[3 * r1 + c1]) + F.mul(a[3 * r0 + c1], a[3 * r1 + c0]);
    };
    // characteristic 2: signs vanish; adj[k][r] = minor(r, k)
    const Mat3 adj = {cof(1, 2, 1, 2), cof(0, 2, 1, 2), cof(0, 1, 1, 2),  //
                      cof(1, 2, 0, 2), cof(0, 2, 0, 2), cof(0, 1, 0, 2),  //
                      cof(1, 2, 0, 1), cof(0, 2, 0, 1), cof(0, 1, 0, 1)};
    Mat3 out;
    for (int k = 0; k < 9; ++k) out[k] = F.mul(adj[k], di);
    return out;
}

inline Mat3 columns(const Vec3& a, const Vec3& b, const Vec3& c) {
    return {a[0], b[0], c[0], a[1], b[1], c[1], a[2], b[2], c[2]};
}

/// Matrix sending e1, e2, e3, (1,1,1) to the projective points p0..p3.
inline Mat3 frame_matrix(const Field& F, const Vec3& p0, const Vec3& p1, const Vec3& p2, const Vec3& p3) {
    const Mat3 B = columns(p0, p1, p2);
    const Vec3 c = mat_vec(F, mat_inv(F, B), p3);
    return columns({F.mul(c[0], p0[0]), F.mul(c[0], p0[1]), F.mul(c[0], p0[2])},
                   {F.mul(c[1], p1[0]), F.mul(c[1], p1[1]), F.mul(c[1], p1[2])},
                   {F.mul(c[2], p2[0]), F.mul(c[2], p2[1]), F.mul(c[2], p2[2])});
}

/// Scale so that the first nonzero entry is 1.
inline Mat3 canonical_scale(const Field& F, Mat3 m) {
    for (auto x : m)
        if (!x.is_zero()) {
            const FieldElement s = F.inv(x);
            for (auto& y : m) y = F.mul(y, s);
            break;
        }
    return m;
}

}  // namespace detail

inline Collineation identity_collineation(const Field& F) {
    return {{F.one(), {}, {}, {}, F.one(), {}, {}, {}, F.one()}, 0};
}

inline ProjPointH apply(const Field& F, const Collineation& c, const ProjPointH& p) {
    return normalize(F, detail::to_point(detail::mat_vec(F, c.M, detail::frob_vec(F, detail::to_vec(p), c.frob))));
}

/// a after b: M_a M_b^(s^ja) s^(ja+jb).
inline Collineation compose(const Field& F, const Collineation& a, const Collineation& b) {
    return {detail::canonical_scale(F, detail::mat_mul(F, a.M, detail::frob_mat(F, b.M, a.frob))),
            (a.frob + b.frob) % F.m()};
}

inline Collineation inverse(const Field& F, const Collineation& c) {
    const int j = (F.m() - c.frob) % F.m();
    return {detail::canonical_scale(F, detail::frob_mat(F, detail::mat_inv(F, c.M), j)), j};
}

/// x -> c x^(2^j) on K, fixing the line at infinity.
inline Collineation k_semilinear(const Field& F, ExtElement c, int j) {
    j = ((j % (2 * F.m())) + 2 * F.m()) % (2 * F.m());
    const ExtElement c1 = c;
    const ExtElement ci = F.mul(c, F.frobenius(F.i(), j));
    return {detail::canonical_scale(F, {c1.a, ci.a, {}, c1.b, ci.b, {}, {}, {}, F.one()}), j % F.m()};
}

inline bool maps_set_onto(const Field& F, const Collineation& c, const std::vector<ProjPointH>& A,
                          const std::vector<ProjPointH>& B) {
    std::vector<ProjPointH> img;
    for (const auto& p : A) img.push_back(apply(F, c, p));
    return canonical(F, img) == canonical(F, B) && A.size() == B.size();
}

/// Order of the permutation group that gens induce on H; 0 if some generator does not fix H.
inline std::uint64_t induced_group_order(const Field& F, const std::vector<Collineation>& gens,
                                         const std::vector<ProjPointH>& H, std::size_t cap = std::size_t{1} << 18) {
    std::unordered_map<std::uint32_t, std::uint32_t> where;
    for (std::uint32_t k = 0; k < H.size(); ++k) where[point_index(F, normalize(F, H[k]))] = k;
    std::vector<std::vector<std::uint32_t>> perms;
    for (const auto& g : gens) {
        std::vector<std::uint32_t> p(H.size());
        for (std::uint32_t k = 0; k < H.size(); ++k) {
            auto it = where.find(point_index(F, apply(F, g, H[k])));
            if (it == where.end()) return 0;
            p[k] = it->second;
        }
        perms.push_back(std::move(p));
    }
    std::vector<std::uint32_t> id(H.size());
    std::iota(id.begin(), id.end(), 0u);
    std::set<std::vector<std::uint32_t>> seen{id};
    std::vector<std::vector<std::uint32_t>> todo{id};
    while (!todo.empty() && seen.size() <= cap) {
        auto x = std::move(todo.back());
        todo.pop_back();
        for (const auto& p : perms) {
            std::vector<std::uint32_t> y(x.size());
            for (std::size_t k = 0; k < x.size(); ++k) y[k] = p[x[k]];
            if (seen.insert(y).second) todo.push_back(std::move(y));
        }
    }
    return seen.size();
}

/// |PGammaL(3,q)| = q^3 (q^3-1)(q^2-1) m.
inline std::uint64_t pgaml3_order(const Field& F) {
    const std::uint64_t q = F.q();
    return q * q * q * (q * q * q - 1) * (q * q - 1) * static_cast<std::uint64_t>(F.m());
}

// -----------------------------------------------------------------------------
// The frame search
// -----------------------------------------------------------------------------

namespace detail {

class FrameSearch {
public:
    FrameSearch(const Field& F, const std::vector<ProjPointH>& A, const std::vector<ProjPointH>& B)
        : F_(F), A_(A), B_(B), n_(static_cast<std::uint32_t>(A.size())) {
        if (A.size() != B.size()) throw std::invalid_argument("point sets of different size");
        if (n_ < 4) throw std::invalid_argument("need at least four points");
        if (n_ > 255) throw std::invalid_argument("point sets larger than 255 are not supported");
        pos_.assign(plane_size(F), -1);
        for (std::uint32_t k = 0; k < n_; ++k) {
            const auto idx = point_index(F, normalize(F, B[k]));
            if (pos_[idx] != -1) throw std::invalid_argument("repeated point");
            pos_[idx] = static_cast<std::int32_t>(k);
            Q_.push_back(to_vec(normalize(F, B[k])));
        }
        for (int j = 0; j < F.m(); ++j) {
            std::vector<Vec3> Pj;
            for (const auto& p : A) Pj.push_back(frob_vec(F, to_vec(p), j));
            const Mat3 A0 = frame_matrix(F, Pj[0], Pj[1], Pj[2], Pj[3]);
            const Mat3 A0inv = mat_inv(F, A0);
            A0inv_.push_back(A0inv);
            std::vector<Vec3> Y;
            for (const auto& v : Pj) Y.push_back(mat_vec(F, A0inv, v));
            Y_.push_back(std::move(Y));
        }
    }

    std::uint32_t size() const { return n_; }

    static std::uint64_t key(int j, std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
        return (std::uint64_t(j) << 32) | (a << 24) | (b << 16) | (c << 8) | d;
    }

    /// All accepted keys with first target index in `firsts`.
    std::vector<std::uint64_t> run(const std::vector<std::uint32_t>& firsts, bool stop_first) const {
        std::vector<std::uint64_t> out;
        for (int j = 0; j < F_.m(); ++j)
            for (std::uint32_t a : firsts) {
                scan(j, a, stop_first, out);
                if (stop_first && !out.empty()) return out;
            }
        return out;
    }

    /// Images (as indices into B) of every point of A.
    std::vector<std::uint8_t> permutation(std::uint64_t k) const {
        const auto [j, a, b, c, d] = unpack(k);
        const Mat3 Bm = columns(Q_[a], Q_[b], Q_[c]);
        const Vec3 coeff = mat_vec(F_, mat_inv(F_, Bm), Q_[d]);
        std::vector<std::uint8_t> perm(n_);
        for (std::uint32_t p = 0; p < n_; ++p) {
            const auto idx = image_index(Bm, coeff, Y_[j][p]);
            if (pos_[idx] < 0) throw std::logic_error("accepted map leaves the target set");
            perm[p] = static_cast<std::uint8_t>(pos_[idx]);
        }
        return perm;
    }

    Collineation collineation(std::uint64_t k) const {
        const auto [j, a, b, c, d] = unpack(k);
        const Mat3 Bm = columns(Q_[a], Q_[b], Q_[c]);
        const Vec3 coeff = mat_vec(F_, mat_inv(F_, Bm), Q_[d]);
        const Mat3 D = {coeff[0], {}, {}, {}, coeff[1], {}, {}, {}, coeff[2]};
        return {canonical_scale(F_, mat_mul(F_, mat_mul(F_, Bm, D), A0inv_[j])), static_cast<int>(j)};
    }

private:
    static std::array<std::uint32_t, 5> unpack(std::uint64_t k) {
        return {static_cast<std::uint32_t>(k >> 32), static_cast<std::uint32_t>((k >> 24) & 255),
                static_cast<std::uint32_t>((k >> 16) & 255), static_cast<std::uint32_t>((k >> 8) & 255),
                static_cast<std::uint32_t>(k & 255)};
    }

    std::uint32_t image_index(const Mat3& Bm, const Vec3& coeff, const Vec3& y) const {
        const FieldElement t0 = F_.mul(coeff[0], y[0]), t1 = F_.mul(coeff[1], y[1]), t2 = F_.mul(coeff[2], y[2]);
        Vec3 v = {F_.mul(Bm[0], t0) + F_.mul(Bm[1], t1) + F_.mul(Bm[2], t2),
                  F_.mul(Bm[3], t0) + F_.mul(Bm[4], t1) + F_.mul(Bm[5], t2),
                  F_.mul(Bm[6], t0) + F_.mul(Bm[7], t1) + F_.mul(Bm[8], t2)};
        return point_index(F_, normalize(F_, to_point(v)));
    }

    void scan(int j, std::uint32_t a, bool stop_first, std::vector<std::uint64_t>& out) const {
        const auto& Y = Y_[j];
        for (std::uint32_t b = 0; b < n_; ++b) {
            if (b == a) continue;
            for (std::uint32_t c = 0; c < n_; ++c) {
                if (c == a || c == b) continue;
                const Mat3 Bm = columns(Q_[a], Q_[b], Q_[c]);
                const FieldElement det = mat_det(F_, Bm);
                if (det.is_zero()) continue;
                const Mat3 Binv = mat_inv(F_, Bm);
                for (std::uint32_t d = 0; d < n_; ++d) {
                    if (d == a || d == b || d == c) continue;
                    const Vec3 coeff = mat_vec(F_, Binv, Q_[d]);
                    if (coeff[0].is_zero() || coeff[1].is_zero() || coeff[2].is_zero()) continue;
                    bool ok = true;
                    for (std::uint32_t p = 4; p < n_ && ok; ++p) ok = pos_[image_index(Bm, coeff, Y[p])] >= 0;
                    if (!ok) continue;
                    out.push_back(key(j, a, b, c, d));
                    if (stop_first) return;
                }
            }
        }
    }

    const Field& F_;
    std::vector<ProjPointH> A_, B_;
    std::uint32_t n_;
    std::vector<std::int32_t> pos_;
    std::vector<Vec3> Q_;
    std::vector<Mat3> A0inv_;
    std::vector<std::vector<Vec3>> Y_;
};

inline std::vector<std::uint64_t> run_parallel(const FrameSearch& fs, int threads) {
    const std::uint32_t n = fs.size();
    threads = std::max(1, std::min<int>(threads, static_cast<int>(n)));
    std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(threads));
    auto work = [&](int t) {
        std::vector<std::uint32_t> firsts;
        for (std::uint32_t a = static_cast<std::uint32_t>(t); a < n; a += static_cast<std::uint32_t>(threads))
            firsts.push_back(a);
        parts[static_cast<std::size_t>(t)] = fs.run(firsts, false);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    std::vector<std::uint64_t> keys;
    for (auto& p : parts) keys.insert(keys.end(), p.begin(), p.end());
    std::sort(keys.begin(), keys.end());
    return keys;
}

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace detail

struct OrbitDecomposition {
    std::uint64_t stabilizer_order = 0;
    std::vector<std::vector<std::uint32_t>> orbits;  // indices into the hyperoval list, sorted
    std::vector<Collineation> generators;
    std::uint64_t generated_order = 0;  // closure of the generators, up to the cap
    bool generated_capped = false;

    std::vector<std::size_t> orbit_sizes() const {
        std::vector<std::size_t> s;
        for (const auto& o : orbits) s.push_back(o.size());
        std::sort(s.begin(), s.end());
        return s;
    }
    std::size_t orbit_of(std::uint32_t p) const {
        for (std::size_t k = 0; k < orbits.size(); ++k)
            if (std::binary_search(orbits[k].begin(), orbits[k].end(), p)) return k;
        throw std::out_of_range("point not in any orbit");
    }
};

struct StabilizerOptions {
    int threads = 1;
    std::size_t closure_cap = std::size_t{1} << 18;
};

/// Stabilizer of a hyperoval in PGammaL(3,q), with point orbits and generators.
inline OrbitDecomposition stabilizer(const Field& F, const std::vector<ProjPointH>& H, StabilizerOptions opt = {}) {
    if (F.q() > 128) throw std::invalid_argument("stabilizer: q <= 128 required");
    if (!is_hyperoval(F, H)) throw std::invalid_argument("stabilizer: not a hyperoval");
    const detail::FrameSearch fs(F, H, H);
    const auto keys = detail::run_parallel(fs, opt.threads);
    const std::uint32_t n = fs.size();

    OrbitDecomposition out;
    out.stabilizer_order = keys.size();
    detail::UnionFind uf(n);

    using Perm = std::string;
    auto to_perm = [](const std::vector<std::uint8_t>& p) { return Perm(p.begin(), p.end()); };
    std::unordered_set<Perm> closure;
    std::vector<Perm> elems, gens;
    Perm id(n, '\0');
    for (std::uint32_t k = 0; k < n; ++k) id[k] = static_cast<char>(k);
    closure.insert(id);
    elems.push_back(id);
    bool complete = keys.size() == 1;

    auto extend = [&]() {
        for (std::size_t x = 0; x < elems.size(); ++x) {
            for (const auto& g : gens) {
                Perm y(n, '\0');
                for (std::uint32_t k = 0; k < n; ++k)
                    y[k] = g[static_cast<std::uint8_t>(elems[x][k])];
                if (closure.insert(y).second) {
                    elems.push_back(y);
                    if (elems.size() > opt.closure_cap) {
                        out.generated_capped = true;
                        return;
                    }
                }
            }
        }
    };

    for (std::uint64_t key : keys) {
        if (complete) break;
        const Perm p = to_perm(fs.permutation(key));
        for (std::uint32_t k = 0; k < n; ++k) uf.unite(k, static_cast<std::uint8_t>(p[k]));
        if (out.generated_capped) continue;
        if (closure.count(p)) continue;
        gens.push_back(p);
        out.generators.push_back(fs.collineation(key));
        extend();
        if (!out.generated_capped && elems.size() == keys.size()) complete = true;
    }
    out.generated_order = elems.size();
    for (std::uint32_t k = 0; k < n; ++k) out.orbits.emplace_back();
    for (std::uint32_t k = 0; k < n; ++k) out.orbits[uf.find(k)].push_back(k);
    out.orbits.erase(std::remove_if(out.orbits.begin(), out.orbits.end(), [](const auto& o) { return o.empty(); }),
                     out.orbits.end());
    return out;
}

/// A collineation mapping A onto B (A[0] onto B[0] when fix_first), or nothing.
inline std::optional<Collineation> find_equivalence(const Field& F, const std::vector<ProjPointH>& A,
                                                    const std::vector<ProjPointH>& B, bool fix_first) {
    if (A.size() != B.size()) return std::nullopt;
    const detail::FrameSearch fs(F, A, B);
    std::vector<std::uint32_t> firsts;
    if (fix_first) {
        firsts.push_back(0);
    } else {
        for (std::uint32_t a = 0; a < fs.size(); ++a) firsts.push_back(a);
    }
    const auto keys = fs.run(firsts, true);
    if (keys.empty()) return std::nullopt;
    return fs.collineation(keys.front());
}

inline std::optional<Collineation> are_equivalent_hyperovals(const Field& F, const std::vector<ProjPointH>& A,
                                                             const std::vector<ProjPointH>& B) {
    if (!is_hyperoval(F, A) || !is_hyperoval(F, B)) throw std::invalid_argument("are_equivalent: not hyperovals");
    return find_equivalence(F, A, B, false);
}

/// Ovals with nuclei; the collineation must also send nucleus to nucleus.
inline std::optional<Collineation> are_equivalent_ovals(const Field& F, const Oval& A, const Oval& B) {
    std::vector<ProjPointH> a{A.nucleus}, b{B.nucleus};
    a.insert(a.end(), A.points.begin(), A.points.end());
    b.insert(b.end(), B.points.begin(), B.points.end());
    if (!is_hyperoval(F, a) || !is_hyperoval(F, b)) throw std::invalid_argument("are_equivalent: not ovals");
    return find_equivalence(F, a, b, true);
}

/// The oval { u/g(u) } with nucleus at the origin.
inline Oval oval_of(const Field& F, const GFunction& g) {
    return {oval_points_h(F, g), {FieldElement{}, FieldElement{}, F.one()}};
}

// -----------------------------------------------------------------------------
// Classification of the bent functions of one hyperoval
// -----------------------------------------------------------------------------

struct BentClass {
    std::uint32_t point = 0;            // index into the hyperoval list; q+1 is the origin
    std::optional<std::uint32_t> s;     // circle index of the removed point, none for the origin
    std::size_t orbit_size = 0;
    GFunction g;
    NihoPolynomial f;
    bool bent = false;
};

struct Classification {
    GFunction g;          // zero-free g defining the hyperoval
    ExtElement shift;     // c with g = g_input + <c,u>
    OrbitDecomposition orbits;
    std::vector<BentClass> classes;
    std::optional<bool> pairwise_inequivalent;
};

struct ClassifyOptions {
    int threads = 1;
    bool check_pairwise = true;
    bool build_polynomials = true;
};

inline GFunction oval_g(const Field& F, const GFunction& g, std::uint32_t point) {
    if (point == F.circle_size()) return g;
    return g_shift(F, g, point);
}

inline Classification classify_bent(const Field& F, const GFunction& g_input, ClassifyOptions opt = {}) {
    auto [g, c] = fix_zeros(F, g_input);
    if (!oval_condition(F, g)) throw std::invalid_argument("classify_bent: not a g-function");
    Classification out;
    out.g = g;
    out.shift = c;
    out.orbits = stabilizer(F, hyperoval_points(F, g), {opt.threads});
    for (const auto& orbit : out.orbits.orbits) {
        BentClass best;
        bool have = false;
        for (std::uint32_t p : orbit) {
            GFunction gp = oval_g(F, g, p);
            if (!have || gp.values < best.g.values) {
                best.point = p;
                best.g = std::move(gp);
                have = true;
            }
        }
        if (best.point != F.circle_size()) best.s = best.point;
        best.orbit_size = orbit.size();
        best.bent = is_bent(F, bent_from_g(F, best.g));
        if (opt.build_polynomials)
            best.f = best.s ? f_shift(F, g, *best.s) : f_univariate(F, affine_oval(F, g));
        out.classes.push_back(std::move(best));
    }
    if (opt.check_pairwise) {
        bool ok = true;
        for (std::size_t a = 0; a < out.classes.size() && ok; ++a)
            for (std::size_t b = a + 1; b < out.classes.size() && ok; ++b)
                if (are_equivalent_ovals(F, oval_of(F, out.classes[a].g), oval_of(F, out.classes[b].g))) ok = false;
        out.pairwise_inequivalent = ok;
    }
    return out;
}

/// The class (index into classes) whose oval is equivalent to that of g, if any.
inline std::optional<std::size_t> match_class(const Field& F, const Classification& cl, const GFunction& g) {
    const Oval o = oval_of(F, g);
    for (std::size_t k = 0; k < cl.classes.size(); ++k)
        if (are_equivalent_ovals(F, oval_of(F, cl.classes[k].g), o)) return k;
    return std::nullopt;
}

}  // namespace niho
