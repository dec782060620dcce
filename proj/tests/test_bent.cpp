#include <gtest/gtest.h>

#include <random>

#include "catalog.hpp"
#include "niho/bent.hpp"

using namespace niho;
using niho::testing::catalog;

namespace {

GFunction random_g(const Field& F, std::mt19937_64& rng) {
    GFunction g;
    for (std::uint32_t k = 0; k < F.circle_size(); ++k) g.values.push_back(FieldElement{static_cast<std::uint32_t>(rng() % F.q())});
    return g;
}

}  // namespace

TEST(Walsh, FastMatchesNaive) {
    std::mt19937_64 rng(2);
    for (int m : {1, 2, 3}) {
        const Field F(m);
        for (int t = 0; t < 5; ++t) {
            BooleanFn f{m, std::vector<std::uint8_t>(std::size_t{F.q()} * F.q())};
            for (auto& b : f.bits) b = rng() & 1;
            EXPECT_EQ(walsh_spectrum(F, f), walsh_spectrum_naive(F, f));
        }
        const BooleanFn f = bent_from_g(F, g_catalog(F, {GFamily::Hyperconic, 1}));
        EXPECT_EQ(walsh_spectrum(F, f), walsh_spectrum_naive(F, f));
    }
}

TEST(Walsh, ParsevalOnRandomFunctions) {
    std::mt19937_64 rng(9);
    const Field F(4);
    BooleanFn f{4, std::vector<std::uint8_t>(256)};
    for (auto& b : f.bits) b = rng() & 1;
    std::int64_t s = 0;
    for (auto v : walsh_spectrum(F, f)) s += std::int64_t{v} * v;
    EXPECT_EQ(s, 256 * 256);
}

TEST(Bent, CatalogueIsBent) {
    for (const auto& e : catalog(6)) {
        const Field F(e.m);
        const auto s = summarize(F, walsh_spectrum(F, bent_from_g(F, g_catalog(F, e.spec))));
        EXPECT_TRUE(s.is_bent) << e.name();
        EXPECT_EQ(s.max, static_cast<std::int32_t>(F.q()));
        EXPECT_EQ(s.min, -static_cast<std::int32_t>(F.q()));
    }
}

TEST(Bent, ThreeWayAgreementOnRandomG) {
    // bent <=> line oval <=> oval with nucleus 0, on random, catalogue-perturbed and shifted g
    for (int m = 1; m <= 4; ++m) {
        const Field F(m);
        std::mt19937_64 rng(100 + m);
        const auto cat = catalog(m);
        int valid = 0;
        for (int t = 0; t < 1000; ++t) {
            GFunction g;
            switch (t % 3) {
                case 0: g = random_g(F, rng); break;
                case 1: {
                    const auto& e = cat[rng() % cat.size()];
                    if (e.m != m) { g = random_g(F, rng); break; }
                    g = g_catalog(F, e.spec);
                    g = linear_shift(F, g, F.unpack(static_cast<std::uint32_t>(rng() % (F.q() * F.q()))));
                    break;
                }
                default: {
                    g = constant_g(F, F.one());
                    g.values[rng() % g.size()] = FieldElement{static_cast<std::uint32_t>(rng() % F.q())};
                }
            }
            const GValidation v = validate_g(F, g);
            EXPECT_TRUE(v.consistent()) << "m=" << m << " t=" << t;
            valid += v.valid();
        }
        EXPECT_GT(valid, 0) << m;
    }
}

TEST(Bent, GFromBentInvertsBentFromG) {
    for (const auto& e : catalog(4)) {
        const Field F(e.m);
        const GFunction g = g_catalog(F, e.spec);
        const auto back = g_from_bent(F, bent_from_g(F, g));
        ASSERT_TRUE(back.has_value());
        EXPECT_TRUE(back->same_table(g)) << e.name();
    }
    const Field F(3);
    BooleanFn f = bent_from_g(F, constant_g(F, F.one()));
    f.bits[F.pack(F.unit(2))] ^= 1;
    f.bits[F.pack(F.mul(FieldElement{3}, F.unit(2)))] ^= 1;
    f.bits[F.pack(F.mul(FieldElement{5}, F.unit(2)))] ^= 1;
    EXPECT_FALSE(g_from_bent(F, f).has_value());
}

TEST(Bent, DualZerosAreLineOvalPoints) {
    for (const auto& e : catalog(5)) {
        const Field F(e.m);
        const auto r = dual_lineoval_check(F, g_catalog(F, e.spec));
        EXPECT_TRUE(r.equal) << e.name();
        EXPECT_EQ(r.zero_count, r.expected);
    }
}

TEST(Bent, DualOfDualIsIdentity) {
    const Field F(4);
    const BooleanFn f = bent_from_g(F, g_catalog(F, {GFamily::Adelaide, 1}));
    EXPECT_EQ(dual(F, dual(F, f)), f);
    BooleanFn nb{4, std::vector<std::uint8_t>(256, 0)};
    nb.bits[1] = 1;
    EXPECT_THROW(dual(F, nb), std::invalid_argument);
}

TEST(Polynomial, ExponentReduction) {
    const Field F(1);
    NihoPolynomial p;
    p.add(F, 3, F.kone());  // x^3 = x^(q^2-1): 1 off zero, 0 at zero
    EXPECT_EQ(p.terms.count(3), 1u);
    EXPECT_EQ(eval_poly(F, p, ExtElement{}), ExtElement{});
    p.add(F, 6, F.kone());  // folds onto x^3 and cancels
    EXPECT_TRUE(p.terms.empty());
    p.add(F, 0, F.kone());
    EXPECT_EQ(eval_poly(F, p, ExtElement{}), F.kone());
}

TEST(Polynomial, UnivariateFormMatchesTable) {
    for (const auto& e : catalog(4)) {
        const Field F(e.m);
        const GFunction g = fix_zeros(F, g_catalog(F, e.spec)).first;
        const BooleanFn table = bent_from_g(F, g);
        EXPECT_EQ(poly_to_fn(F, f_univariate(F, affine_oval(F, g)), TraceKind::None), table) << e.name();
        for (std::uint32_t s = 0; s < F.circle_size(); ++s)
            EXPECT_EQ(poly_to_fn(F, f_shift(F, g, s), TraceKind::None), bent_from_g(F, g_shift(F, g, s)))
                << e.name() << " s=" << s;
    }
}

TEST(Polynomial, SampledShiftsAtDegreeFive) {
    for (const auto& e : catalog(5)) {
        if (e.m != 5) continue;
        const Field F(5);
        const GFunction g = fix_zeros(F, g_catalog(F, e.spec)).first;
        for (std::uint32_t s : {0u, 11u, 29u})
            EXPECT_EQ(poly_to_fn(F, f_shift(F, g, s), TraceKind::None), bent_from_g(F, g_shift(F, g, s)))
                << e.name() << " s=" << s;
    }
}

TEST(Translation, PiecewiseAndPolynomialAgree) {
    for (int m = 2; m <= 6; ++m) {
        const Field F(m);
        for (int r = 1; r < m; ++r) {
            if (std::gcd(r, m) != 1) continue;
            const BooleanFn f = f_translation(F, r);
            EXPECT_TRUE(is_bent(F, f)) << m << " " << r;
            // f_r is the bent function of g_r
            const auto g = g_from_bent(F, f);
            ASSERT_TRUE(g.has_value());
            EXPECT_TRUE(equal_up_to_linear_shift(F, *g, g_translation(F, r)).has_value()) << m << " " << r;
        }
    }
    EXPECT_THROW(f_translation(Field(4), 4), std::invalid_argument);
    EXPECT_THROW(f_translation_poly(Field(5), 2, Field(5).kone()), std::invalid_argument);
}

TEST(Translation, AlternativeCoefficient) {
    // any a with a + conj(a) = 1 gives a bent function
    const Field F(5);
    const auto p = f_translation_poly(F, 3, F.conj(F.i()));
    EXPECT_TRUE(is_bent(F, poly_to_fn(F, p, TraceKind::Absolute)));
}

TEST(Polynomial, TraceKinds) {
    const Field F(3);
    const NihoPolynomial p = make_poly(F, {{F.q() + 1, F.kone()}});  // x^(q+1) = N(x) lies in F
    EXPECT_NO_THROW(poly_to_fn(F, p, TraceKind::Relative));
    EXPECT_THROW(poly_to_fn(F, p, TraceKind::None), std::domain_error);
    const NihoPolynomial r = make_poly(F, {{1, F.kone()}});
    EXPECT_THROW(poly_to_fn(F, r, TraceKind::Relative), std::domain_error);
}
