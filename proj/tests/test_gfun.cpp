#include <gtest/gtest.h>

#include <random>

#include "catalog.hpp"
#include "niho/bent.hpp"
#include "niho/gfun.hpp"

using namespace niho;
using niho::testing::catalog;

TEST(GFun, CatalogueMembersAreOvalsWithNucleusZero) {
    for (const auto& e : catalog(6)) {
        const Field F(e.m);
        const GFunction g = g_catalog(F, e.spec);
        ASSERT_EQ(g.size(), F.circle_size());
        EXPECT_TRUE(oval_condition(F, g)) << e.name();
        EXPECT_TRUE(line_oval_condition(F, g)) << e.name();
    }
}

TEST(GFun, RoundTripThroughOval) {
    for (const auto& e : catalog(6)) {
        const Field F(e.m);
        const GFunction g = fix_zeros(F, g_catalog(F, e.spec)).first;
        EXPECT_TRUE(g_from_oval(F, affine_oval(F, g)).same_table(g)) << e.name();
    }
}

TEST(GFun, ShiftFormulaMatchesDirectShift) {
    for (const auto& e : catalog(5)) {
        const Field F(e.m);
        const GFunction g = fix_zeros(F, g_catalog(F, e.spec)).first;
        for (std::uint32_t s = 0; s < F.circle_size(); s += (e.m >= 5 ? 5 : 1)) {
            const GFunction a = g_shift(F, g, s), b = g_shift_direct(F, g, s);
            EXPECT_TRUE(a.same_table(b)) << e.name() << " s=" << s;
            EXPECT_TRUE(oval_condition(F, a)) << e.name() << " s=" << s;
        }
    }
}

TEST(GFun, ShiftedOvalIsOvalWithNucleusZero) {
    const Field F(4);
    const GFunction g = g_catalog(F, {GFamily::Adelaide, 1});
    for (std::uint32_t s = 0; s < F.circle_size(); ++s) EXPECT_TRUE(is_affine_oval_origin_nucleus(F, shifted_oval(F, g, s)));
}

TEST(GFun, LinearShift) {
    const Field F(5);
    std::mt19937_64 rng(1);
    const GFunction g = g_catalog(F, {GFamily::Segre, 1});
    for (int t = 0; t < 20; ++t) {
        const ExtElement c = F.unpack(static_cast<std::uint32_t>(rng() % (F.q() * F.q())));
        const GFunction h = linear_shift(F, g, c);
        const auto found = equal_up_to_linear_shift(F, g, h);
        ASSERT_TRUE(found.has_value());
        EXPECT_EQ(*found, c);
        EXPECT_TRUE(oval_condition(F, h));
    }
    GFunction bad = g;
    bad.values[3] += F.one();
    EXPECT_FALSE(equal_up_to_linear_shift(F, g, bad).has_value());
}

TEST(GFun, FixZeros) {
    for (int m : {3, 4, 5}) {
        const Field F(m);
        // the plain variant has g(1) = 0
        const GFunction g = g_from_opoly(F, opoly_table(F, OPolyFamily::hyperconic()), GVariant::Plain);
        EXPECT_FALSE(zero_free(g));
        const auto [h, c] = fix_zeros(F, g);
        EXPECT_TRUE(zero_free(h));
        EXPECT_TRUE(linear_shift(F, g, c).same_table(h));
    }
    const Field F(3);
    EXPECT_THROW(fix_zeros(F, constant_g(F, FieldElement{})), std::invalid_argument);
}

TEST(GFun, VariantsDifferByI) {
    const Field F(5);
    for (auto k : {OPolyKind::Hyperconic, OPolyKind::Segre, OPolyKind::Payne, OPolyKind::Cherowitzo}) {
        const auto h = opoly_table(F, OPolyFamily::of(k));
        const GFunction a = g_from_opoly(F, h, GVariant::WithI), b = g_from_opoly(F, h, GVariant::Plain);
        EXPECT_EQ(a[0], F.one());
        EXPECT_EQ(b[0], FieldElement{});
        EXPECT_TRUE(linear_shift(F, b, F.i()).same_table(a));
        EXPECT_TRUE(oval_condition(F, a)) << to_string(k);
    }
}

TEST(GFun, MonomialMatchesInverseTable) {
    for (int m : {3, 5, 7}) {
        const Field F(m);
        for (std::int64_t s : {2, 4, 6}) {
            if (s == 6 && m < 5) continue;
            const GFunction a = g_monomial(F, s);
            const GFunction b = g_from_inverse(F, inverse_table(monomial_table(F, s)), GVariant::Plain, "");
            EXPECT_TRUE(a.same_table(b)) << m << " " << s;
        }
    }
    const Field F(5);
    EXPECT_THROW(g_monomial(F, 6, F.kone()), std::invalid_argument);
    EXPECT_NO_THROW(g_monomial(F, 6, F.conj(F.i())));
}

TEST(GFun, CatalogueMatchesOPolynomialHyperovals) {
    // translation g_r and the inverse construction from t^(2^r) give the same hyperoval up to shift
    const Field F(5);
    for (int r : {2, 3}) {
        const GFunction a = g_translation(F, r);
        const GFunction b = g_from_opoly(F, opoly_table(F, OPolyFamily::translation(r)), GVariant::WithI);
        EXPECT_TRUE(oval_condition(F, a));
        EXPECT_TRUE(oval_condition(F, b));
    }
    const GFunction cher = g_catalog(F, {GFamily::Cherowitzo, 1});
    const GFunction cher2 = g_from_opoly(F, opoly_table(F, OPolyFamily::of(OPolyKind::Cherowitzo)), GVariant::WithI);
    EXPECT_TRUE(cher.same_table(cher2));
}

TEST(GFun, SubiacoAlternativeReadingIsNotFValued) {
    const Field F(6);
    EXPECT_FALSE(g_subiaco_alt(F, 1).has_value());
    // j = 0 is the ordinary trace form
    const auto a = g_subiaco_alt(F, 0);
    ASSERT_TRUE(a.has_value());
    EXPECT_TRUE(a->same_table(g_subiaco(F, 0)));
}

TEST(GFun, PayneOvalAndEpsilon) {
    const Field F(5);
    EXPECT_TRUE(is_affine_oval_origin_nucleus(F, payne_oval(F)));
    const ExtElement e = okeefe_penttila_epsilon(F);
    ExtElement s;
    for (int x : {10, 6, 5, 3, 2, 1, 0}) s += F.pow(e, static_cast<std::uint64_t>(x));
    EXPECT_TRUE(s.is_zero());
    EXPECT_THROW(okeefe_penttila_epsilon(Field(4)), std::invalid_argument);
}

TEST(GFun, CatalogueDomainErrors) {
    EXPECT_THROW(g_catalog(Field(4), {GFamily::Segre, 1}), std::invalid_argument);
    EXPECT_THROW(g_catalog(Field(5), {GFamily::Adelaide, 1}), std::invalid_argument);
    EXPECT_THROW(g_catalog(Field(5), {GFamily::Subiaco, 1}), std::invalid_argument);
    EXPECT_THROW(g_catalog(Field(5), {GFamily::TranslationThird, 1}), std::invalid_argument);
    EXPECT_THROW(parse_gfamily("nope"), std::invalid_argument);
    for (int k = 0; k <= static_cast<int>(GFamily::LunelliSce); ++k)
        EXPECT_EQ(parse_gfamily(to_string(static_cast<GFamily>(k))), static_cast<GFamily>(k));
}

TEST(GFun, TracePolynomial) {
    const Field F(4);
    const TracePoly p{F.one(), {{5, F.kone()}}};
    const GFunction g = g_trace_poly(F, p);
    for (std::uint32_t k = 0; k < F.circle_size(); ++k) {
        const ExtElement u5 = F.pow(F.unit(k), 5);
        EXPECT_EQ(g[k], F.one() + F.T(u5));
    }
}
