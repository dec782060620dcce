#include <gtest/gtest.h>

#include <numeric>

#include "niho/opoly.hpp"

using namespace niho;

namespace {

// slope criterion: for each s the map t -> (h(t+s) + h(s))/t permutes F* on t != 0
bool slope_criterion(const Field& F, const OPolyTable& h) {
    if (!h.values[0].is_zero() || h.values[1] != F.one()) return false;
    if (!is_permutation(h)) return false;
    for (std::uint32_t s = 0; s < F.q(); ++s) {
        std::vector<char> seen(F.q(), 0);
        for (std::uint32_t t = 1; t < F.q(); ++t) {
            const FieldElement v = F.div(h.values[t ^ s] + h.values[s], FieldElement{t});
            if (v.is_zero() || seen[v.bits]) return false;
            seen[v.bits] = 1;
        }
    }
    return true;
}

}  // namespace

TEST(OPoly, MonomialsAgreeWithSlopeCriterion) {
    for (int m = 2; m <= 6; ++m) {
        const Field F(m);
        int found = 0;
        for (std::int64_t e = 1; e < F.q() - 1; ++e) {
            const auto h = monomial_table(F, e);
            const bool o = is_opolynomial(F, h);
            EXPECT_EQ(o, slope_criterion(F, h)) << "m=" << m << " e=" << e;
            found += o;
        }
        EXPECT_GT(found, 0);
    }
}

TEST(OPoly, TranslationNeedsCoprimeR) {
    for (int m = 3; m <= 7; ++m) {
        const Field F(m);
        for (int r = 1; r < m; ++r)
            EXPECT_EQ(is_opolynomial(F, opoly_table(F, OPolyFamily::translation(r))), std::gcd(r, m) == 1)
                << "m=" << m << " r=" << r;
    }
}

TEST(OPoly, NamedFamilies) {
    for (int m = 1; m <= 7; ++m) EXPECT_TRUE(is_opolynomial(Field(m), opoly_table(Field(m), OPolyFamily::hyperconic())));
    for (int m : {5, 7}) {
        const Field F(m);
        for (auto k : {OPolyKind::Segre, OPolyKind::Payne, OPolyKind::Cherowitzo})
            EXPECT_TRUE(is_opolynomial(F, opoly_table(F, OPolyFamily::of(k)))) << to_string(k) << " m=" << m;
    }
    const Field F7(7);
    EXPECT_TRUE(is_opolynomial(F7, opoly_table(F7, OPolyFamily::of(OPolyKind::Glynn1))));
    EXPECT_TRUE(is_opolynomial(F7, opoly_table(F7, OPolyFamily::of(OPolyKind::Glynn2))));
    for (int m : {4, 5, 6}) {
        const Field F(m);
        const auto h = opoly_table(F, OPolyFamily::of(OPolyKind::Subiaco));
        EXPECT_TRUE(is_opolynomial(F, h)) << "subiaco m=" << m;
        EXPECT_TRUE(slope_criterion(F, h));
    }
    for (int m : {4, 6}) {
        const Field F(m);
        const auto h = opoly_table(F, OPolyFamily::of(OPolyKind::Adelaide));
        EXPECT_TRUE(is_opolynomial(F, h)) << "adelaide m=" << m;
        EXPECT_TRUE(slope_criterion(F, h));
    }
}

TEST(OPoly, ClosedFormInversesMatchTableInversion) {
    std::vector<std::pair<int, OPolyFamily>> cases;
    for (int m = 1; m <= 7; ++m) cases.push_back({m, OPolyFamily::hyperconic()});
    for (int m = 3; m <= 7; ++m)
        for (int r = 1; r < m; ++r)
            if (std::gcd(r, m) == 1) cases.push_back({m, OPolyFamily::translation(r)});
    for (int m : {5, 7})
        for (auto k : {OPolyKind::Segre, OPolyKind::Payne, OPolyKind::Cherowitzo}) cases.push_back({m, OPolyFamily::of(k)});
    cases.push_back({7, OPolyFamily::of(OPolyKind::Glynn1)});
    cases.push_back({7, OPolyFamily::of(OPolyKind::Glynn2)});
    for (const auto& [m, fam] : cases) {
        const Field F(m);
        const auto c = closed_form_inverse(F, fam);
        ASSERT_TRUE(c.has_value());
        EXPECT_EQ(*c, inverse_table(opoly_table(F, fam))) << to_string(fam.kind) << " m=" << m;
    }
    EXPECT_FALSE(closed_form_inverse(Field(6), OPolyFamily::of(OPolyKind::Subiaco)).has_value());
}

TEST(OPoly, SegrePi3Inverse) {
    for (int m : {5, 7}) {
        const Field F(m);
        const auto h3 = transform_pi(F, 3, opoly_table(F, OPolyFamily::of(OPolyKind::Segre)));
        EXPECT_TRUE(is_opolynomial(F, h3));
        EXPECT_EQ(segre_pi3_inverse_closed_form(F), inverse_table(h3));
    }
}

TEST(OPoly, TransformsPreserveOPolynomials) {
    const Field F(5);
    for (auto k : {OPolyKind::Hyperconic, OPolyKind::Segre, OPolyKind::Payne, OPolyKind::Cherowitzo}) {
        const auto h = opoly_table(F, OPolyFamily::of(k));
        for (int p = 1; p <= 3; ++p) EXPECT_TRUE(is_opolynomial(F, transform_pi(F, p, h))) << to_string(k) << p;
        EXPECT_EQ(transform_pi(F, 1, transform_pi(F, 1, h)), h);
        EXPECT_EQ(transform_pi(F, 2, transform_pi(F, 2, h)), h);
    }
    EXPECT_THROW(transform_pi(F, 4, opoly_table(F, OPolyFamily::hyperconic())), std::invalid_argument);
    EXPECT_THROW(transform_pi(F, 1, monomial_table(F, 3)), std::invalid_argument);
}

TEST(OPoly, SubiacoParameter) {
    const Field F(6);
    const FieldElement d = default_subiaco_d(F);
    EXPECT_EQ(F.tr(F.inv(d)), 1);
    EXPECT_FALSE(in_gf4(F, d));
    OPolyFamily fam = OPolyFamily::of(OPolyKind::Subiaco);
    fam.d = F.one();  // in GF(4)
    EXPECT_THROW(opoly_table(F, fam), std::invalid_argument);
}

TEST(OPoly, FamilyDomainChecks) {
    EXPECT_THROW(opoly_table(Field(4), OPolyFamily::of(OPolyKind::Segre)), std::invalid_argument);
    EXPECT_THROW(opoly_table(Field(5), OPolyFamily::of(OPolyKind::Glynn1)), std::invalid_argument);
    EXPECT_THROW(opoly_table(Field(5), OPolyFamily::of(OPolyKind::Adelaide)), std::invalid_argument);
    EXPECT_THROW(opoly_table(Field(5), OPolyFamily::translation(5)), std::invalid_argument);
    EXPECT_THROW(inverse_table(monomial_table(Field(4), 3)), std::invalid_argument);
}

TEST(OPoly, GlynnExponents) {
    // sigma^2 = 2 and gamma^4 = 2 modulo q-1
    for (int m : {5, 7, 9, 11}) {
        const std::uint64_t n = (std::uint64_t{1} << m) - 1;
        const std::uint64_t s = glynn_sigma(m) % n, g = glynn_gamma(m) % n;
        EXPECT_EQ(s * s % n, 2u) << m;
        EXPECT_EQ(g * g % n * g % n * g % n, 2u) << m;
    }
}
