#include <gtest/gtest.h>

#include <random>

#include "phinewton/polyring.hpp"

using namespace phinewton;

TEST(Polyring, ArithmeticAndPrinting) {
    const IntPoly x = IntPoly::x();
    const IntPoly f = x.pow(3) - x * BigInt(2) + IntPoly{1};
    EXPECT_EQ(f.to_string(), "x^3 - 2*x + 1");
    EXPECT_EQ(IntPoly().to_string(), "0");
    EXPECT_EQ((IntPoly{-1, 0, -1}).to_string(), "-x^2 - 1");
    EXPECT_EQ(f.evaluate(2), BigInt(5));
    EXPECT_EQ((f - f).degree(), -1);
}

TEST(Polyring, MonicDivision) {
    const auto [q, r] = poly_divmod(IntPoly{5, 0, 0, 1}, IntPoly{1, 1});
    EXPECT_EQ(q, (IntPoly{1, -1, 1}));
    EXPECT_EQ(r, IntPoly{4});
    EXPECT_THROW(poly_divmod(IntPoly{1, 1}, IntPoly{1, 2}), Error);
}

TEST(Polyring, GaussValuation) {
    const ValuationDomain d(2);
    EXPECT_EQ(gauss_valuation(IntPoly{48, 48}, d), ExtendedInt(4));
    EXPECT_EQ(gauss_valuation(IntPoly{288, 144}, d), ExtendedInt(4));
    EXPECT_TRUE(gauss_valuation(IntPoly{}, d).is_infinite());
}

TEST(Polyring, PhiExpansionSmall) {
    const ValuationDomain d(2);
    const PhiExpansion e = phi_expand(IntPoly{4, 0, 0, 0, 1}, IntPoly{2, 0, 1}, d);
    ASSERT_EQ(e.length(), 2);
    EXPECT_EQ(e.coeffs[0], IntPoly{8});
    EXPECT_EQ(e.coeffs[1], IntPoly{-4});
    EXPECT_EQ(e.coeffs[2], IntPoly{1});
    EXPECT_EQ(e.valuations, (std::vector<ExtendedInt>{3, 2, 0}));
}

TEST(Polyring, ExpansionOfDegreeTwelvePolynomial) {
    // (x^2+x+1)^6 + 24x(x^2+x+1)^3 + 9(16x+32)(x^2+x+1) + 3(16x+16)
    const ValuationDomain d(2);
    const IntPoly phi{1, 1, 1};
    const IntPoly f = phi.pow(6) + IntPoly{0, 24} * phi.pow(3) + IntPoly{288, 144} * phi + IntPoly{48, 48};
    const PhiExpansion e = phi_expand(f, phi, d);
    ASSERT_EQ(e.length(), 6);
    EXPECT_EQ(e.coeffs[0], (IntPoly{48, 48}));
    EXPECT_EQ(e.coeffs[1], (IntPoly{288, 144}));
    EXPECT_TRUE(e.coeffs[2].is_zero());
    EXPECT_EQ(e.coeffs[3], (IntPoly{0, 24}));
    EXPECT_EQ(e.valuations,
              (std::vector<ExtendedInt>{4, 4, ExtendedInt::infinity(), 3, ExtendedInt::infinity(),
                                        ExtendedInt::infinity(), 0}));
    EXPECT_TRUE(is_power_of_phibar(f, phi, d));
}

TEST(Polyring, ExpansionRecomposesRandomly) {
    std::mt19937_64 rng(7);
    const ValuationDomain d(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<BigInt> fc, pc;
        const int n = 1 + static_cast<int>(rng() % 12), m = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) fc.emplace_back(static_cast<long>(rng() % 2001) - 1000);
        fc.emplace_back(1);
        for (int i = 0; i < m; ++i) pc.emplace_back(static_cast<long>(rng() % 21) - 10);
        pc.emplace_back(1);
        const IntPoly f(fc), phi(pc);
        const PhiExpansion e = phi_expand(f, phi, d);
        EXPECT_EQ(e.recompose(), f);
        for (const auto& a : e.coeffs) EXPECT_LT(a.degree(), m);
        EXPECT_EQ(e.length(), n / m);
    }
}

TEST(Polyring, PowerOfPhibar) {
    const ValuationDomain d(2);
    EXPECT_TRUE(is_power_of_phibar(IntPoly{2, 2, 1}, IntPoly::x(), d));
    EXPECT_FALSE(is_power_of_phibar(IntPoly{2, 2, 1}, IntPoly{1, 1}, d));
    EXPECT_FALSE(is_power_of_phibar(IntPoly{1, 1, 1}, IntPoly::x(), d));
}
