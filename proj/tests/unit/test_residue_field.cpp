#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "phinewton/residue_field.hpp"

using namespace phinewton;

namespace {

FpPoly random_fp(const BigInt& p, std::int64_t deg, std::mt19937_64& rng, bool monic = true) {
    std::vector<BigInt> c;
    const auto pl = p.get_ui();
    for (std::int64_t i = 0; i < deg; ++i) c.emplace_back(static_cast<unsigned long>(rng() % pl));
    c.emplace_back(monic ? 1UL : 1 + static_cast<unsigned long>(rng() % (pl - 1)));
    return FpPoly(p, std::move(c));
}

ExtPoly random_ext(const FieldRef& field, std::int64_t deg, std::mt19937_64& rng) {
    const auto m = field->degree();
    std::vector<ExtFieldElem> c;
    for (std::int64_t i = 0; i <= deg; ++i) {
        FpPoly v = random_fp(field->characteristic(), m - 1, rng, false);
        if (rng() % 5 == 0) v = FpPoly(field->characteristic());
        c.emplace_back(field, v);
    }
    if (c.back().is_zero()) c.back() = ExtFieldElem::one(field);
    return ExtPoly(field, std::move(c));
}

}  // namespace

TEST(ResidueField, FpPolyBasics) {
    const FpPoly f(5, {-1, 0, 1});
    EXPECT_EQ(f.to_string(), "x^2 + 4");
    EXPECT_EQ(FpPoly(2, {2, 4}).degree(), -1);
    const auto [q, r] = divmod(f, FpPoly(5, {1, 1}));
    EXPECT_EQ(q, FpPoly(5, {4, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(gcd(FpPoly(3, {0, 0, 1}), FpPoly(3, {0, 2})), FpPoly(3, {0, 1}));
    const FpPoly inv = inverse_mod(FpPoly(2, {0, 1}), FpPoly(2, {1, 1, 1}));
    EXPECT_EQ(divmod(inv * FpPoly(2, {0, 1}), FpPoly(2, {1, 1, 1})).second, FpPoly(2, {1}));
}

TEST(ResidueField, FermatPolynomialSplits) {
    const FactorizationFp fac = fp_factorize(FpPoly(3, {0, -1, 0, 1}));
    ASSERT_EQ(fac.factors.size(), 3U);
    EXPECT_EQ(fac.factors[0].first, FpPoly(3, {0, 1}));
    EXPECT_EQ(fac.factors[1].first, FpPoly(3, {1, 1}));
    EXPECT_EQ(fac.factors[2].first, FpPoly(3, {2, 1}));
}

TEST(ResidueField, IrreducibilitySmallCases) {
    EXPECT_TRUE(fp_is_irreducible(FpPoly(2, {1, 1, 1})));
    EXPECT_FALSE(fp_is_irreducible(FpPoly(2, {1, 0, 1})));
    EXPECT_TRUE(fp_is_irreducible(FpPoly(2, {1, 1, 0, 1})));
    EXPECT_TRUE(fp_is_irreducible(FpPoly(3, {1, 0, 1})));
    EXPECT_FALSE(fp_is_irreducible(FpPoly(5, {1, 0, 1})));
}

TEST(ResidueField, FactorizationMatchesExhaustiveSearch) {
    std::mt19937_64 rng(11);
    for (long p : {2L, 3L, 5L, 7L}) {
        for (int trial = 0; trial < 60; ++trial) {
            const FpPoly f = random_fp(p, 1 + static_cast<std::int64_t>(rng() % 8), rng, rng() % 2 == 0);
            const FactorizationFp a = fp_factorize(f, trial);
            const FactorizationFp b = oracle::exhaustive_fp_factor(f);
            EXPECT_EQ(a.unit, b.unit) << f.to_string();
            EXPECT_EQ(a.factors, b.factors) << f.to_string();
            EXPECT_EQ(a.product(), f);
        }
    }
}

TEST(ResidueField, RepeatedFactorsInCharacteristicP) {
    // (x^2 + x + 1)^4 * (x + 1)^2 over F_2 exercises the p-th root branch.
    const FpPoly g(2, {1, 1, 1}), h(2, {1, 1});
    FpPoly f = g * g * g * g * h * h;
    const FactorizationFp fac = fp_factorize(f);
    ASSERT_EQ(fac.factors.size(), 2U);
    EXPECT_EQ(fac.factors[0], std::make_pair(h, std::int64_t{2}));
    EXPECT_EQ(fac.factors[1], std::make_pair(g, std::int64_t{4}));
}

TEST(ResidueField, ExtensionFieldArithmetic) {
    const FieldRef f4 = FiniteField::extension(FpPoly(2, {1, 1, 1}));
    EXPECT_EQ(f4->order(), BigInt(4));
    const ExtFieldElem z = ExtFieldElem::generator(f4);
    EXPECT_EQ(z * z, z + ExtFieldElem::one(f4));
    EXPECT_EQ(z * z.inverse(), ExtFieldElem::one(f4));
    EXPECT_EQ(z.pow(3), ExtFieldElem::one(f4));
    EXPECT_EQ(z.pth_root().pow(2), z);
    EXPECT_EQ((z + ExtFieldElem::one(f4)).to_string(), "z + 1");
    EXPECT_THROW(FiniteField::extension(FpPoly(2, {1, 0, 1})), Error);
    EXPECT_THROW(ExtFieldElem::zero(f4).inverse(), Error);
}

TEST(ResidueField, ResidualOverF4) {
    // (z + 1) y^2 + 1 has the root z^2 over F_4; y^2 + y + 1 splits over F_4 too.
    const FieldRef f4 = FiniteField::extension(FpPoly(2, {1, 1, 1}));
    const ExtFieldElem one = ExtFieldElem::one(f4), z = ExtFieldElem::generator(f4);
    const ExtPoly a(f4, {one, ExtFieldElem::zero(f4), z + one});
    EXPECT_EQ(a.to_string(), "(z + 1)*y^2 + 1");
    EXPECT_FALSE(ext_is_irreducible(a));
    EXPECT_EQ(ext_count_irreducible_factors(a), 2);
    const ExtPoly b(f4, {one, one, one});
    EXPECT_FALSE(ext_is_irreducible(b));
    const FieldRef f2 = FiniteField::prime_field(2);
    EXPECT_TRUE(ext_is_irreducible(ExtPoly::from_fp(FpPoly(2, {1, 1, 1}))));
    EXPECT_EQ(ext_count_irreducible_factors(ExtPoly::from_fp(FpPoly(2, {1, 0, 1}))), 2);
}

TEST(ResidueField, ExtensionFactorizationAgainstOracle) {
    std::mt19937_64 rng(3);
    const std::vector<FpPoly> moduli = {FpPoly(2, {1, 1, 1}), FpPoly(2, {1, 1, 0, 1}), FpPoly(3, {1, 0, 1}),
                                        FpPoly(5, {2, 0, 1}), FpPoly(2, {1})};
    for (const FpPoly& mod : moduli) {
        const FieldRef field = mod.degree() == 0 ? FiniteField::prime_field(2) : FiniteField::extension(mod);
        for (int trial = 0; trial < 40; ++trial) {
            const ExtPoly g = random_ext(field, 1 + static_cast<std::int64_t>(rng() % 4), rng);
            const std::int64_t count = ext_count_irreducible_factors(g, trial);
            EXPECT_EQ(count, oracle::exhaustive_ext_factor_count(g)) << g.to_string();
            EXPECT_EQ(ext_is_irreducible(g), count == 1) << g.to_string();
            const ExtFactorization fac = ext_factorize(g, trial);
            ExtPoly prod = ExtPoly::constant(fac.unit);
            for (const auto& [h, k] : fac.factors) {
                EXPECT_TRUE(ext_is_irreducible(h));
                for (std::int64_t i = 0; i < k; ++i) prod *= h;
            }
            EXPECT_EQ(prod, g);
        }
    }
}

TEST(ResidueField, FactorizationIsSeedIndependent) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const FpPoly f = random_fp(7, 10, rng);
        EXPECT_EQ(fp_factorize(f, 1).factors, fp_factorize(f, 99).factors);
    }
}
