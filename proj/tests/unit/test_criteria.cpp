#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "phinewton/criteria.hpp"

using namespace phinewton;

namespace {

IntPoly degree12_example() {
    const IntPoly phi{1, 1, 1};
    return phi.pow(6) + IntPoly{0, 24} * phi.pow(3) + IntPoly{288, 144} * phi + IntPoly{48, 48};
}

bool has_note(const AnalysisReport& r, const std::string& needle) {
    return std::any_of(r.notes.begin(), r.notes.end(), [&](const auto& n) { return n.find(needle) != std::string::npos; });
}

}  // namespace

TEST(Criteria, HypothesisOnDegreeTwelve) {
    const ValuationDomain d(2);
    const SingleSideHypothesis h = check_single_side_hypothesis(phi_expand(degree12_example(), IntPoly{1, 1, 1}, d));
    EXPECT_TRUE(h.applicable);
    EXPECT_TRUE(h.holds);
    EXPECT_EQ(h.lambda, Rational(2, 3));
}

TEST(Criteria, HypothesisEisensteinShape) {
    for (long p : {2L, 3L, 7L}) {
        const ValuationDomain d(p);
        const SingleSideHypothesis h = check_single_side_hypothesis(phi_expand(IntPoly{p, p, 1}, IntPoly::x(), d));
        EXPECT_TRUE(h.holds);
        EXPECT_EQ(h.lambda, Rational(1, 2));
    }
}

TEST(Criteria, HypothesisViolationReported) {
    const long p = 3;
    const ValuationDomain d(p);
    const SingleSideHypothesis h = check_single_side_hypothesis(phi_expand(IntPoly{p * p * p, p, 0, 1}, IntPoly::x(), d));
    EXPECT_TRUE(h.applicable);
    EXPECT_FALSE(h.holds);
    ASSERT_EQ(h.violations.size(), 1U);
    EXPECT_EQ(h.violations[0], (HypothesisViolation{1, Rational(2, 1), ExtendedInt(1)}));
}

TEST(Criteria, HypothesisZeroConstantTerm) {
    const ValuationDomain d(2);
    const SingleSideHypothesis h = check_single_side_hypothesis(phi_expand(IntPoly{0, 2, 1}, IntPoly::x(), d));
    EXPECT_FALSE(h.holds);
    EXPECT_FALSE(h.failure.empty());
}

TEST(Criteria, GcdBound) {
    const ValuationDomain d(2);
    const SingleSideBound b = bound_single_phi(phi_expand(degree12_example(), IntPoly{1, 1, 1}, d));
    EXPECT_EQ(b.verdict, Verdict::Bounded);
    EXPECT_EQ(b.factor_bound, 2);
    EXPECT_EQ(b.min_factor_degree, 6);
    EXPECT_EQ(b.ramification, 3);

    // v(a_0) = 6, n = 4
    const SingleSideBound c = bound_single_phi(phi_expand(IntPoly{64, 0, 0, 0, 1}, IntPoly::x(), d));
    EXPECT_EQ(c.factor_bound, 2);
    EXPECT_EQ(c.ramification, 2);

    const SingleSideBound e = bound_single_phi(phi_expand(IntPoly{2, 0, 0, 0, 0, 1}, IntPoly::x(), d));
    EXPECT_EQ(e.verdict, Verdict::Irreducible);
    EXPECT_EQ(e.factor_bound, 1);
}

TEST(Criteria, IrreducibilityTest) {
    const ValuationDomain d(2);
    const IntPoly x = IntPoly::x();
    EXPECT_EQ(irreducibility_test(phi_expand(x.pow(6) + x.pow(3) * BigInt(4) + IntPoly{48}, x, d), d),
              Verdict::Irreducible);
    EXPECT_EQ(irreducibility_test(phi_expand(x.pow(6) + x.pow(3) * BigInt(24) + IntPoly{48}, x, d), d),
              Verdict::Bounded);
    EXPECT_EQ(irreducibility_test(phi_expand(degree12_example(), IntPoly{1, 1, 1}, d), d), Verdict::Bounded);
}

TEST(Criteria, SinglePhiReportDegreeTwelve) {
    const ValuationDomain d(2);
    const AnalysisReport r = analyze_single_phi(degree12_example(), IntPoly{1, 1, 1}, d);
    EXPECT_EQ(r.mode, AnalysisMode::SinglePhi);
    EXPECT_EQ(r.verdict, Verdict::Bounded);
    EXPECT_EQ(r.factor_bound, 2);
    EXPECT_EQ(r.min_factor_degree, 6);
    ASSERT_EQ(r.phi_reports.size(), 1U);
    ASSERT_EQ(r.phi_reports[0].sides.size(), 1U);
    EXPECT_FALSE(r.phi_reports[0].sides[0].residual_irreducible);
    EXPECT_EQ(r.refined_bound, 2);
}

TEST(Criteria, SinglePhiInapplicable) {
    const ValuationDomain d(2);
    const AnalysisReport a = analyze_single_phi(IntPoly{2, 2, 1}, IntPoly{1, 1}, d);
    EXPECT_EQ(a.verdict, Verdict::Inapplicable);
    EXPECT_EQ(a.factor_bound, 2);
    const AnalysisReport b = analyze_single_phi(IntPoly{2, 2, 1}, IntPoly{1, 0, 1}, d);
    EXPECT_EQ(b.verdict, Verdict::Inapplicable);
    EXPECT_THROW(analyze_single_phi(IntPoly{2, 2, 3}, IntPoly::x(), d), Error);
}

TEST(Criteria, FullModeEisenstein) {
    const AnalysisReport r = bound_full(IntPoly{2, 2, 1}, ValuationDomain(2));
    EXPECT_EQ(r.verdict, Verdict::Irreducible);
    EXPECT_EQ(r.factor_bound, 1);
}

TEST(Criteria, FullModeTwoCoprimeBlocks) {
    for (long p : {2L, 3L, 5L}) {
        const ValuationDomain d(p);
        const IntPoly phi1 = IntPoly::x(), phi2{1, 1};
        const IntPoly p3 = IntPoly{p * p * p};
        const IntPoly f = (phi1.pow(5) + p3) * (phi2.pow(4) + p3);
        const AnalysisReport r = bound_full(f, d);
        EXPECT_EQ(r.factor_bound, 2);
        EXPECT_EQ(r.verdict, Verdict::Bounded);
        ASSERT_EQ(r.phi_reports.size(), 2U);
        EXPECT_EQ(r.phi_reports[0].sides.at(0).side.slope, Rational(-3, 5));
        EXPECT_EQ(r.phi_reports[1].sides.at(0).side.slope, Rational(-3, 4));
        EXPECT_TRUE(has_note(r, "exactly two"));
        EXPECT_EQ(r.valuation_count_bound, 2);
        EXPECT_EQ(r.prime_ideal_count_bound, 2);
    }
}

TEST(Criteria, FullModeSquarefreeReduction) {
    // x (x - 1) (x - 2) (x - 3) (x - 4) + 5 splits into five unramified pieces at p = 5.
    const IntPoly x = IntPoly::x();
    IntPoly f = IntPoly{1};
    for (long a = 0; a < 5; ++a) f *= x - IntPoly{a};
    f += IntPoly{5};
    const AnalysisReport r = bound_full(f, ValuationDomain(5));
    EXPECT_EQ(r.factor_bound, 5);
    EXPECT_EQ(r.phi_reports.size(), 5U);
}

TEST(Criteria, FullModeExactPhiDivisor) {
    const IntPoly x = IntPoly::x();
    const AnalysisReport r = bound_full(x.pow(3) * (x.pow(2) + IntPoly{2}), ValuationDomain(2));
    EXPECT_GE(r.factor_bound, 4);
    EXPECT_THROW(bound_full(IntPoly{1, 2}, ValuationDomain(2)), Error);
}

TEST(Criteria, ReportInvariantsRandom) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const long p = std::vector<long>{2, 3, 5}[rng() % 3];
        const ValuationDomain d(p);
        const oracle::FactorWitness w = oracle::gen_factor_witness(d, 2 + rng() % 3, 16, rng);
        const AnalysisReport r = bound_full(w.product, d, trial);
        EXPECT_GE(r.factor_bound, static_cast<std::int64_t>(w.k()));
        if (r.verdict == Verdict::Irreducible) EXPECT_EQ(r.factor_bound, 1);
        if (r.refined_bound) EXPECT_LE(*r.refined_bound, r.factor_bound);
        for (const PhiReport& pr : r.phi_reports) {
            std::int64_t sum = 0;
            for (const auto& s : pr.sides) {
                sum += s.side.degree;
                EXPECT_LE(s.residual_factor_count, s.side.degree);
            }
            EXPECT_EQ(pr.side_degree_sum, sum);
            EXPECT_LE(pr.side_degree_sum, pr.multiplicity);
        }
    }
}

TEST(Criteria, DumasCaseIrreducible) {
    for (long p : {2L, 3L, 5L}) {
        const ValuationDomain d(p);
        std::mt19937_64 rng(static_cast<std::uint64_t>(p));
        for (std::int64_t m : {1, 2, 3}) {
            const IntPoly phi = oracle::random_phi(d, m, rng);
            for (const IntPoly& f : oracle::gen_eisenstein_family(d, phi, 10, rng(), 1)) {
                EXPECT_EQ(analyze_single_phi(f, phi, d).verdict, Verdict::Irreducible) << f.to_string();
                EXPECT_EQ(bound_full(f, d).verdict, Verdict::Irreducible) << f.to_string();
            }
        }
    }
}
