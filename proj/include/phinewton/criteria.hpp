#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phinewton/polygon.hpp"
#include "phinewton/polyring.hpp"
#include "phinewton/residual.hpp"
#include "phinewton/residue_field.hpp"

namespace phinewton {

/// Three-valued on purpose: a bound above one is never a reducibility claim.
enum class Verdict { Irreducible, Bounded, Inapplicable };
enum class AnalysisMode { SinglePhi, Full };

std::string to_string(Verdict v);
std::string to_string(AnalysisMode m);

struct HypothesisViolation {
    std::int64_t index;
    Rational required;  // lower bound (n - i) * v(a_0) / n on v(a_i)
    ExtendedInt actual;

    friend bool operator==(const HypothesisViolation&, const HypothesisViolation&) = default;
};

/// n * v(a_i) >= (n - i) * v(a_0) > 0 for 0 <= i < n, with lambda = v(a_0)/n.
struct SingleSideHypothesis {
    bool applicable = false;  // f monic and f mod p a power of phi mod p
    bool holds = false;
    Rational lambda;
    std::vector<HypothesisViolation> violations;
    std::string failure;  // set when not applicable or a_0 = 0
};

SingleSideHypothesis check_single_side_hypothesis(const PhiExpansion& exp);

/// Gcd bound for the single-side case.
struct SingleSideBound {
    Verdict verdict = Verdict::Inapplicable;
    std::int64_t factor_bound = 0;  // d = gcd(v(a_0), n)
    std::optional<std::int64_t> min_factor_degree;  // e * deg(phi)
    std::int64_t ramification = 0;  // e = n / d
    std::int64_t partial_height = 0;  // h = v(a_0) / d
};

SingleSideBound bound_single_phi(const PhiExpansion& exp);

/// Irreducible when the single side has degree 1 or an irreducible residual
/// polynomial; Bounded otherwise; Inapplicable when the hypothesis fails.
Verdict irreducibility_test(const PhiExpansion& exp, const ValuationDomain& domain, std::uint64_t seed = 0);

struct SideAnalysis {
    Side side;
    ResidualPolynomial residual;
    bool residual_irreducible = false;
    std::int64_t residual_factor_count = 0;
};

struct PhiReport {
    IntPoly phi;
    std::int64_t multiplicity = 0;  // n_i, the exponent of phi mod p in f mod p
    NewtonPolygon polygon;  // full polygon of the phi-expansion
    PhiExpansion expansion;
    /// Number of leading zero coefficients a_0 = ... = a_{k-1} = 0, i.e. the
    /// exact power of phi dividing f over Z; each such phi is its own factor.
    std::int64_t exact_phi_power = 0;
    std::vector<SideAnalysis> sides;  // principal sides only
    std::int64_t side_degree_sum = 0;
};

/// Expansion, polygon and residual data of f with respect to one phi.
PhiReport analyze_phi(const IntPoly& f, const IntPoly& phi, std::int64_t multiplicity, const FieldRef& field,
                      const ValuationDomain& domain, std::uint64_t seed = 0);

struct AnalysisReport {
    IntPoly input;
    BigInt prime;
    std::uint64_t seed = 0;
    AnalysisMode mode = AnalysisMode::Full;
    std::vector<PhiReport> phi_reports;
    Verdict verdict = Verdict::Inapplicable;
    std::int64_t factor_bound = 0;
    std::optional<std::int64_t> min_factor_degree;
    std::optional<std::int64_t> refined_bound;
    std::int64_t valuation_count_bound = 0;
    std::int64_t prime_ideal_count_bound = 0;
    std::vector<std::string> notes;
};

/// Analysis with a user-supplied phi. Throws Error on malformed input (f or phi
/// not monic, deg f < 1); inapplicable hypotheses give Verdict::Inapplicable.
AnalysisReport analyze_single_phi(const IntPoly& f, const IntPoly& phi, const ValuationDomain& domain,
                                  std::uint64_t seed = 0);

/// Factor-count bound over all irreducible factors of f mod p. Throws Error
/// when f is not monic of degree >= 1.
AnalysisReport bound_full(const IntPoly& f, const ValuationDomain& domain, std::uint64_t seed = 0);

}  // namespace phinewton
