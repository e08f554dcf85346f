#pragma once

// Brute-force oracles and seeded generators used by the unit and acceptance
// suites. Each oracle takes a different algorithmic route from the module it
// checks and shares nothing with it beyond arithmetic primitives.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "phinewton/criteria.hpp"
#include "phinewton/polygon.hpp"
#include "phinewton/polyring.hpp"
#include "phinewton/residue_field.hpp"

namespace phinewton::oracle {

/// Lower envelope by exhaustive supporting-line search over all point pairs.
NewtonPolygon hull_oracle(const std::vector<PolygonPoint>& points);

/// Third opinion on a polygon: consecutive sides share endpoints, slopes
/// strictly increase and every finite point lies on or above every side line.
bool validate_polygon(const NewtonPolygon& np, const std::vector<PolygonPoint>& points);

/// Trial division by every monic polynomial of degree <= deg/2. Refuses
/// p > 7 or deg f > 8.
FactorizationFp exhaustive_fp_factor(const FpPoly& f);

/// Irreducible factor count (with multiplicity) over a small F_q by trial
/// division by every monic polynomial. Refuses q^(deg/2) > 20000.
std::int64_t exhaustive_ext_factor_count(const ExtPoly& g);

/// Coefficients b_i of f = sum b_i (x + shift)^i via the binomial theorem.
std::vector<BigInt> taylor_coefficients(const IntPoly& f, const BigInt& shift);

/// Residual polynomial t_0..t_d (printed order) of the single side from
/// (0, v(b_0)) to (n, 0) for phi = x + shift, computed straight from the
/// definition on Taylor coefficients. Values are in [0, p).
std::vector<BigInt> linear_phi_residual_oracle(const IntPoly& f, const BigInt& shift, const BigInt& p);

/// Monic lift with coefficients in [0, p) whose reduction is irreducible.
IntPoly random_phi(const ValuationDomain& domain, std::int64_t degree, std::mt19937_64& rng);

/// Random deg < m polynomial with coefficients in [-bound, bound].
IntPoly random_small_poly(std::int64_t degree_below, long bound, std::mt19937_64& rng);

/// phi^n + sum_{i<n} p^{k_i} r_i phi^i with k_i drawn from [k_min, k_max]
/// and deg r_i < deg phi; r_0 has unit content so a_0 != 0.
IntPoly random_phi_power_poly(const ValuationDomain& domain, const IntPoly& phi, std::int64_t n, std::int64_t k_min,
                              std::int64_t k_max, std::mt19937_64& rng);

/// Monic polynomials satisfying the single-side hypothesis for phi with
/// gcd(v(a_0), n) = gcd_target, or cycling through 1, 2, 3 when unset.
/// n is kept at most max_n.
std::vector<IntPoly> gen_eisenstein_family(const ValuationDomain& domain, const IntPoly& phi, std::size_t count,
                                           std::uint64_t seed, std::optional<std::int64_t> gcd_target = std::nullopt,
                                           std::int64_t max_n = 6);

/// A product with a known lower bound k on its number of irreducible factors.
struct FactorWitness {
    std::vector<IntPoly> factors;
    IntPoly product;

    std::size_t k() const noexcept { return factors.size(); }
};

FactorWitness make_witness(std::vector<IntPoly> factors);

/// Witness with k monic factors drawn from Eisenstein families at random phi
/// and from generic random monic polynomials; total degree <= max_degree.
FactorWitness gen_factor_witness(const ValuationDomain& domain, std::size_t k, std::int64_t max_degree,
                                 std::mt19937_64& rng);

}  // namespace phinewton::oracle
