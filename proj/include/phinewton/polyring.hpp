#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "phinewton/valuation.hpp"

namespace phinewton {

/// Dense polynomial over Z. coeffs()[i] is the coefficient of x^i; the
/// vector never has a trailing zero, so the zero polynomial is empty.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(BigInt c);
    static IntPoly x();
    /// c * x^k
    static IntPoly monomial(BigInt c, std::size_t k);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    /// Coefficient of x^i; zero past the degree.
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    BigInt leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const BigInt& s);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
    friend IntPoly operator-(IntPoly a) { return a *= BigInt(-1); }
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly pow(unsigned k) const;
    BigInt evaluate(const BigInt& at) const;

    /// Canonical rendering, e.g. "x^3 - 2*x + 1"; "0" for zero.
    std::string to_string(char var = 'x') const;

   private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Euclidean division num = q * den + r with deg r < deg den. den must be
/// monic; throws Error otherwise.
std::pair<IntPoly, IntPoly> poly_divmod(const IntPoly& num, const IntPoly& den);

/// Minimum valuation of the coefficients of a; infinity for a = 0.
ExtendedInt gauss_valuation(const IntPoly& a, const ValuationDomain& domain);

/// The phi-adic expansion f = sum_i a_i * phi^i with deg a_i < deg phi.
/// Zero coefficients stay in place with valuation infinity.
struct PhiExpansion {
    IntPoly f;
    IntPoly phi;
    std::vector<IntPoly> coeffs;
    std::vector<ExtendedInt> valuations;

    /// Index of the top coefficient (l in f = sum_{i<=l} a_i phi^i).
    std::int64_t length() const noexcept { return static_cast<std::int64_t>(coeffs.size()) - 1; }
    std::int64_t phi_degree() const noexcept { return phi.degree(); }
    /// sum_i a_i * phi^i, computed by Horner's scheme in phi.
    IntPoly recompose() const;
};

/// Repeated division by phi. Requires f != 0 and phi monic of degree >= 1.
PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi, const ValuationDomain& domain);

/// True iff deg phi | deg f and f = phi^(deg f / deg phi) coefficientwise mod p.
bool is_power_of_phibar(const IntPoly& f, const IntPoly& phi, const ValuationDomain& domain);

}  // namespace phinewton
