#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "phinewton/polyring.hpp"
#include "phinewton/valuation.hpp"

namespace phinewton {

/// Polynomial over F_p. Coefficients are kept in [0, p), lowest degree first,
/// with no trailing zero.
class FpPoly {
   public:
    explicit FpPoly(BigInt p);
    FpPoly(BigInt p, std::vector<BigInt> coeffs);
    FpPoly(BigInt p, std::initializer_list<long> coeffs);

    /// Coefficientwise reduction of an integer polynomial.
    static FpPoly reduce(const IntPoly& f, const BigInt& p);
    static FpPoly constant(BigInt p, BigInt c);
    static FpPoly x(BigInt p);

    const BigInt& modulus() const noexcept { return p_; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    BigInt leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

    FpPoly& operator+=(const FpPoly& rhs);
    FpPoly& operator-=(const FpPoly& rhs);
    FpPoly& operator*=(const FpPoly& rhs);
    FpPoly& operator*=(const BigInt& s);
    friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
    friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
    friend FpPoly operator*(FpPoly a, const FpPoly& b) { return a *= b; }
    friend FpPoly operator*(FpPoly a, const BigInt& s) { return a *= s; }
    friend bool operator==(const FpPoly&, const FpPoly&) = default;

    FpPoly monic() const;
    FpPoly derivative() const;
    /// Representative in Z[x] with coefficients in [0, p).
    IntPoly lift() const;
    std::string to_string(char var = 'x') const;

   private:
    void normalize();
    BigInt p_;
    std::vector<BigInt> coeffs_;
};

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
/// Monic gcd (zero only if both inputs are zero).
FpPoly gcd(const FpPoly& a, const FpPoly& b);
/// Inverse of a modulo m; throws Error when gcd(a, m) != 1.
FpPoly inverse_mod(const FpPoly& a, const FpPoly& m);
/// Order used to sort factor lists: by degree, then coefficients from the top.
bool lex_less(const FpPoly& a, const FpPoly& b);

/// The finite field F_p[z]/(modulus) with q = p^m elements. The prime field
/// is presented as F_p[z]/(z).
class FiniteField {
   public:
    static std::shared_ptr<const FiniteField> prime_field(const BigInt& p);
    /// Throws Error unless modulus is irreducible of degree >= 1.
    static std::shared_ptr<const FiniteField> extension(const FpPoly& modulus);

    const BigInt& characteristic() const noexcept { return modulus_.modulus(); }
    const FpPoly& modulus() const noexcept { return modulus_; }
    std::int64_t degree() const noexcept { return modulus_.degree(); }
    const BigInt& order() const noexcept { return order_; }

    bool operator==(const FiniteField& other) const { return modulus_ == other.modulus_; }

   private:
    explicit FiniteField(FpPoly modulus);
    FpPoly modulus_;
    BigInt order_;
};

using FieldRef = std::shared_ptr<const FiniteField>;

/// Element of a FiniteField, stored as a residue of degree < m.
class ExtFieldElem {
   public:
    ExtFieldElem(FieldRef field, const FpPoly& value);
    static ExtFieldElem zero(FieldRef field);
    static ExtFieldElem one(FieldRef field);
    static ExtFieldElem from_int(FieldRef field, const BigInt& c);
    /// The class of z, i.e. a root of the modulus.
    static ExtFieldElem generator(FieldRef field);

    const FieldRef& field() const noexcept { return field_; }
    const FpPoly& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }
    bool is_one() const noexcept { return value_.is_one(); }

    ExtFieldElem& operator+=(const ExtFieldElem& rhs);
    ExtFieldElem& operator-=(const ExtFieldElem& rhs);
    ExtFieldElem& operator*=(const ExtFieldElem& rhs);
    friend ExtFieldElem operator+(ExtFieldElem a, const ExtFieldElem& b) { return a += b; }
    friend ExtFieldElem operator-(ExtFieldElem a, const ExtFieldElem& b) { return a -= b; }
    friend ExtFieldElem operator*(ExtFieldElem a, const ExtFieldElem& b) { return a *= b; }
    ExtFieldElem operator-() const;
    friend bool operator==(const ExtFieldElem& a, const ExtFieldElem& b) { return a.value_ == b.value_; }

    ExtFieldElem inverse() const;
    ExtFieldElem pow(const BigInt& e) const;
    /// The unique b with b^p = *this.
    ExtFieldElem pth_root() const;

    std::string to_string(char var = 'z') const;

   private:
    FieldRef field_;
    FpPoly value_;
};

/// Polynomial in y over a FiniteField; coeffs()[k] multiplies y^k.
class ExtPoly {
   public:
    explicit ExtPoly(FieldRef field);
    ExtPoly(FieldRef field, std::vector<ExtFieldElem> coeffs);
    /// Lifts an F_p polynomial into the prime field presentation.
    static ExtPoly from_fp(const FpPoly& f);
    static ExtPoly y(FieldRef field);
    static ExtPoly constant(const ExtFieldElem& c);

    const FieldRef& field() const noexcept { return field_; }
    const std::vector<ExtFieldElem>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    ExtFieldElem coeff(std::size_t k) const;
    ExtFieldElem leading() const;

    ExtPoly& operator+=(const ExtPoly& rhs);
    ExtPoly& operator-=(const ExtPoly& rhs);
    ExtPoly& operator*=(const ExtPoly& rhs);
    ExtPoly& operator*=(const ExtFieldElem& s);
    friend ExtPoly operator+(ExtPoly a, const ExtPoly& b) { return a += b; }
    friend ExtPoly operator-(ExtPoly a, const ExtPoly& b) { return a -= b; }
    friend ExtPoly operator*(ExtPoly a, const ExtPoly& b) { return a *= b; }
    friend ExtPoly operator*(ExtPoly a, const ExtFieldElem& s) { return a *= s; }
    friend bool operator==(const ExtPoly& a, const ExtPoly& b) { return a.coeffs_ == b.coeffs_; }

    ExtPoly monic() const;
    ExtPoly derivative() const;
    /// Back to F_p[y]; only valid over the prime field.
    FpPoly to_fp() const;
    std::string to_string(char var = 'y', char field_var = 'z') const;

   private:
    void normalize();
    FieldRef field_;
    std::vector<ExtFieldElem> coeffs_;
};

std::pair<ExtPoly, ExtPoly> divmod(const ExtPoly& a, const ExtPoly& b);
ExtPoly gcd(const ExtPoly& a, const ExtPoly& b);
/// base^e mod m.
ExtPoly pow_mod(const ExtPoly& base, const BigInt& e, const ExtPoly& m);

/// Squarefree decomposition of a nonzero polynomial: pairwise coprime monic
/// squarefree parts g_i with multiplicities n_i, prod g_i^n_i = monic(f).
std::vector<std::pair<ExtPoly, std::int64_t>> squarefree_decomposition(const ExtPoly& f);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
std::vector<std::pair<ExtPoly, std::int64_t>> distinct_degree_factorization(const ExtPoly& f);

/// Splits a monic squarefree product of irreducibles of degree d into its
/// irreducible factors (Cantor-Zassenhaus; trace map in characteristic 2).
std::vector<ExtPoly> equal_degree_factorization(const ExtPoly& f, std::int64_t d, std::mt19937_64& rng);

struct ExtFactorization {
    ExtFieldElem unit;
    std::vector<std::pair<ExtPoly, std::int64_t>> factors;
};

/// Complete factorization into monic irreducibles, deterministic in seed.
ExtFactorization ext_factorize(const ExtPoly& g, std::uint64_t seed = 0);

/// Rabin's test. Requires deg g >= 1.
bool ext_is_irreducible(const ExtPoly& g);

/// Number of monic irreducible factors counted with multiplicity.
std::int64_t ext_count_irreducible_factors(const ExtPoly& g, std::uint64_t seed = 0);

struct FactorizationFp {
    BigInt modulus;
    BigInt unit;
    /// Sorted by lex_less.
    std::vector<std::pair<FpPoly, std::int64_t>> factors;

    /// unit * prod factor^multiplicity
    FpPoly product() const;
};

FactorizationFp fp_factorize(const FpPoly& f, std::uint64_t seed = 0);
bool fp_is_irreducible(const FpPoly& f);

}  // namespace phinewton
