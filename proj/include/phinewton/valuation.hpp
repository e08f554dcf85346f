#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace phinewton {

using BigInt = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A non-negative integer or +infinity (the valuation of zero).
class ExtendedInt {
   public:
    constexpr ExtendedInt() noexcept = default;  // infinity
    constexpr ExtendedInt(std::int64_t v) noexcept : value_(v) {}

    static constexpr ExtendedInt infinity() noexcept { return ExtendedInt(); }

    constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
    constexpr bool is_finite() const noexcept { return value_.has_value(); }

    /// Finite value; throws on infinity.
    std::int64_t value() const {
        if (!value_) throw Error("ExtendedInt: value() of infinity");
        return *value_;
    }

    friend constexpr ExtendedInt operator+(ExtendedInt a, ExtendedInt b) noexcept {
        if (!a.value_ || !b.value_) return infinity();
        return ExtendedInt(*a.value_ + *b.value_);
    }

    friend constexpr bool operator==(ExtendedInt a, ExtendedInt b) noexcept = default;

    friend constexpr std::strong_ordering operator<=>(ExtendedInt a, ExtendedInt b) noexcept {
        if (!a.value_) return b.value_ ? std::strong_ordering::greater : std::strong_ordering::equal;
        if (!b.value_) return std::strong_ordering::less;
        return *a.value_ <=> *b.value_;
    }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

   private:
    std::optional<std::int64_t> value_;
};

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
   public:
    Rational() = default;
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num) : value_(num) {}

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    int sign() const { return sgn(value_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return from(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from(a.value_ * b.value_); }
    friend Rational operator-(const Rational& a) { return from(-a.value_); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    /// "num/den", or just "num" when den = 1.
    std::string to_string() const;

   private:
    static Rational from(mpq_class q) {
        Rational r;
        r.value_ = std::move(q);
        return r;
    }
    mpq_class value_;
};

/// num/den in lowest terms; throws Error when den = 0.
Rational reduce_rational(const BigInt& num, const BigInt& den);

/// Deterministic primality check: trial division, then Miller-Rabin with a base
/// set that is exact below 2^64; larger inputs use GMP's BPSW-based test.
bool is_prime(const BigInt& n);

/// Rank-one discrete valuation on Z: the p-adic valuation normalized so that
/// v(p) = 1. This is the only coefficient-domain backend; downstream modules
/// go through valuation(), divide_by_uniformizer_power() and residue() only.
class ValuationDomain {
   public:
    /// Throws Error unless p is prime.
    explicit ValuationDomain(BigInt p);

    const BigInt& prime() const noexcept { return prime_; }
    const BigInt& uniformizer() const noexcept { return prime_; }
    const BigInt& residue_characteristic() const noexcept { return prime_; }

    /// Exponent of p in x; infinity for x = 0.
    ExtendedInt valuation(const BigInt& x) const;

    /// x / p^k, which must be exact; throws Error otherwise.
    BigInt divide_by_uniformizer_power(const BigInt& x, std::int64_t k) const;

    /// Image of x in the residue field, as a representative in [0, p).
    BigInt residue(const BigInt& x) const;

   private:
    BigInt prime_;
};

}  // namespace phinewton
