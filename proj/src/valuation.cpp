#include "phinewton/valuation.hpp"

#include <array>
#include <utility>

namespace phinewton {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("malformed slope: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational reduce_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

namespace {

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned long s) {
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const BigInt n_minus_1 = n - 1;
    if (x == 1 || x == n_minus_1) return false;
    for (unsigned long r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n_minus_1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    static constexpr std::array<unsigned, 25> small_primes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                              43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (unsigned q : small_primes) {
        if (n == q) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return false;
    }
    if (n < 97 * 97) return true;

    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;

    // Bases 2..37 decide primality for every n < 3.3 * 10^24.
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    static constexpr std::array<unsigned, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned a : bases) {
        if (miller_rabin_witness(n, BigInt(a), d, s)) return false;
    }
    return true;
}

ValuationDomain::ValuationDomain(BigInt p) : prime_(std::move(p)) {
    if (!is_prime(prime_)) throw Error("p = " + prime_.get_str() + " is not prime");
}

ExtendedInt ValuationDomain::valuation(const BigInt& x) const {
    if (x == 0) return ExtendedInt::infinity();
    BigInt rest;
    const auto v = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime_.get_mpz_t());
    return ExtendedInt(static_cast<std::int64_t>(v));
}

BigInt ValuationDomain::divide_by_uniformizer_power(const BigInt& x, std::int64_t k) const {
    if (k < 0) throw Error("negative uniformizer power");
    BigInt pk;
    mpz_pow_ui(pk.get_mpz_t(), prime_.get_mpz_t(), static_cast<unsigned long>(k));
    if (!mpz_divisible_p(x.get_mpz_t(), pk.get_mpz_t()))
        throw Error("inexact division of " + x.get_str() + " by " + prime_.get_str() + "^" + std::to_string(k));
    BigInt q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), pk.get_mpz_t());
    return q;
}

BigInt ValuationDomain::residue(const BigInt& x) const {
    BigInt r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), prime_.get_mpz_t());
    return r;
}

}  // namespace phinewton
