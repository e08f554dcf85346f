#include "phinewton/residue_field.hpp"

#include <algorithm>
#include <sstream>

namespace phinewton {

namespace {

BigInt mod_p(const BigInt& x, const BigInt& p) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return r;
}

BigInt inverse_p(const BigInt& x, const BigInt& p) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()) == 0) throw Error("non-invertible residue");
    return r;
}

/// Uniform-ish residue in [0, n) from 64 extra bits of entropy.
BigInt random_below(const BigInt& n, std::mt19937_64& rng) {
    const std::size_t words = (mpz_sizeinbase(n.get_mpz_t(), 2) + 64 + 63) / 64;
    BigInt acc = 0;
    for (std::size_t i = 0; i < words; ++i) {
        acc <<= 64;
        const std::uint64_t w = rng();
        acc += BigInt(static_cast<unsigned long>(w >> 32)) << 32;
        acc += static_cast<unsigned long>(w & 0xffffffffULL);
    }
    return mod_p(acc, n);
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- FpPoly

FpPoly::FpPoly(BigInt p) : p_(std::move(p)) {}

FpPoly::FpPoly(BigInt p, std::vector<BigInt> coeffs) : p_(std::move(p)), coeffs_(std::move(coeffs)) { normalize(); }

FpPoly::FpPoly(BigInt p, std::initializer_list<long> coeffs) : p_(std::move(p)) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

FpPoly FpPoly::reduce(const IntPoly& f, const BigInt& p) { return FpPoly(p, f.coeffs()); }

FpPoly FpPoly::constant(BigInt p, BigInt c) { return FpPoly(std::move(p), std::vector<BigInt>{std::move(c)}); }

FpPoly FpPoly::x(BigInt p) { return FpPoly(std::move(p), {0, 1}); }

void FpPoly::normalize() {
    for (auto& c : coeffs_) c = mod_p(c, p_);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly& FpPoly::operator+=(const FpPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

FpPoly& FpPoly::operator*=(const FpPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

FpPoly& FpPoly::operator*=(const BigInt& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return *this * inverse_p(leading(), p_);
}

FpPoly FpPoly::derivative() const {
    std::vector<BigInt> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    return FpPoly(p_, std::move(d));
}

IntPoly FpPoly::lift() const { return IntPoly(coeffs_); }

std::string FpPoly::to_string(char var) const { return lift().to_string(var); }

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw Error("division by the zero polynomial over F_p");
    const BigInt& p = a.modulus();
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<BigInt> rem = a.coeffs();
    if (rem.size() <= db) return {FpPoly(p), a};
    const BigInt lead_inv = inverse_p(b.leading(), p);
    std::vector<BigInt> quot(rem.size() - db);
    const auto& bc = b.coeffs();
    for (std::size_t k = rem.size(); k-- > db;) {
        const BigInt q = mod_p(rem[k] * lead_inv, p);
        quot[k - db] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = mod_p(rem[k - db + j] - q * bc[j], p);
    }
    rem.resize(db);
    return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        FpPoly r2 = divmod(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

FpPoly inverse_mod(const FpPoly& a, const FpPoly& m) {
    const BigInt& p = m.modulus();
    FpPoly r0 = m, r1 = divmod(a, m).second;
    FpPoly s0(p), s1 = FpPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        FpPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw Error("element is not invertible modulo " + m.to_string());
    return divmod(s0 * inverse_p(r0.leading(), p), m).second;
}

bool lex_less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t k = a.coeffs().size(); k-- > 0;) {
        const int c = cmp(a.coeffs()[k], b.coeffs()[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

// ---------------------------------------------------------------- FiniteField

FiniteField::FiniteField(FpPoly modulus) : modulus_(std::move(modulus)) {
    mpz_pow_ui(order_.get_mpz_t(), modulus_.modulus().get_mpz_t(), static_cast<unsigned long>(modulus_.degree()));
}

FieldRef FiniteField::prime_field(const BigInt& p) { return FieldRef(new FiniteField(FpPoly::x(p))); }

FieldRef FiniteField::extension(const FpPoly& modulus) {
    if (modulus.degree() < 1) throw Error("field modulus must have degree >= 1");
    if (!fp_is_irreducible(modulus)) throw Error("field modulus " + modulus.to_string() + " is reducible");
    return FieldRef(new FiniteField(modulus.monic()));
}

// ---------------------------------------------------------------- ExtFieldElem

ExtFieldElem::ExtFieldElem(FieldRef field, const FpPoly& value)
    : field_(std::move(field)), value_(divmod(value, field_->modulus()).second) {}

ExtFieldElem ExtFieldElem::zero(FieldRef field) {
    FpPoly z(field->characteristic());
    return ExtFieldElem(std::move(field), z);
}

ExtFieldElem ExtFieldElem::one(FieldRef field) { return from_int(std::move(field), 1); }

ExtFieldElem ExtFieldElem::from_int(FieldRef field, const BigInt& c) {
    FpPoly v = FpPoly::constant(field->characteristic(), c);
    return ExtFieldElem(std::move(field), v);
}

ExtFieldElem ExtFieldElem::generator(FieldRef field) {
    FpPoly v = FpPoly::x(field->characteristic());
    return ExtFieldElem(std::move(field), v);
}

ExtFieldElem& ExtFieldElem::operator+=(const ExtFieldElem& rhs) {
    value_ += rhs.value_;
    return *this;
}

ExtFieldElem& ExtFieldElem::operator-=(const ExtFieldElem& rhs) {
    value_ -= rhs.value_;
    return *this;
}

ExtFieldElem& ExtFieldElem::operator*=(const ExtFieldElem& rhs) {
    if (field_->degree() == 1) {
        value_ *= rhs.value_.coeff(0);
    } else {
        value_ = divmod(value_ * rhs.value_, field_->modulus()).second;
    }
    return *this;
}

ExtFieldElem ExtFieldElem::operator-() const { return zero(field_) - *this; }

ExtFieldElem ExtFieldElem::inverse() const {
    if (is_zero()) throw Error("inverse of zero in a finite field");
    return ExtFieldElem(field_, inverse_mod(value_, field_->modulus()));
}

ExtFieldElem ExtFieldElem::pow(const BigInt& e) const {
    ExtFieldElem result = one(field_);
    ExtFieldElem base = *this;
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result *= result;
        if (mpz_tstbit(e.get_mpz_t(), i)) result *= base;
    }
    return result;
}

ExtFieldElem ExtFieldElem::pth_root() const {
    // Frobenius has order m, so its inverse is x -> x^(p^(m-1)).
    BigInt e;
    mpz_pow_ui(e.get_mpz_t(), field_->characteristic().get_mpz_t(), static_cast<unsigned long>(field_->degree() - 1));
    return pow(e);
}

std::string ExtFieldElem::to_string(char var) const { return value_.to_string(var); }

// ---------------------------------------------------------------- ExtPoly

ExtPoly::ExtPoly(FieldRef field) : field_(std::move(field)) {}

ExtPoly::ExtPoly(FieldRef field, std::vector<ExtFieldElem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    normalize();
}

ExtPoly ExtPoly::from_fp(const FpPoly& f) {
    FieldRef field = FiniteField::prime_field(f.modulus());
    std::vector<ExtFieldElem> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c.push_back(ExtFieldElem::from_int(field, a));
    return ExtPoly(field, std::move(c));
}

ExtPoly ExtPoly::y(FieldRef field) {
    std::vector<ExtFieldElem> c{ExtFieldElem::zero(field), ExtFieldElem::one(field)};
    return ExtPoly(std::move(field), std::move(c));
}

ExtPoly ExtPoly::constant(const ExtFieldElem& c) { return ExtPoly(c.field(), {c}); }

void ExtPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExtFieldElem ExtPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : ExtFieldElem::zero(field_); }

ExtFieldElem ExtPoly::leading() const { return coeffs_.empty() ? ExtFieldElem::zero(field_) : coeffs_.back(); }

ExtPoly& ExtPoly::operator+=(const ExtPoly& rhs) {
    while (coeffs_.size() < rhs.coeffs_.size()) coeffs_.push_back(ExtFieldElem::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

ExtPoly& ExtPoly::operator-=(const ExtPoly& rhs) {
    while (coeffs_.size() < rhs.coeffs_.size()) coeffs_.push_back(ExtFieldElem::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

ExtPoly& ExtPoly::operator*=(const ExtPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<ExtFieldElem> out(coeffs_.size() + rhs.coeffs_.size() - 1, ExtFieldElem::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

ExtPoly& ExtPoly::operator*=(const ExtFieldElem& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
}

ExtPoly ExtPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

ExtPoly ExtPoly::derivative() const {
    std::vector<ExtFieldElem> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.push_back(coeffs_[i] * ExtFieldElem::from_int(field_, static_cast<unsigned long>(i)));
    return ExtPoly(field_, std::move(d));
}

FpPoly ExtPoly::to_fp() const {
    if (field_->degree() != 1) throw Error("to_fp() on a proper extension field");
    std::vector<BigInt> c;
    for (const auto& a : coeffs_) c.push_back(a.value().coeff(0));
    return FpPoly(field_->characteristic(), std::move(c));
}

std::string ExtPoly::to_string(char var, char field_var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const ExtFieldElem& c = coeffs_[k];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const auto& vc = c.value().coeffs();
        const bool compound = std::count_if(vc.begin(), vc.end(), [](const BigInt& a) { return a != 0; }) > 1;
        const std::string cs = compound ? "(" + c.to_string(field_var) + ")" : c.to_string(field_var);
        if (k == 0) {
            os << cs;
            continue;
        }
        if (!c.is_one()) os << cs << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::pair<ExtPoly, ExtPoly> divmod(const ExtPoly& a, const ExtPoly& b) {
    if (b.is_zero()) throw Error("division by the zero polynomial over F_q");
    const FieldRef& field = a.field();
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<ExtFieldElem> rem = a.coeffs();
    if (rem.size() <= db) return {ExtPoly(field), a};
    const ExtFieldElem lead_inv = b.leading().inverse();
    std::vector<ExtFieldElem> quot(rem.size() - db, ExtFieldElem::zero(field));
    const auto& bc = b.coeffs();
    for (std::size_t k = rem.size(); k-- > db;) {
        const ExtFieldElem q = rem[k] * lead_inv;
        quot[k - db] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
    }
    rem.resize(db, ExtFieldElem::zero(field));
    return {ExtPoly(field, std::move(quot)), ExtPoly(field, std::move(rem))};
}

ExtPoly gcd(const ExtPoly& a, const ExtPoly& b) {
    ExtPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        ExtPoly r2 = divmod(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

ExtPoly pow_mod(const ExtPoly& base, const BigInt& e, const ExtPoly& m) {
    ExtPoly result = divmod(ExtPoly::constant(ExtFieldElem::one(m.field())), m).second;
    const ExtPoly b = divmod(base, m).second;
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = divmod(result * result, m).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(result * b, m).second;
    }
    return result;
}

// ---------------------------------------------------------------- factorization

namespace {

/// g(y) = f(y)^(1/p), defined when f' = 0.
ExtPoly pth_root_poly(const ExtPoly& f) {
    const auto p = f.field()->characteristic().get_ui();
    std::vector<ExtFieldElem> c;
    for (std::size_t k = 0; k * p < f.coeffs().size(); ++k) c.push_back(f.coeffs()[k * p].pth_root());
    return ExtPoly(f.field(), std::move(c));
}

void split_equal_degree(const ExtPoly& f, std::int64_t d, std::mt19937_64& rng, std::vector<ExtPoly>& out) {
    if (f.degree() <= d) {
        out.push_back(f);
        return;
    }
    const FieldRef& field = f.field();
    const BigInt& p = field->characteristic();
    const bool even = p == 2;
    BigInt half_exp;
    if (!even) {
        BigInt qd;
        mpz_pow_ui(qd.get_mpz_t(), field->order().get_mpz_t(), static_cast<unsigned long>(d));
        half_exp = (qd - 1) / 2;
    }
    const ExtPoly one = ExtPoly::constant(ExtFieldElem::one(field));
    for (;;) {
        std::vector<ExtFieldElem> c;
        for (std::int64_t i = 0; i < f.degree(); ++i) {
            std::vector<BigInt> v;
            for (std::int64_t j = 0; j < field->degree(); ++j) v.push_back(random_below(p, rng));
            c.emplace_back(field, FpPoly(p, std::move(v)));
        }
        const ExtPoly a(field, std::move(c));
        if (a.degree() < 1) continue;

        ExtPoly b(field);
        if (even) {
            // Trace from F_{2^(md)} to F_2.
            ExtPoly t = a;
            b = a;
            for (std::int64_t j = 1; j < field->degree() * d; ++j) {
                t = divmod(t * t, f).second;
                b += t;
            }
        } else {
            b = pow_mod(a, half_exp, f) - one;
        }
        const ExtPoly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split_equal_degree(g, d, rng, out);
            split_equal_degree(divmod(f, g).first.monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<ExtPoly, std::int64_t>> squarefree_decomposition(const ExtPoly& f0) {
    if (f0.is_zero()) throw Error("squarefree decomposition of zero");
    const ExtPoly f = f0.monic();
    std::vector<std::pair<ExtPoly, std::int64_t>> out;
    if (f.degree() == 0) return out;

    ExtPoly c = gcd(f, f.derivative());
    ExtPoly w = divmod(f, c).first;
    std::int64_t i = 1;
    while (!w.is_one()) {
        ExtPoly y = gcd(w, c);
        ExtPoly fac = divmod(w, y).first;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
        w = std::move(y);
        c = divmod(c, w).first;
        ++i;
    }
    if (c.degree() > 0) {
        const auto p = static_cast<std::int64_t>(f.field()->characteristic().get_ui());
        for (auto& [g, k] : squarefree_decomposition(pth_root_poly(c))) out.emplace_back(std::move(g), k * p);
    }
    return out;
}

std::vector<std::pair<ExtPoly, std::int64_t>> distinct_degree_factorization(const ExtPoly& f0) {
    std::vector<std::pair<ExtPoly, std::int64_t>> out;
    ExtPoly f = f0.monic();
    const FieldRef& field = f.field();
    const ExtPoly y = ExtPoly::y(field);
    ExtPoly h = divmod(y, f).second;
    for (std::int64_t d = 1; f.degree() >= 2 * d; ++d) {
        h = pow_mod(h, field->order(), f);
        ExtPoly g = gcd(f, h - y);
        if (!g.is_one()) {
            f = divmod(f, g).first.monic();
            h = divmod(h, f).second;
            out.emplace_back(std::move(g), d);
        }
    }
    if (f.degree() > 0) {
        const auto d = f.degree();
        out.emplace_back(std::move(f), d);
    }
    return out;
}

std::vector<ExtPoly> equal_degree_factorization(const ExtPoly& f, std::int64_t d, std::mt19937_64& rng) {
    if (d < 1 || f.degree() % d != 0) throw Error("equal-degree factorization: degree mismatch");
    std::vector<ExtPoly> out;
    split_equal_degree(f.monic(), d, rng, out);
    return out;
}

ExtFactorization ext_factorize(const ExtPoly& g, std::uint64_t seed) {
    if (g.is_zero()) throw Error("factorization of the zero polynomial");
    std::mt19937_64 rng(seed);
    ExtFactorization result{g.leading(), {}};
    for (const auto& [part, mult] : squarefree_decomposition(g)) {
        for (const auto& [group, d] : distinct_degree_factorization(part)) {
            for (auto& factor : equal_degree_factorization(group, d, rng)) result.factors.emplace_back(std::move(factor), mult);
        }
    }
    return result;
}

bool ext_is_irreducible(const ExtPoly& g0) {
    if (g0.degree() < 1) throw Error("irreducibility test needs degree >= 1");
    const ExtPoly g = g0.monic();
    const std::int64_t n = g.degree();
    if (n == 1) return true;
    const FieldRef& field = g.field();
    const ExtPoly y = ExtPoly::y(field);

    const auto divisors = prime_divisors(n);
    ExtPoly h = divmod(y, g).second;
    for (std::int64_t k = 1; k <= n; ++k) {
        h = pow_mod(h, field->order(), g);
        for (std::int64_t r : divisors) {
            if (k == n / r && !gcd(g, h - y).is_one()) return false;
        }
    }
    return h == divmod(y, g).second;
}

std::int64_t ext_count_irreducible_factors(const ExtPoly& g, std::uint64_t /*seed*/) {
    if (g.degree() < 1) throw Error("factor count needs degree >= 1");
    // Squarefree and distinct-degree splitting already determine the count;
    // no random equal-degree step is needed.
    std::int64_t count = 0;
    for (const auto& [part, mult] : squarefree_decomposition(g)) {
        for (const auto& [group, d] : distinct_degree_factorization(part)) count += mult * (group.degree() / d);
    }
    return count;
}

FpPoly FactorizationFp::product() const {
    FpPoly acc = FpPoly::constant(modulus, unit);
    for (const auto& [f, k] : factors) {
        for (std::int64_t i = 0; i < k; ++i) acc *= f;
    }
    return acc;
}

FactorizationFp fp_factorize(const FpPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error("factorization of the zero polynomial");
    const ExtFactorization ext = ext_factorize(ExtPoly::from_fp(f), seed);
    FactorizationFp out{f.modulus(), f.leading(), {}};
    for (const auto& [g, k] : ext.factors) out.factors.emplace_back(g.to_fp(), k);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    return out;
}

bool fp_is_irreducible(const FpPoly& f) {
    if (f.degree() < 1) return false;
    return ext_is_irreducible(ExtPoly::from_fp(f));
}

}  // namespace phinewton
