#include "phinewton/polyring.hpp"

#include <algorithm>
#include <sstream>

namespace phinewton {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(BigInt c, std::size_t k) {
    std::vector<BigInt> v(k + 1);
    v[k] = std::move(c);
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
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
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

IntPoly IntPoly::pow(unsigned k) const {
    IntPoly result = constant(1);
    IntPoly base = *this;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base *= base;
    }
    return result;
}

BigInt IntPoly::evaluate(const BigInt& at) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

std::string IntPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::pair<IntPoly, IntPoly> poly_divmod(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw Error("division by the zero polynomial");
    if (!den.is_monic()) throw Error("division by a non-monic polynomial is not defined over Z");
    const auto dd = static_cast<std::size_t>(den.degree());
    std::vector<BigInt> rem = num.coeffs();
    if (rem.size() <= dd) return {IntPoly(), num};

    std::vector<BigInt> quot(rem.size() - dd);
    const auto& dc = den.coeffs();
    for (std::size_t k = rem.size(); k-- > dd;) {
        const BigInt q = rem[k];
        quot[k - dd] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * dc[j];
    }
    rem.resize(dd);
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

ExtendedInt gauss_valuation(const IntPoly& a, const ValuationDomain& domain) {
    ExtendedInt v = ExtendedInt::infinity();
    for (const auto& c : a.coeffs()) v = std::min(v, domain.valuation(c));
    return v;
}

IntPoly PhiExpansion::recompose() const {
    IntPoly acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= phi;
        acc += *it;
    }
    return acc;
}

PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi, const ValuationDomain& domain) {
    if (f.is_zero()) throw Error("phi-expansion of the zero polynomial");
    if (!phi.is_monic() || phi.degree() < 1) throw Error("phi must be monic of degree >= 1");

    PhiExpansion exp{f, phi, {}, {}};
    IntPoly rest = f;
    while (!rest.is_zero()) {
        auto [q, r] = poly_divmod(rest, phi);
        exp.valuations.push_back(gauss_valuation(r, domain));
        exp.coeffs.push_back(std::move(r));
        rest = std::move(q);
    }
    return exp;
}

namespace {

IntPoly reduce_mod(const IntPoly& a, const ValuationDomain& domain) {
    std::vector<BigInt> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) c.push_back(domain.residue(x));
    return IntPoly(std::move(c));
}

}  // namespace

bool is_power_of_phibar(const IntPoly& f, const IntPoly& phi, const ValuationDomain& domain) {
    if (phi.degree() < 1 || f.degree() < 0) return false;
    if (f.degree() % phi.degree() != 0) return false;
    const auto n = f.degree() / phi.degree();
    const IntPoly phibar = reduce_mod(phi, domain);
    IntPoly power = IntPoly::constant(1);
    for (std::int64_t i = 0; i < n; ++i) power = reduce_mod(power * phibar, domain);
    return reduce_mod(f, domain) == power;
}

}  // namespace phinewton
