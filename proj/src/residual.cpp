#include "phinewton/residual.hpp"

#include <string>

namespace phinewton {

PointPosition point_position(const PhiExpansion& exp, const Side& side, std::int64_t i) {
    if (i < 0 || i > side.length) throw Error("residual index " + std::to_string(i) + " outside the side");
    const auto idx = static_cast<std::size_t>(side.start.index + i);
    if (idx >= exp.valuations.size() || exp.valuations[idx].is_infinite()) return PointPosition::Infinite;
    // Compare den*u with den*u_s + num*i exactly.
    const BigInt lhs = side.slope.den() * static_cast<long>(exp.valuations[idx].value());
    const BigInt rhs = side.slope.den() * static_cast<long>(side.start.height) + side.slope.num() * static_cast<long>(i);
    if (lhs < rhs) throw Error("point (" + std::to_string(idx) + ", " + exp.valuations[idx].to_string() + ") lies below the side");
    return lhs == rhs ? PointPosition::OnSide : PointPosition::StrictlyAbove;
}

ExtFieldElem residual_coefficient(const PhiExpansion& exp, const Side& side, std::int64_t i, const FieldRef& field,
                                  const ValuationDomain& domain) {
    if (point_position(exp, side, i) != PointPosition::OnSide) return ExtFieldElem::zero(field);
    const auto idx = static_cast<std::size_t>(side.start.index + i);
    const std::int64_t u = exp.valuations[idx].value();
    std::vector<BigInt> scaled;
    for (const auto& c : exp.coeffs[idx].coeffs()) scaled.push_back(domain.divide_by_uniformizer_power(c, u));
    return ExtFieldElem(field, FpPoly(domain.prime(), std::move(scaled)));
}

ResidualPolynomial residual_polynomial(const PhiExpansion& exp, const Side& side, const FieldRef& field,
                                       const ValuationDomain& domain) {
    const std::int64_t d = side.degree;
    const std::int64_t e = side.ramification;
    std::vector<ExtFieldElem> c(static_cast<std::size_t>(d + 1), ExtFieldElem::zero(field));
    for (std::int64_t i = 0; i <= d; ++i)
        c[static_cast<std::size_t>(d - i)] = residual_coefficient(exp, side, i * e, field, domain);
    if (c.front().is_zero() || c.back().is_zero())
        throw Error("side endpoints are not vertices of the expansion's polygon");
    return ResidualPolynomial{side, ExtPoly(field, std::move(c)), side.start.index};
}

std::vector<std::int64_t> vanishing_lattice_terms(const PhiExpansion& exp, const Side& side) {
    std::vector<std::int64_t> out;
    for (std::int64_t i = 1; i < side.degree; ++i) {
        if (point_position(exp, side, i * side.ramification) != PointPosition::OnSide) out.push_back(i);
    }
    return out;
}

}  // namespace phinewton
