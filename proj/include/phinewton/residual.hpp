#pragma once

#include <cstdint>
#include <vector>

#include "phinewton/polygon.hpp"
#include "phinewton/polyring.hpp"
#include "phinewton/residue_field.hpp"

namespace phinewton {

/// f_S(y) = t_0 y^d + t_1 y^(d-1) + ... + t_d over F_phi, where t_i is the
/// residual coefficient at abscissa anchor + i*e. poly stores it lowest
/// degree first, so t_i sits at poly.coeff(d - i).
struct ResidualPolynomial {
    Side side;
    ExtPoly poly;
    std::int64_t anchor = 0;

    std::int64_t degree() const noexcept { return side.degree; }
    ExtFieldElem t(std::int64_t i) const { return poly.coeff(static_cast<std::size_t>(side.degree - i)); }
};

/// Where (s + i, u_{s+i}) sits relative to the side.
enum class PointPosition { OnSide, StrictlyAbove, Infinite };

PointPosition point_position(const PhiExpansion& exp, const Side& side, std::int64_t i);

/// c_i: zero when (s + i, u_{s+i}) is strictly above the side or u_{s+i} is
/// infinite, else the class of a_{s+i} / p^{u_{s+i}} in F_phi.
/// Requires 0 <= i <= side.length.
ExtFieldElem residual_coefficient(const PhiExpansion& exp, const Side& side, std::int64_t i, const FieldRef& field,
                                  const ValuationDomain& domain);

/// Assembles f_S from the lattice points of the side. Throws Error if an
/// endpoint of the side does not carry a nonzero residual coefficient.
ResidualPolynomial residual_polynomial(const PhiExpansion& exp, const Side& side, const FieldRef& field,
                                       const ValuationDomain& domain);

/// Interior lattice offsets i (0 < i < d) with t_i = 0.
std::vector<std::int64_t> vanishing_lattice_terms(const PhiExpansion& exp, const Side& side);

}  // namespace phinewton
