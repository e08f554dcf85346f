#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "phinewton/polyring.hpp"
#include "phinewton/valuation.hpp"

namespace phinewton {

/// Point (i, u_i) of the cloud; u_i may be infinite.
struct PolygonPoint {
    std::int64_t index;
    ExtendedInt height;

    friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

struct LatticePoint {
    std::int64_t index;
    std::int64_t height;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// One edge of a Newton polygon. For a descending side slope = -h/e with
/// gcd(h, e) = 1; in general slope = +-h/e, e | length and degree = length/e.
struct Side {
    LatticePoint start;
    LatticePoint end;
    std::int64_t length = 0;
    Rational slope;
    std::int64_t ramification = 1;  // e
    std::int64_t partial_height = 0;  // h
    std::int64_t degree = 0;  // d

    /// |end.height - start.height| = d * h.
    std::int64_t total_height() const noexcept { return degree * partial_height; }

    friend bool operator==(const Side&, const Side&) = default;
};

/// Side between two lattice points with start.index < end.index.
Side make_side(LatticePoint start, LatticePoint end);

struct NewtonPolygon {
    /// Ordered by strictly increasing slope; consecutive sides share endpoints.
    std::vector<Side> sides;
    std::vector<PolygonPoint> all_points;

    std::int64_t length() const noexcept;
    /// Leftmost vertex: start of the first side, or the lowest finite point
    /// when there are no sides.
    std::optional<LatticePoint> start_vertex() const;
    std::vector<LatticePoint> vertices() const;
};

/// Lower convex hull of the finite points with collinear pieces merged.
/// Throws Error on fewer than two finite points or repeated indices.
NewtonPolygon build_polygon(std::vector<PolygonPoint> points);

/// Sides of strictly negative slope.
NewtonPolygon principal_part(const NewtonPolygon& np);

/// Slope-ordered concatenation of the sides of a and b, starting at the sum
/// of their start vertices; equal slopes are merged.
NewtonPolygon minkowski_sum(const NewtonPolygon& a, const NewtonPolygon& b);

/// The points (i, v(a_i)) of a phi-expansion.
std::vector<PolygonPoint> expansion_points(const PhiExpansion& exp);

}  // namespace phinewton
