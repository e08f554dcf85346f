#include "phinewton/polygon.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace phinewton {

Side make_side(LatticePoint start, LatticePoint end) {
    if (end.index <= start.index) throw Error("side endpoints must have increasing indices");
    Side s;
    s.start = start;
    s.end = end;
    s.length = end.index - start.index;
    const std::int64_t rise = end.height - start.height;
    s.slope = Rational(BigInt(static_cast<long>(rise)), BigInt(static_cast<long>(s.length)));
    const std::int64_t g = std::gcd(rise < 0 ? -rise : rise, s.length);
    s.ramification = s.length / g;
    s.partial_height = (rise < 0 ? -rise : rise) / g;
    s.degree = g;
    return s;
}

std::int64_t NewtonPolygon::length() const noexcept {
    std::int64_t l = 0;
    for (const auto& s : sides) l += s.length;
    return l;
}

std::optional<LatticePoint> NewtonPolygon::start_vertex() const {
    if (!sides.empty()) return sides.front().start;
    std::optional<LatticePoint> best;
    for (const auto& pt : all_points) {
        if (pt.height.is_infinite()) continue;
        if (!best || pt.index < best->index) best = LatticePoint{pt.index, pt.height.value()};
    }
    return best;
}

std::vector<LatticePoint> NewtonPolygon::vertices() const {
    std::vector<LatticePoint> v;
    if (sides.empty()) {
        if (auto s = start_vertex()) v.push_back(*s);
        return v;
    }
    v.push_back(sides.front().start);
    for (const auto& s : sides) v.push_back(s.end);
    return v;
}

namespace {

/// Twice the signed area of (o, a, b); positive for a counterclockwise turn.
std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.index - o.index) * (b.height - o.height) - (a.height - o.height) * (b.index - o.index);
}

}  // namespace

NewtonPolygon build_polygon(std::vector<PolygonPoint> points) {
    std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].index == points[i - 1].index)
            throw Error("repeated abscissa " + std::to_string(points[i].index) + " in point set");
    }
    std::vector<LatticePoint> finite;
    for (const auto& pt : points) {
        if (pt.height.is_finite()) finite.push_back({pt.index, pt.height.value()});
    }
    if (finite.size() < 2) throw Error("degenerate point set: fewer than two finite points");

    std::vector<LatticePoint> hull;
    for (const auto& pt : finite) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
        hull.push_back(pt);
    }

    NewtonPolygon np;
    np.all_points = std::move(points);
    for (std::size_t i = 1; i < hull.size(); ++i) np.sides.push_back(make_side(hull[i - 1], hull[i]));
    return np;
}

NewtonPolygon principal_part(const NewtonPolygon& np) {
    NewtonPolygon out;
    for (const auto& s : np.sides) {
        if (s.slope.sign() < 0) out.sides.push_back(s);
    }
    std::int64_t last = 0;
    if (!out.sides.empty()) {
        last = out.sides.back().end.index;
    } else if (auto v = np.start_vertex()) {
        last = v->index;
    }
    for (const auto& pt : np.all_points) {
        if (pt.index <= last) out.all_points.push_back(pt);
    }
    return out;
}

NewtonPolygon minkowski_sum(const NewtonPolygon& a, const NewtonPolygon& b) {
    const auto sa = a.start_vertex();
    const auto sb = b.start_vertex();
    if (!sa || !sb) throw Error("Minkowski sum of an empty polygon");

    std::vector<Side> pieces = a.sides;
    pieces.insert(pieces.end(), b.sides.begin(), b.sides.end());
    std::stable_sort(pieces.begin(), pieces.end(), [](const Side& x, const Side& y) { return x.slope < y.slope; });

    NewtonPolygon out;
    LatticePoint cur{sa->index + sb->index, sa->height + sb->height};
    out.all_points.push_back({cur.index, cur.height});
    for (std::size_t i = 0; i < pieces.size();) {
        std::int64_t len = 0, rise = 0;
        std::size_t j = i;
        for (; j < pieces.size() && pieces[j].slope == pieces[i].slope; ++j) {
            len += pieces[j].length;
            rise += pieces[j].end.height - pieces[j].start.height;
        }
        const LatticePoint next{cur.index + len, cur.height + rise};
        out.sides.push_back(make_side(cur, next));
        out.all_points.push_back({next.index, next.height});
        cur = next;
        i = j;
    }
    return out;
}

std::vector<PolygonPoint> expansion_points(const PhiExpansion& exp) {
    std::vector<PolygonPoint> pts;
    pts.reserve(exp.valuations.size());
    for (std::size_t i = 0; i < exp.valuations.size(); ++i)
        pts.push_back({static_cast<std::int64_t>(i), exp.valuations[i]});
    return pts;
}

}  // namespace phinewton
