#include "phinewton/report.hpp"

#include <algorithm>
#include <sstream>

namespace phinewton {

namespace {

using ojson = nlohmann::ordered_json;

ojson big_to_json(const BigInt& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) return ojson(v.get_si());
    return ojson(v.get_str());
}

ojson optional_int(const std::optional<std::int64_t>& v) { return v ? ojson(*v) : ojson(nullptr); }

/// Element of F_phi as its m coordinates in the basis 1, z, ..., z^(m-1).
ojson element_to_json(const ExtFieldElem& a) {
    ojson out = ojson::array();
    for (std::int64_t j = 0; j < a.field()->degree(); ++j) out.push_back(big_to_json(a.value().coeff(static_cast<std::size_t>(j))));
    return out;
}

ojson side_to_json(const SideAnalysis& sa) {
    const Side& s = sa.side;
    ojson residual = ojson::array();
    for (const auto& c : sa.residual.poly.coeffs()) residual.push_back(element_to_json(c));
    ojson j;
    j["start"] = {s.start.index, s.start.height};
    j["end"] = {s.end.index, s.end.height};
    j["length"] = s.length;
    j["slope"] = {{"num", big_to_json(s.slope.num())}, {"den", big_to_json(s.slope.den())}};
    j["h"] = s.partial_height;
    j["e"] = s.ramification;
    j["degree"] = s.degree;
    j["residual_poly"] = std::move(residual);
    j["residual_poly_text"] = sa.residual.poly.to_string();
    j["residual_irreducible"] = sa.residual_irreducible;
    j["residual_factor_count"] = sa.residual_factor_count;
    return j;
}

ojson phi_report_to_json(const PhiReport& rep) {
    ojson points = ojson::array();
    for (const auto& pt : rep.polygon.all_points)
        points.push_back({pt.index, pt.height.is_finite() ? ojson(pt.height.value()) : ojson(nullptr)});
    ojson sides = ojson::array();
    for (const auto& sa : rep.sides) sides.push_back(side_to_json(sa));
    ojson j;
    j["phi"] = rep.phi.to_string();
    j["multiplicity"] = rep.multiplicity;
    j["exact_phi_power"] = rep.exact_phi_power;
    j["points"] = std::move(points);
    j["sides"] = std::move(sides);
    return j;
}

}  // namespace

ojson report_to_json(const AnalysisReport& r) {
    ojson phis = ojson::array();
    for (const auto& rep : r.phi_reports) phis.push_back(phi_report_to_json(rep));
    ojson j;
    j["input"] = r.input.to_string();
    j["prime"] = big_to_json(r.prime);
    j["mode"] = to_string(r.mode);
    j["phi"] = r.mode == AnalysisMode::SinglePhi && !r.phi_reports.empty() ? ojson(r.phi_reports.front().phi.to_string())
                                                                           : ojson(nullptr);
    j["phi_reports"] = std::move(phis);
    j["verdict"] = to_string(r.verdict);
    j["factor_bound"] = r.factor_bound;
    j["min_factor_degree"] = optional_int(r.min_factor_degree);
    j["refined_bound"] = optional_int(r.refined_bound);
    j["valuation_count_bound"] = r.valuation_count_bound;
    j["prime_ideal_count_bound"] = r.prime_ideal_count_bound;
    j["notes"] = r.notes;
    j["seed"] = r.seed;
    j["version"] = kVersion;
    return j;
}

std::string render_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "f     = " << r.input.to_string() << "\n";
    os << "p     = " << r.prime.get_str() << "\n";
    os << "mode  = " << to_string(r.mode) << "\n";
    for (std::size_t i = 0; i < r.phi_reports.size(); ++i) {
        const PhiReport& rep = r.phi_reports[i];
        os << "\nphi_" << (i + 1) << " = " << rep.phi.to_string() << "  (multiplicity " << rep.multiplicity << ")\n";
        os << "  points:";
        for (const auto& pt : rep.polygon.all_points) os << " (" << pt.index << "," << pt.height.to_string() << ")";
        os << "\n";
        if (rep.exact_phi_power > 0) os << "  phi divides f exactly " << rep.exact_phi_power << " time(s)\n";
        for (std::size_t j = 0; j < rep.sides.size(); ++j) {
            const SideAnalysis& sa = rep.sides[j];
            const Side& s = sa.side;
            os << "  side " << (j + 1) << ": (" << s.start.index << "," << s.start.height << ") -> (" << s.end.index << ","
               << s.end.height << ")  length " << s.length << "  height " << s.total_height() << "  slope "
               << s.slope.to_string() << "  e=" << s.ramification << " h=" << s.partial_height << " d=" << s.degree << "\n";
            os << "    f_S(y) = " << sa.residual.poly.to_string() << "  ["
               << (sa.residual_irreducible ? "irreducible" : "reducible") << ", " << sa.residual_factor_count
               << " factor(s)]\n";
        }
        os << "  side degree sum = " << rep.side_degree_sum << "\n";
    }
    os << "\nverdict                 = " << to_string(r.verdict) << "\n";
    os << "factor bound            = " << r.factor_bound << "\n";
    if (r.min_factor_degree) os << "min factor degree       = " << *r.min_factor_degree << "\n";
    if (r.refined_bound) os << "refined bound           = " << *r.refined_bound << "\n";
    os << "valuation count bound   = " << r.valuation_count_bound << "\n";
    os << "prime ideal count bound = " << r.prime_ideal_count_bound << "\n";
    if (!r.notes.empty()) {
        os << "notes:\n";
        for (const auto& n : r.notes) os << "  - " << n << "\n";
    }
    return os.str();
}

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

bool on_polygon(const PhiReport& rep, const PolygonPoint& pt) {
    if (pt.height.is_infinite()) return false;
    for (const Side& s : rep.polygon.sides) {
        if (pt.index < s.start.index || pt.index > s.end.index) continue;
        const BigInt lhs = s.slope.den() * static_cast<long>(pt.height.value());
        const BigInt rhs = s.slope.den() * static_cast<long>(s.start.height) +
                           s.slope.num() * static_cast<long>(pt.index - s.start.index);
        if (lhs == rhs) return true;
    }
    return false;
}

}  // namespace

std::string render_svg(const AnalysisReport& r) {
    constexpr int kUnitX = 48, kUnitY = 32, kMargin = 60, kLine = 16;
    struct Panel {
        std::int64_t max_x = 1, max_y = 1;
        int height = 0;
    };
    std::vector<Panel> panels;
    int total_height = 40;
    int width = 360;
    for (const auto& rep : r.phi_reports) {
        Panel p;
        for (const auto& pt : rep.polygon.all_points) {
            p.max_x = std::max(p.max_x, pt.index);
            if (pt.height.is_finite()) p.max_y = std::max(p.max_y, pt.height.value());
        }
        p.height = static_cast<int>(p.max_y) * kUnitY + 2 * kMargin + 40 + kLine * static_cast<int>(rep.sides.size());
        width = std::max(width, static_cast<int>(p.max_x) * kUnitX + 2 * kMargin);
        total_height += p.height;
        panels.push_back(p);
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << total_height
       << "\" font-family=\"monospace\" font-size=\"12\">\n";
    os << "<text x=\"10\" y=\"20\">" << xml_escape("f = " + r.input.to_string() + ", p = " + r.prime.get_str() + ", " +
                                                   to_string(r.verdict) + ", factor bound " + std::to_string(r.factor_bound))
       << "</text>\n";

    int top = 40;
    for (std::size_t k = 0; k < r.phi_reports.size(); ++k) {
        const PhiReport& rep = r.phi_reports[k];
        const Panel& p = panels[k];
        const int origin_y = top + kMargin + static_cast<int>(p.max_y) * kUnitY;
        auto sx = [&](std::int64_t i) { return kMargin + static_cast<int>(i) * kUnitX; };
        auto sy = [&](std::int64_t u) { return origin_y - static_cast<int>(u) * kUnitY; };

        os << "<g id=\"phi_" << (k + 1) << "\">\n";
        os << "<text x=\"10\" y=\"" << top + 20 << "\">" << xml_escape("phi_" + std::to_string(k + 1) + " = " + rep.phi.to_string())
           << "</text>\n";
        os << "<line x1=\"" << sx(0) << "\" y1=\"" << origin_y << "\" x2=\"" << sx(p.max_x) + 20 << "\" y2=\"" << origin_y
           << "\" stroke=\"#888\"/>\n";
        os << "<line x1=\"" << sx(0) << "\" y1=\"" << origin_y << "\" x2=\"" << sx(0) << "\" y2=\"" << sy(p.max_y) - 20
           << "\" stroke=\"#888\"/>\n";
        for (std::int64_t i = 0; i <= p.max_x; ++i)
            os << "<text x=\"" << sx(i) - 4 << "\" y=\"" << origin_y + 16 << "\" fill=\"#666\">" << i << "</text>\n";
        for (std::int64_t u = 0; u <= p.max_y; ++u)
            os << "<text x=\"" << sx(0) - 24 << "\" y=\"" << sy(u) + 4 << "\" fill=\"#666\">" << u << "</text>\n";

        for (const Side& s : rep.polygon.sides) {
            const bool principal = s.slope.sign() < 0;
            os << "<line x1=\"" << sx(s.start.index) << "\" y1=\"" << sy(s.start.height) << "\" x2=\"" << sx(s.end.index)
               << "\" y2=\"" << sy(s.end.height) << "\" stroke=\"#1f5fbf\" stroke-width=\"2\""
               << (principal ? "" : " stroke-dasharray=\"5,4\"") << "/>\n";
            const int mx = (sx(s.start.index) + sx(s.end.index)) / 2;
            const int my = (sy(s.start.height) + sy(s.end.height)) / 2;
            os << "<text x=\"" << mx + 6 << "\" y=\"" << my - 6 << "\" fill=\"#1f5fbf\">slope " << s.slope.to_string()
               << "</text>\n";
        }
        for (const auto& pt : rep.polygon.all_points) {
            if (pt.height.is_infinite()) continue;
            const bool solid = on_polygon(rep, pt);
            os << "<circle cx=\"" << sx(pt.index) << "\" cy=\"" << sy(pt.height.value()) << "\" r=\"4\" stroke=\"#000\" fill=\""
               << (solid ? "#000" : "none") << "\"/>\n";
        }
        int caption_y = origin_y + 40;
        for (std::size_t j = 0; j < rep.sides.size(); ++j) {
            const SideAnalysis& sa = rep.sides[j];
            os << "<text x=\"10\" y=\"" << caption_y << "\">"
               << xml_escape("S_" + std::to_string(j + 1) + ": d=" + std::to_string(sa.side.degree) +
                             "  f_S(y) = " + sa.residual.poly.to_string() +
                             (sa.residual_irreducible ? "  (irreducible)" : "  (reducible)"))
               << "</text>\n";
            caption_y += kLine;
        }
        os << "</g>\n";
        top += p.height;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace phinewton
