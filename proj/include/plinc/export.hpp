#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "plinc/configuration.hpp"
#include "plinc/matching.hpp"

namespace plinc {

/// Per-line point counts and per-point line counts as two CSV sections.
inline std::string degree_csv(const Configuration& c) {
    std::ostringstream os;
    os << "# " << c.provenance << "\n";
    os << "line,points_on_line\n";
    auto ld = c.line_degrees();
    for (std::size_t i = 0; i < ld.size(); ++i) os << i << ',' << ld[i] << "\n";
    os << "point,lines_through_point\n";
    auto pd = c.point_degrees();
    for (std::size_t i = 0; i < pd.size(); ++i) os << i << ',' << pd[i] << "\n";
    return os.str();
}

namespace detail {

struct Box {
    double lox = 0, loy = 0, hix = 1, hiy = 1;
};

inline Box bounding_box(const Configuration& c) {
    Box b{1e300, 1e300, -1e300, -1e300};
    bool any = false;
    for (const auto& p : c.points) {
        if (p.is_infinite()) continue;
        auto [x, y] = p.affine_xy();
        double xd = to_double(x), yd = to_double(y);
        b.lox = std::min(b.lox, xd);
        b.hix = std::max(b.hix, xd);
        b.loy = std::min(b.loy, yd);
        b.hiy = std::max(b.hiy, yd);
        any = true;
    }
    if (!any) return Box{};
    double padx = std::max(1.0, (b.hix - b.lox) * 0.08), pady = std::max(1.0, (b.hiy - b.loy) * 0.08);
    b.lox -= padx;
    b.hix += padx;
    b.loy -= pady;
    b.hiy += pady;
    return b;
}

/// Clips line a x + b y + c = 0 against the box; empty when it misses.
inline std::vector<std::pair<double, double>> clip_line(double a, double b, double c,
                                                        const Box& box) {
    std::vector<std::pair<double, double>> hits;
    auto push = [&](double x, double y) {
        for (auto [px, py] : hits)
            if (std::abs(px - x) < 1e-9 && std::abs(py - y) < 1e-9) return;
        hits.emplace_back(x, y);
    };
    if (std::abs(b) > 1e-12) {
        for (double x : {box.lox, box.hix}) {
            double y = -(a * x + c) / b;
            if (y >= box.loy - 1e-9 && y <= box.hiy + 1e-9) push(x, y);
        }
    }
    if (std::abs(a) > 1e-12) {
        for (double y : {box.loy, box.hiy}) {
            double x = -(b * y + c) / a;
            if (x >= box.lox - 1e-9 && x <= box.hix + 1e-9) push(x, y);
        }
    }
    if (hits.size() > 2) hits.resize(2);
    return hits;
}

} // namespace detail

/// Static SVG drawing: configuration lines and points, plus the matching
/// graph's edges when provided. The y axis points up.
inline std::string svg_drawing(const Configuration& c, const MatchingGraph* mg = nullptr) {
    detail::Box box = detail::bounding_box(c);
    const double w = 720.0;
    const double sx = w / (box.hix - box.lox);
    const double h = (box.hiy - box.loy) * sx;
    auto X = [&](double x) { return (x - box.lox) * sx; };
    auto Y = [&](double y) { return h - (y - box.loy) * sx; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& l : c.lines) {
        double a = to_double(l.a()), b = to_double(l.b()), cc = to_double(l.c());
        auto seg = detail::clip_line(a, b, cc, box);
        if (seg.size() == 2)
            os << "<line x1=\"" << X(seg[0].first) << "\" y1=\"" << Y(seg[0].second) << "\" x2=\""
               << X(seg[1].first) << "\" y2=\"" << Y(seg[1].second)
               << "\" stroke=\"#9db4d0\" stroke-width=\"1\"/>\n";
    }
    if (mg) {
        for (const auto& e : mg->edges) {
            auto [x1, y1] = c.points[e.u].affine_xy();
            auto [x2, y2] = c.points[e.v].affine_xy();
            os << "<line x1=\"" << X(to_double(x1)) << "\" y1=\"" << Y(to_double(y1)) << "\" x2=\""
               << X(to_double(x2)) << "\" y2=\"" << Y(to_double(y2))
               << "\" stroke=\"#d9534f\" stroke-width=\"2.2\"/>\n";
        }
    }
    for (const auto& p : c.points) {
        if (p.is_infinite()) continue;
        auto [x, y] = p.affine_xy();
        os << "<circle cx=\"" << X(to_double(x)) << "\" cy=\"" << Y(to_double(y))
           << "\" r=\"3\" fill=\"#2b4a6f\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace plinc
