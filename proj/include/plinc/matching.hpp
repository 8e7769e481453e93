#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "plinc/configuration.hpp"
#include "plinc/errors.hpp"

namespace plinc {

/// Graph on the points of a configuration whose edges join the i-th and
/// (i+1)-st point along each line (points ordered by (x, y), 1-based i odd).
/// Edges on a common line are vertex-disjoint by construction.
struct MatchingGraph {
    struct Edge {
        int u, v;   // point indices, u < v
        int line;   // supporting line index
    };
    std::size_t vertex_count = 0; // all points of the configuration
    std::vector<Edge> edges;
};

inline MatchingGraph matching_graph(const Configuration& c) {
    for (auto [p, l] : c.incidences)
        if (c.points[p].is_infinite())
            throw domain_error("matching_graph: incident point at infinity is not orderable");
    MatchingGraph g;
    g.vertex_count = c.points.size();
    std::vector<std::vector<int>> on_line(c.lines.size());
    for (auto [p, l] : c.incidences) on_line[l].push_back(p);
    for (std::size_t li = 0; li < on_line.size(); ++li) {
        auto& pts = on_line[li];
        std::sort(pts.begin(), pts.end(), [&](int i, int j) {
            auto [xi, yi] = c.points[i].affine_xy();
            auto [xj, yj] = c.points[j].affine_xy();
            if (scalar_less(xi, xj)) return true;
            if (scalar_less(xj, xi)) return false;
            if (scalar_less(yi, yj)) return true;
            if (scalar_less(yj, yi)) return false;
            return i < j;
        });
        for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
            int u = pts[i], v = pts[i + 1];
            g.edges.push_back({std::min(u, v), std::max(u, v), static_cast<int>(li)});
        }
    }
    return g;
}

namespace detail {

inline int orient_sign(const Scalar& ax, const Scalar& ay, const Scalar& bx, const Scalar& by,
                       const Scalar& cx, const Scalar& cy, bool fl) {
    Scalar det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    if (!fl) return scalar_sign(det);
    double v = std::get<double>(det);
    if (std::abs(v) <= 1e-12) return 0;
    return v > 0 ? 1 : -1;
}

} // namespace detail

/// Number of interior-crossing pairs among the straight edge segments,
/// by orientation tests (exact over exact scalars). Pairs sharing an
/// endpoint are not counted; overlapping collinear segments are rejected.
inline std::uint64_t straightline_crossings(const MatchingGraph& g, const Configuration& c) {
    const bool fl = c.kind() == ScalarKind::float64;
    struct Seg {
        Scalar ax, ay, bx, by;
        double lox, hix, loy, hiy;
        int u, v;
    };
    std::vector<Seg> segs;
    segs.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        auto [ax, ay] = c.points[e.u].affine_xy();
        auto [bx, by] = c.points[e.v].affine_xy();
        Seg s{ax, ay, bx, by, 0, 0, 0, 0, e.u, e.v};
        double axd = to_double(ax), ayd = to_double(ay), bxd = to_double(bx), byd = to_double(by);
        s.lox = std::min(axd, bxd);
        s.hix = std::max(axd, bxd);
        s.loy = std::min(ayd, byd);
        s.hiy = std::max(ayd, byd);
        segs.push_back(std::move(s));
    }
    std::uint64_t crossings = 0;
    const double pad = 1e-9;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const Seg& s = segs[i];
            const Seg& t = segs[j];
            if (s.u == t.u || s.u == t.v || s.v == t.u || s.v == t.v) continue;
            if (s.hix + pad < t.lox || t.hix + pad < s.lox || s.hiy + pad < t.loy ||
                t.hiy + pad < s.loy)
                continue;
            int o1 = detail::orient_sign(s.ax, s.ay, s.bx, s.by, t.ax, t.ay, fl);
            int o2 = detail::orient_sign(s.ax, s.ay, s.bx, s.by, t.bx, t.by, fl);
            int o3 = detail::orient_sign(t.ax, t.ay, t.bx, t.by, s.ax, s.ay, fl);
            int o4 = detail::orient_sign(t.ax, t.ay, t.bx, t.by, s.bx, s.by, fl);
            if (o1 == 0 && o2 == 0) {
                // all four endpoints collinear: overlap is a degenerate drawing
                auto overlap_1d = [](double a0, double a1, double b0, double b1) {
                    return std::max(a0, b0) < std::min(a1, b1) - 1e-12;
                };
                bool vertical = std::abs(s.hix - s.lox) <= 1e-12;
                bool overlaps = vertical ? overlap_1d(s.loy, s.hiy, t.loy, t.hiy)
                                         : overlap_1d(s.lox, s.hix, t.lox, t.hix);
                if (overlaps)
                    throw degenerate_error("straightline_crossings: overlapping collinear segments");
                continue;
            }
            if (o1 * o2 < 0 && o3 * o4 < 0) ++crossings;
        }
    }
    return crossings;
}

/// Diagnostic combination of the matching-graph and crossing quantities for
/// the dual configuration: e and n of the dual matching graph, the
/// straight-line crossing count X, the pairwise upper bound C(m,2), and the
/// implied empirical constant X * n^(2+1/(t-1)) / e^(3+1/(t-1)).
struct CrossingReport {
    unsigned t = 2;
    std::uint64_t edge_count = 0;     // e
    std::uint64_t vertex_count = 0;   // n (dual points = primal lines)
    std::uint64_t crossings = 0;      // X, straight-line drawing
    BigInt pair_bound;                // C(m, 2), m = primal points
    bool precondition_met = false;    // e >= 4n
    double empirical_constant = 0.0;
    std::int64_t shear_q = 0;
};

inline CrossingReport crossing_inequality_report(const Configuration& c, unsigned t) {
    if (t < 2) throw domain_error("crossing_inequality_report requires t >= 2");
    CrossingReport r;
    r.t = t;
    DualityResult dual = dualize(c);
    r.shear_q = dual.shear_q;
    MatchingGraph g = matching_graph(dual.dual);
    r.edge_count = g.edges.size();
    r.vertex_count = g.vertex_count;
    r.crossings = straightline_crossings(g, dual.dual);
    BigInt m(c.points.size());
    r.pair_bound = m * (m - 1) / 2;
    r.precondition_met = r.edge_count >= 4 * r.vertex_count;
    if (r.edge_count > 0) {
        double ex = 1.0 / (t - 1);
        r.empirical_constant = static_cast<double>(r.crossings) *
                               std::pow(static_cast<double>(r.vertex_count), 2.0 + ex) /
                               std::pow(static_cast<double>(r.edge_count), 3.0 + ex);
    }
    return r;
}

} // namespace plinc
