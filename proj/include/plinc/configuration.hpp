#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "plinc/errors.hpp"
#include "plinc/gon.hpp"
#include "plinc/projective.hpp"

namespace plinc {

/// A set of labeled points and lines with their incidence relation.
/// Points and lines are index-addressed; incidences are (point, line) pairs
/// kept sorted. All points and lines share one scalar kind.
struct Configuration {
    std::vector<ProjPoint> points;
    std::vector<ProjLine> lines;
    std::vector<std::pair<int, int>> incidences;
    std::string provenance;

    ScalarKind kind() const {
        if (!points.empty()) return points.front().kind();
        if (!lines.empty()) return lines.front().kind();
        return ScalarKind::rational;
    }
    std::int64_t field_m() const {
        for (const auto& p : points)
            for (const auto& s : p.triple())
                if (const auto* q = std::get_if<QuadExt>(&s)) return q->m();
        for (const auto& l : lines)
            for (const auto& s : l.triple())
                if (const auto* q = std::get_if<QuadExt>(&s)) return q->m();
        return 0;
    }

    bool has_incidence(int p, int l) const {
        return std::binary_search(incidences.begin(), incidences.end(), std::make_pair(p, l));
    }
    std::vector<int> point_degrees() const {
        std::vector<int> d(points.size(), 0);
        for (auto [p, l] : incidences) ++d[p];
        return d;
    }
    std::vector<int> line_degrees() const {
        std::vector<int> d(lines.size(), 0);
        for (auto [p, l] : incidences) ++d[l];
        return d;
    }

    void sort_incidences() {
        std::sort(incidences.begin(), incidences.end());
        incidences.erase(std::unique(incidences.begin(), incidences.end()), incidences.end());
    }
};

inline std::size_t count_incidences(const Configuration& c) { return c.incidences.size(); }

struct IncidenceAudit {
    std::size_t count = 0;
    std::size_t warnings = 0; // float pairs within 10x of the decision tolerance
};

/// Recomputes the incidence relation geometrically; float pairs that land
/// within a decade of the tolerance are tallied as warnings.
inline IncidenceAudit audit_incidences(const Configuration& c, double tol = kIncidenceTol) {
    IncidenceAudit a;
    const bool fl = c.kind() == ScalarKind::float64;
    for (std::size_t li = 0; li < c.lines.size(); ++li) {
        for (std::size_t pi = 0; pi < c.points.size(); ++pi) {
            if (incident(c.points[pi], c.lines[li], tol)) {
                ++a.count;
            } else if (fl) {
                double dot = 0, np = 0, nl = 0;
                for (int i = 0; i < 3; ++i) {
                    double pv = to_double(c.points[pi].triple()[i]);
                    double lv = to_double(c.lines[li].triple()[i]);
                    dot += pv * lv;
                    np += pv * pv;
                    nl += lv * lv;
                }
                if (std::abs(dot) <= 10 * tol * std::sqrt(np) * std::sqrt(nl)) ++a.warnings;
            }
        }
    }
    return a;
}

/// Builds a configuration from geometry: computes the incidence set and
/// rejects duplicate points or lines (canonical-form equality).
inline Configuration make_configuration(std::vector<ProjPoint> points, std::vector<ProjLine> lines,
                                        std::string provenance, double tol = kIncidenceTol) {
    Configuration c;
    c.points = std::move(points);
    c.lines = std::move(lines);
    c.provenance = std::move(provenance);
    for (std::size_t i = 0; i < c.points.size(); ++i)
        for (std::size_t j = i + 1; j < c.points.size(); ++j)
            if (c.points[i] == c.points[j]) throw degenerate_error("duplicate point in configuration");
    for (std::size_t i = 0; i < c.lines.size(); ++i)
        for (std::size_t j = i + 1; j < c.lines.size(); ++j)
            if (c.lines[i] == c.lines[j]) throw degenerate_error("duplicate line in configuration");
    for (std::size_t pi = 0; pi < c.points.size(); ++pi)
        for (std::size_t li = 0; li < c.lines.size(); ++li)
            if (incident(c.points[pi], c.lines[li], tol))
                c.incidences.emplace_back(static_cast<int>(pi), static_cast<int>(li));
    c.sort_incidences();
    return c;
}

inline Configuration to_configuration(const ExtendedGon& g) {
    return make_configuration(g.points, g.lines, "extended-gon(" + std::to_string(g.k) + ")");
}

/// Configuration of the twelve integer image points under the hexagon
/// embedding, with the sixteen image lines; a positive-control host for
/// H_6 searches.
inline Configuration k6_embedded_configuration() {
    auto [pts, lines] = detail::printed_hexagon();
    ProjMap f = detail::hexagon_embedding_matrix();
    std::vector<ProjPoint> img_pts;
    std::vector<ProjLine> img_lines;
    for (const auto& p : pts) img_pts.push_back(f.apply(p));
    for (const auto& l : lines) img_lines.push_back(f.apply(l));
    return make_configuration(std::move(img_pts), std::move(img_lines), "k6-embedded");
}

/// Standard configuration with N = A^3: points (a, b) and lines y = ax + b
/// over 0 <= a < A, 0 <= b < A^2. Incidences are generated arithmetically
/// (they are exact by construction).
inline Configuration erdos_config(unsigned A) {
    if (A < 2) throw domain_error("erdos_config requires A >= 2");
    Configuration c;
    c.provenance = "erdos(" + std::to_string(A) + ")";
    const long long a_max = A, b_max = static_cast<long long>(A) * A;
    c.points.reserve(a_max * b_max);
    c.lines.reserve(a_max * b_max);
    for (long long a = 0; a < a_max; ++a)
        for (long long b = 0; b < b_max; ++b)
            c.points.push_back(ProjPoint(scalar_of(a), scalar_of(b), scalar_of(1)));
    for (long long a = 0; a < a_max; ++a)
        for (long long b = 0; b < b_max; ++b)
            // y = ax + b as ax - y + bz = 0
            c.lines.push_back(ProjLine(scalar_of(a), scalar_of(-1), scalar_of(b)));
    auto pt_index = [&](long long x, long long y) { return static_cast<int>(x * b_max + y); };
    for (long long a = 0; a < a_max; ++a) {
        for (long long b = 0; b < b_max; ++b) {
            int li = static_cast<int>(a * b_max + b);
            for (long long x = 0; x < a_max; ++x) {
                long long y = a * x + b;
                if (y < b_max) c.incidences.emplace_back(pt_index(x, y), li);
            }
        }
    }
    c.sort_incidences();
    return c;
}

/// Closed-form incidence count of erdos_config(A): A^4 - (A(A-1)/2)^2.
inline BigInt erdos_incidence_count(unsigned A) {
    BigInt a(A);
    BigInt tri = a * (a - 1) / 2;
    return a * a * a * a - tri * tri;
}

// ---- duality ----

struct DualityResult {
    Configuration dual;
    std::int64_t shear_q = 0; // 0 when no pre-shear was needed
};

/// Point (a,b) <-> line y = ax - b. Configurations containing vertical lines
/// are first sheared by x -> x + y/Q with the smallest prime Q from
/// {7, 11, 13, ...} that leaves no line vertical. Incidences are preserved
/// exactly; points must be affine and no line may be the line at infinity.
inline DualityResult dualize(const Configuration& c) {
    for (const auto& p : c.points)
        if (p.is_infinite()) throw domain_error("dualize: point at infinity has no dual line");
    auto is_vertical = [&](const ProjLine& l) {
        if (c.kind() == ScalarKind::float64)
            return std::abs(to_double(l.b())) <= kFloatZeroTol;
        return scalar_is_zero(l.b());
    };
    auto is_infinite_line = [&](const ProjLine& l) {
        if (c.kind() == ScalarKind::float64)
            return std::abs(to_double(l.a())) <= kFloatZeroTol && std::abs(to_double(l.b())) <= kFloatZeroTol;
        return scalar_is_zero(l.a()) && scalar_is_zero(l.b());
    };
    for (const auto& l : c.lines)
        if (is_infinite_line(l)) throw domain_error("dualize: line at infinity has no dual point");

    std::int64_t shear_q = 0;
    bool any_vertical = false;
    for (const auto& l : c.lines) any_vertical = any_vertical || is_vertical(l);
    Configuration work = c;
    if (any_vertical) {
        // Line (a, b, c0) under x -> x + y/Q becomes (a, b - a/Q, c0);
        // the shear is admissible iff Q*b != a for every line.
        static const std::int64_t candidates[] = {7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                  43, 47, 53, 59, 61, 67, 71, 73, 79, 83};
        for (std::int64_t q : candidates) {
            bool ok = true;
            for (const auto& l : c.lines) {
                Scalar qb = l.b() * int_like(l.b(), q);
                if (c.kind() == ScalarKind::float64
                        ? std::abs(to_double(qb) - to_double(l.a())) <= kFloatZeroTol
                        : scalar_equal(qb, l.a())) {
                    ok = false;
                    break;
                }
            }
            if (ok) { shear_q = q; break; }
        }
        if (shear_q == 0) throw degenerate_error("dualize: shear budget exhausted");
        work.points.clear();
        work.lines.clear();
        for (const auto& p : c.points) {
            Scalar inv_q = int_like(p.x(), 1) / int_like(p.x(), shear_q);
            work.points.push_back(ProjPoint(p.x() + p.y() * inv_q, p.y(), p.z()));
        }
        for (const auto& l : c.lines) {
            Scalar inv_q = int_like(l.a(), 1) / int_like(l.a(), shear_q);
            work.lines.push_back(ProjLine(l.a(), l.b() - l.a() * inv_q, l.c()));
        }
    }

    DualityResult out;
    out.shear_q = shear_q;
    Configuration& d = out.dual;
    d.provenance = c.provenance + "|dual";
    // line a x + b y + c z = 0 with b != 0: y = (-a/b) x + (-c/b), so the
    // dual point (slope, -intercept) is (-a/b, c/b)
    for (const auto& l : work.lines)
        d.points.push_back(ProjPoint::affine((-l.a()) / l.b(), l.c() / l.b()));
    // point (px, py) -> line y = px * x - py, i.e. px*X - Y - py*Z = 0
    for (const auto& p : work.points) {
        auto [px, py] = p.affine_xy();
        d.lines.push_back(ProjLine(px, int_like(px, -1), -py));
    }
    // incidence (p, l) in the primal is (dual(l), dual(p)) in the dual
    d.incidences.clear();
    for (auto [p, l] : work.incidences) d.incidences.emplace_back(l, p);
    d.sort_incidences();
    return out;
}

} // namespace plinc
