#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plinc/errors.hpp"
#include "plinc/scalar.hpp"

namespace plinc {

/// |<L,p>| <= tol * |L| * |p| decides float incidence (exact kinds: exact zero).
inline constexpr double kIncidenceTol = 1e-9;
/// Component threshold treated as zero in canonical float triples.
inline constexpr double kFloatZeroTol = 1e-12;
/// Componentwise tolerance for equality of canonical float triples.
inline constexpr double kFloatEqTol = 1e-9;

namespace detail {

using Triple = std::array<Scalar, 3>;

inline ScalarKind unify_kind(const Triple& t) {
    ScalarKind k = ScalarKind::rational;
    std::int64_t m = 0;
    bool has_float = false, has_exact = false;
    for (const auto& s : t) {
        switch (kind_of(s)) {
            case ScalarKind::float64: has_float = true; break;
            case ScalarKind::rational: has_exact = true; break;
            case ScalarKind::quadext: {
                has_exact = true;
                auto mm = std::get<QuadExt>(s).m();
                if (m != 0 && m != mm) throw kind_error("triple mixes quadratic fields");
                m = mm;
                k = ScalarKind::quadext;
                break;
            }
        }
    }
    if (has_float && has_exact) throw kind_error("triple mixes exact and float coordinates");
    return has_float ? ScalarKind::float64 : k;
}

/// Canonical form. Exact: denominators cleared, coordinate gcd removed,
/// last nonzero coordinate positive. Float: scaled to max |coordinate| = 1,
/// last coordinate above kFloatZeroTol made positive.
inline void canonicalize(Triple& t) {
    ScalarKind k = unify_kind(t);
    if (k == ScalarKind::float64) {
        double m = 0;
        for (const auto& s : t) m = std::max(m, std::abs(std::get<double>(s)));
        if (m == 0 || !std::isfinite(m)) throw degenerate_error("zero or non-finite triple");
        for (auto& s : t) s = std::get<double>(s) / m;
        for (int i = 2; i >= 0; --i) {
            double v = std::get<double>(t[i]);
            if (std::abs(v) > kFloatZeroTol) {
                if (v < 0)
                    for (auto& s : t) s = -std::get<double>(s);
                break;
            }
        }
        return;
    }
    // The triple is defined up to a scalar from the coordinate field, so
    // first divide by the last nonzero coordinate (a projective invariant),
    // then clear denominators and remove the integer gcd. The normalizing
    // coordinate ends up positive, satisfying the sign convention.
    int w = -1;
    for (int i = 2; i >= 0; --i)
        if (!scalar_is_zero(t[i])) { w = i; break; }
    if (w < 0) throw degenerate_error("zero triple");
    Scalar pivot = t[w];
    for (auto& s : t) s = s / pivot;
    std::int64_t m = 0;
    std::array<Rational, 3> a{}, b{};
    for (int i = 0; i < 3; ++i) {
        if (const auto* q = std::get_if<QuadExt>(&t[i])) {
            m = q->m();
            a[i] = q->a();
            b[i] = q->b();
        } else {
            a[i] = std::get<Rational>(t[i]);
        }
    }
    BigInt l = 1;
    for (int i = 0; i < 3; ++i) l = big_lcm(big_lcm(l, denominator(a[i])), denominator(b[i]));
    std::array<BigInt, 3> ia, ib;
    BigInt g = 0;
    for (int i = 0; i < 3; ++i) {
        ia[i] = numerator(a[i]) * (l / denominator(a[i]));
        ib[i] = numerator(b[i]) * (l / denominator(b[i]));
        g = big_gcd(big_gcd(g, ia[i]), ib[i]);
    }
    for (int i = 0; i < 3; ++i) { ia[i] /= g; ib[i] /= g; }
    for (int i = 0; i < 3; ++i) {
        if (k == ScalarKind::quadext) t[i] = QuadExt(m, Rational(ia[i]), Rational(ib[i]));
        else t[i] = Rational(ia[i]);
    }
}

inline bool triple_equal(const Triple& x, const Triple& y) {
    if (unify_kind(x) == ScalarKind::float64 || unify_kind(y) == ScalarKind::float64) {
        if (unify_kind(x) != unify_kind(y)) return false;
        for (int i = 0; i < 3; ++i)
            if (std::abs(std::get<double>(x[i]) - std::get<double>(y[i])) > kFloatEqTol) return false;
        return true;
    }
    for (int i = 0; i < 3; ++i)
        if (!scalar_equal(x[i], y[i])) return false;
    return true;
}

inline Triple cross(const Triple& u, const Triple& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline double norm(const Triple& t) {
    double s = 0;
    for (const auto& c : t) {
        double v = to_double(c);
        s += v * v;
    }
    return std::sqrt(s);
}

inline std::string triple_str(const Triple& t) {
    return "[" + scalar_str(t[0]) + ":" + scalar_str(t[1]) + ":" + scalar_str(t[2]) + "]";
}

} // namespace detail

/// Point of the real projective plane in canonical homogeneous coordinates.
class ProjPoint {
public:
    ProjPoint(Scalar x, Scalar y, Scalar z) : t_{std::move(x), std::move(y), std::move(z)} {
        detail::canonicalize(t_);
    }
    static ProjPoint affine(Scalar x, Scalar y) {
        Scalar one = kind_of(x) == ScalarKind::float64 ? Scalar(1.0) : scalar_of(1);
        return ProjPoint(std::move(x), std::move(y), std::move(one));
    }

    const Scalar& x() const { return t_[0]; }
    const Scalar& y() const { return t_[1]; }
    const Scalar& z() const { return t_[2]; }
    const detail::Triple& triple() const { return t_; }
    ScalarKind kind() const { return detail::unify_kind(t_); }

    bool is_infinite() const {
        if (kind() == ScalarKind::float64) return std::abs(std::get<double>(t_[2])) <= kFloatZeroTol;
        return scalar_is_zero(t_[2]);
    }
    /// Affine coordinates; the point must be finite.
    std::pair<Scalar, Scalar> affine_xy() const {
        if (is_infinite()) throw domain_error("affine coordinates of a point at infinity");
        return {t_[0] / t_[2], t_[1] / t_[2]};
    }

    friend bool operator==(const ProjPoint& p, const ProjPoint& q) {
        return detail::triple_equal(p.t_, q.t_);
    }
    friend bool operator!=(const ProjPoint& p, const ProjPoint& q) { return !(p == q); }

    std::string str() const { return detail::triple_str(t_); }

private:
    detail::Triple t_;
};

/// Line a*x + b*y + c*z = 0, same canonical form as points.
class ProjLine {
public:
    ProjLine(Scalar a, Scalar b, Scalar c) : t_{std::move(a), std::move(b), std::move(c)} {
        detail::canonicalize(t_);
    }

    const Scalar& a() const { return t_[0]; }
    const Scalar& b() const { return t_[1]; }
    const Scalar& c() const { return t_[2]; }
    const detail::Triple& triple() const { return t_; }
    ScalarKind kind() const { return detail::unify_kind(t_); }

    friend bool operator==(const ProjLine& l, const ProjLine& m) {
        return detail::triple_equal(l.t_, m.t_);
    }
    friend bool operator!=(const ProjLine& l, const ProjLine& m) { return !(l == m); }

    std::string str() const { return detail::triple_str(t_); }

private:
    detail::Triple t_;
};

inline Scalar incidence_dot(const ProjPoint& p, const ProjLine& l) {
    return p.x() * l.a() + p.y() * l.b() + p.z() * l.c();
}

inline bool incident(const ProjPoint& p, const ProjLine& l, double tol = kIncidenceTol) {
    if (p.kind() == ScalarKind::float64 || l.kind() == ScalarKind::float64) {
        double dot = to_double(p.x()) * to_double(l.a()) + to_double(p.y()) * to_double(l.b()) +
                     to_double(p.z()) * to_double(l.c());
        return std::abs(dot) <= tol * detail::norm(p.triple()) * detail::norm(l.triple());
    }
    return scalar_is_zero(incidence_dot(p, l));
}

/// Line through two distinct points (cross product of the triples).
inline ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
    if (p == q) throw degenerate_error("line through coincident points");
    auto c = detail::cross(p.triple(), q.triple());
    return ProjLine(c[0], c[1], c[2]);
}

/// Intersection point of two distinct lines.
inline ProjPoint meet(const ProjLine& l, const ProjLine& m) {
    if (l == m) throw degenerate_error("meet of identical lines");
    auto c = detail::cross(l.triple(), m.triple());
    return ProjPoint(c[0], c[1], c[2]);
}

inline Scalar zero_like(const Scalar& s) {
    return kind_of(s) == ScalarKind::float64 ? Scalar(0.0) : scalar_of(0);
}

inline Scalar int_like(const Scalar& s, long long v) {
    return kind_of(s) == ScalarKind::float64 ? Scalar(static_cast<double>(v)) : scalar_of(v);
}

/// The point at infinity of a line (its direction class).
inline ProjPoint infinite_point(const ProjLine& l) {
    return ProjPoint(l.b(), -l.a(), zero_like(l.a()));
}

/// Invertible 3x3 projective transformation (row-major entries).
class ProjMap {
public:
    explicit ProjMap(std::array<Scalar, 9> entries) : e_(std::move(entries)) {
        Scalar d = det();
        bool singular = is_exact(d) ? scalar_is_zero(d) : std::abs(std::get<double>(d)) <= kFloatZeroTol;
        if (singular) throw degenerate_error("singular projective map");
    }

    static ProjMap identity() {
        return ProjMap({scalar_of(1), scalar_of(0), scalar_of(0), scalar_of(0), scalar_of(1),
                        scalar_of(0), scalar_of(0), scalar_of(0), scalar_of(1)});
    }

    const Scalar& at(int r, int c) const { return e_[3 * r + c]; }

    Scalar det() const {
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }

    ProjPoint apply(const ProjPoint& p) const {
        auto row = [&](int r) {
            return at(r, 0) * p.x() + at(r, 1) * p.y() + at(r, 2) * p.z();
        };
        return ProjPoint(row(0), row(1), row(2));
    }

    /// Image line: adj(f)^T * L, so that p on L iff f(p) on f(L).
    ProjLine apply(const ProjLine& l) const {
        auto cof = [&](int r, int c) {
            int r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
            return at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1);
        };
        // adj(f)^T[i][j] = cofactor(i, j)
        auto row = [&](int i) {
            return cof(i, 0) * l.a() + cof(i, 1) * l.b() + cof(i, 2) * l.c();
        };
        return ProjLine(row(0), row(1), row(2));
    }

private:
    std::array<Scalar, 9> e_;
};

/// Cross-ratio (a,b;c,d) of four distinct collinear points, as the ratio of
/// 2x2 determinants in a common parametrization of the line. Exact over
/// exact scalars; the point-at-infinity convention is automatic.
inline Scalar cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                          const ProjPoint& d, double tol = kIncidenceTol) {
    const ProjPoint* pts[4] = {&a, &b, &c, &d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*pts[i] == *pts[j]) throw domain_error("cross_ratio: coincident points");
    ProjLine l = line_through(a, b);
    if (!incident(c, l, tol) || !incident(d, l, tol))
        throw domain_error("cross_ratio: points not collinear");
    // Drop the coordinate where the line coefficient is largest; the other
    // two homogeneous coordinates parametrize the line.
    int drop = 0;
    double best = -1;
    for (int i = 0; i < 3; ++i) {
        double v = std::abs(to_double(l.triple()[i]));
        if (v > best) { best = v; drop = i; }
    }
    int i = (drop + 1) % 3, j = (drop + 2) % 3;
    auto det2 = [&](const ProjPoint& p, const ProjPoint& q) {
        return p.triple()[i] * q.triple()[j] - p.triple()[j] * q.triple()[i];
    };
    return (det2(a, c) * det2(b, d)) / (det2(a, d) * det2(b, c));
}

} // namespace plinc
