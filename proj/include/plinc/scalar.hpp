#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <variant>

#include "plinc/errors.hpp"
#include "plinc/quadext.hpp"
#include "plinc/rational.hpp"

namespace plinc {

/// Coordinate algebra: exact rational, exact real quadratic, or double.
/// The exact variants satisfy the field axioms exactly; mixing float with
/// exact is an error (conversion is explicit and lossy).
using Scalar = std::variant<Rational, QuadExt, double>;

enum class ScalarKind { rational, quadext, float64 };

inline ScalarKind kind_of(const Scalar& s) {
    if (std::holds_alternative<Rational>(s)) return ScalarKind::rational;
    if (std::holds_alternative<QuadExt>(s)) return ScalarKind::quadext;
    return ScalarKind::float64;
}

inline std::string kind_name(ScalarKind k) {
    switch (k) {
        case ScalarKind::rational: return "rational";
        case ScalarKind::quadext: return "quadext";
        default: return "float";
    }
}

inline bool is_exact(const Scalar& s) { return kind_of(s) != ScalarKind::float64; }

inline Scalar scalar_of(long long v) { return Rational(v); }
inline Scalar scalar_of(const Rational& v) { return v; }

/// Explicit, lossy conversion of any scalar to double.
inline double to_double(const Scalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) return to_double(*r);
    if (const auto* q = std::get_if<QuadExt>(&s)) return q->to_double();
    return std::get<double>(s);
}

inline QuadExt promote(const Rational& r, std::int64_t m) { return QuadExt(m, r, Rational(0)); }

namespace detail {

template <typename Op, typename FOp>
Scalar scalar_binary(const Scalar& x, const Scalar& y, Op op, FOp fop, const char* what) {
    if (kind_of(x) == ScalarKind::float64 || kind_of(y) == ScalarKind::float64) {
        if (kind_of(x) != kind_of(y))
            throw kind_error(std::string("implicit exact/float ") + what);
        return fop(std::get<double>(x), std::get<double>(y));
    }
    if (const auto* qx = std::get_if<QuadExt>(&x)) {
        if (const auto* qy = std::get_if<QuadExt>(&y)) return op(*qx, *qy);
        return op(*qx, promote(std::get<Rational>(y), qx->m()));
    }
    if (const auto* qy = std::get_if<QuadExt>(&y))
        return op(promote(std::get<Rational>(x), qy->m()), *qy);
    return op(std::get<Rational>(x), std::get<Rational>(y));
}

} // namespace detail

inline Scalar operator+(const Scalar& x, const Scalar& y) {
    return detail::scalar_binary(x, y, [](const auto& a, const auto& b) -> Scalar { return a + b; },
                                 [](double a, double b) -> Scalar { return a + b; }, "addition");
}
inline Scalar operator-(const Scalar& x, const Scalar& y) {
    return detail::scalar_binary(x, y, [](const auto& a, const auto& b) -> Scalar { return a - b; },
                                 [](double a, double b) -> Scalar { return a - b; }, "subtraction");
}
inline Scalar operator*(const Scalar& x, const Scalar& y) {
    return detail::scalar_binary(x, y, [](const auto& a, const auto& b) -> Scalar { return a * b; },
                                 [](double a, double b) -> Scalar { return a * b; }, "multiplication");
}
inline Scalar operator/(const Scalar& x, const Scalar& y) {
    return detail::scalar_binary(
        x, y,
        [](const auto& a, const auto& b) -> Scalar {
            if constexpr (std::is_same_v<std::decay_t<decltype(b)>, Rational>) {
                if (b == 0) throw domain_error("scalar division by zero");
            } else {
                if (b.is_zero()) throw domain_error("scalar division by zero");
            }
            return a / b;
        },
        [](double a, double b) -> Scalar {
            if (b == 0.0) throw domain_error("scalar division by zero");
            return a / b;
        },
        "division");
}
inline Scalar operator-(const Scalar& x) {
    if (const auto* r = std::get_if<Rational>(&x)) return -*r;
    if (const auto* q = std::get_if<QuadExt>(&x)) return -*q;
    return -std::get<double>(x);
}

inline bool scalar_is_zero(const Scalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) return *r == 0;
    if (const auto* q = std::get_if<QuadExt>(&s)) return q->is_zero();
    return std::get<double>(s) == 0.0;
}

/// Exact sign for exact kinds; strict comparison against 0.0 for floats.
inline int scalar_sign(const Scalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) return sign(*r);
    if (const auto* q = std::get_if<QuadExt>(&s)) return q->sign();
    double v = std::get<double>(s);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

/// Exact equality for exact kinds (with rational <-> quadext promotion);
/// bitwise equality for floats. Float comparisons against a tolerance are
/// the caller's job.
inline bool scalar_equal(const Scalar& x, const Scalar& y) {
    if (kind_of(x) == ScalarKind::float64 || kind_of(y) == ScalarKind::float64)
        return kind_of(x) == kind_of(y) && std::get<double>(x) == std::get<double>(y);
    return scalar_sign(x - y) == 0;
}

/// Exact total order on exact kinds; numeric order on floats.
inline bool scalar_less(const Scalar& x, const Scalar& y) {
    if (kind_of(x) == ScalarKind::float64 && kind_of(y) == ScalarKind::float64)
        return std::get<double>(x) < std::get<double>(y);
    return scalar_sign(x - y) < 0;
}

inline std::string scalar_str(const Scalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) return format_rational(*r);
    if (const auto* q = std::get_if<QuadExt>(&s)) return q->str();
    return format_double(std::get<double>(s));
}

inline Scalar parse_scalar(const std::string& s, ScalarKind kind, std::int64_t m = 0) {
    switch (kind) {
        case ScalarKind::rational: return parse_rational(s);
        case ScalarKind::quadext: return parse_quadext(s, m);
        default: return parse_double(s);
    }
}

} // namespace plinc
