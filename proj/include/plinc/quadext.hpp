#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "plinc/errors.hpp"
#include "plinc/rational.hpp"

namespace plinc {

/// Element a + b*sqrt(m) of the real quadratic field Q(sqrt(m)),
/// m square-free and >= 2. Arithmetic between elements of different fields
/// is rejected; plain rationals promote into any field.
class QuadExt {
public:
    QuadExt(std::int64_t m, Rational a, Rational b)
        : m_(m), a_(std::move(a)), b_(std::move(b)) {
        if (m < 2 || !is_square_free_u64(static_cast<std::uint64_t>(m)))
            throw domain_error("QuadExt: m must be square-free and >= 2");
    }

    std::int64_t m() const { return m_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend QuadExt operator-(const QuadExt& x) { return QuadExt(x.m_, -x.a_, -x.b_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        check_same_field(x, y);
        return QuadExt(x.m_, x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        check_same_field(x, y);
        return QuadExt(x.m_, x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        check_same_field(x, y);
        return QuadExt(x.m_, x.a_ * y.a_ + x.b_ * y.b_ * x.m_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        check_same_field(x, y);
        // 1/(c + d*sqrt(m)) = (c - d*sqrt(m)) / (c^2 - d^2 m); the norm is
        // zero only for the zero element since sqrt(m) is irrational.
        Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * y.m_;
        if (norm == 0) throw domain_error("QuadExt: division by zero");
        QuadExt conj(y.m_, y.a_, -y.b_);
        QuadExt num = x * conj;
        return QuadExt(x.m_, num.a_ / norm, num.b_ / norm);
    }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    /// Exact sign of the real value a + b*sqrt(m).
    int sign() const {
        int sa = plinc::sign(a_), sb = plinc::sign(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare |a| vs |b|*sqrt(m) via squares.
        Rational diff = a_ * a_ - b_ * b_ * m_;
        return sa * plinc::sign(diff);
    }

    double to_double() const {
        return plinc::to_double(a_) + plinc::to_double(b_) * std::sqrt(static_cast<double>(m_));
    }

    /// "a", or "a+b*sqrt(m)" / "a-b*sqrt(m)" when b != 0.
    std::string str() const {
        if (b_ == 0) return format_rational(a_);
        std::string s = format_rational(a_);
        s += (plinc::sign(b_) < 0) ? "-" : "+";
        s += format_rational(boost::multiprecision::abs(b_));
        s += "*sqrt(" + std::to_string(m_) + ")";
        return s;
    }

private:
    static void check_same_field(const QuadExt& x, const QuadExt& y) {
        if (x.m_ != y.m_)
            throw kind_error("QuadExt: mixing sqrt(" + std::to_string(x.m_) + ") with sqrt(" +
                             std::to_string(y.m_) + ")");
    }

    std::int64_t m_;
    Rational a_, b_;
};

inline bool quadext_less(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }

/// Parses "a", "a+b*sqrt(m)" or "a-b*sqrt(m)". A plain rational needs the
/// field given by `default_m`.
inline QuadExt parse_quadext(const std::string& s, std::int64_t default_m = 0) {
    auto pos = s.find("*sqrt(");
    if (pos == std::string::npos) {
        if (default_m < 2) throw parse_error("quadratic element '" + s + "' lacks sqrt(m) and no field given");
        return QuadExt(default_m, parse_rational(s), Rational(0));
    }
    if (s.back() != ')') throw parse_error("bad quadratic element: '" + s + "'");
    std::int64_t m = 0;
    {
        std::string mstr = s.substr(pos + 6, s.size() - pos - 7);
        try {
            m = std::stoll(mstr);
        } catch (const std::exception&) {
            throw parse_error("bad field index in '" + s + "'");
        }
    }
    // The |b| token is digits and slashes directly before "*sqrt("; the
    // character before it separates the a and b terms.
    std::size_t j = pos;
    while (j > 0 && (std::isdigit(static_cast<unsigned char>(s[j - 1])) || s[j - 1] == '/')) --j;
    if (j == 0) {
        // No separator: the whole prefix is b ("b*sqrt(m)" form, a = 0).
        return QuadExt(m, Rational(0), parse_rational(s.substr(0, pos)));
    }
    char sep = s[j - 1];
    if (sep != '+' && sep != '-') throw parse_error("bad quadratic element: '" + s + "'");
    if (j == 1) // leading sign belongs to b, a = 0
        return QuadExt(m, Rational(0), parse_rational(s.substr(0, pos)));
    Rational a = parse_rational(s.substr(0, j - 1));
    Rational b = parse_rational(s.substr(j, pos - j));
    if (sep == '-') b = -b;
    return QuadExt(m, std::move(a), std::move(b));
}

} // namespace plinc
