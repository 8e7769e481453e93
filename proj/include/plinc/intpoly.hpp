#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "plinc/errors.hpp"
#include "plinc/rational.hpp"

namespace plinc {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored lowest degree first with a nonzero leading coefficient.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long long> coeffs) {
        for (long long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(BigInt v) { return IntPoly(std::vector<BigInt>{std::move(v)}); }
    /// c * x^k
    static IntPoly monomial(BigInt c, std::size_t k) {
        std::vector<BigInt> v(k + 1);
        v[k] = std::move(c);
        return IntPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const BigInt& leading() const {
        if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend IntPoly operator+(const IntPoly& p, const IntPoly& q) {
        std::vector<BigInt> r(std::max(p.c_.size(), q.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeff(i) + q.coeff(i);
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& p, const IntPoly& q) {
        std::vector<BigInt> r(std::max(p.c_.size(), q.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeff(i) - q.coeff(i);
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& p) {
        std::vector<BigInt> r = p.c_;
        for (auto& v : r) v = -v;
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q) {
        if (p.is_zero() || q.is_zero()) return IntPoly();
        std::vector<BigInt> r(p.c_.size() + q.c_.size() - 1);
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const BigInt& k, const IntPoly& p) {
        std::vector<BigInt> r = p.c_;
        for (auto& v : r) v *= k;
        return IntPoly(std::move(r));
    }
    friend bool operator==(const IntPoly& p, const IntPoly& q) { return p.c_ == q.c_; }
    friend bool operator!=(const IntPoly& p, const IntPoly& q) { return !(p == q); }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }
    double eval(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
        return acc;
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<BigInt> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigInt(i);
        return IntPoly(std::move(r));
    }

    /// gcd of all coefficients (0 for the zero polynomial).
    BigInt content() const {
        BigInt g = 0;
        for (const auto& v : c_) {
            g = big_gcd(g, v);
            if (g == 1) break;
        }
        return g;
    }

    /// Content removed, sign of the leading coefficient preserved.
    IntPoly primitive_part() const {
        if (is_zero()) return IntPoly();
        BigInt g = content();
        std::vector<BigInt> r = c_;
        for (auto& v : r) v /= g;
        return IntPoly(std::move(r));
    }

    /// Content 1 and positive leading coefficient.
    IntPoly canonical() const {
        IntPoly p = primitive_part();
        if (!p.is_zero() && p.leading() < 0) p = -p;
        return p;
    }

    /// p(x + t).
    IntPoly shifted(const BigInt& t) const {
        IntPoly acc;
        IntPoly lin({0, 1});
        lin = lin + IntPoly::constant(t); // x + t
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + IntPoly::constant(*it);
        return acc;
    }

    /// Quotient when q divides p exactly over Z[x], nullopt otherwise.
    std::optional<IntPoly> divide_exact(const IntPoly& q) const {
        if (q.is_zero()) throw domain_error("division by zero polynomial");
        if (is_zero()) return IntPoly();
        if (degree() < q.degree()) return std::nullopt;
        // Long division over Q; the quotient is unique, so if it exists over
        // Z it is what the rational division produces.
        std::vector<Rational> rem(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) rem[i] = Rational(c_[i]);
        const int dq = q.degree();
        const Rational lead(q.leading());
        std::vector<Rational> quot(c_.size() - dq);
        for (int i = static_cast<int>(rem.size()) - 1; i >= dq; --i) {
            Rational f = rem[i] / lead;
            quot[i - dq] = f;
            if (f == 0) continue;
            for (int j = 0; j <= dq; ++j) rem[i - dq + j] -= f * Rational(q.coeff(j));
        }
        for (int i = 0; i < dq; ++i)
            if (rem[i] != 0) return std::nullopt;
        std::vector<BigInt> out(quot.size());
        for (std::size_t i = 0; i < quot.size(); ++i) {
            if (!is_integer(quot[i])) return std::nullopt;
            out[i] = numerator(quot[i]);
        }
        return IntPoly(std::move(out));
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const BigInt& v = c_[i];
            if (v == 0) continue;
            if (!s.empty()) s += (v > 0) ? " + " : " - ";
            else if (v < 0) s += "-";
            BigInt a = big_abs(v);
            if (a != 1 || i == 0) s += a.str();
            if (i > 0) {
                if (a != 1) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_; // lowest degree first
};

/// Pseudo-remainder: lc(q)^(deg p - deg q + 1) * p = s*q + r with deg r < deg q.
inline IntPoly pseudo_rem(IntPoly p, const IntPoly& q) {
    if (q.is_zero()) throw domain_error("pseudo_rem by zero");
    const int dq = q.degree();
    const BigInt l = q.leading();
    int steps = p.degree() - dq + 1;
    while (!p.is_zero() && p.degree() >= dq) {
        IntPoly t = IntPoly::monomial(p.leading(), p.degree() - dq);
        p = l * p - t * q;
        --steps;
    }
    // Scale up for skipped steps so the defining identity holds exactly.
    while (steps-- > 0) p = l * p;
    return p;
}

/// gcd over Z[x] via the primitive polynomial remainder sequence; result is
/// canonical (content 1, positive leading coefficient) up to the content gcd.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.canonical();
    if (b.is_zero()) return a.canonical();
    BigInt cont = big_gcd(a.content(), b.content());
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    IntPoly g = cont * a;
    return g.canonical();
}

/// Radical: product of the distinct irreducible factors, degree reduced by
/// one per repeated factor.
inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw domain_error("squarefree part of zero polynomial");
    if (p.degree() == 0) return IntPoly::constant(1);
    IntPoly g = poly_gcd(p, p.derivative());
    auto q = p.divide_exact(g);
    if (!q) {
        // gcd is only defined up to units/content; divide the primitive part.
        q = p.primitive_part().divide_exact(g);
    }
    if (!q) throw error("internal: gcd does not divide polynomial");
    return q->canonical();
}

/// Resultant of p and q: determinant of the Sylvester matrix, computed by
/// fraction-free (Bareiss) elimination over Z.
inline BigInt resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return 0;
    const int m = p.degree(), n = q.degree();
    if (m == 0) return boost::multiprecision::pow(p.leading(), n);
    if (n == 0) return boost::multiprecision::pow(q.leading(), m);
    const int N = m + n;
    std::vector<std::vector<BigInt>> a(N, std::vector<BigInt>(N, BigInt(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) a[r][r + m - i] = p.coeff(i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) a[n + r][r + n - i] = q.coeff(i);
    BigInt denom = 1;
    int sgn = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < N; ++r)
                if (a[r][k] != 0) { piv = r; break; }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sgn = -sgn;
        }
        for (int r = k + 1; r < N; ++r) {
            for (int c = k + 1; c < N; ++c)
                a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]) / denom;
            a[r][k] = 0;
        }
        denom = a[k][k];
    }
    return sgn * a[N - 1][N - 1];
}

} // namespace plinc
