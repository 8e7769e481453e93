#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "plinc/errors.hpp"
#include "plinc/intpoly.hpp"
#include "plinc/quadext.hpp"
#include "plinc/rational.hpp"

namespace plinc {

/// Tolerance for matching an exact root against a float evaluation.
inline constexpr double kRootMatchTol = 1e-9;

/// n-th cyclotomic polynomial, by exact division of z^n - 1 by Phi_d over
/// all proper divisors d. Results are cached (thread-safe).
inline const IntPoly& cyclotomic(unsigned n) {
    if (n < 1) throw domain_error("cyclotomic requires n >= 1");
    static std::map<unsigned, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    for (std::uint64_t d : divisors_u64(n)) {
        unsigned dn = static_cast<unsigned>(d);
        if (cache.count(dn)) continue;
        IntPoly poly = IntPoly::monomial(1, dn) - IntPoly::constant(1); // z^d - 1
        for (std::uint64_t e : divisors_u64(dn)) {
            if (e == dn) continue;
            auto q = poly.divide_exact(cache.at(static_cast<unsigned>(e)));
            if (!q) throw error("internal: cyclotomic division failed");
            poly = std::move(*q);
        }
        cache.emplace(dn, std::move(poly));
    }
    return cache.at(n);
}

inline double two_cos_value(unsigned n) { return 2.0 * std::cos(2.0 * M_PI / n); }

/// Minimal polynomial over Q of 2*cos(2*pi/n): the palindromic Phi_n(z)
/// rewritten in x = z + 1/z. Monic of degree phi(n)/2.
inline IntPoly minpoly_two_cos(unsigned n) {
    if (n < 3) throw domain_error("minpoly_two_cos requires n >= 3");
    const IntPoly& phi = cyclotomic(n);
    const std::size_t m = static_cast<std::size_t>(phi.degree()) / 2; // phi(n) is even for n >= 3
    // z^j + z^-j as a polynomial p_j(x): p_0 = 2, p_1 = x, p_{j+1} = x*p_j - p_{j-1}.
    IntPoly prev = IntPoly::constant(2);
    IntPoly cur({0, 1});
    IntPoly result = phi.coeff(m) * IntPoly::constant(1);
    for (std::size_t j = 1; j <= m; ++j) {
        result = result + phi.coeff(m + j) * cur;
        if (j < m) {
            IntPoly next = IntPoly({0, 1}) * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
    }
    return result;
}

/// Nonzero integer polynomial A with A(y) = 0 for y = (1 + 2cos(2*pi/n))^2;
/// deg A = phi(n)/2. This is the resultant in x of the minimal polynomial
/// M of 2cos(2*pi/n) and x^2 + 2x + (1 - y): with N(s) = M(s - 1) split into
/// even and odd parts N(s) = E(s^2) + s*O(s^2), the product over the two
/// roots -1 +- sqrt(y) collapses to E(y)^2 - y*O(y)^2.
inline IntPoly annihilator_shifted_square(unsigned n) {
    if (n < 3) throw domain_error("annihilator_shifted_square requires n >= 3");
    IntPoly shifted = minpoly_two_cos(n).shifted(BigInt(-1));
    std::vector<BigInt> even, odd;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(shifted.degree()); ++i) {
        if (i % 2 == 0) even.push_back(shifted.coeff(i));
        else odd.push_back(shifted.coeff(i));
    }
    IntPoly e{std::vector<BigInt>(even)}, o{std::vector<BigInt>(odd)};
    IntPoly a = e * e - IntPoly({0, 1}) * (o * o);
    return a.canonical();
}

/// Exactly the rational roots of p (rational-root theorem; zero roots are
/// stripped first and reported when present).
inline std::set<Rational> rational_roots(const IntPoly& p) {
    if (p.is_zero()) throw domain_error("rational roots of zero polynomial");
    std::set<Rational> roots;
    std::vector<BigInt> c = p.coeffs();
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) {
        roots.insert(Rational(0));
        c.erase(c.begin(), c.begin() + low);
    }
    IntPoly q{std::move(c)};
    if (q.degree() == 0) return roots;
    for (const BigInt& r : divisors_big(q.coeff(0))) {
        for (const BigInt& s : divisors_big(q.leading())) {
            Rational cand(r, s);
            if (q.eval(cand) == 0) roots.insert(cand);
            if (q.eval(-cand) == 0) roots.insert(-cand);
        }
    }
    return roots;
}

inline double shifted_square_value(unsigned k) {
    double t = 1.0 + 2.0 * std::cos(2.0 * M_PI / k);
    return t * t;
}

/// The rational value of (1 + 2cos(2*pi/k))^2 when it is rational, empty
/// otherwise. Root matching against the float value uses kRootMatchTol.
inline std::optional<Rational> shifted_square_is_rational(unsigned k) {
    if (k < 3) throw domain_error("shifted_square_is_rational requires k >= 3");
    IntPoly a = annihilator_shifted_square(k);
    const double target = shifted_square_value(k);
    for (const Rational& r : rational_roots(a))
        if (std::abs(to_double(r) - target) < kRootMatchTol) return r;
    return std::nullopt;
}

/// Exact degree of y = (1 + 2cos(2*pi/k))^2 over Q.
///
/// The annihilator's roots are the images (1 + x_i)^2 of the conjugates x_i
/// of 2cos(2*pi/k); since Q(2cos(2*pi/k)) is Galois over Q these images form
/// a single conjugacy class, so the square-free part of the annihilator is
/// already the minimal polynomial of y.
inline unsigned degree_of_shifted_square(unsigned k) {
    if (k < 3) throw domain_error("degree_of_shifted_square requires k >= 3");
    IntPoly minimal = squarefree_part(annihilator_shifted_square(k));
    return static_cast<unsigned>(minimal.degree());
}

/// When deg(y) = 2, the exact quadratic value a + b*sqrt(m) of
/// y = (1 + 2cos(2*pi/k))^2, chosen as the root nearest the float value.
inline std::optional<QuadExt> shifted_square_as_quadratic(unsigned k) {
    if (k < 3) throw domain_error("shifted_square_as_quadratic requires k >= 3");
    IntPoly minimal = squarefree_part(annihilator_shifted_square(k));
    if (minimal.degree() != 2) return std::nullopt;
    // roots of c2 y^2 + c1 y + c0: (-c1 +- sqrt(disc)) / (2 c2)
    BigInt c2 = minimal.coeff(2), c1 = minimal.coeff(1), c0 = minimal.coeff(0);
    BigInt disc = c1 * c1 - 4 * c2 * c0;
    if (disc <= 0) return std::nullopt; // y is real, so this cannot happen
    // disc = t^2 * m with m square-free
    BigInt t = 1, m = 1, rest = disc;
    for (BigInt p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) { t *= p; rest /= p * p; }
        if (rest % p == 0) { m *= p; rest /= p; }
    }
    m *= rest;
    if (m == 1) return std::nullopt; // rational after all
    Rational a(-c1, 2 * c2), b(t, 2 * c2);
    QuadExt plus(m.convert_to<std::int64_t>(), a, b), minus(m.convert_to<std::int64_t>(), a, -b);
    const double target = shifted_square_value(k);
    return std::abs(plus.to_double() - target) <= std::abs(minus.to_double() - target) ? plus : minus;
}

/// Smallest prime p >= 3 with (p+1)/4 > d^c; the comparison
/// (p+1)^v > 4^v * d^u for c = u/v is exact.
inline std::uint64_t k_of_d(std::uint64_t d, const Rational& c = Rational(1)) {
    if (d < 1) throw domain_error("k_of_d requires d >= 1");
    if (c < 1) throw domain_error("k_of_d requires exponent c >= 1");
    const auto u = numerator(c).convert_to<unsigned>();
    const auto v = denominator(c).convert_to<unsigned>();
    const BigInt rhs = boost::multiprecision::pow(BigInt(4), v) * boost::multiprecision::pow(BigInt(d), u);
    for (std::uint64_t p = 3;; p += 2) {
        if (!is_prime_u64(p)) continue;
        if (boost::multiprecision::pow(BigInt(p + 1), v) > rhs) return p;
    }
}

} // namespace plinc
