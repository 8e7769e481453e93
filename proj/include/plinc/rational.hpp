#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cstdint>
#include <string>
#include <vector>

#include "plinc/errors.hpp"

namespace plinc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt big_lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }
inline BigInt big_abs(const BigInt& a) { return boost::multiprecision::abs(a); }

inline int sign(const BigInt& a) { return a.sign(); }
inline int sign(const Rational& a) { return a.sign(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// "p" for integers, "p/q" otherwise.
inline std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw parse_error("empty integer literal");
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw parse_error("bad integer literal: '" + s + "'");
    }
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_bigint(s));
    BigInt num = parse_bigint(s.substr(0, slash));
    BigInt den = parse_bigint(s.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator in '" + s + "'");
    return Rational(num, den);
}

/// Shortest decimal literal that round-trips.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw parse_error("bad float literal: '" + s + "'");
    return v;
}

// ---- small integer number theory (trial division scale) ----

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline bool is_square_free_u64(std::uint64_t n) {
    if (n == 0) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

/// phi(n) by trial-division factorization.
inline std::uint64_t totient(std::uint64_t n) {
    if (n < 1) throw domain_error("totient requires n >= 1");
    std::uint64_t result = n, m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

/// All positive divisors of |n| (trial-division scale; intended for the
/// moderate coefficients arising in the rational-root test).
inline std::vector<BigInt> divisors_big(const BigInt& n) {
    BigInt a = big_abs(n);
    if (a == 0) return {};
    std::vector<std::pair<BigInt, int>> factors;
    for (BigInt p = 2; p * p <= a; ++p) {
        if (a % p == 0) {
            int e = 0;
            while (a % p == 0) { a /= p; ++e; }
            factors.emplace_back(p, e);
        }
    }
    if (a > 1) factors.emplace_back(a, 1);
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, e] : factors) {
        std::size_t n0 = divs.size();
        BigInt pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < n0; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

} // namespace plinc
