#pragma once

// Exact rational arithmetic helpers. All numeric state in the prover is
// kept as boost::multiprecision::cpp_rational; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ineq {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long n, long long d = 1) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    return Rational(Int(n), Int(d));
}

inline int sign_of(const Rational& q) {
    return q.sign();
}

inline Rational abs_val(const Rational& q) {
    return q < 0 ? Rational(-q) : q;
}

inline std::string to_string(const Rational& q) {
    return q.str();
}

// q^e for integer e; e < 0 requires q != 0. 0^0 is taken to be 1, matching
// the evaluator's convention for literal arithmetic.
inline Rational pow_rat(const Rational& q, long long e) {
    if (e == 0) return Rational(1);
    if (q == 0) {
        if (e < 0) throw std::domain_error("zero raised to a negative power");
        return Rational(0);
    }
    Rational base = e < 0 ? Rational(1 / q) : q;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                 : static_cast<unsigned long long>(e);
    Rational acc(1);
    while (n != 0) {
        if (n & 1ULL) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

// Floor of a rational as an integer.
inline Int floor_int(const Rational& q) {
    Int n = numerator(q), d = denominator(q);
    Int quot = n / d, rem = n % d;
    if (rem != 0 && n < 0) quot -= 1;
    return quot;
}

inline Rational floor_rat(const Rational& q) { return Rational(floor_int(q)); }
inline Rational ceil_rat(const Rational& q) { return Rational(-floor_int(-q)); }

// Largest integer r with r^n <= v (v >= 0, n >= 1).
inline Int int_nth_root_floor(const Int& v, unsigned n) {
    if (v < 0) throw std::domain_error("nth root of negative integer");
    if (v == 0 || v == 1 || n == 1) return v;
    Int lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, n) <= v) hi <<= 1;
    // invariant: lo^n <= v < hi^n
    while (hi - lo > 1) {
        Int mid = (lo + hi) >> 1;
        if (boost::multiprecision::pow(mid, n) <= v)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

// Exact nth root of q >= 0 when it is rational, otherwise nullopt.
inline std::optional<Rational> exact_nth_root(const Rational& q, unsigned n) {
    if (q < 0 || n == 0) return std::nullopt;
    if (n == 1) return q;
    Int num = numerator(q), den = denominator(q);
    Int rn = int_nth_root_floor(num, n);
    if (boost::multiprecision::pow(rn, n) != num) return std::nullopt;
    Int rd = int_nth_root_floor(den, n);
    if (boost::multiprecision::pow(rd, n) != den) return std::nullopt;
    return Rational(rn, rd);
}

// Dyadic bisection bracket [lo, hi] around q^(1/n) with hi - lo <= eps.
// Both endpoints are sound one-sided bounds for the real root.
struct RootBracket {
    Rational lo, hi;
};

inline RootBracket nth_root_bracket(const Rational& q, unsigned n, const Rational& eps) {
    if (q < 0 || n == 0) throw std::domain_error("root bracket needs q >= 0, n >= 1");
    if (auto r = exact_nth_root(q, n)) return {*r, *r};
    Int fl = int_nth_root_floor(numerator(q) / denominator(q), n);
    Rational lo(fl), hi(fl + 1);
    while (hi - lo > eps) {
        Rational mid = (lo + hi) / 2;
        if (pow_rat(mid, n) <= q)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

inline std::size_t hash_rational(const Rational& q) {
    std::size_t h = static_cast<std::size_t>(hash_value(numerator(q)));
    std::size_t h2 = static_cast<std::size_t>(hash_value(denominator(q)));
    return h ^ (h2 + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

inline std::size_t hash_combine(std::size_t a, std::size_t b) {
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

}  // namespace ineq
