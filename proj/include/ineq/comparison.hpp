#pragma once

// Comparisons between named problem terms: t_lhs <rel> coeff * t_rhs.
// Comparisons against zero are encoded with rhs = 0 (the index of the
// constant term 1) and coeff = 0.

#include "ineq/rational.hpp"

#include <cstdint>
#include <string>

namespace ineq {

using TermIndex = std::uint32_t;

enum class Rel { lt, le, eq, ge, gt, ne };

inline bool is_strict(Rel r) { return r == Rel::lt || r == Rel::gt; }
inline bool is_weak_ineq(Rel r) { return r == Rel::le || r == Rel::ge; }
inline bool is_ineq(Rel r) { return r != Rel::eq && r != Rel::ne; }
inline bool is_upper(Rel r) { return r == Rel::lt || r == Rel::le; }
inline bool is_lower(Rel r) { return r == Rel::gt || r == Rel::ge; }

inline Rel negate(Rel r) {
    switch (r) {
    case Rel::lt: return Rel::ge;
    case Rel::le: return Rel::gt;
    case Rel::eq: return Rel::ne;
    case Rel::ge: return Rel::lt;
    case Rel::gt: return Rel::le;
    case Rel::ne: return Rel::eq;
    }
    return Rel::eq;
}

// a rel b  <=>  b mirror(rel) a
inline Rel mirror(Rel r) {
    switch (r) {
    case Rel::lt: return Rel::gt;
    case Rel::le: return Rel::ge;
    case Rel::gt: return Rel::lt;
    case Rel::ge: return Rel::le;
    default: return r;
    }
}

inline Rel weaken(Rel r) {
    if (r == Rel::lt) return Rel::le;
    if (r == Rel::gt) return Rel::ge;
    return r;
}

inline Rel strengthen(Rel r) {
    if (r == Rel::le) return Rel::lt;
    if (r == Rel::ge) return Rel::gt;
    return r;
}

inline const char* rel_str(Rel r) {
    switch (r) {
    case Rel::lt: return "<";
    case Rel::le: return "<=";
    case Rel::eq: return "==";
    case Rel::ge: return ">=";
    case Rel::gt: return ">";
    case Rel::ne: return "!=";
    }
    return "?";
}

// Pointwise truth of `x rel y` over rationals.
inline bool rel_holds(const Rational& x, Rel r, const Rational& y) {
    switch (r) {
    case Rel::lt: return x < y;
    case Rel::le: return x <= y;
    case Rel::eq: return x == y;
    case Rel::ge: return x >= y;
    case Rel::gt: return x > y;
    case Rel::ne: return x != y;
    }
    return false;
}

struct Comparison {
    TermIndex lhs = 0;
    Rel rel = Rel::eq;
    Rational coeff;
    TermIndex rhs = 0;

    Comparison() = default;
    Comparison(TermIndex l, Rel r, Rational c, TermIndex rh)
        : lhs(l), rel(r), coeff(std::move(c)), rhs(rh) {}

    bool operator==(const Comparison& o) const {
        return lhs == o.lhs && rel == o.rel && coeff == o.coeff && rhs == o.rhs;
    }
};

inline Comparison negate(const Comparison& c) {
    return Comparison(c.lhs, negate(c.rel), c.coeff, c.rhs);
}

inline std::string to_string(const Comparison& c) {
    std::string out = "t" + std::to_string(c.lhs);
    out += " ";
    out += rel_str(c.rel);
    out += " ";
    if (c.coeff == 1 && c.rhs != 0) {
        out += "t" + std::to_string(c.rhs);
    } else if (c.rhs == 0) {
        out += to_string(c.coeff);
    } else {
        out += to_string(c.coeff) + "*t" + std::to_string(c.rhs);
    }
    return out;
}

enum class Sign { pos, nonneg, neg, nonpos, zero, nonzero, unknown };

inline const char* sign_str(Sign s) {
    switch (s) {
    case Sign::pos: return ">0";
    case Sign::nonneg: return ">=0";
    case Sign::neg: return "<0";
    case Sign::nonpos: return "<=0";
    case Sign::zero: return "=0";
    case Sign::nonzero: return "!=0";
    case Sign::unknown: return "?";
    }
    return "?";
}

inline bool sign_strict(Sign s) { return s == Sign::pos || s == Sign::neg; }

}  // namespace ineq
