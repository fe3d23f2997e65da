#pragma once

// Deterministic random raw-expression generator shared by the property tests
// and the acceptance suite.

#include "ineq/term.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace ineq::testgen {

struct ExprGen {
    std::mt19937 rng;
    std::vector<std::string> vars{"x", "y", "z", "u", "v", "w"};
    std::vector<std::string> funcs{"f", "g"};
    bool allow_apps = true;
    bool allow_div = true;

    explicit ExprGen(unsigned seed) : rng(seed) {}

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    Rational small_rational() {
        int num = pick(-6, 6);
        int den = pick(1, 4);
        return Rational(num, den);
    }

    RawExpr gen(int depth) {
        if (depth <= 0) {
            if (pick(0, 2) == 0) return RawExpr::num(small_rational());
            return RawExpr::var(vars[pick(0, static_cast<int>(vars.size()) - 1)]);
        }
        switch (pick(0, allow_apps ? 7 : 6)) {
        case 0:
            return RawExpr::num(small_rational());
        case 1:
            return RawExpr::var(vars[pick(0, static_cast<int>(vars.size()) - 1)]);
        case 2:
            return RawExpr::add(gen(depth - 1), gen(depth - 1));
        case 3:
            return RawExpr::sub(gen(depth - 1), gen(depth - 1));
        case 4:
            return RawExpr::mul(gen(depth - 1), gen(depth - 1));
        case 5:
            if (allow_div) return RawExpr::div(gen(depth - 1), gen(depth - 1));
            return RawExpr::neg(gen(depth - 1));
        case 6:
            return RawExpr::pow(gen(depth - 1), pick(-3, 3));
        default: {
            std::vector<RawExpr> args;
            int n = pick(1, 2);
            for (int i = 0; i < n; ++i) args.push_back(gen(depth - 1));
            return RawExpr::app(funcs[pick(0, static_cast<int>(funcs.size()) - 1)], std::move(args));
        }
        }
    }

    std::map<std::string, Rational> env() {
        std::map<std::string, Rational> e;
        for (const auto& v : vars) e[v] = small_rational();
        return e;
    }
};

// Rebuild a raw tree from a canonical s-term, randomly re-associating and
// permuting sum/product argument lists. With shuffle = false the rebuild is
// a plain structural conversion.
inline RawExpr to_raw(const Term& t, std::mt19937* shuffle);

inline RawExpr to_raw(const STerm& s, std::mt19937* shuffle) {
    if (s.term.kind() == TermKind::One) return RawExpr::num(s.coeff);
    RawExpr body = to_raw(s.term, shuffle);
    if (s.coeff == 1) return body;
    return RawExpr::mul(RawExpr::num(s.coeff), std::move(body));
}

namespace detail {

template <class T, class F>
RawExpr fold_random(std::vector<T> items, F leaf, std::mt19937* shuffle,
                    RawExpr (*combine)(RawExpr, RawExpr)) {
    std::vector<RawExpr> nodes;
    nodes.reserve(items.size());
    for (auto& it : items) nodes.push_back(leaf(it));
    if (shuffle) std::shuffle(nodes.begin(), nodes.end(), *shuffle);
    while (nodes.size() > 1) {
        std::size_t i = 0;
        if (shuffle && nodes.size() > 2)
            i = std::uniform_int_distribution<std::size_t>(0, nodes.size() - 2)(*shuffle);
        RawExpr merged = combine(std::move(nodes[i]), std::move(nodes[i + 1]));
        nodes.erase(nodes.begin() + static_cast<long>(i), nodes.begin() + static_cast<long>(i + 2));
        nodes.insert(nodes.begin() + static_cast<long>(i), std::move(merged));
    }
    return std::move(nodes[0]);
}

}  // namespace detail

inline RawExpr to_raw(const Term& t, std::mt19937* shuffle) {
    switch (t.kind()) {
    case TermKind::One:
        return RawExpr::num(Rational(1));
    case TermKind::Var:
        return RawExpr::var(t.symbol());
    case TermKind::Sum:
        return detail::fold_random<STerm>(
            t.args(), [&](const STerm& s) { return to_raw(s, shuffle); }, shuffle, &RawExpr::add);
    case TermKind::Prod:
        return detail::fold_random<Factor>(
            t.factors(),
            [&](const Factor& f) { return RawExpr::pow(to_raw(f.base, shuffle), f.exp); }, shuffle,
            &RawExpr::mul);
    case TermKind::App: {
        std::vector<RawExpr> args;
        for (const auto& a : t.args()) args.push_back(to_raw(a, shuffle));
        return RawExpr::app(t.symbol(), std::move(args));
    }
    }
    return RawExpr::num(Rational(0));
}

}  // namespace ineq::testgen
