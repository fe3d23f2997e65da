#pragma once

// Canonical terms and scaled terms. Every expression the prover touches is
// normalized here to a unique form: sums and products are flattened and
// sorted under a fixed total order, like terms are merged, and a rational
// scalar is factored out so that comparisons between terms that differ only
// by a constant multiple become visible.

#include "ineq/rational.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ineq {

class Term;

struct STerm;

enum class TermKind : int {
    One = 0,
    Var = 1,
    Prod = 2,
    Sum = 3,
    App = 4,
};

struct Factor;

struct TermNode;
using TermNodePtr = std::shared_ptr<const TermNode>;

class Term {
public:
    Term();  // the constant term 1
    explicit Term(TermNodePtr node) : node_(std::move(node)) {}

    static Term one();
    static Term var(const std::string& name);

    TermKind kind() const;
    const std::string& symbol() const;          // Var name or App function symbol
    const std::vector<STerm>& args() const;     // Sum summands or App arguments
    const std::vector<Factor>& factors() const; // Prod factors
    std::size_t hash() const;

    const TermNode* node() const { return node_.get(); }

private:
    TermNodePtr node_;
};

struct STerm {
    Rational coeff;
    Term term;

    STerm() : coeff(0), term(Term::one()) {}
    STerm(Rational c, Term t) : coeff(std::move(c)), term(std::move(t)) {}
};

struct Factor {
    Term base;
    long long exp;
};

struct TermNode {
    TermKind kind;
    std::string symbol;          // Var / App
    std::vector<STerm> args;     // Sum / App
    std::vector<Factor> factors; // Prod
    std::size_t hash = 0;
};

int compare(const Term& a, const Term& b);
int compare(const STerm& a, const STerm& b);

inline bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }
inline bool operator!=(const Term& a, const Term& b) { return compare(a, b) != 0; }
inline bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

inline bool operator==(const STerm& a, const STerm& b) {
    return a.coeff == b.coeff && a.term == b.term;
}
inline bool operator!=(const STerm& a, const STerm& b) { return !(a == b); }

namespace detail {

inline std::size_t node_hash(const TermNode& n) {
    std::size_t h = static_cast<std::size_t>(n.kind) * 0x9e3779b97f4a7c15ULL;
    h = hash_combine(h, std::hash<std::string>{}(n.symbol));
    for (const auto& s : n.args) {
        h = hash_combine(h, hash_rational(s.coeff));
        h = hash_combine(h, s.term.hash());
    }
    for (const auto& f : n.factors) {
        h = hash_combine(h, f.base.hash());
        h = hash_combine(h, std::hash<long long>{}(f.exp));
    }
    return h;
}

inline TermNodePtr make_node(TermNode n) {
    n.hash = node_hash(n);
    return std::make_shared<const TermNode>(std::move(n));
}

inline const TermNodePtr& one_node() {
    static const TermNodePtr node = make_node(TermNode{TermKind::One, "", {}, {}});
    return node;
}

}  // namespace detail

inline Term::Term() : node_(detail::one_node()) {}

inline Term Term::one() { return Term(); }

inline Term Term::var(const std::string& name) {
    return Term(detail::make_node(TermNode{TermKind::Var, name, {}, {}}));
}

inline TermKind Term::kind() const { return node_->kind; }
inline const std::string& Term::symbol() const { return node_->symbol; }
inline const std::vector<STerm>& Term::args() const { return node_->args; }
inline const std::vector<Factor>& Term::factors() const { return node_->factors; }
inline std::size_t Term::hash() const { return node_->hash; }

// Fixed total order: 1 < variables < products < sums < applications, then
// lexicographic within a category. Applications order by symbol, then arity,
// then argument lists.
inline int compare(const Term& a, const Term& b) {
    if (a.node() == b.node()) return 0;
    int ka = static_cast<int>(a.kind()), kb = static_cast<int>(b.kind());
    if (ka != kb) return ka < kb ? -1 : 1;
    switch (a.kind()) {
    case TermKind::One:
        return 0;
    case TermKind::Var:
        return a.symbol().compare(b.symbol()) < 0 ? -1 : (a.symbol() == b.symbol() ? 0 : 1);
    case TermKind::Prod: {
        const auto& fa = a.factors();
        const auto& fb = b.factors();
        std::size_t n = std::min(fa.size(), fb.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = compare(fa[i].base, fb[i].base);
            if (c != 0) return c;
            if (fa[i].exp != fb[i].exp) return fa[i].exp < fb[i].exp ? -1 : 1;
        }
        if (fa.size() != fb.size()) return fa.size() < fb.size() ? -1 : 1;
        return 0;
    }
    case TermKind::Sum: {
        const auto& sa = a.args();
        const auto& sb = b.args();
        std::size_t n = std::min(sa.size(), sb.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = compare(sa[i], sb[i]);
            if (c != 0) return c;
        }
        if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
        return 0;
    }
    case TermKind::App: {
        int c = a.symbol().compare(b.symbol());
        if (c != 0) return c < 0 ? -1 : 1;
        const auto& sa = a.args();
        const auto& sb = b.args();
        if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
        for (std::size_t i = 0; i < sa.size(); ++i) {
            int cc = compare(sa[i], sb[i]);
            if (cc != 0) return cc;
        }
        return 0;
    }
    }
    return 0;
}

inline int compare(const STerm& a, const STerm& b) {
    int c = compare(a.term, b.term);
    if (c != 0) return c;
    if (a.coeff != b.coeff) return a.coeff < b.coeff ? -1 : 1;
    return 0;
}

struct canon_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonization may consult a nonzero oracle: exponent runs over a base the
// caller knows to be nonzero are merged even when some exponent is < 1.
struct CanonOptions {
    std::function<bool(const Term&)> known_nonzero;

    bool nonzero(const Term& t) const { return known_nonzero && known_nonzero(t); }
};

namespace detail {

inline Term make_sum_term(std::vector<STerm> summands);
inline Term make_prod_term(std::vector<Factor> factors, const CanonOptions& opts);

// Combine flat summand lists, merging equal terms. Returns a canonical s-term.
inline STerm build_sum(std::vector<STerm> flat) {
    std::sort(flat.begin(), flat.end(),
              [](const STerm& x, const STerm& y) { return compare(x.term, y.term) < 0; });
    std::vector<STerm> merged;
    for (auto& s : flat) {
        if (s.coeff == 0) continue;
        if (!merged.empty() && merged.back().term == s.term) {
            merged.back().coeff += s.coeff;
            if (merged.back().coeff == 0) merged.pop_back();
        } else {
            merged.push_back(std::move(s));
        }
    }
    if (merged.empty()) return STerm(Rational(0), Term::one());
    if (merged.size() == 1) return merged[0];
    Rational lead = merged[0].coeff;
    for (auto& s : merged) s.coeff /= lead;
    return STerm(lead, make_sum_term(std::move(merged)));
}

inline Term make_sum_term(std::vector<STerm> summands) {
    TermNode n{TermKind::Sum, "", std::move(summands), {}};
    return Term(make_node(std::move(n)));
}

// Sorts factors, merges runs of equal bases where sound, drops unit bases.
inline Term make_prod_term(std::vector<Factor> factors, const CanonOptions& opts) {
    std::vector<Factor> flat;
    for (auto& f : factors) {
        if (f.base.kind() == TermKind::One) continue;
        flat.push_back(std::move(f));
    }
    std::stable_sort(flat.begin(), flat.end(), [](const Factor& x, const Factor& y) {
        int c = compare(x.base, y.base);
        if (c != 0) return c < 0;
        return x.exp < y.exp;
    });
    std::vector<Factor> out;
    std::size_t i = 0;
    while (i < flat.size()) {
        std::size_t j = i;
        while (j < flat.size() && flat[j].base == flat[i].base) ++j;
        // [i, j) is a run over one base
        if (opts.nonzero(flat[i].base)) {
            long long e = 0;
            for (std::size_t k = i; k < j; ++k) e += flat[k].exp;
            if (e != 0) out.push_back(Factor{flat[i].base, e});
        } else {
            // merge only the sub-run of exponents >= 1; keep the rest apart
            long long pos = 0;
            std::vector<Factor> rest;
            for (std::size_t k = i; k < j; ++k) {
                if (flat[k].exp >= 1)
                    pos += flat[k].exp;
                else
                    rest.push_back(flat[k]);
            }
            if (pos != 0) rest.push_back(Factor{flat[i].base, pos});
            std::sort(rest.begin(), rest.end(),
                      [](const Factor& x, const Factor& y) { return x.exp < y.exp; });
            for (auto& f : rest) out.push_back(std::move(f));
        }
        i = j;
    }
    if (out.empty()) return Term::one();
    if (out.size() == 1 && out[0].exp == 1) return out[0].base;
    TermNode n{TermKind::Prod, "", {}, std::move(out)};
    return Term(make_node(std::move(n)));
}

inline STerm pow_sterm(const STerm& s, long long e, const CanonOptions& opts);

// Multiply two canonical s-terms.
inline STerm mul_sterms(const STerm& a, const STerm& b, const CanonOptions& opts) {
    if (a.coeff == 0 || b.coeff == 0) return STerm(Rational(0), Term::one());
    std::vector<Factor> factors;
    auto push = [&factors](const Term& t) {
        if (t.kind() == TermKind::One) return;
        if (t.kind() == TermKind::Prod) {
            for (const auto& f : t.factors()) factors.push_back(f);
        } else {
            factors.push_back(Factor{t, 1});
        }
    };
    push(a.term);
    push(b.term);
    return STerm(a.coeff * b.coeff, make_prod_term(std::move(factors), opts));
}

inline STerm pow_sterm(const STerm& s, long long e, const CanonOptions& opts) {
    if (e == 1) return s;
    if (s.coeff == 0) {
        if (e > 0) return STerm(Rational(0), Term::one());
        if (e == 0) return STerm(Rational(1), Term::one());
        throw canon_error("division by zero");
    }
    Rational c = pow_rat(s.coeff, e);
    const Term& t = s.term;
    if (t.kind() == TermKind::One) return STerm(c, Term::one());
    if (t.kind() == TermKind::Prod) {
        std::vector<Factor> factors = t.factors();
        for (auto& f : factors) f.exp *= e;
        return STerm(c, make_prod_term(std::move(factors), opts));
    }
    if (e == 0 && opts.nonzero(t)) return STerm(c, Term::one());
    return STerm(c, make_prod_term({Factor{t, e}}, opts));
}

inline STerm add_sterms(const STerm& a, const STerm& b) {
    std::vector<STerm> flat;
    auto push = [&flat](const STerm& s) {
        if (s.coeff == 0) return;
        if (s.term.kind() == TermKind::Sum) {
            for (const auto& x : s.term.args()) flat.emplace_back(s.coeff * x.coeff, x.term);
        } else {
            flat.push_back(s);
        }
    };
    push(a);
    push(b);
    return build_sum(std::move(flat));
}

}  // namespace detail

// Raw input expressions: binary +,-,*,/ and integer ^, rational literals,
// variables and function applications. Produced by the parser and by tests.
struct RawExpr {
    enum class Op { Num, Var, Add, Sub, Mul, Div, Neg, Pow, App };

    Op op = Op::Num;
    Rational value;                 // Num
    std::string name;               // Var / App
    std::vector<RawExpr> kids;      // operands / arguments
    long long exponent = 0;         // Pow

    static RawExpr num(Rational v) {
        RawExpr e;
        e.op = Op::Num;
        e.value = std::move(v);
        return e;
    }
    static RawExpr var(std::string n) {
        RawExpr e;
        e.op = Op::Var;
        e.name = std::move(n);
        return e;
    }
    static RawExpr binary(Op op, RawExpr a, RawExpr b) {
        RawExpr e;
        e.op = op;
        e.kids.push_back(std::move(a));
        e.kids.push_back(std::move(b));
        return e;
    }
    static RawExpr add(RawExpr a, RawExpr b) { return binary(Op::Add, std::move(a), std::move(b)); }
    static RawExpr sub(RawExpr a, RawExpr b) { return binary(Op::Sub, std::move(a), std::move(b)); }
    static RawExpr mul(RawExpr a, RawExpr b) { return binary(Op::Mul, std::move(a), std::move(b)); }
    static RawExpr div(RawExpr a, RawExpr b) { return binary(Op::Div, std::move(a), std::move(b)); }
    static RawExpr neg(RawExpr a) {
        RawExpr e;
        e.op = Op::Neg;
        e.kids.push_back(std::move(a));
        return e;
    }
    static RawExpr pow(RawExpr a, long long n) {
        RawExpr e;
        e.op = Op::Pow;
        e.kids.push_back(std::move(a));
        e.exponent = n;
        return e;
    }
    static RawExpr app(std::string f, std::vector<RawExpr> args) {
        RawExpr e;
        e.op = Op::App;
        e.name = std::move(f);
        e.kids = std::move(args);
        return e;
    }
};

namespace detail {

inline STerm canonize_app(const std::string& sym, std::vector<STerm> args, const CanonOptions& opts);

inline STerm canonize_impl(const RawExpr& raw, const CanonOptions& opts) {
    switch (raw.op) {
    case RawExpr::Op::Num:
        return STerm(raw.value, Term::one());
    case RawExpr::Op::Var:
        return STerm(Rational(1), Term::var(raw.name));
    case RawExpr::Op::Add:
        return add_sterms(canonize_impl(raw.kids[0], opts), canonize_impl(raw.kids[1], opts));
    case RawExpr::Op::Sub: {
        STerm b = canonize_impl(raw.kids[1], opts);
        b.coeff = -b.coeff;
        return add_sterms(canonize_impl(raw.kids[0], opts), b);
    }
    case RawExpr::Op::Neg: {
        STerm a = canonize_impl(raw.kids[0], opts);
        a.coeff = -a.coeff;
        if (a.coeff == 0) return STerm(Rational(0), Term::one());
        return a;
    }
    case RawExpr::Op::Mul:
        return mul_sterms(canonize_impl(raw.kids[0], opts), canonize_impl(raw.kids[1], opts), opts);
    case RawExpr::Op::Div:
        return mul_sterms(canonize_impl(raw.kids[0], opts),
                          pow_sterm(canonize_impl(raw.kids[1], opts), -1, opts), opts);
    case RawExpr::Op::Pow:
        return pow_sterm(canonize_impl(raw.kids[0], opts), raw.exponent, opts);
    case RawExpr::Op::App: {
        std::vector<STerm> args;
        args.reserve(raw.kids.size());
        for (const auto& k : raw.kids) args.push_back(canonize_impl(k, opts));
        return canonize_app(raw.name, std::move(args), opts);
    }
    }
    throw canon_error("malformed raw expression");
}

// min: arguments sorted under the term order, duplicates removed, a positive
// scalar extracted so the first argument has coefficient +-1. max is
// rewritten as -min of the negated arguments. abs pulls |c*t| -> |c|*|t|.
inline STerm canonize_app(const std::string& sym, std::vector<STerm> args, const CanonOptions& opts) {
    if (sym == "max") {
        for (auto& a : args) a.coeff = -a.coeff;
        STerm m = canonize_app("min", std::move(args), opts);
        m.coeff = -m.coeff;
        return m;
    }
    if (sym == "abs" && args.size() == 1) {
        STerm a = args[0];
        if (a.term.kind() == TermKind::One) return STerm(abs_val(a.coeff), Term::one());
        Rational c = abs_val(a.coeff);
        a.coeff = 1;
        TermNode n{TermKind::App, "abs", {a}, {}};
        return STerm(c, Term(make_node(std::move(n))));
    }
    if (sym == "min" && !args.empty()) {
        std::sort(args.begin(), args.end(),
                  [](const STerm& x, const STerm& y) { return compare(x, y) < 0; });
        args.erase(std::unique(args.begin(), args.end(),
                               [](const STerm& x, const STerm& y) { return x == y; }),
                   args.end());
        bool all_const = true;
        for (const auto& a : args)
            if (a.term.kind() != TermKind::One) all_const = false;
        if (all_const) {
            Rational m = args[0].coeff;
            for (const auto& a : args) m = std::min(m, a.coeff);
            return STerm(m, Term::one());
        }
        if (args.size() == 1) return args[0];
        Rational scale = abs_val(args[0].coeff);
        if (scale == 0) scale = 1;
        for (auto& a : args) a.coeff /= scale;
        TermNode n{TermKind::App, "min", std::move(args), {}};
        return STerm(scale, Term(make_node(std::move(n))));
    }
    if ((sym == "floor" || sym == "ceil") && args.size() == 1 && args[0].term.kind() == TermKind::One) {
        Rational v = args[0].coeff;
        return STerm(sym == "floor" ? floor_rat(v) : ceil_rat(v), Term::one());
    }
    TermNode n{TermKind::App, sym, std::move(args), {}};
    return STerm(Rational(1), Term(make_node(std::move(n))));
}

}  // namespace detail

inline STerm canonize(const RawExpr& raw, const CanonOptions& opts = {}) {
    return detail::canonize_impl(raw, opts);
}

inline STerm scale(const Rational& c, const STerm& s) {
    if (c == 0 || s.coeff == 0) return STerm(Rational(0), Term::one());
    return STerm(c * s.coeff, s.term);
}

// ---------------------------------------------------------------------------
// Evaluation (test oracle).

using FuncTable =
    std::map<std::string, std::function<std::optional<Rational>(const std::vector<Rational>&)>>;

inline std::optional<Rational> evaluate(const STerm& s,
                                        const std::map<std::string, Rational>& env,
                                        const FuncTable& funcs);

inline std::optional<Rational> evaluate(const Term& t,
                                        const std::map<std::string, Rational>& env,
                                        const FuncTable& funcs) {
    switch (t.kind()) {
    case TermKind::One:
        return Rational(1);
    case TermKind::Var: {
        auto it = env.find(t.symbol());
        if (it == env.end()) return std::nullopt;
        return it->second;
    }
    case TermKind::Sum: {
        Rational acc(0);
        for (const auto& s : t.args()) {
            auto v = evaluate(s, env, funcs);
            if (!v) return std::nullopt;
            acc += *v;
        }
        return acc;
    }
    case TermKind::Prod: {
        Rational acc(1);
        for (const auto& f : t.factors()) {
            auto b = evaluate(f.base, env, funcs);
            if (!b) return std::nullopt;
            if (*b == 0 && f.exp < 0) return std::nullopt;
            acc *= pow_rat(*b, f.exp);
        }
        return acc;
    }
    case TermKind::App: {
        auto it = funcs.find(t.symbol());
        if (it == funcs.end()) return std::nullopt;
        std::vector<Rational> vals;
        vals.reserve(t.args().size());
        for (const auto& a : t.args()) {
            auto v = evaluate(a, env, funcs);
            if (!v) return std::nullopt;
            vals.push_back(*v);
        }
        return it->second(vals);
    }
    }
    return std::nullopt;
}

inline std::optional<Rational> evaluate(const STerm& s,
                                        const std::map<std::string, Rational>& env,
                                        const FuncTable& funcs) {
    auto v = evaluate(s.term, env, funcs);
    if (!v) return std::nullopt;
    return s.coeff * *v;
}

// Direct recursive evaluation of a raw tree, independent of canonization.
inline std::optional<Rational> evaluate_raw(const RawExpr& e,
                                            const std::map<std::string, Rational>& env,
                                            const FuncTable& funcs) {
    switch (e.op) {
    case RawExpr::Op::Num:
        return e.value;
    case RawExpr::Op::Var: {
        auto it = env.find(e.name);
        if (it == env.end()) return std::nullopt;
        return it->second;
    }
    case RawExpr::Op::Add: {
        auto a = evaluate_raw(e.kids[0], env, funcs), b = evaluate_raw(e.kids[1], env, funcs);
        if (!a || !b) return std::nullopt;
        return *a + *b;
    }
    case RawExpr::Op::Sub: {
        auto a = evaluate_raw(e.kids[0], env, funcs), b = evaluate_raw(e.kids[1], env, funcs);
        if (!a || !b) return std::nullopt;
        return *a - *b;
    }
    case RawExpr::Op::Mul: {
        auto a = evaluate_raw(e.kids[0], env, funcs), b = evaluate_raw(e.kids[1], env, funcs);
        if (!a || !b) return std::nullopt;
        return *a * *b;
    }
    case RawExpr::Op::Div: {
        auto a = evaluate_raw(e.kids[0], env, funcs), b = evaluate_raw(e.kids[1], env, funcs);
        if (!a || !b || *b == 0) return std::nullopt;
        return *a / *b;
    }
    case RawExpr::Op::Neg: {
        auto a = evaluate_raw(e.kids[0], env, funcs);
        if (!a) return std::nullopt;
        return -*a;
    }
    case RawExpr::Op::Pow: {
        auto a = evaluate_raw(e.kids[0], env, funcs);
        if (!a) return std::nullopt;
        if (*a == 0 && e.exponent < 0) return std::nullopt;
        return pow_rat(*a, e.exponent);
    }
    case RawExpr::Op::App: {
        if (e.name == "max") {
            // mirror the canonizer's reduction to min
            std::vector<RawExpr> neg;
            neg.reserve(e.kids.size());
            for (const auto& k : e.kids) neg.push_back(RawExpr::neg(k));
            auto m = evaluate_raw(RawExpr::app("min", std::move(neg)), env, funcs);
            if (!m) return std::nullopt;
            return -*m;
        }
        auto it = funcs.find(e.name);
        if (it == funcs.end()) return std::nullopt;
        std::vector<Rational> vals;
        for (const auto& k : e.kids) {
            auto v = evaluate_raw(k, env, funcs);
            if (!v) return std::nullopt;
            vals.push_back(*v);
        }
        return it->second(vals);
    }
    }
    return std::nullopt;
}

// Exactly computable builtins, used by the sampling oracles.
inline FuncTable exact_builtin_funcs() {
    FuncTable t;
    t["abs"] = [](const std::vector<Rational>& v) -> std::optional<Rational> {
        if (v.size() != 1) return std::nullopt;
        return abs_val(v[0]);
    };
    t["min"] = [](const std::vector<Rational>& v) -> std::optional<Rational> {
        if (v.empty()) return std::nullopt;
        Rational m = v[0];
        for (const auto& x : v) m = std::min(m, x);
        return m;
    };
    t["floor"] = [](const std::vector<Rational>& v) -> std::optional<Rational> {
        if (v.size() != 1) return std::nullopt;
        return floor_rat(v[0]);
    };
    t["ceil"] = [](const std::vector<Rational>& v) -> std::optional<Rational> {
        if (v.size() != 1) return std::nullopt;
        return ceil_rat(v[0]);
    };
    return t;
}

// ---------------------------------------------------------------------------
// Printing.

inline std::string to_string(const Term& t);

inline std::string to_string(const STerm& s) {
    if (s.term.kind() == TermKind::One) return to_string(s.coeff);
    std::string body = to_string(s.term);
    bool wrap = s.term.kind() == TermKind::Sum;
    if (wrap) body = "(" + body + ")";
    if (s.coeff == 1) return body;
    if (s.coeff == -1) return "-" + body;
    return to_string(s.coeff) + "*" + body;
}

inline std::string to_string(const Term& t) {
    switch (t.kind()) {
    case TermKind::One:
        return "1";
    case TermKind::Var:
        return t.symbol();
    case TermKind::Sum: {
        std::string out;
        bool first = true;
        for (const auto& s : t.args()) {
            std::string piece = to_string(s);
            if (!first && !piece.empty() && piece[0] != '-') out += " + ";
            else if (!first) {
                out += " - ";
                piece = piece.substr(1);
            }
            out += piece;
            first = false;
        }
        return out;
    }
    case TermKind::Prod: {
        std::string out;
        bool first = true;
        for (const auto& f : t.factors()) {
            if (!first) out += "*";
            std::string base = to_string(f.base);
            if (f.base.kind() == TermKind::Sum || f.base.kind() == TermKind::Prod)
                base = "(" + base + ")";
            out += base;
            if (f.exp != 1) out += "^" + std::to_string(f.exp);
            first = false;
        }
        return out;
    }
    case TermKind::App: {
        std::string out = t.symbol() + "(";
        bool first = true;
        for (const auto& a : t.args()) {
            if (!first) out += ", ";
            out += to_string(a);
            first = false;
        }
        return out + ")";
    }
    }
    return "?";
}

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};
struct TermEq {
    bool operator()(const Term& a, const Term& b) const { return a == b; }
};

}  // namespace ineq
