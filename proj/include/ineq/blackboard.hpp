#pragma once

// The shared blackboard: names every problem subterm with an index t_i,
// records definitions, and keeps the strongest known pairwise comparisons,
// sign facts, disequalities and pending clauses. Every stored fact carries
// the id of the trace step that produced it.

#include "ineq/comparison.hpp"
#include "ineq/term.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ineq {

// ---------------------------------------------------------------------------
// Definitions

struct Definition {
    enum class Kind { Atom, Sum, Prod, App };
    Kind kind = Kind::Atom;
    std::string symbol;                                    // Var name / App symbol
    std::vector<std::pair<Rational, TermIndex>> summands;  // Sum / App args
    std::vector<std::pair<TermIndex, long long>> factors;  // Prod
};

// ---------------------------------------------------------------------------
// Proof trace

struct TraceStep {
    std::size_t id = 0;
    std::string module;
    std::string rule;
    std::vector<std::size_t> premises;
    enum class Kind { Fact, Define, Assume } kind = Kind::Fact;
    Comparison fact;        // Fact / Assume
    TermIndex def_index = 0;  // Define
};

struct Just {
    std::string module;
    std::string rule;
    std::vector<std::size_t> premises;
};

enum class Change { redundant, fresh, strengthened, contradiction };

struct StoredFact {
    Comparison cmp;
    std::size_t step = 0;
};

// Range of coefficients c for which `t_i dir c*t_j` is entailed.
struct CoeffRange {
    bool empty = true;
    std::optional<Rational> lo, hi;  // nullopt = unbounded
    bool lo_strict = false;          // entailed comparison strict at lo
    bool hi_strict = false;
    bool interior_strict = false;

    bool contains(const Rational& c) const {
        if (empty) return false;
        if (lo && c < *lo) return false;
        if (hi && c > *hi) return false;
        return true;
    }
    // strictness of the entailed comparison at coefficient c (c must be contained)
    bool strict_at(const Rational& c) const {
        if (lo && c == *lo) return lo_strict;
        if (hi && c == *hi) return hi_strict;
        return interior_strict;
    }
};

struct ClauseLit {
    Comparison cmp;
    bool positive = true;  // false: the literal is the negation of cmp
};

struct Clause {
    std::vector<ClauseLit> lits;
    std::size_t step = 0;  // step that introduced the clause (0 = none)
    std::string origin;    // for diagnostics
    std::vector<std::size_t> premises;
    std::vector<std::size_t> refuted_by;  // premise ids collected while shrinking
};

class Blackboard {
public:
    Blackboard() {
        terms_.push_back(Term::one());
        defs_.push_back(Definition{Definition::Kind::Atom, "1", {}, {}});
        index_.emplace(Term::one(), 0);
        def_step_.push_back(add_define_step(0, {"blackboard", "define", {}}));
    }

    // -- registration -------------------------------------------------------

    TermIndex register_term(const Term& t) {
        auto it = index_.find(t);
        if (it != index_.end()) return it->second;
        Definition def;
        switch (t.kind()) {
        case TermKind::One:
            return 0;
        case TermKind::Var:
            def.kind = Definition::Kind::Atom;
            def.symbol = t.symbol();
            break;
        case TermKind::Sum: {
            def.kind = Definition::Kind::Sum;
            for (const auto& s : t.args())
                def.summands.emplace_back(s.coeff, register_term(s.term));
            break;
        }
        case TermKind::Prod: {
            def.kind = Definition::Kind::Prod;
            for (const auto& f : t.factors())
                def.factors.emplace_back(register_term(f.base), f.exp);
            break;
        }
        case TermKind::App: {
            def.kind = Definition::Kind::App;
            def.symbol = t.symbol();
            for (const auto& s : t.args())
                def.summands.emplace_back(s.coeff, register_term(s.term));
            break;
        }
        }
        TermIndex idx = static_cast<TermIndex>(terms_.size());
        terms_.push_back(t);
        defs_.push_back(std::move(def));
        index_.emplace(t, idx);
        def_step_.push_back(add_define_step(idx, {"blackboard", "define", {}}));
        ++revision_;
        return idx;
    }

    std::optional<TermIndex> find_term(const Term& t) const {
        auto it = index_.find(t);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t term_count() const { return terms_.size(); }
    const Term& term(TermIndex i) const { return terms_[i]; }
    const Definition& definition(TermIndex i) const { return defs_[i]; }
    std::size_t definition_step(TermIndex i) const { return def_step_[i]; }

    // -- assertions ----------------------------------------------------------

    Change assert_comparison(Comparison cmp, const Just& just) {
        if (contradiction_) return Change::contradiction;
        // normalize
        if (cmp.coeff == 0) cmp.rhs = 0;
        if (cmp.lhs == cmp.rhs) {
            if (cmp.rhs == 0) {
                // t0 rel c: constant truth
                bool holds = rel_holds(Rational(1), cmp.rel, cmp.coeff);
                if (holds) return Change::redundant;
                std::size_t id = add_fact_step(cmp, just);
                set_contradiction(id, id);
                return Change::contradiction;
            }
            // t rel c*t  <=>  (1-c)*t rel 0
            Rational d = 1 - cmp.coeff;
            if (d == 0) {
                if (cmp.rel == Rel::le || cmp.rel == Rel::ge || cmp.rel == Rel::eq)
                    return Change::redundant;
                std::size_t id = add_fact_step(cmp, just);
                set_contradiction(id, id);
                return Change::contradiction;
            }
            Rel r = d > 0 ? cmp.rel : mirror(cmp.rel);
            return assert_comparison(Comparison(cmp.lhs, r, Rational(0), 0), just);
        }
        if (cmp.rhs == 0) return merge_const(cmp, just);
        if (cmp.lhs > cmp.rhs) {
            // reorient: t_l rel c*t_r <=> t_r rel' (1/c)*t_l
            Rel r = cmp.coeff > 0 ? mirror(cmp.rel) : cmp.rel;
            cmp = Comparison(cmp.rhs, r, 1 / cmp.coeff, cmp.lhs);
        }
        if (cmp.lhs == 0) {
            // t0 rel c*t_r <=> t_r rel' (1/c)
            Rel r = cmp.coeff > 0 ? mirror(cmp.rel) : cmp.rel;
            return merge_const(Comparison(cmp.rhs, r, 1 / cmp.coeff, 0), just);
        }
        return merge_pair(cmp, just);
    }

    // -- queries -------------------------------------------------------------

    Sign sign_of(TermIndex i) const {
        if (i == 0) return Sign::pos;
        auto it = const_.find(i);
        if (it == const_.end()) return Sign::unknown;
        const ConstEntry& e = it->second;
        if (e.eq) {
            int s = sign_of(e.eq->cmp.coeff);
            return s > 0 ? Sign::pos : s < 0 ? Sign::neg : Sign::zero;
        }
        bool dis0 = false;
        for (const auto& d : e.diseqs)
            if (d.cmp.coeff == 0) dis0 = true;
        if (e.lo) {
            const Rational& v = e.lo->cmp.coeff;
            if (v > 0 || (v == 0 && is_strict(e.lo->cmp.rel))) return Sign::pos;
            if (v == 0) return dis0 ? Sign::pos : Sign::nonneg;
        }
        if (e.hi) {
            const Rational& v = e.hi->cmp.coeff;
            if (v < 0 || (v == 0 && is_strict(e.hi->cmp.rel))) return Sign::neg;
            if (v == 0) return dis0 ? Sign::neg : Sign::nonpos;
        }
        return dis0 ? Sign::nonzero : Sign::unknown;
    }

    // ids of facts establishing the sign of i (for trace premises)
    std::vector<std::size_t> sign_premises(TermIndex i) const {
        std::vector<std::size_t> out;
        auto it = const_.find(i);
        if (it == const_.end()) return out;
        const ConstEntry& e = it->second;
        if (e.eq) out.push_back(e.eq->step);
        if (e.lo) out.push_back(e.lo->step);
        if (e.hi) out.push_back(e.hi->step);
        for (const auto& d : e.diseqs)
            if (d.cmp.coeff == 0) out.push_back(d.step);
        return out;
    }

    bool known_nonzero(TermIndex i) const {
        Sign s = sign_of(i);
        return s == Sign::pos || s == Sign::neg || s == Sign::nonzero;
    }

    // All c (with strictness) such that stored facts entail t_i dir c*t_j,
    // dir in {le, ge}.
    CoeffRange implied_range(TermIndex i, TermIndex j, Rel dir) const;

    bool entails(const Comparison& cmp, std::vector<std::size_t>* premises = nullptr) const;
    bool refutes(const Comparison& cmp, std::vector<std::size_t>* premises = nullptr) const {
        return entails(ineq::negate(cmp), premises);
    }

    bool has_contradiction() const { return contradiction_.has_value(); }
    std::pair<std::size_t, std::size_t> contradiction_witness() const { return *contradiction_; }

    std::uint64_t revision() const { return revision_; }

    // -- clauses --------------------------------------------------------------

    void assert_clause(Clause cl, const Just& just) {
        if (contradiction_) return;
        cl.premises = just.premises;
        cl.origin = just.module + "/" + just.rule;
        if (process_clause(cl)) pending_.push_back(std::move(cl));
    }

    // Re-examine pending clauses against current facts; called after module passes.
    void rescan_clauses() {
        bool again = true;
        while (again && !contradiction_) {
            again = false;
            std::vector<Clause> keep;
            for (auto& cl : pending_) {
                std::size_t before = trace_.size();
                bool still = process_clause(cl);
                if (trace_.size() != before) again = true;
                if (still && !contradiction_) keep.push_back(std::move(cl));
            }
            pending_ = std::move(keep);
        }
    }

    std::size_t pending_clause_count() const { return pending_.size(); }

    // -- trace ----------------------------------------------------------------

    const std::vector<TraceStep>& trace() const { return trace_; }

    std::size_t add_fact_step(const Comparison& c, const Just& just) {
        TraceStep s;
        s.id = trace_.size();
        s.module = just.module;
        s.rule = just.rule;
        s.premises = just.premises;
        s.kind = TraceStep::Kind::Fact;
        s.fact = c;
        trace_.push_back(std::move(s));
        return trace_.back().id;
    }

    std::size_t add_assume_step(const Comparison& c) {
        TraceStep s;
        s.id = trace_.size();
        s.module = "split";
        s.rule = "assume";
        s.kind = TraceStep::Kind::Assume;
        s.fact = c;
        trace_.push_back(std::move(s));
        return trace_.back().id;
    }

    void set_contradiction(std::size_t a, std::size_t b) {
        if (!contradiction_) {
            contradiction_ = std::make_pair(a, b);
            ++revision_;
        }
    }

    // enumeration helpers for the modules ------------------------------------

    struct PairFactView {
        Comparison cmp;
        std::size_t step;
    };

    // every stored comparison (pair facts, constant facts, disequalities)
    std::vector<PairFactView> all_facts() const {
        std::vector<PairFactView> out;
        for (const auto& [idx, e] : const_) {
            if (e.eq) out.push_back({e.eq->cmp, e.eq->step});
            if (e.lo) out.push_back({e.lo->cmp, e.lo->step});
            if (e.hi) out.push_back({e.hi->cmp, e.hi->step});
            for (const auto& d : e.diseqs) out.push_back({d.cmp, d.step});
        }
        for (const auto& [key, e] : pairs_) {
            if (e.eq) out.push_back({e.eq->cmp, e.eq->step});
            for (const auto& h : e.half) out.push_back({h.cmp, h.step});
            for (const auto& d : e.diseqs) out.push_back({d.cmp, d.step});
        }
        return out;
    }

    // -- printing --------------------------------------------------------------

    std::string print_index(TermIndex i) const { return "t" + std::to_string(i); }

    std::string print_definition(TermIndex i) const {
        const Definition& d = defs_[i];
        std::string out = print_index(i) + " := ";
        switch (d.kind) {
        case Definition::Kind::Atom:
            out += (i == 0) ? "1" : d.symbol;
            break;
        case Definition::Kind::Sum: {
            bool first = true;
            for (const auto& [c, k] : d.summands) {
                if (!first) out += " + ";
                if (c != 1) out += to_string(c) + "*";
                out += print_index(k);
                first = false;
            }
            break;
        }
        case Definition::Kind::Prod: {
            bool first = true;
            for (const auto& [k, e] : d.factors) {
                if (!first) out += "*";
                out += print_index(k);
                if (e != 1) out += "^" + std::to_string(e);
                first = false;
            }
            break;
        }
        case Definition::Kind::App: {
            out += d.symbol + "(";
            bool first = true;
            for (const auto& [c, k] : d.summands) {
                if (!first) out += ", ";
                if (c != 1) out += to_string(c) + "*";
                out += print_index(k);
                first = false;
            }
            out += ")";
            break;
        }
        }
        return out;
    }

private:
    struct ConstEntry {
        std::optional<StoredFact> eq, lo, hi;
        std::vector<StoredFact> diseqs;
    };
    struct PairEntry {
        std::optional<StoredFact> eq;
        std::vector<StoredFact> half;  // at most two
        std::vector<StoredFact> diseqs;
    };

    std::size_t add_define_step(TermIndex idx, const Just& just) {
        TraceStep s;
        s.id = trace_.size();
        s.module = just.module;
        s.rule = just.rule;
        s.kind = TraceStep::Kind::Define;
        s.def_index = idx;
        trace_.push_back(std::move(s));
        return trace_.back().id;
    }

    // ---- 1D merge: t_l rel c (entry vs constants) ---------------------------

    Change merge_const(const Comparison& cmp, const Just& just);

    // ---- 2D merge: t_a rel c*t_b, 0 < a < b ---------------------------------

    Change merge_pair(const Comparison& cmp, const Just& just);

    void promote_with_diseqs(TermIndex a, TermIndex b, PairEntry& e) {
        for (auto& h : e.half) {
            if (!is_weak_ineq(h.cmp.rel)) continue;
            for (std::size_t k = 0; k < e.diseqs.size(); ++k) {
                if (e.diseqs[k].cmp.coeff == h.cmp.coeff) {
                    Comparison promo(a, strengthen(h.cmp.rel), h.cmp.coeff, b);
                    std::size_t pid = add_fact_step(
                        promo, {"blackboard", "promote-strict", {h.step, e.diseqs[k].step}});
                    h = StoredFact{promo, pid};
                    e.diseqs.erase(e.diseqs.begin() + static_cast<long>(k));
                    break;
                }
            }
        }
    }

    // helpers
    struct HP {
        Rational a, b;  // a*x + b*y (> | >=) 0
        bool strict;
        std::size_t fact_id;   // trace id of the originating fact
        int origin;            // index into the working set (-1 new)
    };

    static HP to_halfplane(const Comparison& c, std::size_t id, int origin) {
        // c: t_a rel coeff*t_b over (x, y)
        switch (c.rel) {
        case Rel::lt: return {Rational(-1), c.coeff, true, id, origin};
        case Rel::le: return {Rational(-1), c.coeff, false, id, origin};
        case Rel::gt: return {Rational(1), -c.coeff, true, id, origin};
        case Rel::ge: return {Rational(1), -c.coeff, false, id, origin};
        default: throw std::logic_error("no halfplane for eq/ne");
        }
    }

    static Comparison from_halfplane(TermIndex a_idx, TermIndex b_idx, const Rational& a,
                                     const Rational& b, bool strict) {
        if (a == 0) {
            // b*y >= 0
            Rel r = b > 0 ? (strict ? Rel::gt : Rel::ge) : (strict ? Rel::lt : Rel::le);
            return Comparison(b_idx, r, Rational(0), 0);
        }
        if (b == 0) {
            Rel r = a > 0 ? (strict ? Rel::gt : Rel::ge) : (strict ? Rel::lt : Rel::le);
            return Comparison(a_idx, r, Rational(0), 0);
        }
        // a*x + b*y >= 0  <=>  x >= (-b/a)*y (a>0) | x <= (-b/a)*y (a<0)
        Rel r = a > 0 ? (strict ? Rel::gt : Rel::ge) : (strict ? Rel::lt : Rel::le);
        return Comparison(a_idx, r, -b / a, b_idx);
    }

    ConstEntry& const_entry(TermIndex i) { return const_[i]; }

    const ConstEntry* const_entry_ptr(TermIndex i) const {
        auto it = const_.find(i);
        return it == const_.end() ? nullptr : &it->second;
    }

    const PairEntry* pair_entry_ptr(TermIndex a, TermIndex b) const {
        auto it = pairs_.find({a, b});
        return it == pairs_.end() ? nullptr : &it->second;
    }

    void bump() { ++revision_; }

    // stored state
    std::vector<Term> terms_;
    std::vector<Definition> defs_;
    std::vector<std::size_t> def_step_;
    std::unordered_map<Term, TermIndex, TermHash, TermEq> index_;
    std::map<TermIndex, ConstEntry> const_;
    std::map<std::pair<TermIndex, TermIndex>, PairEntry> pairs_;
    std::vector<Clause> pending_;
    std::optional<std::pair<std::size_t, std::size_t>> contradiction_;
    std::vector<TraceStep> trace_;
    std::uint64_t revision_ = 0;

    bool process_clause(Clause& cl);

public:
    // Exposed for the additive/multiplicative modules and implied_range.
    struct ConstView {
        const StoredFact* eq = nullptr;
        const StoredFact* lo = nullptr;
        const StoredFact* hi = nullptr;
        std::vector<const StoredFact*> diseqs;
    };
    struct PairView {
        const StoredFact* eq = nullptr;
        std::vector<const StoredFact*> half;
        std::vector<const StoredFact*> diseqs;
    };

    ConstView const_view(TermIndex i) const {
        ConstView v;
        if (const ConstEntry* e = const_entry_ptr(i)) {
            if (e->eq) v.eq = &*e->eq;
            if (e->lo) v.lo = &*e->lo;
            if (e->hi) v.hi = &*e->hi;
            for (const auto& d : e->diseqs) v.diseqs.push_back(&d);
        }
        return v;
    }
    PairView pair_view(TermIndex a, TermIndex b) const {
        PairView v;
        if (const PairEntry* e = pair_entry_ptr(a, b)) {
            if (e->eq) v.eq = &*e->eq;
            for (const auto& h : e->half) v.half.push_back(&h);
            for (const auto& d : e->diseqs) v.diseqs.push_back(&d);
        }
        return v;
    }
};

// ---------------------------------------------------------------------------
// merge_const

inline Change Blackboard::merge_const(const Comparison& cmp, const Just& just) {
    TermIndex l = cmp.lhs;
    const Rational& c = cmp.coeff;
    ConstEntry& e = const_entry(l);

    auto contra = [&](std::size_t other) {
        std::size_t id = add_fact_step(cmp, just);
        set_contradiction(other, id);
        return Change::contradiction;
    };

    switch (cmp.rel) {
    case Rel::eq: {
        if (e.eq) {
            if (e.eq->cmp.coeff == c) return Change::redundant;
            return contra(e.eq->step);
        }
        for (const auto& d : e.diseqs)
            if (d.cmp.coeff == c) return contra(d.step);
        if (e.lo) {
            const Rational& v = e.lo->cmp.coeff;
            if (c < v || (c == v && is_strict(e.lo->cmp.rel))) return contra(e.lo->step);
        }
        if (e.hi) {
            const Rational& v = e.hi->cmp.coeff;
            if (c > v || (c == v && is_strict(e.hi->cmp.rel))) return contra(e.hi->step);
        }
        bool had = e.lo || e.hi || !e.diseqs.empty();
        std::size_t id = add_fact_step(cmp, just);
        e.eq = StoredFact{cmp, id};
        e.lo.reset();
        e.hi.reset();
        e.diseqs.clear();
        bump();
        return had ? Change::strengthened : Change::fresh;
    }
    case Rel::lt:
    case Rel::le: {
        bool strict = cmp.rel == Rel::lt;
        if (e.eq) {
            const Rational& v = e.eq->cmp.coeff;
            if (v < c || (v == c && !strict)) return Change::redundant;
            return contra(e.eq->step);
        }
        // redundancy against stored upper bound
        if (e.hi) {
            const Rational& v = e.hi->cmp.coeff;
            bool stored_strict = is_strict(e.hi->cmp.rel);
            if (v < c || (v == c && (stored_strict || !strict))) return Change::redundant;
        }
        // clash against stored lower bound
        if (e.lo) {
            const Rational& v = e.lo->cmp.coeff;
            bool lo_strict = is_strict(e.lo->cmp.rel);
            if (v > c || (v == c && (lo_strict || strict))) return contra(e.lo->step);
            if (v == c) {
                // both weak at c: equality
                std::size_t id = add_fact_step(cmp, just);
                for (const auto& d : e.diseqs)
                    if (d.cmp.coeff == c) {
                        std::size_t eqid = add_fact_step(
                            Comparison(l, Rel::eq, c, 0),
                            {"blackboard", "merge-eq", {e.lo->step, id}});
                        set_contradiction(eqid, d.step);
                        return Change::contradiction;
                    }
                Comparison eq(l, Rel::eq, c, 0);
                std::size_t eqid =
                    add_fact_step(eq, {"blackboard", "merge-eq", {e.lo->step, id}});
                e.eq = StoredFact{eq, eqid};
                e.lo.reset();
                e.hi.reset();
                e.diseqs.clear();
                bump();
                return Change::strengthened;
            }
        }
        // disequality promotion
        std::size_t id = add_fact_step(cmp, just);
        StoredFact stored{cmp, id};
        if (!strict) {
            for (std::size_t k = 0; k < e.diseqs.size(); ++k) {
                if (e.diseqs[k].cmp.coeff == c) {
                    Comparison promo(l, Rel::lt, c, 0);
                    std::size_t pid = add_fact_step(
                        promo, {"blackboard", "promote-strict", {id, e.diseqs[k].step}});
                    stored = StoredFact{promo, pid};
                    e.diseqs.erase(e.diseqs.begin() + static_cast<long>(k));
                    break;
                }
            }
        }
        bool had = e.hi.has_value();
        e.hi = stored;
        bump();
        return had ? Change::strengthened : Change::fresh;
    }
    case Rel::gt:
    case Rel::ge: {
        bool strict = cmp.rel == Rel::gt;
        if (e.eq) {
            const Rational& v = e.eq->cmp.coeff;
            if (v > c || (v == c && !strict)) return Change::redundant;
            return contra(e.eq->step);
        }
        if (e.lo) {
            const Rational& v = e.lo->cmp.coeff;
            bool stored_strict = is_strict(e.lo->cmp.rel);
            if (v > c || (v == c && (stored_strict || !strict))) return Change::redundant;
        }
        if (e.hi) {
            const Rational& v = e.hi->cmp.coeff;
            bool hi_strict = is_strict(e.hi->cmp.rel);
            if (v < c || (v == c && (hi_strict || strict))) return contra(e.hi->step);
            if (v == c) {
                std::size_t id = add_fact_step(cmp, just);
                for (const auto& d : e.diseqs)
                    if (d.cmp.coeff == c) {
                        std::size_t eqid = add_fact_step(
                            Comparison(l, Rel::eq, c, 0),
                            {"blackboard", "merge-eq", {e.hi->step, id}});
                        set_contradiction(eqid, d.step);
                        return Change::contradiction;
                    }
                Comparison eq(l, Rel::eq, c, 0);
                std::size_t eqid =
                    add_fact_step(eq, {"blackboard", "merge-eq", {e.hi->step, id}});
                e.eq = StoredFact{eq, eqid};
                e.lo.reset();
                e.hi.reset();
                e.diseqs.clear();
                bump();
                return Change::strengthened;
            }
        }
        std::size_t id = add_fact_step(cmp, just);
        StoredFact stored{cmp, id};
        if (!strict) {
            for (std::size_t k = 0; k < e.diseqs.size(); ++k) {
                if (e.diseqs[k].cmp.coeff == c) {
                    Comparison promo(l, Rel::gt, c, 0);
                    std::size_t pid = add_fact_step(
                        promo, {"blackboard", "promote-strict", {id, e.diseqs[k].step}});
                    stored = StoredFact{promo, pid};
                    e.diseqs.erase(e.diseqs.begin() + static_cast<long>(k));
                    break;
                }
            }
        }
        bool had = e.lo.has_value();
        e.lo = stored;
        bump();
        return had ? Change::strengthened : Change::fresh;
    }
    case Rel::ne: {
        if (e.eq) {
            if (e.eq->cmp.coeff == c) return contra(e.eq->step);
            return Change::redundant;
        }
        if (e.lo) {
            const Rational& v = e.lo->cmp.coeff;
            if (v > c || (v == c && is_strict(e.lo->cmp.rel))) return Change::redundant;
            if (v == c) {
                std::size_t id = add_fact_step(cmp, just);
                Comparison promo(l, Rel::gt, c, 0);
                std::size_t pid =
                    add_fact_step(promo, {"blackboard", "promote-strict", {e.lo->step, id}});
                e.lo = StoredFact{promo, pid};
                bump();
                return Change::strengthened;
            }
        }
        if (e.hi) {
            const Rational& v = e.hi->cmp.coeff;
            if (v < c || (v == c && is_strict(e.hi->cmp.rel))) return Change::redundant;
            if (v == c) {
                std::size_t id = add_fact_step(cmp, just);
                Comparison promo(l, Rel::lt, c, 0);
                std::size_t pid =
                    add_fact_step(promo, {"blackboard", "promote-strict", {e.hi->step, id}});
                e.hi = StoredFact{promo, pid};
                bump();
                return Change::strengthened;
            }
        }
        for (const auto& d : e.diseqs)
            if (d.cmp.coeff == c) return Change::redundant;
        std::size_t id = add_fact_step(cmp, just);
        e.diseqs.push_back(StoredFact{cmp, id});
        bump();
        return Change::fresh;
    }
    }
    return Change::redundant;
}

// ---------------------------------------------------------------------------
// merge_pair

inline Change Blackboard::merge_pair(const Comparison& cmp, const Just& just) {
    TermIndex a = cmp.lhs, b = cmp.rhs;
    if (is_ineq(cmp.rel) && entails(cmp, nullptr)) return Change::redundant;
    PairEntry& e = pairs_[{a, b}];
    const Rational& c = cmp.coeff;

    auto contra = [&](std::size_t other) {
        std::size_t id = add_fact_step(cmp, just);
        set_contradiction(other, id);
        return Change::contradiction;
    };

    if (cmp.rel == Rel::ne) {
        if (e.eq) {
            if (e.eq->cmp.coeff == c) return contra(e.eq->step);
            // t_a = c_e t_b and t_a != c t_b imply t_b != 0
            std::size_t id = add_fact_step(cmp, just);
            assert_comparison(Comparison(b, Rel::ne, Rational(0), 0),
                              {"blackboard", "eq-diseq", {e.eq->step, id}});
            return Change::fresh;
        }
        for (auto& h : e.half) {
            if (h.cmp.coeff == c && is_weak_ineq(h.cmp.rel)) {
                std::size_t id = add_fact_step(cmp, just);
                Comparison promo(a, strengthen(h.cmp.rel), c, b);
                std::size_t pid =
                    add_fact_step(promo, {"blackboard", "promote-strict", {h.step, id}});
                h = StoredFact{promo, pid};
                bump();
                return Change::strengthened;
            }
            if (h.cmp.coeff == c && is_strict(h.cmp.rel)) return Change::redundant;
        }
        for (const auto& d : e.diseqs)
            if (d.cmp.coeff == c) return Change::redundant;
        std::size_t id = add_fact_step(cmp, just);
        e.diseqs.push_back(StoredFact{cmp, id});
        bump();
        return Change::fresh;
    }

    if (cmp.rel == Rel::eq) {
        if (e.eq) {
            if (e.eq->cmp.coeff == c) return Change::redundant;
            // two different equalities force t_b = 0 and t_a = 0
            std::size_t id = add_fact_step(cmp, just);
            assert_comparison(Comparison(b, Rel::eq, Rational(0), 0),
                              {"blackboard", "eq-eq-zero", {e.eq->step, id}});
            if (!contradiction_)
                assert_comparison(Comparison(a, Rel::eq, Rational(0), 0),
                                  {"blackboard", "eq-eq-zero", {e.eq->step, id}});
            return contradiction_ ? Change::contradiction : Change::strengthened;
        }
        for (const auto& d : e.diseqs)
            if (d.cmp.coeff == c) return contra(d.step);
        // check halfplanes for compatibility / derived signs
        std::size_t id = add_fact_step(cmp, just);
        std::vector<StoredFact> halves = std::move(e.half);
        e.half.clear();
        for (const auto& h : halves) {
            if (h.cmp.coeff == c) {
                if (is_strict(h.cmp.rel)) {
                    set_contradiction(h.step, id);
                    return Change::contradiction;
                }
                continue;  // implied by the equality
            }
            // t_a = c t_b and t_a rel c' t_b  =>  (c' - c) t_b rel' 0
            Rational d = h.cmp.coeff - c;
            Rel r;
            if (is_upper(h.cmp.rel))  // c t_b </<= c' t_b
                r = d > 0 ? (is_strict(h.cmp.rel) ? Rel::gt : Rel::ge)
                          : (is_strict(h.cmp.rel) ? Rel::lt : Rel::le);
            else
                r = d > 0 ? (is_strict(h.cmp.rel) ? Rel::lt : Rel::le)
                          : (is_strict(h.cmp.rel) ? Rel::gt : Rel::ge);
            assert_comparison(Comparison(b, r, Rational(0), 0),
                              {"blackboard", "eq-halfplane-sign", {h.step, id}});
            if (contradiction_) return Change::contradiction;
        }
        // pair disequalities become t_b != 0
        std::vector<StoredFact> diseqs = std::move(e.diseqs);
        e.diseqs.clear();
        for (const auto& d : diseqs) {
            assert_comparison(Comparison(b, Rel::ne, Rational(0), 0),
                              {"blackboard", "eq-diseq", {d.step, id}});
            if (contradiction_) return Change::contradiction;
        }
        e.eq = StoredFact{cmp, id};
        bump();
        return Change::fresh;
    }

    // inequality against stored equality
    if (e.eq) {
        const Rational& ce = e.eq->cmp.coeff;
        if (c == ce) {
            if (!is_strict(cmp.rel)) return Change::redundant;
            return contra(e.eq->step);
        }
        // t_a = ce t_b, new: t_a rel c t_b  =>  (c - ce) t_b rel'' 0
        std::size_t id = add_fact_step(cmp, just);
        Rational d = c - ce;
        Rel r;
        if (is_upper(cmp.rel))  // ce t_b  rel  c t_b  =>  0 rel (c-ce) t_b
            r = d > 0 ? (is_strict(cmp.rel) ? Rel::gt : Rel::ge)
                      : (is_strict(cmp.rel) ? Rel::lt : Rel::le);
        else
            r = d > 0 ? (is_strict(cmp.rel) ? Rel::lt : Rel::le)
                      : (is_strict(cmp.rel) ? Rel::gt : Rel::ge);
        Change ch = assert_comparison(Comparison(b, r, Rational(0), 0),
                                      {"blackboard", "eq-halfplane-sign", {e.eq->step, id}});
        return ch == Change::contradiction ? ch : Change::fresh;
    }

    // --- cone merge over the (t_a, t_b) plane --------------------------------

    // duplicate-direction handling against the new fact
    HP g = to_halfplane(cmp, 0, -1);
    for (std::size_t k = 0; k < e.half.size(); ++k) {
        HP h = to_halfplane(e.half[k].cmp, e.half[k].step, static_cast<int>(k));
        if (h.a * g.b == h.b * g.a && h.a * g.a + h.b * g.b > 0) {
            // same boundary and direction
            if (h.strict || !g.strict) return Change::redundant;
            std::size_t id = add_fact_step(cmp, just);
            e.half[k] = StoredFact{cmp, id};
            bump();
            return Change::strengthened;
        }
    }

    if (e.half.empty()) {
        std::size_t id = add_fact_step(cmp, just);
        e.half.push_back(StoredFact{cmp, id});
        bump();
        // diseq promotion below also applies to a first fact
        promote_with_diseqs(a, b, e);
        return Change::fresh;
    }

    std::vector<HP> cons;
    for (std::size_t k = 0; k < e.half.size(); ++k)
        cons.push_back(to_halfplane(e.half[k].cmp, e.half[k].step, static_cast<int>(k)));
    cons.push_back(g);

    // --- analyze the cone (pure) ---------------------------------------------
    struct Dir {
        Rational x, y;
    };
    auto cross = [](const Dir& p, const Dir& q) { return p.x * q.y - p.y * q.x; };
    auto dot = [](const Dir& p, const Dir& q) { return p.x * q.x + p.y * q.y; };

    auto weak_feasible = [&](const Dir& d) {
        for (const auto& h : cons)
            if (h.a * d.x + h.b * d.y < 0) return false;
        return true;
    };

    std::vector<Dir> W;
    auto add_dir = [&](Dir d) {
        if (d.x == 0 && d.y == 0) return;
        for (const auto& w : W)
            if (cross(w, d) == 0 && dot(w, d) > 0) return;
        if (weak_feasible(d)) W.push_back(std::move(d));
    };
    for (const auto& h : cons) {
        add_dir(Dir{h.b, -h.a});
        add_dir(Dir{-h.b, h.a});
    }

    bool any_strict = false;
    for (const auto& h : cons) any_strict |= h.strict;

    enum class Plan { keep, contra, point, ray, line };
    Plan plan;
    Dir dir{Rational(0), Rational(0)};
    std::vector<int> kept_origins;  // origins (index into e.half, -1 = the new fact)

    if (W.empty()) {
        plan = any_strict ? Plan::contra : Plan::point;
    } else if (W.size() == 1) {
        bool ray_ok = true;
        for (const auto& h : cons)
            if (h.strict && h.a * W[0].x + h.b * W[0].y == 0) ray_ok = false;
        plan = ray_ok ? Plan::ray : Plan::contra;
        dir = W[0];
    } else if (W.size() == 2 && cross(W[0], W[1]) == 0 && dot(W[0], W[1]) < 0) {
        // all boundaries pass through the line: equality, or empty if strict
        plan = any_strict ? Plan::contra : Plan::line;
        dir = W[0];
    } else {
        // wedge: find extreme rays r1 -> r2 spanning all of W
        const Dir* r1 = nullptr;
        const Dir* r2 = nullptr;
        for (const auto& p : W) {
            for (const auto& q : W) {
                if (&p == &q) continue;
                if (cross(p, q) < 0) continue;
                bool ok = true;
                for (const auto& w : W) {
                    if (&w == &p || &w == &q) continue;
                    if (cross(p, w) < 0 || cross(w, q) < 0) ok = false;
                }
                if (ok) {
                    r1 = &p;
                    r2 = &q;
                }
            }
        }
        plan = Plan::keep;
        auto boundary_origin = [&](const Dir& r) -> std::optional<int> {
            for (const auto& h : cons)
                if (h.a * r.x + h.b * r.y == 0) return h.origin;
            return std::nullopt;
        };
        if (r1) {
            if (auto o = boundary_origin(*r1)) kept_origins.push_back(*o);
            if (auto o = boundary_origin(*r2))
                if (kept_origins.empty() || kept_origins[0] != *o) kept_origins.push_back(*o);
        }
        if (kept_origins.empty())
            for (const auto& h : cons) kept_origins.push_back(h.origin);
    }

    // --- apply ----------------------------------------------------------------

    if (plan == Plan::keep) {
        bool g_kept = false;
        for (int o : kept_origins) g_kept |= (o == -1);
        bool stored_all_kept = true;
        for (std::size_t k = 0; k < e.half.size(); ++k) {
            bool found = false;
            for (int o : kept_origins) found |= (o == static_cast<int>(k));
            stored_all_kept &= found;
        }
        if (!g_kept && stored_all_kept) return Change::redundant;
        std::size_t gid = add_fact_step(cmp, just);
        std::vector<StoredFact> new_half;
        for (int o : kept_origins) {
            if (o >= 0)
                new_half.push_back(e.half[static_cast<std::size_t>(o)]);
            else
                new_half.push_back(StoredFact{cmp, gid});
        }
        bool strengthened = !stored_all_kept;
        e.half = std::move(new_half);
        bump();
        promote_with_diseqs(a, b, e);
        return strengthened ? Change::strengthened : Change::fresh;
    }

    std::size_t gid = add_fact_step(cmp, just);
    cons.back().fact_id = gid;

    auto all_ids = [&]() {
        std::vector<std::size_t> ids;
        for (const auto& h : cons) ids.push_back(h.fact_id);
        return ids;
    };

    if (plan == Plan::contra) {
        // pairs: anti-parallel with a strict participant
        for (std::size_t i = 0; i < cons.size(); ++i)
            for (std::size_t j = i + 1; j < cons.size(); ++j) {
                const HP &p = cons[i], &q = cons[j];
                if (p.a * q.b - p.b * q.a == 0 && p.a * q.a + p.b * q.b < 0 &&
                    (p.strict || q.strict)) {
                    set_contradiction(p.fact_id, q.fact_id);
                    return Change::contradiction;
                }
            }
        // triples: lam1*n_i + lam2*n_j = -n_k, lam >= 0, strictness involved
        for (std::size_t k = 0; k < cons.size(); ++k) {
            for (std::size_t i = 0; i < cons.size(); ++i) {
                if (i == k) continue;
                for (std::size_t j = i + 1; j < cons.size(); ++j) {
                    if (j == k || j == i) continue;
                    const HP &p = cons[i], &q = cons[j], &r = cons[k];
                    Rational det = p.a * q.b - p.b * q.a;
                    if (det == 0) continue;
                    Rational l1 = (-r.a * q.b + r.b * q.a) / det;
                    Rational l2 = (-p.a * r.b + p.b * r.a) / det;
                    if (l1 < 0 || l2 < 0) continue;
                    bool combined_strict = (l1 > 0 && p.strict) || (l2 > 0 && q.strict);
                    if (!combined_strict && !r.strict) continue;
                    Rational ca = l1 * p.a + l2 * q.a;
                    Rational cb = l1 * p.b + l2 * q.b;
                    if (ca == 0 && cb == 0) continue;
                    Comparison comb = from_halfplane(a, b, ca, cb, combined_strict);
                    std::size_t cid = add_fact_step(
                        comb, {"blackboard", "combine", {p.fact_id, q.fact_id}});
                    set_contradiction(cid, r.fact_id);
                    return Change::contradiction;
                }
            }
        }
        set_contradiction(gid, gid);  // unreachable in theory
        return Change::contradiction;
    }

    e.half.clear();
    bump();

    if (plan == Plan::point) {
        assert_comparison(Comparison(a, Rel::eq, Rational(0), 0),
                          {"blackboard", "cone-point", all_ids()});
        if (!contradiction_)
            assert_comparison(Comparison(b, Rel::eq, Rational(0), 0),
                              {"blackboard", "cone-point", all_ids()});
        return contradiction_ ? Change::contradiction : Change::strengthened;
    }

    const char* tag = plan == Plan::ray ? "cone-ray" : "cone-line";
    if (dir.y != 0) {
        assert_comparison(Comparison(a, Rel::eq, dir.x / dir.y, b),
                          {"blackboard", tag, all_ids()});
    } else {
        assert_comparison(Comparison(b, Rel::eq, Rational(0), 0), {"blackboard", tag, all_ids()});
    }
    if (plan == Plan::ray && !contradiction_) {
        if (dir.y != 0) {
            Rel r = dir.y > 0 ? (any_strict ? Rel::gt : Rel::ge)
                              : (any_strict ? Rel::lt : Rel::le);
            assert_comparison(Comparison(b, r, Rational(0), 0), {"blackboard", tag, all_ids()});
        } else {
            Rel r = dir.x > 0 ? (any_strict ? Rel::gt : Rel::ge)
                              : (any_strict ? Rel::lt : Rel::le);
            assert_comparison(Comparison(a, r, Rational(0), 0), {"blackboard", tag, all_ids()});
        }
    }
    return contradiction_ ? Change::contradiction : Change::strengthened;
}

// ---------------------------------------------------------------------------
// implied_range / entails

namespace detail {

struct RangePiece {
    Rational lo, hi;
    bool lo_inf = false, hi_inf = false;
    bool lo_strict = false, hi_strict = false, interior_strict = false;
};

inline void merge_piece(CoeffRange& r, const RangePiece& p) {
    if (r.empty) {
        r.empty = false;
        r.lo = p.lo_inf ? std::nullopt : std::optional<Rational>(p.lo);
        r.hi = p.hi_inf ? std::nullopt : std::optional<Rational>(p.hi);
        r.lo_strict = p.lo_strict;
        r.hi_strict = p.hi_strict;
        r.interior_strict = p.interior_strict;
        return;
    }
    // merge only overlapping/adjacent pieces; keep the widest envelope where sound
    bool overlap = true;
    if (!p.hi_inf && r.lo && p.hi < *r.lo) overlap = false;
    if (!p.lo_inf && r.hi && p.lo > *r.hi) overlap = false;
    if (!overlap) {
        // keep the wider side (entailed sets are convex in theory; if we ever
        // see two disjoint derivations we keep the unbounded/wider one)
        bool p_unbounded = p.lo_inf || p.hi_inf;
        bool r_unbounded = !r.lo || !r.hi;
        if (p_unbounded && !r_unbounded) {
            r.lo = p.lo_inf ? std::nullopt : std::optional<Rational>(p.lo);
            r.hi = p.hi_inf ? std::nullopt : std::optional<Rational>(p.hi);
            r.lo_strict = p.lo_strict;
            r.hi_strict = p.hi_strict;
            r.interior_strict = p.interior_strict;
        }
        return;
    }
    // extend endpoints
    if (p.lo_inf)
        r.lo = std::nullopt;
    else if (r.lo && p.lo < *r.lo) {
        r.lo = p.lo;
        r.lo_strict = p.lo_strict;
    } else if (r.lo && p.lo == *r.lo) {
        r.lo_strict = r.lo_strict || p.lo_strict;
    }
    if (p.hi_inf)
        r.hi = std::nullopt;
    else if (r.hi && p.hi > *r.hi) {
        r.hi = p.hi;
        r.hi_strict = p.hi_strict;
    } else if (r.hi && p.hi == *r.hi) {
        r.hi_strict = r.hi_strict || p.hi_strict;
    }
    r.interior_strict = r.interior_strict || p.interior_strict;
}

}  // namespace detail

inline CoeffRange Blackboard::implied_range(TermIndex i, TermIndex j, Rel dir) const {
    // `dir` is le or ge; we compute the set of c with  t_i dir c*t_j entailed.
    CoeffRange out;
    using detail::RangePiece;
    using detail::merge_piece;

    Sign sj = sign_of(j);
    Sign si = sign_of(i);

    auto add = [&](RangePiece p) { merge_piece(out, p); };

    bool want_le = dir == Rel::le;

    if (i == j) {
        // t rel c*t
        RangePiece self;
        self.lo = self.hi = Rational(1);
        add(self);
        if (sj == Sign::zero) {
            add(RangePiece{Rational(0), Rational(0), true, true, false, false, false});
        } else if (sj == Sign::pos || sj == Sign::nonneg) {
            bool strict = sj == Sign::pos;
            if (want_le)
                add(RangePiece{Rational(1), Rational(0), false, true, false, false, strict});
            else
                add(RangePiece{Rational(0), Rational(1), true, false, false, false, strict});
        } else if (sj == Sign::neg || sj == Sign::nonpos) {
            bool strict = sj == Sign::neg;
            if (want_le)
                add(RangePiece{Rational(0), Rational(1), true, false, false, false, strict});
            else
                add(RangePiece{Rational(1), Rational(0), false, true, false, false, strict});
        }
        return out;
    }

    if (j == 0) {
        // constant comparisons: read the 1D entry directly
        ConstView v = const_view(i);
        if (v.eq) {
            const Rational& c = v.eq->cmp.coeff;
            if (want_le)
                add(RangePiece{c, Rational(0), false, true, false, false, true});
            else
                add(RangePiece{Rational(0), c, true, false, false, false, true});
        }
        if (want_le && v.hi) {
            const Rational& c = v.hi->cmp.coeff;
            bool s = is_strict(v.hi->cmp.rel);
            add(RangePiece{c, Rational(0), false, true, s, false, true});
        }
        if (!want_le && v.lo) {
            const Rational& c = v.lo->cmp.coeff;
            bool s = is_strict(v.lo->cmp.rel);
            add(RangePiece{Rational(0), c, true, false, false, s, true});
        }
        return out;
    }

    // collect the pair facts oriented as t_i ? c*t_j
    struct Ori {
        Rel rel;
        Rational coeff;
        bool valid = false;
    };
    auto orient = [&](const Comparison& c) -> Ori {
        if (c.lhs == i && c.rhs == j) return {c.rel, c.coeff, true};
        if (c.lhs == j && c.rhs == i) {
            Rel r = c.coeff > 0 ? mirror(c.rel) : c.rel;
            return {r, 1 / c.coeff, true};
        }
        return {};
    };

    TermIndex a = std::min(i, j), b = std::max(i, j);
    PairView pv = pair_view(a, b);

    auto sign_dir = [&](Sign s) -> int {
        // returns +1 if >0-ish, -1 if <0-ish, 0 otherwise
        if (s == Sign::pos || s == Sign::nonneg) return 1;
        if (s == Sign::neg || s == Sign::nonpos) return -1;
        return 0;
    };

    if (pv.eq) {
        Ori o = orient(pv.eq->cmp);
        if (o.valid) {
            const Rational& c0 = o.coeff;
            if (sj == Sign::zero) {
                add(RangePiece{Rational(0), Rational(0), true, true, false, false, false});
            } else {
                int sd = sign_dir(sj);
                bool strict_side = sign_strict(sj);
                if (sd == 0) {
                    add(RangePiece{c0, c0});
                } else if ((sd > 0) == want_le) {
                    add(RangePiece{c0, Rational(0), false, true, false, false, strict_side});
                } else {
                    add(RangePiece{Rational(0), c0, true, false, false, false, strict_side});
                }
            }
        }
    }

    for (const StoredFact* h : pv.half) {
        Ori o = orient(h->cmp);
        if (!o.valid) continue;
        bool matches = want_le ? is_upper(o.rel) : is_lower(o.rel);
        if (!matches) continue;
        bool fs = is_strict(o.rel);
        const Rational& c0 = o.coeff;
        int sd = sign_dir(sj);
        bool sstrict = sign_strict(sj);
        if (sd == 0) {
            add(RangePiece{c0, c0, false, false, fs, fs, fs});
        } else if ((sd > 0) == want_le) {
            add(RangePiece{c0, Rational(0), false, true, fs, false, fs || sstrict});
        } else {
            add(RangePiece{Rational(0), c0, true, false, false, fs, fs || sstrict});
        }
    }

    // sign-only derivations, e.g. t_i <= 0 and t_j >= 0 entail t_i <= c t_j
    // for every c >= 0.
    {
        bool i_nonpos = si == Sign::neg || si == Sign::nonpos || si == Sign::zero;
        bool i_nonneg = si == Sign::pos || si == Sign::nonneg || si == Sign::zero;
        bool i_neg = si == Sign::neg, i_pos = si == Sign::pos;
        bool j_nonpos = sj == Sign::neg || sj == Sign::nonpos || sj == Sign::zero;
        bool j_nonneg = sj == Sign::pos || sj == Sign::nonneg || sj == Sign::zero;
        bool j_neg = sj == Sign::neg, j_pos = sj == Sign::pos;

        if (want_le) {
            if (i_nonpos && j_nonneg)  // c >= 0: t_i <= 0 <= c*t_j
                add(RangePiece{Rational(0), Rational(0), false, true, i_neg, false,
                               i_neg || j_pos});
            if (i_nonpos && j_nonpos)  // c <= 0: t_i <= 0 <= c*t_j
                add(RangePiece{Rational(0), Rational(0), true, false, false, i_neg,
                               i_neg || j_neg});
        } else {
            if (i_nonneg && j_nonneg)  // c <= 0: t_i >= 0 >= c*t_j
                add(RangePiece{Rational(0), Rational(0), true, false, false, i_pos,
                               i_pos || j_pos});
            if (i_nonneg && j_nonpos)  // c >= 0: t_i >= 0 >= c*t_j
                add(RangePiece{Rational(0), Rational(0), false, true, i_pos, false,
                               i_pos || j_neg});
        }
    }
    return out;
}

inline bool Blackboard::entails(const Comparison& cmp_in, std::vector<std::size_t>* premises) const {
    Comparison cmp = cmp_in;
    if (cmp.coeff == 0) cmp.rhs = 0;
    if (cmp.lhs == 0 && cmp.rhs == 0) return rel_holds(Rational(1), cmp.rel, cmp.coeff);
    if (cmp.lhs == 0) {
        // t0 rel c*t_r  <=>  t_r rel' 1/c
        Rel r = cmp.coeff > 0 ? mirror(cmp.rel) : cmp.rel;
        cmp = Comparison(cmp.rhs, r, 1 / cmp.coeff, 0);
    }

    auto collect = [&](TermIndex x, TermIndex y) {
        if (!premises) return;
        ConstView cx = const_view(x);
        if (cx.eq) premises->push_back(cx.eq->step);
        if (cx.lo) premises->push_back(cx.lo->step);
        if (cx.hi) premises->push_back(cx.hi->step);
        for (auto* d : cx.diseqs) premises->push_back(d->step);
        if (y != x) {
            ConstView cy = const_view(y);
            if (cy.eq) premises->push_back(cy.eq->step);
            if (cy.lo) premises->push_back(cy.lo->step);
            if (cy.hi) premises->push_back(cy.hi->step);
            for (auto* d : cy.diseqs) premises->push_back(d->step);
        }
        TermIndex a = std::min(x, y), b = std::max(x, y);
        if (a != b) {
            PairView pv = pair_view(a, b);
            if (pv.eq) premises->push_back(pv.eq->step);
            for (auto* h : pv.half) premises->push_back(h->step);
            for (auto* d : pv.diseqs) premises->push_back(d->step);
        }
    };

    switch (cmp.rel) {
    case Rel::lt:
    case Rel::le: {
        CoeffRange r = implied_range(cmp.lhs, cmp.rhs, Rel::le);
        if (!r.contains(cmp.coeff)) return false;
        if (cmp.rel == Rel::lt && !r.strict_at(cmp.coeff)) return false;
        collect(cmp.lhs, cmp.rhs);
        return true;
    }
    case Rel::gt:
    case Rel::ge: {
        CoeffRange r = implied_range(cmp.lhs, cmp.rhs, Rel::ge);
        if (!r.contains(cmp.coeff)) return false;
        if (cmp.rel == Rel::gt && !r.strict_at(cmp.coeff)) return false;
        collect(cmp.lhs, cmp.rhs);
        return true;
    }
    case Rel::eq: {
        CoeffRange le = implied_range(cmp.lhs, cmp.rhs, Rel::le);
        CoeffRange ge = implied_range(cmp.lhs, cmp.rhs, Rel::ge);
        if (le.contains(cmp.coeff) && ge.contains(cmp.coeff)) {
            collect(cmp.lhs, cmp.rhs);
            return true;
        }
        return false;
    }
    case Rel::ne: {
        // strict separation in either direction
        CoeffRange le = implied_range(cmp.lhs, cmp.rhs, Rel::le);
        if (le.contains(cmp.coeff) && le.strict_at(cmp.coeff)) {
            collect(cmp.lhs, cmp.rhs);
            return true;
        }
        CoeffRange ge = implied_range(cmp.lhs, cmp.rhs, Rel::ge);
        if (ge.contains(cmp.coeff) && ge.strict_at(cmp.coeff)) {
            collect(cmp.lhs, cmp.rhs);
            return true;
        }
        if (cmp.rhs == 0) {
            ConstView v = const_view(cmp.lhs);
            if (v.eq && v.eq->cmp.coeff != cmp.coeff) {
                collect(cmp.lhs, cmp.rhs);
                return true;
            }
            for (auto* d : v.diseqs)
                if (d->cmp.coeff == cmp.coeff) {
                    collect(cmp.lhs, cmp.rhs);
                    return true;
                }
            return false;
        }
        TermIndex a = std::min(cmp.lhs, cmp.rhs), b = std::max(cmp.lhs, cmp.rhs);
        PairView pv = pair_view(a, b);
        Rational c = cmp.coeff;
        if (cmp.lhs > cmp.rhs) c = 1 / c;  // reorient
        for (auto* d : pv.diseqs)
            if (d->cmp.coeff == c) {
                collect(cmp.lhs, cmp.rhs);
                return true;
            }
        if (pv.eq && pv.eq->cmp.coeff != c && known_nonzero(b)) {
            collect(cmp.lhs, cmp.rhs);
            return true;
        }
        return false;
    }
    }
    return false;
}

// ---------------------------------------------------------------------------
// clauses

inline bool Blackboard::process_clause(Clause& cl) {
    // returns true if the clause should stay pending
    std::vector<ClauseLit> remaining;
    for (const auto& lit : cl.lits) {
        Comparison eff = lit.positive ? lit.cmp : ineq::negate(lit.cmp);
        std::vector<std::size_t> support;
        if (entails(eff, nullptr)) return false;  // clause satisfied, discard
        if (refutes(eff, &support)) {
            for (std::size_t id : support) cl.refuted_by.push_back(id);
            continue;  // literal falsified, drop it
        }
        remaining.push_back(lit);
    }
    std::sort(cl.refuted_by.begin(), cl.refuted_by.end());
    cl.refuted_by.erase(std::unique(cl.refuted_by.begin(), cl.refuted_by.end()),
                        cl.refuted_by.end());
    if (remaining.empty()) {
        // clause emptied: contradiction between the clause and the refuting facts
        Just just{"blackboard", "clause-empty", cl.premises};
        for (std::size_t id : cl.refuted_by) just.premises.push_back(id);
        Comparison marker(0, Rel::ne, Rational(1), 0);  // t0 != 1, absurd
        std::size_t id = add_fact_step(marker, just);
        set_contradiction(id, cl.step != 0 ? cl.step : id);
        return false;
    }
    if (remaining.size() == 1) {
        Comparison eff =
            remaining[0].positive ? remaining[0].cmp : ineq::negate(remaining[0].cmp);
        Just just{"blackboard", "unit-clause", cl.premises};
        for (std::size_t id : cl.refuted_by) just.premises.push_back(id);
        assert_comparison(eff, just);
        return false;
    }
    if (remaining.size() != cl.lits.size()) cl.lits = std::move(remaining);
    return true;
}

}  // namespace ineq
