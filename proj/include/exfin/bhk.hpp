#pragma once

// Proof-relevant interpretation of formulas over a context of finite types.
// A formula in context x1:A1, ..., xn:An denotes a presubobject of
// A1 x ... x An whose apex rows are proofs:
//
//   T            identity (one trivial proof per tuple)
//   s = t        weak equalizer of the two term evaluations
//   phi & psi    weak pullback of the two representatives
//   phi -> psi   quantify the pullback of psi's proofs along phi's
//                representative (the family index map)
//   exists y. p  compose the body's representative with the context projection
//   forall y. p  quantify the body along the context projection
//   r(s, t)      weak pullback of the relation's span along the term tuple
//
// With the minimal strategy every clause lands on honest limits; padded
// strategies multiply proofs without changing which tuples have one.  The
// tuples with at least one proof always agree with the classical truth value
// computed by eval_formula_at, which shares no code with the interpreter.

#include <exfin/formula.hpp>
#include <exfin/fullness.hpp>

namespace exfin {

inline TupleProduct context_object(const Context& ctx) {
    std::vector<FiniteSet> fs;
    fs.reserve(ctx.size());
    for (const auto& [n, s] : ctx) fs.push_back(s);
    return tuple_product(fs);
}

// Projection that forgets the last (innermost) context entry.
inline FiniteMap context_projection(const Context& inner, const Context& outer) {
    if (inner.size() != outer.size() + 1)
        throw error("context projection drops exactly one entry");
    TupleProduct ti = context_object(inner);
    TupleProduct to = context_object(outer);
    std::vector<int> table(static_cast<std::size_t>(ti.object.size()));
    for (int row = 0; row < ti.object.size(); ++row) {
        std::vector<int> tup = ti.decode(row);
        tup.pop_back();
        table[static_cast<std::size_t>(row)] = to.encode(tup);
    }
    return FiniteMap(ti.object, to.object, std::move(table));
}

inline FiniteMap eval_term(const Term& t, const Context& ctx, const TupleProduct& tp) {
    int k = -1;
    for (std::size_t i = 0; i < ctx.size(); ++i)
        if (ctx[i].first == t.var) k = static_cast<int>(i);
    if (k < 0) throw error("unbound variable \"" + t.var + "\" in term " + t.describe());
    FiniteMap cur = tp.projections[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < t.apps.size(); ++i) {
        if (t.apps[i].dom() != cur.cod())
            throw error("map \"" + t.app_names[i] + "\" expects " + t.apps[i].dom().describe() +
                        " in term " + t.describe());
        cur = compose(t.apps[i], cur);
    }
    return cur;
}

inline Presubobject interpret(const FormulaPtr& f, const Context& ctx,
                              const WeakLimitStrategy& st, const Caps& caps = Caps{}) {
    TupleProduct tp = context_object(ctx);
    switch (f->kind) {
    case Formula::Kind::Truth:
        return psub_identity(tp.object);
    case Formula::Kind::Eq: {
        FiniteMap l = eval_term(f->lhs, ctx, tp);
        FiniteMap r = eval_term(f->rhs, ctx, tp);
        if (l.cod() != r.cod())
            throw error("cannot equate " + f->lhs.describe() + " : " + l.cod().describe() +
                        " with " + f->rhs.describe() + " : " + r.cod().describe());
        WeakEqualizerResult e = weak_equalizer(l, r, st);
        return Presubobject(tp.object, e.arrow);
    }
    case Formula::Kind::And: {
        Presubobject pa = interpret(f->a, ctx, st, caps);
        Presubobject pb = interpret(f->b, ctx, st, caps);
        Span w = weak_pullback(pa.rep, pb.rep, st);
        return Presubobject(tp.object, compose(pa.rep, w.left));
    }
    case Formula::Kind::Implies: {
        Presubobject pa = interpret(f->a, ctx, st, caps);
        Presubobject pb = interpret(f->b, ctx, st, caps);
        // Proofs of psi sitting over proofs of phi, then quantified along
        // phi's representative: a proof of phi |- a proof of psi.
        Span w = weak_pullback(pa.rep, pb.rep, st);
        Presubobject over_a(pa.rep.dom(), w.left);
        return forall_along(pa.rep, over_a, st, caps);
    }
    case Formula::Kind::Exists: {
        Context inner = ctx;
        for (const auto& [n, s] : ctx)
            if (n == f->bound_var)
                throw error("\"" + f->bound_var + "\" is already bound in the context");
        inner.emplace_back(f->bound_var, f->bound_type);
        Presubobject body = interpret(f->a, inner, st, caps);
        FiniteMap proj = context_projection(inner, ctx);
        return Presubobject(tp.object, compose(proj, body.rep));
    }
    case Formula::Kind::Forall: {
        Context inner = ctx;
        for (const auto& [n, s] : ctx)
            if (n == f->bound_var)
                throw error("\"" + f->bound_var + "\" is already bound in the context");
        inner.emplace_back(f->bound_var, f->bound_type);
        Presubobject body = interpret(f->a, inner, st, caps);
        FiniteMap proj = context_projection(inner, ctx);
        return forall_along(proj, body, st, caps);
    }
    case Formula::Kind::Rel: {
        TupleProduct feet = tuple_product(f->rel->feet);
        std::vector<FiniteMap> evals;
        for (std::size_t i = 0; i < f->args.size(); ++i) {
            FiniteMap m = eval_term(f->args[i], ctx, tp);
            if (m.cod() != f->rel->feet[i])
                throw error("argument " + std::to_string(i + 1) + " of \"" + f->rel->name +
                            "\" is " + f->args[i].describe() + " : " + m.cod().describe() +
                            ", expected " + f->rel->feet[i].describe());
            evals.push_back(std::move(m));
        }
        FiniteMap into_feet = tupling(evals, feet);
        Span w = weak_pullback(into_feet, f->rel->psub.rep, st);
        return Presubobject(tp.object, w.left);
    }
    }
    throw std::logic_error("unhandled formula kind");
}

// ---------------------------------------------------------------------------
// Independent classical evaluator.  Works element by element with plain
// boolean logic and never touches weak limits or families; used to cross-check
// which tuples the interpretation gives at least one proof.

inline int eval_term_at(const Term& t, const Context& ctx, const std::vector<int>& assignment) {
    int k = -1;
    for (std::size_t i = 0; i < ctx.size(); ++i)
        if (ctx[i].first == t.var) k = static_cast<int>(i);
    if (k < 0) throw error("unbound variable \"" + t.var + "\" in term " + t.describe());
    int v = assignment[static_cast<std::size_t>(k)];
    for (const auto& m : t.apps) v = m(v);
    return v;
}

inline bool eval_formula_at(const FormulaPtr& f, const Context& ctx,
                            std::vector<int>& assignment) {
    switch (f->kind) {
    case Formula::Kind::Truth:
        return true;
    case Formula::Kind::Eq:
        return eval_term_at(f->lhs, ctx, assignment) == eval_term_at(f->rhs, ctx, assignment);
    case Formula::Kind::And:
        return eval_formula_at(f->a, ctx, assignment) && eval_formula_at(f->b, ctx, assignment);
    case Formula::Kind::Implies:
        return !eval_formula_at(f->a, ctx, assignment) || eval_formula_at(f->b, ctx, assignment);
    case Formula::Kind::Exists: {
        Context inner = ctx;
        inner.emplace_back(f->bound_var, f->bound_type);
        assignment.push_back(0);
        bool any = false;
        for (int y = 0; y < f->bound_type.size() && !any; ++y) {
            assignment.back() = y;
            any = eval_formula_at(f->a, inner, assignment);
        }
        assignment.pop_back();
        return any;
    }
    case Formula::Kind::Forall: {
        Context inner = ctx;
        inner.emplace_back(f->bound_var, f->bound_type);
        assignment.push_back(0);
        bool all = true;
        for (int y = 0; y < f->bound_type.size() && all; ++y) {
            assignment.back() = y;
            all = eval_formula_at(f->a, inner, assignment);
        }
        assignment.pop_back();
        return all;
    }
    case Formula::Kind::Rel: {
        TupleProduct feet = tuple_product(f->rel->feet);
        std::vector<int> tup;
        for (const auto& a : f->args) tup.push_back(eval_term_at(a, ctx, assignment));
        int target = feet.encode(tup);
        const FiniteMap& rep = f->rel->psub.rep;
        for (int r = 0; r < rep.dom().size(); ++r)
            if (rep(r) == target) return true;
        return false;
    }
    }
    throw std::logic_error("unhandled formula kind");
}

// Truth table of a formula over its context, computed classically.
inline std::vector<char> classical_image(const FormulaPtr& f, const Context& ctx) {
    TupleProduct tp = context_object(ctx);
    std::vector<char> out(static_cast<std::size_t>(tp.object.size()), 0);
    for (int row = 0; row < tp.object.size(); ++row) {
        std::vector<int> tup = tp.decode(row);
        out[static_cast<std::size_t>(row)] = eval_formula_at(f, ctx, tup) ? 1 : 0;
    }
    return out;
}

} // namespace exfin
