#pragma once

// Dependent products in the completed category, built from proofs.
//
// Given f : X -> I and g : Y -> X, the space of "sections of g along the
// fibers of f" is carved out in stages, all at carrier level:
//
//   1. T0 comprehends pairs (x, i) with a proof that f(x) is related to i,
//      using the proof-relevant interpreter, so the whole pipeline runs on
//      the same machinery as the logic layer.
//   2. S0 comprehends pairs (y, t) with a proof that g(y) is related to the
//      X-component of t.
//   3. A full family over (tau2 : T0 -> I0, sigma2 : S0 -> T0) enumerates
//      every simultaneous choice of such proofs over each index.
//   4. Codes whose rows induce a well-defined class-level function are kept;
//      two codes are identified when their indices are related and their
//      induced functions agree.  The result is the dependent-product object
//      G with its display arrow to I.
//
// Everything claimed about G is checked two ways: a constructive pass that
// rebuilds a canonical code for every class-level section, and a separate
// oracle that enumerates sections directly from the induced class maps and
// never touches the family.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "exfin/bhk.hpp"
#include "exfin/ex.hpp"
#include "exfin/fullness.hpp"

namespace exfin {

// The relation span of an object, packaged as a named binary relation on its
// carrier so it can appear in formulas.
inline NamedRelation relatedness_relation(const ExObj& a, const std::string& name) {
    TupleProduct tp = tuple_product({a.carrier, a.carrier});
    std::vector<int> t(static_cast<std::size_t>(a.rel.apex().size()));
    for (int w = 0; w < a.rel.apex().size(); ++w)
        t[static_cast<std::size_t>(w)] = tp.encode({a.rel.left(w), a.rel.right(w)});
    return NamedRelation(name, {a.carrier, a.carrier},
                         Presubobject(tp.object, FiniteMap(a.rel.apex(), tp.object, std::move(t))));
}

struct DepProdOptions {
    Caps caps{};
    long long pack_threshold = kDefaultPackThreshold;
    // Below this many functional codes, the signature-based identification is
    // re-derived from the row-level pairwise comparison and its transitivity
    // is checked directly.
    int pairwise_audit_limit = 200;
};

struct DepProd {
    ExObjPtr I, X, Y;
    ExArrow f; // X -> I
    ExArrow g; // Y -> X
    WeakLimitStrategy strategy;

    // Stage 1: proofs that f(x) is related to i, over X0 x I0.
    FiniteSet T0;
    FiniteMap tau;  // T0 -> X0 x I0
    FiniteMap tau1; // T0 -> X0
    FiniteMap tau2; // T0 -> I0

    // Stage 2: proofs that g(y) is related to the X-component of t, over Y0 x T0.
    FiniteSet S0;
    FiniteMap sigma;  // S0 -> Y0 x T0
    FiniteMap sigma1; // S0 -> Y0
    FiniteMap sigma2; // S0 -> T0

    // Stage 3: all simultaneous proof choices.
    FullFamily fam;

    // Stage 4: functional codes and their identification.
    FiniteSet G0;
    std::vector<int> g0_code;            // per element of G0: its code id in fam
    std::vector<int> code_to_g0;         // per code id: position in G0, or -1
    FiniteMap g0_incl;                   // G0 -> F
    std::vector<int> g0_index;           // per element of G0: its base index in I0
    // Per element of G0: class of X -> class of Y, or -1 off the fiber.
    std::vector<std::vector<int>> g0_sig;

    ExObjPtr G;      // dependent-product object
    ExArrow display; // G -> I
};

namespace detail {

// Induced map on class indices: class of dom -> class of cod.
inline std::vector<int> class_table(const ExArrow& h) {
    std::vector<int> t(static_cast<std::size_t>(h.dom->num_classes));
    for (int c = 0; c < h.dom->num_classes; ++c)
        t[static_cast<std::size_t>(c)] = h.cod->class_of[static_cast<std::size_t>(
            h.map(h.dom->class_rep[static_cast<std::size_t>(c)]))];
    return t;
}

// A partition object materializes one span row per related pair of carrier
// elements, each labeled by the two element labels.  Code labels can run to
// hundreds of characters, so before building one over codes, bound both the
// row count and the label mass; past either bound the presentation cannot be
// materialized honestly and the instance is abandoned at the cap.
inline ExObjPtr guarded_partition_object(const FiniteSet& carrier,
                                         const std::vector<int>& class_of,
                                         const WeakLimitStrategy& st, long long pack_threshold) {
    std::map<int, std::pair<long long, long long>> per; // class -> (size, label bytes)
    for (int a = 0; a < carrier.size(); ++a) {
        auto& p = per[class_of[static_cast<std::size_t>(a)]];
        p.first += 1;
        p.second += static_cast<long long>(carrier.label(a).size());
    }
    long long rows = 0, bytes = 0;
    for (const auto& [c, p] : per) {
        rows += p.first * p.first;
        bytes += 2 * p.first * p.second;
    }
    if (rows > 4'000'000 || bytes > 268'435'456)
        throw cap_error("identification span too large to materialize (" +
                        std::to_string(rows) + " rows)");
    return ex_obj_from_partition(carrier, class_of, st, pack_threshold);
}

} // namespace detail

inline DepProd build_dependent_product(const ExArrow& f, const ExArrow& g,
                                       const DepProdOptions& opt = {}) {
    if (!same_presentation(*g.cod, *f.dom))
        throw error("dependent product needs composable data: the section map must land in "
                    "the display map's source");
    ExObjPtr I = f.cod, X = f.dom, Y = g.dom;
    const WeakLimitStrategy st = X->strategy;

    // Stage 1: T0 = [[ f(x) ~ i ]] over x:X0, i:I0.
    NamedRelation simI = relatedness_relation(*I, "simI");
    Context ctxT{{"x", X->carrier}, {"i", I->carrier}};
    Term fx{"x", {f.map}, {"f"}};
    Term vi{"i", {}, {}};
    Presubobject pT = interpret(f_rel(simI, {fx, vi}), ctxT, st, opt.caps);
    TupleProduct tpT = context_object(ctxT);
    FiniteSet T0 = pT.rep.dom();
    FiniteMap tau = pT.rep;
    FiniteMap tau1 = compose(tpT.projections[0], tau);
    FiniteMap tau2 = compose(tpT.projections[1], tau);

    // Stage 2: S0 = [[ g(y) ~ tau1(t) ]] over y:Y0, t:T0.
    NamedRelation simX = relatedness_relation(*X, "simX");
    Context ctxS{{"y", Y->carrier}, {"t", T0}};
    Term gy{"y", {g.map}, {"g"}};
    Term t1{"t", {tau1}, {"tau1"}};
    Presubobject pS = interpret(f_rel(simX, {gy, t1}), ctxS, st, opt.caps);
    TupleProduct tpS = context_object(ctxS);
    FiniteSet S0 = pS.rep.dom();
    FiniteMap sigma = pS.rep;
    FiniteMap sigma1 = compose(tpS.projections[0], sigma);
    FiniteMap sigma2 = compose(tpS.projections[1], sigma);

    // Stage 3: one code per simultaneous choice of proofs.
    FullFamily fam = build_full_family(tau2, sigma2, st, opt.caps);

    // Stage 4: keep the codes whose rows induce a class-level function.
    const int ncode = fam.F.size();
    std::vector<int> g0_code;
    std::vector<int> code_to_g0(static_cast<std::size_t>(ncode), -1);
    std::vector<int> g0_index;
    std::vector<std::vector<int>> g0_sig;
    std::vector<std::string> g0_labels;
    for (int v = 0; v < ncode; ++v) {
        std::vector<int> sig(static_cast<std::size_t>(X->num_classes), -1);
        bool functional = true;
        for (const auto& [t, s] : fam.code_rows[static_cast<std::size_t>(v)]) {
            int xc = X->class_of[static_cast<std::size_t>(tau1(t))];
            int yc = Y->class_of[static_cast<std::size_t>(sigma1(s))];
            int& slot = sig[static_cast<std::size_t>(xc)];
            if (slot < 0)
                slot = yc;
            else if (slot != yc)
                functional = false;
        }
        if (!functional) continue;
        code_to_g0[static_cast<std::size_t>(v)] = static_cast<int>(g0_code.size());
        g0_code.push_back(v);
        g0_index.push_back(fam.code_index[static_cast<std::size_t>(v)]);
        g0_sig.push_back(std::move(sig));
        g0_labels.push_back(fam.F.label(v));
    }
    FiniteSet G0(std::move(g0_labels));
    FiniteMap g0_incl(G0, fam.F, std::vector<int>(g0_code.begin(), g0_code.end()));

    // Identification: same index class and same induced function.
    const int ng = G0.size();
    std::map<std::pair<int, std::vector<int>>, int> key_class;
    std::vector<int> classes(static_cast<std::size_t>(ng));
    for (int a = 0; a < ng; ++a) {
        std::pair<int, std::vector<int>> key{
            I->class_of[static_cast<std::size_t>(g0_index[static_cast<std::size_t>(a)])],
            g0_sig[static_cast<std::size_t>(a)]};
        auto [it, fresh] = key_class.emplace(std::move(key), static_cast<int>(key_class.size()));
        (void)fresh;
        classes[static_cast<std::size_t>(a)] = it->second;
    }

    // Audit on small inputs: the signature comparison must coincide with the
    // row-by-row pairwise comparison, and the latter must be transitive.
    if (ng <= opt.pairwise_audit_limit) {
        auto pairwise = [&](int a, int b) {
            int va = g0_code[static_cast<std::size_t>(a)], vb = g0_code[static_cast<std::size_t>(b)];
            if (!I->related(g0_index[static_cast<std::size_t>(a)],
                            g0_index[static_cast<std::size_t>(b)]))
                return false;
            for (const auto& [t, s] : fam.code_rows[static_cast<std::size_t>(va)])
                for (const auto& [t2, s2] : fam.code_rows[static_cast<std::size_t>(vb)]) {
                    if (X->class_of[static_cast<std::size_t>(tau1(t))] !=
                        X->class_of[static_cast<std::size_t>(tau1(t2))])
                        continue;
                    if (Y->class_of[static_cast<std::size_t>(sigma1(s))] !=
                        Y->class_of[static_cast<std::size_t>(sigma1(s2))])
                        return false;
                }
            return true;
        };
        std::vector<char> m(static_cast<std::size_t>(ng) * static_cast<std::size_t>(ng), 0);
        for (int a = 0; a < ng; ++a)
            for (int b = 0; b < ng; ++b) {
                bool row = pairwise(a, b);
                bool sigeq = classes[static_cast<std::size_t>(a)] ==
                             classes[static_cast<std::size_t>(b)];
                if (row != sigeq)
                    throw std::logic_error(
                        "signature identification disagrees with the row-level comparison on "
                        "codes \"" + G0.label(a) + "\" and \"" + G0.label(b) + "\"");
                m[static_cast<std::size_t>(a) * static_cast<std::size_t>(ng) + b] = row ? 1 : 0;
            }
        for (int a = 0; a < ng; ++a)
            for (int b = 0; b < ng; ++b)
                if (m[static_cast<std::size_t>(a) * static_cast<std::size_t>(ng) + b])
                    for (int c = 0; c < ng; ++c)
                        if (m[static_cast<std::size_t>(b) * static_cast<std::size_t>(ng) + c] &&
                            !m[static_cast<std::size_t>(a) * static_cast<std::size_t>(ng) + c])
                            throw std::logic_error("row-level code comparison is not transitive");
    }

    ExObjPtr G = detail::guarded_partition_object(G0, classes, st, opt.pack_threshold);
    ExArrow display =
        ex_arrow(G, I, FiniteMap(G0, I->carrier, std::vector<int>(g0_index)));

    return DepProd{
        I,
        X,
        Y,
        f,
        g,
        st,
        std::move(T0),
        std::move(tau),
        std::move(tau1),
        std::move(tau2),
        std::move(S0),
        std::move(sigma),
        std::move(sigma1),
        std::move(sigma2),
        std::move(fam),
        std::move(G0),
        std::move(g0_code),
        std::move(code_to_g0),
        std::move(g0_incl),
        std::move(g0_index),
        std::move(g0_sig),
        std::move(G),
        std::move(display),
    };
}

// ---------------------------------------------------------------------------
// The graph object: one row per kept assignment, with its evaluation data.

struct DepProdGraph {
    FiniteSet Q0;
    std::vector<int> q_code; // per row: position in G0
    FiniteMap q_to_g0;       // Q0 -> G0
    FiniteMap q_x;           // Q0 -> X0
    FiniteMap q_y;           // Q0 -> Y0

    ExObjPtr Q;
    ExArrow to_g, to_x, to_y;

    // The three components assembled into one arrow into (G x X) x Y.  Built
    // only when the product stays materializable; the joint-monicity content
    // is checked componentwise either way.
    bool product_built = false;
    std::optional<ExProductResult> gx;  // G x X
    std::optional<ExProductResult> gxy; // (G x X) x Y
    std::optional<ExArrow> beta;
};

inline DepProdGraph build_graph_object(const DepProd& dp, const DepProdOptions& opt = {},
                                       bool with_product = true) {
    // Rows of P whose code is functional.
    std::vector<std::string> labels;
    std::vector<int> q_code, qg, qx, qy;
    for (int p = 0; p < dp.fam.P.size(); ++p) {
        int v = dp.fam.p_code[static_cast<std::size_t>(p)];
        int pos = dp.code_to_g0[static_cast<std::size_t>(v)];
        if (pos < 0) continue;
        const FiberObject& fib = dp.fam.f_fibers[static_cast<std::size_t>(
            dp.fam.code_index[static_cast<std::size_t>(v)])];
        int t = fib.proj(dp.fam.p_urow[static_cast<std::size_t>(p)]);
        int s = dp.fam.eps(p);
        labels.push_back(dp.fam.P.label(p));
        q_code.push_back(pos);
        qg.push_back(pos);
        qx.push_back(dp.tau1(t));
        qy.push_back(dp.sigma1(s));
    }
    FiniteSet Q0(std::move(labels));
    FiniteMap q_to_g0(Q0, dp.G0, std::move(qg));
    FiniteMap q_x(Q0, dp.X->carrier, std::move(qx));
    FiniteMap q_y(Q0, dp.Y->carrier, std::move(qy));

    // Rows are identified when their codes are identified and their arguments
    // are related; the value component must then be related automatically.
    const int nq = Q0.size();
    std::map<std::pair<int, int>, int> cls;
    std::vector<int> qclasses(static_cast<std::size_t>(nq));
    for (int a = 0; a < nq; ++a) {
        std::pair<int, int> key{
            dp.G->class_of[static_cast<std::size_t>(q_to_g0(a))],
            dp.X->class_of[static_cast<std::size_t>(q_x(a))]};
        auto [it, fresh] = cls.emplace(key, static_cast<int>(cls.size()));
        (void)fresh;
        qclasses[static_cast<std::size_t>(a)] = it->second;
    }
    for (int a = 0; a < nq; ++a)
        for (int b = 0; b < nq; ++b) {
            bool same = qclasses[static_cast<std::size_t>(a)] == qclasses[static_cast<std::size_t>(b)];
            if (same && !dp.Y->related(q_y(a), q_y(b)))
                throw std::logic_error("graph rows \"" + Q0.label(a) + "\" and \"" + Q0.label(b) +
                                       "\" agree on code and argument but not on value");
            // Joint monicity, componentwise: related images force related rows.
            bool comp = dp.G->related(q_to_g0(a), q_to_g0(b)) &&
                        dp.X->related(q_x(a), q_x(b)) && dp.Y->related(q_y(a), q_y(b));
            if (comp && !same)
                throw std::logic_error("graph components fail to be jointly monic on rows \"" +
                                       Q0.label(a) + "\" and \"" + Q0.label(b) + "\"");
        }

    ExObjPtr Q = detail::guarded_partition_object(Q0, qclasses, dp.strategy, opt.pack_threshold);
    ExArrow to_g = ex_arrow(Q, dp.G, q_to_g0);
    ExArrow to_x = ex_arrow(Q, dp.X, q_x);
    ExArrow to_y = ex_arrow(Q, dp.Y, q_y);

    DepProdGraph gr{std::move(Q0),   std::move(q_code), std::move(q_to_g0), std::move(q_x),
                    std::move(q_y),  std::move(Q),      std::move(to_g),    std::move(to_x),
                    std::move(to_y), false,             std::nullopt,       std::nullopt,
                    std::nullopt};

    if (with_product) {
        long long carr = static_cast<long long>(dp.G0.size()) * dp.X->carrier.size() *
                         dp.Y->carrier.size();
        long long rows2 =
            static_cast<long long>(dp.G->rel.apex().size()) * dp.X->rel.apex().size();
        long long rows3 = rows2 * dp.Y->rel.apex().size();
        if (carr <= 20'000 && rows2 <= 400'000 && rows3 <= 400'000) {
            gr.gx = ex_product(dp.G, dp.X, opt.pack_threshold);
            gr.gxy = ex_product(gr.gx->object, dp.Y, opt.pack_threshold);
            TupleProduct t2 = tuple_product({dp.G0, dp.X->carrier});
            TupleProduct t3 = tuple_product({gr.gx->object->carrier, dp.Y->carrier});
            std::vector<int> enc(static_cast<std::size_t>(gr.Q0.size()));
            for (int a = 0; a < gr.Q0.size(); ++a)
                enc[static_cast<std::size_t>(a)] =
                    t3.encode({t2.encode({gr.q_to_g0(a), gr.q_x(a)}), gr.q_y(a)});
            gr.beta = ex_arrow(gr.Q, gr.gxy->object,
                               FiniteMap(gr.Q0, gr.gxy->object->carrier, std::move(enc)));
            if (!is_ex_mono(*gr.beta))
                throw std::logic_error("graph inclusion is not monic");
            ExArrow b2 = ex_compose(gr.gxy->to_left, *gr.beta);
            if (!ex_eq(ex_compose(gr.gxy->to_right, *gr.beta), gr.to_y) ||
                !ex_eq(ex_compose(gr.gx->to_left, b2), gr.to_g) ||
                !ex_eq(ex_compose(gr.gx->to_right, b2), gr.to_x))
                throw std::logic_error("graph inclusion disagrees with its components");
            gr.product_built = true;
        }
    }
    return gr;
}

// ---------------------------------------------------------------------------
// Independent oracle: class-level sections, enumerated without the family.

struct DepProdOracle {
    FiniteSet ibar;   // class labels of I
    FiniteMap fbar;   // class labels of X -> ibar
    FiniteMap gbar;   // class labels of Y -> class labels of X
    FiniteSet object; // all sections, tagged by index class
    FiniteMap index;  // object -> ibar
    std::vector<int> elem_iclass;
    std::vector<std::vector<int>> elem_section; // class of X -> class of Y, or -1
    std::vector<long long> sections_per_class;  // per class of I
};

inline DepProdOracle oracle_dependent_product(const ExArrow& f, const ExArrow& g) {
    if (!same_presentation(*g.cod, *f.dom))
        throw error("dependent product needs composable data: the section map must land in "
                    "the display map's source");
    const ExObj &I = *f.cod, &X = *f.dom, &Y = *g.dom;
    FiniteSet ibar = class_label_set(I), xbar = class_label_set(X), ybar = class_label_set(Y);
    FiniteMap fbar = induced_class_map(f), gbar = induced_class_map(g);

    std::vector<std::string> labels;
    std::vector<int> iclass;
    std::vector<std::vector<int>> sections;
    std::vector<long long> per_class(static_cast<std::size_t>(I.num_classes), 0);

    for (int ic = 0; ic < I.num_classes; ++ic) {
        std::vector<int> fiber;
        for (int xc = 0; xc < X.num_classes; ++xc)
            if (fbar(xc) == ic) fiber.push_back(xc);
        std::vector<std::vector<int>> wit(fiber.size());
        bool possible = true;
        for (std::size_t k = 0; k < fiber.size(); ++k) {
            for (int yc = 0; yc < Y.num_classes; ++yc)
                if (gbar(yc) == fiber[k]) wit[k].push_back(yc);
            if (wit[k].empty()) possible = false;
        }
        if (!possible) continue;
        std::vector<std::size_t> pick(fiber.size(), 0);
        while (true) {
            std::vector<int> sec(static_cast<std::size_t>(X.num_classes), -1);
            std::string lab = "(" + ibar.label(ic) + "|";
            for (std::size_t k = 0; k < fiber.size(); ++k) {
                int yc = wit[k][pick[k]];
                sec[static_cast<std::size_t>(fiber[k])] = yc;
                if (k) lab += ",";
                lab += xbar.label(fiber[k]) + ">" + ybar.label(yc);
            }
            lab += ")";
            labels.push_back(std::move(lab));
            iclass.push_back(ic);
            sections.push_back(std::move(sec));
            ++per_class[static_cast<std::size_t>(ic)];
            bool done = true;
            for (std::size_t k = fiber.size(); k-- > 0;) {
                if (++pick[k] < wit[k].size()) {
                    done = false;
                    break;
                }
                pick[k] = 0;
            }
            if (done) break;
        }
    }
    FiniteSet object(std::move(labels));
    FiniteMap index(object, ibar, std::vector<int>(iclass));
    return DepProdOracle{std::move(ibar),     std::move(fbar),   std::move(gbar),
                         std::move(object),   std::move(index),  std::move(iclass),
                         std::move(sections), std::move(per_class)};
}

// ---------------------------------------------------------------------------
// Universal property, verified constructively against the family.

struct UPReport {
    long long sections_checked = 0;
    // A class-level section for which the canonical reconstructed code is
    // missing or not functional.
    long long existence_failures = 0;
    // The canonical code exists but induces a different function.
    long long signature_mismatches = 0;
    // A section realized by a number of identification classes other than one.
    long long uniqueness_failures = 0;
    // A functional code whose induced data is not a genuine section of the
    // class-level maps over its fiber.
    long long invalid_codes = 0;
    bool class_count_matches = false;

    bool ok() const {
        return existence_failures == 0 && signature_mismatches == 0 && uniqueness_failures == 0 &&
               invalid_codes == 0 && class_count_matches;
    }
};

inline UPReport verify_universal_property(const DepProd& dp) {
    UPReport rep;
    const ExObj &I = *dp.I, &X = *dp.X, &Y = *dp.Y;
    std::vector<int> fbar = detail::class_table(dp.f), gbar = detail::class_table(dp.g);

    // Every kept code must read back as a genuine section over its fiber.
    for (int a = 0; a < dp.G0.size(); ++a) {
        int ic = I.class_of[static_cast<std::size_t>(dp.g0_index[static_cast<std::size_t>(a)])];
        const std::vector<int>& sig = dp.g0_sig[static_cast<std::size_t>(a)];
        bool good = true;
        for (int xc = 0; xc < X.num_classes; ++xc) {
            bool in_fiber = fbar[static_cast<std::size_t>(xc)] == ic;
            int yc = sig[static_cast<std::size_t>(xc)];
            if (in_fiber != (yc >= 0)) good = false;
            if (yc >= 0 && gbar[static_cast<std::size_t>(yc)] != xc) good = false;
        }
        if (!good) ++rep.invalid_codes;
    }

    // Which identification classes realize which (index class, section)?
    std::map<std::pair<int, std::vector<int>>, std::set<int>> realized;
    for (int a = 0; a < dp.G0.size(); ++a)
        realized[{I.class_of[static_cast<std::size_t>(dp.g0_index[static_cast<std::size_t>(a)])],
                  dp.g0_sig[static_cast<std::size_t>(a)]}]
            .insert(dp.G->class_of[static_cast<std::size_t>(a)]);

    for (int ic = 0; ic < I.num_classes; ++ic) {
        std::vector<int> fiber;
        for (int xc = 0; xc < X.num_classes; ++xc)
            if (fbar[static_cast<std::size_t>(xc)] == ic) fiber.push_back(xc);
        std::vector<std::vector<int>> wit(fiber.size());
        bool possible = true;
        for (std::size_t k = 0; k < fiber.size(); ++k) {
            for (int yc = 0; yc < Y.num_classes; ++yc)
                if (gbar[static_cast<std::size_t>(yc)] == fiber[k]) wit[k].push_back(yc);
            if (wit[k].empty()) possible = false;
        }
        if (!possible) continue;

        int istar = I.class_rep[static_cast<std::size_t>(ic)];
        std::vector<std::size_t> pick(fiber.size(), 0);
        while (true) {
            std::vector<int> m(static_cast<std::size_t>(X.num_classes), -1);
            for (std::size_t k = 0; k < fiber.size(); ++k)
                m[static_cast<std::size_t>(fiber[k])] = wit[k][pick[k]];
            ++rep.sections_checked;

            // Constructive pass: admissible proof pairs for this section, then
            // the canonical code they determine.
            std::vector<std::pair<int, int>> admissible;
            for (int t = 0; t < dp.T0.size(); ++t) {
                if (dp.tau2(t) != istar) continue;
                int xc = X.class_of[static_cast<std::size_t>(dp.tau1(t))];
                for (int s = 0; s < dp.S0.size(); ++s)
                    if (dp.sigma2(s) == t &&
                        Y.class_of[static_cast<std::size_t>(dp.sigma1(s))] ==
                            m[static_cast<std::size_t>(xc)])
                        admissible.emplace_back(t, s);
            }
            int code = canonical_covering_code(dp.fam, istar, admissible);
            bool found = false;
            if (code < 0) {
                ++rep.existence_failures;
            } else {
                int pos = dp.code_to_g0[static_cast<std::size_t>(code)];
                if (pos < 0) {
                    ++rep.existence_failures;
                } else if (dp.g0_sig[static_cast<std::size_t>(pos)] != m) {
                    ++rep.signature_mismatches;
                } else {
                    found = true;
                }
            }

            auto it = realized.find({ic, m});
            std::size_t nclasses = it == realized.end() ? 0 : it->second.size();
            if (nclasses > 1) ++rep.uniqueness_failures;
            if (nclasses == 0 && found)
                throw std::logic_error("canonical code found but its section is unrealized");

            bool done = true;
            for (std::size_t k = fiber.size(); k-- > 0;) {
                if (++pick[k] < wit[k].size()) {
                    done = false;
                    break;
                }
                pick[k] = 0;
            }
            if (done) break;
        }
    }

    rep.class_count_matches = dp.G->num_classes == rep.sections_checked;
    return rep;
}

// ---------------------------------------------------------------------------
// Matching the construction against the oracle.

struct DepProdIso {
    FiniteMap forward;  // class labels of G -> oracle sections
    FiniteMap backward; // oracle sections -> class labels of G
};

inline DepProdIso match_to_oracle(const DepProd& dp, const DepProdOracle& oc) {
    FiniteSet gbar = class_label_set(*dp.G);
    if (gbar.size() != oc.object.size())
        throw error("the construction has " + std::to_string(gbar.size()) +
                    " classes but the oracle lists " + std::to_string(oc.object.size()) +
                    " sections");

    std::map<std::pair<int, std::vector<int>>, int> by_key;
    for (int e = 0; e < oc.object.size(); ++e)
        by_key[{oc.elem_iclass[static_cast<std::size_t>(e)],
                oc.elem_section[static_cast<std::size_t>(e)]}] = e;

    std::vector<int> fwd(static_cast<std::size_t>(gbar.size()), -1);
    std::vector<int> bwd(static_cast<std::size_t>(oc.object.size()), -1);
    std::vector<int> dispbar = detail::class_table(dp.display);
    for (int c = 0; c < gbar.size(); ++c) {
        int a = dp.G->class_rep[static_cast<std::size_t>(c)];
        int ic = dp.I->class_of[static_cast<std::size_t>(dp.g0_index[static_cast<std::size_t>(a)])];
        auto it = by_key.find({ic, dp.g0_sig[static_cast<std::size_t>(a)]});
        if (it == by_key.end())
            throw error("code class \"" + gbar.label(c) + "\" realizes no class-level section");
        if (bwd[static_cast<std::size_t>(it->second)] >= 0)
            throw error("code classes \"" + gbar.label(bwd[static_cast<std::size_t>(it->second)]) +
                        "\" and \"" + gbar.label(c) + "\" realize the same section");
        fwd[static_cast<std::size_t>(c)] = it->second;
        bwd[static_cast<std::size_t>(it->second)] = c;
        if (dispbar[static_cast<std::size_t>(c)] != ic ||
            oc.elem_iclass[static_cast<std::size_t>(it->second)] != ic)
            throw std::logic_error("oracle matching does not commute with the index maps");
    }
    return DepProdIso{FiniteMap(gbar, oc.object, std::move(fwd)),
                      FiniteMap(oc.object, gbar, std::move(bwd))};
}

} // namespace exfin
