#pragma once

// The completed category over finite sets.  Objects are carriers equipped
// with a pseudo-equivalence span (reflexive, symmetric, transitive at image
// level, with proof rows allowed in any multiplicity); arrows are carrier
// maps that respect the relation, taken up to pointwise relatedness.
//
// Every object also stores the partition its span generates, because almost
// every categorical question (arrow validity, equality, covers, monos,
// universal properties) is decided at partition level; the span and its
// witness pack stay around so proof-level data can be audited against the
// partition answers.  Witness packs are cubic in class sizes, so their
// materialization is guarded by a row threshold and flagged when skipped.

#include <exfin/weaklim.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <optional>

namespace exfin {

struct ExObj {
    FiniteSet carrier;
    Span rel;                        // both feet are the carrier
    std::vector<int> class_of;       // partition generated by the span image
    int num_classes = 0;
    std::vector<int> class_rep;      // least carrier element per class
    WeakLimitStrategy strategy = WeakLimitStrategy::minimal();
    std::optional<PseudoEqRel> pack; // validated witness pack, when built
    bool pack_skipped = false;       // true when the pack was over threshold

    bool related(int a, int b) const {
        return class_of[static_cast<std::size_t>(a)] == class_of[static_cast<std::size_t>(b)];
    }
    bool is_discrete() const { return num_classes == carrier.size(); }
};

using ExObjPtr = std::shared_ptr<const ExObj>;

// Rows of the composability pullback the witness search must build.
inline long long pack_cost(const Span& rel) {
    int n = rel.left_foot().size();
    std::vector<long long> firsts(static_cast<std::size_t>(n), 0),
        seconds(static_cast<std::size_t>(n), 0);
    for (int w = 0; w < rel.apex().size(); ++w) {
        ++firsts[static_cast<std::size_t>(rel.left(w))];
        ++seconds[static_cast<std::size_t>(rel.right(w))];
    }
    long long total = 0;
    for (int x = 0; x < n; ++x)
        total += seconds[static_cast<std::size_t>(x)] * firsts[static_cast<std::size_t>(x)];
    return total;
}

namespace detail {

// Shared tail of object construction: derive the partition, then build the
// witness pack below the threshold.  `trusted` marks spans produced by our
// own constructions, where a non-equivalence image is an internal bug.
inline ExObj finish_ex_obj(FiniteSet carrier, Span rel, const WeakLimitStrategy& st,
                           long long pack_threshold, bool trusted) {
    if (rel.left_foot() != carrier || rel.right_foot() != carrier)
        throw error("relation span must land in carrier x carrier");
    const int n = carrier.size();
    std::vector<char> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int w = 0; w < rel.apex().size(); ++w)
        m[static_cast<std::size_t>(rel.left(w)) * static_cast<std::size_t>(n) + rel.right(w)] = 1;
    auto holds = [&](int a, int b) {
        return m[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + b] != 0;
    };
    auto reject = [&](const std::string& why) -> std::logic_error {
        if (trusted) return std::logic_error("internal construction broke relation laws: " + why);
        throw error("span is not a pseudo-equivalence relation: " + why);
    };
    for (int a = 0; a < n; ++a)
        if (!holds(a, a)) throw reject("\"" + carrier.label(a) + "\" is not related to itself");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (holds(a, b) && !holds(b, a))
                throw reject("relatedness of \"" + carrier.label(a) + "\" and \"" +
                             carrier.label(b) + "\" is not symmetric");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (holds(a, b))
                for (int c = 0; c < n; ++c)
                    if (holds(b, c) && !holds(a, c))
                        throw reject("relatedness fails to pass from \"" + carrier.label(a) +
                                     "\" through \"" + carrier.label(b) + "\" to \"" +
                                     carrier.label(c) + "\"");

    ExObj obj{std::move(carrier), std::move(rel), std::vector<int>(static_cast<std::size_t>(n), -1),
              0, {}, st, std::nullopt, false};
    for (int a = 0; a < n; ++a) {
        if (obj.class_of[static_cast<std::size_t>(a)] >= 0) continue;
        obj.class_rep.push_back(a);
        for (int b = a; b < n; ++b)
            if (holds(a, b)) obj.class_of[static_cast<std::size_t>(b)] = obj.num_classes;
        ++obj.num_classes;
    }

    // The witness search drives a pullback whose intermediate product has
    // |R|^2 rows; both that and the matched-pair count must stay materializable.
    long long rows = obj.rel.apex().size();
    if (pack_cost(obj.rel) <= pack_threshold && rows * rows <= 4'000'000) {
        std::optional<PseudoEqRel> p = find_pseudo_eqrel_witnesses(obj.rel, st);
        if (!p)
            throw std::logic_error("witness search rejected a span whose image is an equivalence");
        obj.pack = std::move(*p);
    } else {
        obj.pack_skipped = true;
    }
    return obj;
}

} // namespace detail

constexpr long long kDefaultPackThreshold = 1'000'000;

// Object from user-supplied span data: the span is checked, not trusted.
inline ExObjPtr ex_obj_from_span(const FiniteSet& carrier, const Span& rel,
                                 const WeakLimitStrategy& st,
                                 long long pack_threshold = kDefaultPackThreshold) {
    return std::make_shared<const ExObj>(
        detail::finish_ex_obj(carrier, rel, st, pack_threshold, false));
}

// Object from a partition: span has exactly one row per related pair.
inline ExObjPtr ex_obj_from_partition(const FiniteSet& carrier, const std::vector<int>& class_of,
                                      const WeakLimitStrategy& st,
                                      long long pack_threshold = kDefaultPackThreshold) {
    if (static_cast<int>(class_of.size()) != carrier.size())
        throw error("partition needs one class per carrier element");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < carrier.size(); ++a)
        for (int b = 0; b < carrier.size(); ++b)
            if (class_of[static_cast<std::size_t>(a)] == class_of[static_cast<std::size_t>(b)])
                pairs.emplace_back(a, b);
    return std::make_shared<const ExObj>(detail::finish_ex_obj(
        carrier, span_from_pairs(carrier, carrier, pairs), st, pack_threshold, true));
}

inline ExObjPtr ex_discrete(const FiniteSet& carrier, const WeakLimitStrategy& st,
                            long long pack_threshold = kDefaultPackThreshold) {
    std::vector<int> classes(static_cast<std::size_t>(carrier.size()));
    for (int i = 0; i < carrier.size(); ++i) classes[static_cast<std::size_t>(i)] = i;
    return ex_obj_from_partition(carrier, classes, st, pack_threshold);
}

inline ExObjPtr ex_terminal(const WeakLimitStrategy& st) { return ex_discrete(terminal_set(), st); }
inline ExObjPtr ex_initial(const WeakLimitStrategy& st) { return ex_discrete(initial_set(), st); }

// Structural identity of presentations (used for arrow boundary checks).
inline bool same_presentation(const ExObj& a, const ExObj& b) {
    if (a.carrier != b.carrier || a.class_of != b.class_of) return false;
    std::vector<std::pair<int, int>> pa = span_pairs(a.rel), pb = span_pairs(b.rel);
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
}

// ---------------------------------------------------------------------------
// Arrows.

struct ExArrow {
    ExObjPtr dom, cod;
    FiniteMap map; // carrier-level

    // Partition-level fingerprint: the class each domain class lands in.
    std::vector<int> class_key() const {
        std::vector<int> key(static_cast<std::size_t>(dom->num_classes));
        for (int c = 0; c < dom->num_classes; ++c)
            key[static_cast<std::size_t>(c)] =
                cod->class_of[static_cast<std::size_t>(map(dom->class_rep[static_cast<std::size_t>(c)]))];
        return key;
    }
};

inline bool is_ex_compatible(const ExObj& dom, const ExObj& cod, const FiniteMap& map) {
    for (int a = 0; a < dom.carrier.size(); ++a)
        for (int b = 0; b < dom.carrier.size(); ++b)
            if (dom.related(a, b) && !cod.related(map(a), map(b))) return false;
    return true;
}

// Proof-level validity: every relation row of the domain must be trackable
// to some relation row of the codomain.
inline bool tracking_map_exists(const ExObj& dom, const ExObj& cod, const FiniteMap& map) {
    for (int w = 0; w < dom.rel.apex().size(); ++w)
        if (!rel_holds(cod.rel, map(dom.rel.left(w)), map(dom.rel.right(w)))) return false;
    return true;
}

inline ExArrow ex_arrow(ExObjPtr dom, ExObjPtr cod, FiniteMap map) {
    if (map.dom() != dom->carrier || map.cod() != cod->carrier)
        throw error("arrow map must run between the carriers");
    bool classes_ok = is_ex_compatible(*dom, *cod, map);
    bool tracked = tracking_map_exists(*dom, *cod, map);
    if (classes_ok != tracked)
        throw std::logic_error("partition compatibility and row tracking disagree");
    if (!classes_ok) {
        for (int a = 0; a < dom->carrier.size(); ++a)
            for (int b = 0; b < dom->carrier.size(); ++b)
                if (dom->related(a, b) && !cod->related(map(a), map(b)))
                    throw error("carrier map does not respect the relation: \"" +
                                dom->carrier.label(a) + "\" ~ \"" + dom->carrier.label(b) +
                                "\" but their images \"" + cod->carrier.label(map(a)) +
                                "\" and \"" + cod->carrier.label(map(b)) + "\" are unrelated");
        throw std::logic_error("incompatibility vanished on second scan");
    }
    return ExArrow{std::move(dom), std::move(cod), std::move(map)};
}

inline ExArrow ex_id(ExObjPtr a) {
    FiniteMap m = FiniteMap::identity(a->carrier);
    return ExArrow{a, std::move(a), std::move(m)};
}

// Arrow equality: pointwise relatedness in the codomain.  The partition
// answer is audited against row-level witness search in the codomain span.
inline bool ex_eq(const ExArrow& f, const ExArrow& g) {
    if (!same_presentation(*f.dom, *g.dom) || !same_presentation(*f.cod, *g.cod))
        throw error("arrow equality compares parallel arrows");
    for (int a = 0; a < f.dom->carrier.size(); ++a) {
        bool classes = f.cod->related(f.map(a), g.map(a));
        bool row = rel_holds(f.cod->rel, f.map(a), g.map(a));
        if (classes != row)
            throw std::logic_error("partition equality and row search disagree");
        if (!classes) return false;
    }
    return true;
}

inline ExArrow ex_compose(const ExArrow& g, const ExArrow& f) {
    if (!same_presentation(*f.cod, *g.dom))
        throw error("arrows do not compose: middle objects differ");
    return ex_arrow(f.dom, g.cod, compose(g.map, f.map));
}

// ---------------------------------------------------------------------------
// Hom enumeration.

// Every carrier map that is an arrow.
inline std::vector<ExArrow> enumerate_ex_arrows(const ExObjPtr& a, const ExObjPtr& b) {
    std::vector<ExArrow> out;
    MapEnumerator en(a->carrier, b->carrier);
    while (auto m = en.next())
        if (is_ex_compatible(*a, *b, *m)) out.push_back(ExArrow{a, b, *m});
    return out;
}

// One canonical representative per arrow class: each partition-level map,
// lifted by sending an element to the least representative of the target
// class.  Ordered by the odometer over partition-level maps.
inline std::vector<ExArrow> enumerate_ex_arrow_classes(const ExObjPtr& a, const ExObjPtr& b) {
    std::vector<ExArrow> out;
    if (a->num_classes == 0) {
        if (a->carrier.size() != 0) throw std::logic_error("empty partition on nonempty carrier");
        out.push_back(ExArrow{a, b, FiniteMap(a->carrier, b->carrier, {})});
        return out;
    }
    if (b->num_classes == 0) return out; // nothing to map into
    std::vector<int> pick(static_cast<std::size_t>(a->num_classes), 0);
    while (true) {
        std::vector<int> table(static_cast<std::size_t>(a->carrier.size()));
        for (int x = 0; x < a->carrier.size(); ++x)
            table[static_cast<std::size_t>(x)] =
                b->class_rep[static_cast<std::size_t>(pick[static_cast<std::size_t>(
                    a->class_of[static_cast<std::size_t>(x)])])];
        out.push_back(ExArrow{a, b, FiniteMap(a->carrier, b->carrier, std::move(table))});
        int k = a->num_classes - 1;
        while (k >= 0 && ++pick[static_cast<std::size_t>(k)] == b->num_classes)
            pick[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Covers, monos, isos.

inline bool is_cover(const ExArrow& f) {
    std::vector<char> hit(static_cast<std::size_t>(f.cod->num_classes), 0);
    for (int a = 0; a < f.dom->carrier.size(); ++a)
        hit[static_cast<std::size_t>(f.cod->class_of[static_cast<std::size_t>(f.map(a))])] = 1;
    for (char h : hit)
        if (!h) return false;
    return true;
}

inline bool is_ex_mono(const ExArrow& f) {
    for (int a = 0; a < f.dom->carrier.size(); ++a)
        for (int b = 0; b < f.dom->carrier.size(); ++b)
            if (!f.dom->related(a, b) && f.cod->related(f.map(a), f.map(b))) return false;
    return true;
}

inline bool is_ex_iso(const ExArrow& f) { return is_cover(f) && is_ex_mono(f); }

inline std::optional<ExArrow> find_inverse(const ExArrow& f) {
    if (!is_ex_iso(f)) return std::nullopt;
    // class-level inverse, lifted canonically
    std::vector<int> to_dom_class(static_cast<std::size_t>(f.cod->num_classes), -1);
    for (int a = 0; a < f.dom->carrier.size(); ++a)
        to_dom_class[static_cast<std::size_t>(f.cod->class_of[static_cast<std::size_t>(f.map(a))])] =
            f.dom->class_of[static_cast<std::size_t>(a)];
    std::vector<int> table(static_cast<std::size_t>(f.cod->carrier.size()));
    for (int y = 0; y < f.cod->carrier.size(); ++y)
        table[static_cast<std::size_t>(y)] = f.dom->class_rep[static_cast<std::size_t>(
            to_dom_class[static_cast<std::size_t>(f.cod->class_of[static_cast<std::size_t>(y)])])];
    ExArrow inv = ex_arrow(f.cod, f.dom, FiniteMap(f.cod->carrier, f.dom->carrier, std::move(table)));
    if (!ex_eq(ex_compose(inv, f), ex_id(f.dom)) || !ex_eq(ex_compose(f, inv), ex_id(f.cod)))
        throw std::logic_error("inverse construction failed its defining equations");
    return inv;
}

// ---------------------------------------------------------------------------
// Quotients: the canonical cover onto the discrete object of classes.

struct QuotientResult {
    ExObjPtr object;   // discrete object on class labels
    ExArrow project;   // cover: source -> quotient
    ExArrow section;   // least-representative section: quotient -> source
};

inline FiniteSet class_label_set(const ExObj& a) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(a.num_classes));
    for (int c = 0; c < a.num_classes; ++c)
        labels.push_back(a.carrier.label(a.class_rep[static_cast<std::size_t>(c)]));
    return FiniteSet(std::move(labels));
}

inline QuotientResult ex_quotient(const ExObjPtr& a) {
    FiniteSet q = class_label_set(*a);
    ExObjPtr qobj = ex_discrete(q, a->strategy);
    std::vector<int> pt(a->class_of.begin(), a->class_of.end());
    ExArrow proj = ex_arrow(a, qobj, FiniteMap(a->carrier, q, std::move(pt)));
    std::vector<int> st(a->class_rep.begin(), a->class_rep.end());
    ExArrow sect = ex_arrow(qobj, a, FiniteMap(q, a->carrier, std::move(st)));
    if (!is_cover(proj)) throw std::logic_error("quotient projection is not a cover");
    if (!ex_eq(ex_compose(proj, sect), ex_id(qobj)))
        throw std::logic_error("quotient section is not a section");
    return QuotientResult{std::move(qobj), std::move(proj), std::move(sect)};
}

// The carrier, seen as a discrete object covering the given object: the
// canonical choice-object presentation of the same quotient.
inline ExArrow ex_carrier_cover(const ExObjPtr& a) {
    ExObjPtr d = ex_discrete(a->carrier, a->strategy);
    return ex_arrow(d, a, FiniteMap::identity(a->carrier));
}

// Plain-set shadow of an arrow: the induced map on class labels.
inline FiniteMap induced_class_map(const ExArrow& f) {
    FiniteSet qd = class_label_set(*f.dom), qc = class_label_set(*f.cod);
    std::vector<int> t(static_cast<std::size_t>(qd.size()));
    for (int c = 0; c < qd.size(); ++c)
        t[static_cast<std::size_t>(c)] = f.cod->class_of[static_cast<std::size_t>(
            f.map(f.dom->class_rep[static_cast<std::size_t>(c)]))];
    return FiniteMap(qd, qc, std::move(t));
}

// ---------------------------------------------------------------------------
// Finite limits and colimits.

struct ExProductResult {
    ExObjPtr object;
    ExArrow to_left, to_right;
};

inline ExProductResult ex_product(const ExObjPtr& a, const ExObjPtr& b,
                                  long long pack_threshold = kDefaultPackThreshold) {
    ProductResult pc = product(a->carrier, b->carrier);
    ProductResult pr = product(a->rel.apex(), b->rel.apex());
    auto leg = [&](const FiniteMap& la, const FiniteMap& lb) {
        std::vector<int> t(static_cast<std::size_t>(pr.object.size()));
        for (int w = 0; w < pr.object.size(); ++w) {
            std::vector<int> ab = pr.tuple.decode(w);
            t[static_cast<std::size_t>(w)] = pc.tuple.encode({la(ab[0]), lb(ab[1])});
        }
        return FiniteMap(pr.object, pc.object, std::move(t));
    };
    Span rel(leg(a->rel.left, b->rel.left), leg(a->rel.right, b->rel.right));
    ExObjPtr obj = std::make_shared<const ExObj>(
        detail::finish_ex_obj(pc.object, rel, a->strategy, pack_threshold, true));
    ExArrow pl = ex_arrow(obj, a, pc.pr1);
    ExArrow pr2 = ex_arrow(obj, b, pc.pr2);
    return ExProductResult{std::move(obj), std::move(pl), std::move(pr2)};
}

inline ExArrow ex_pairing(const ExArrow& f, const ExArrow& g, const ExProductResult& p) {
    if (!same_presentation(*f.dom, *g.dom)) throw error("pairing needs a common domain");
    return ex_arrow(f.dom, p.object,
                    pairing(f.map, g.map, product(p.to_left.cod->carrier, p.to_right.cod->carrier)));
}

struct ExSumResult {
    ExObjPtr object;
    ExArrow from_left, from_right;
};

inline ExSumResult ex_sum(const ExObjPtr& a, const ExObjPtr& b,
                          long long pack_threshold = kDefaultPackThreshold) {
    CoproductResult cc = coproduct(a->carrier, b->carrier);
    CoproductResult cr = coproduct(a->rel.apex(), b->rel.apex());
    auto leg = [&](const FiniteMap& la, const FiniteMap& lb) {
        return copairing(compose(cc.inl, la), compose(cc.inr, lb), cr);
    };
    Span rel(leg(a->rel.left, b->rel.left), leg(a->rel.right, b->rel.right));
    ExObjPtr obj = std::make_shared<const ExObj>(
        detail::finish_ex_obj(cc.object, rel, a->strategy, pack_threshold, true));
    ExArrow il = ex_arrow(a, obj, cc.inl);
    ExArrow ir = ex_arrow(b, obj, cc.inr);
    return ExSumResult{std::move(obj), std::move(il), std::move(ir)};
}

inline ExArrow ex_copairing(const ExArrow& f, const ExArrow& g, const ExSumResult& s) {
    if (!same_presentation(*f.cod, *g.cod)) throw error("copairing needs a common codomain");
    return ex_arrow(s.object, f.cod,
                    copairing(f.map, g.map,
                              coproduct(s.from_left.dom->carrier, s.from_right.dom->carrier)));
}

struct ExEqualizerResult {
    ExObjPtr object;
    ExArrow include;
};

// Equalizer of parallel arrows: elements whose two images are related, with
// the relation restricted.  Carrier and span rows keep their labels.
inline ExEqualizerResult ex_equalizer(const ExArrow& f, const ExArrow& g,
                                      long long pack_threshold = kDefaultPackThreshold) {
    if (!same_presentation(*f.dom, *g.dom) || !same_presentation(*f.cod, *g.cod))
        throw error("equalizer needs a parallel pair");
    const ExObj& a = *f.dom;
    std::vector<int> keep, pos(static_cast<std::size_t>(a.carrier.size()), -1);
    std::vector<std::string> labels;
    for (int x = 0; x < a.carrier.size(); ++x)
        if (f.cod->related(f.map(x), g.map(x))) {
            pos[static_cast<std::size_t>(x)] = static_cast<int>(keep.size());
            keep.push_back(x);
            labels.push_back(a.carrier.label(x));
        }
    FiniteSet e(labels);
    std::vector<std::string> wlabels;
    std::vector<int> lt, rt;
    for (int w = 0; w < a.rel.apex().size(); ++w) {
        int l = a.rel.left(w), r = a.rel.right(w);
        if (pos[static_cast<std::size_t>(l)] >= 0 && pos[static_cast<std::size_t>(r)] >= 0) {
            wlabels.push_back(a.rel.apex().label(w));
            lt.push_back(pos[static_cast<std::size_t>(l)]);
            rt.push_back(pos[static_cast<std::size_t>(r)]);
        }
    }
    FiniteSet apex(make_distinct_labels(std::move(wlabels)));
    Span rel(FiniteMap(apex, e, std::move(lt)), FiniteMap(apex, e, std::move(rt)));
    ExObjPtr obj = std::make_shared<const ExObj>(
        detail::finish_ex_obj(e, rel, a.strategy, pack_threshold, true));
    std::vector<int> inc(keep.begin(), keep.end());
    ExArrow include = ex_arrow(obj, f.dom, FiniteMap(e, a.carrier, std::move(inc)));
    return ExEqualizerResult{std::move(obj), std::move(include)};
}

struct ExPullbackResult {
    ExObjPtr object;
    ExArrow to_left, to_right;
};

inline ExPullbackResult ex_pullback(const ExArrow& f, const ExArrow& g,
                                    long long pack_threshold = kDefaultPackThreshold) {
    if (!same_presentation(*f.cod, *g.cod)) throw error("pullback needs a cospan");
    ExProductResult p = ex_product(f.dom, g.dom, pack_threshold);
    ExEqualizerResult e =
        ex_equalizer(ex_compose(f, p.to_left), ex_compose(g, p.to_right), pack_threshold);
    ExArrow tl = ex_compose(p.to_left, e.include);
    ExArrow tr = ex_compose(p.to_right, e.include);
    return ExPullbackResult{e.object, std::move(tl), std::move(tr)};
}

inline ExPullbackResult ex_kernel_pair(const ExArrow& f,
                                       long long pack_threshold = kDefaultPackThreshold) {
    return ex_pullback(f, f, pack_threshold);
}

struct ExImageResult {
    ExObjPtr image;
    ExArrow cover; // dom -> image
    ExArrow mono;  // image -> cod
};

// Factor an arrow as a cover followed by a mono.  The image keeps the
// domain's carrier and coarsens the relation by pulling the codomain's
// proof rows back along the map, so witness multiplicities are inherited.
inline ExImageResult ex_image(const ExArrow& f,
                              long long pack_threshold = kDefaultPackThreshold) {
    const ExObj& a = *f.dom;
    const ExObj& b = *f.cod;
    std::vector<std::string> labels;
    std::vector<int> lt, rt;
    for (int x = 0; x < a.carrier.size(); ++x)
        for (int y = 0; y < a.carrier.size(); ++y)
            for (int w = 0; w < b.rel.apex().size(); ++w)
                if (b.rel.left(w) == f.map(x) && b.rel.right(w) == f.map(y)) {
                    labels.push_back("(" + a.carrier.label(x) + "," + a.carrier.label(y) + ";" +
                                     b.rel.apex().label(w) + ")");
                    lt.push_back(x);
                    rt.push_back(y);
                }
    FiniteSet apex(make_distinct_labels(std::move(labels)));
    Span rel(FiniteMap(apex, a.carrier, std::move(lt)), FiniteMap(apex, a.carrier, std::move(rt)));
    ExObjPtr img = std::make_shared<const ExObj>(
        detail::finish_ex_obj(a.carrier, rel, a.strategy, pack_threshold, true));
    ExArrow cover = ex_arrow(f.dom, img, FiniteMap::identity(a.carrier));
    ExArrow mono = ex_arrow(img, f.cod, f.map);
    if (!is_cover(cover)) throw std::logic_error("image factorization: first factor not a cover");
    if (!is_ex_mono(mono)) throw std::logic_error("image factorization: second factor not mono");
    if (!ex_eq(ex_compose(mono, cover), f))
        throw std::logic_error("image factorization does not recompose");
    return ExImageResult{std::move(img), std::move(cover), std::move(mono)};
}

} // namespace exfin
