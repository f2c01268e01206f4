#pragma once

// Weak finite limits over finite sets, with a switchable construction
// strategy: "minimal" returns the true limit, "padded:k" duplicates every
// witness k times.  Padded limits are still weak limits (cones factor, just
// not uniquely), and downstream constructions must give equivalent results
// under either strategy; tests and sweeps exercise both.
//
// Also here: spans, pseudo-equivalence relations with their witness packs
// (reflexivity / symmetry / transitivity maps), the witness search, and the
// choice-principle checks that make element-level reasoning sound on this
// base category.

#include <exfin/finset.hpp>
#include <exfin/presub.hpp>

namespace exfin {

struct WeakLimitStrategy {
    int padding = 1; // 1 = minimal, k >= 2 = every witness appears k times

    static WeakLimitStrategy minimal() { return WeakLimitStrategy{1}; }
    static WeakLimitStrategy padded(int k) {
        if (k < 2) throw error("padded strategy needs a factor of at least 2");
        return WeakLimitStrategy{k};
    }
    bool is_minimal() const { return padding == 1; }
    std::string describe() const {
        return is_minimal() ? "minimal" : "padded:" + std::to_string(padding);
    }
    bool operator==(const WeakLimitStrategy& o) const { return padding == o.padding; }
};

inline WeakLimitStrategy parse_strategy(const std::string& s) {
    if (s == "minimal") return WeakLimitStrategy::minimal();
    if (s.rfind("padded:", 0) == 0) {
        int k = 0;
        std::size_t used = 0;
        try {
            k = std::stoi(s.substr(7), &used);
        } catch (const std::exception&) {
            throw error("bad strategy \"" + s + "\"; expected minimal or padded:<k>");
        }
        if (used != s.size() - 7)
            throw error("bad strategy \"" + s + "\"; expected minimal or padded:<k>");
        return WeakLimitStrategy::padded(k);
    }
    throw error("bad strategy \"" + s + "\"; expected minimal or padded:<k>");
}

// Append suffixes until all labels are distinct (guards against user labels
// that already contain a padding suffix).
inline std::vector<std::string> make_distinct_labels(std::vector<std::string> labels) {
    std::unordered_map<std::string, int> seen;
    bool clash = false;
    for (auto& l : labels)
        if (++seen[l] > 1) clash = true;
    if (!clash) return labels;
    seen.clear();
    for (auto& l : labels) {
        std::string candidate = l;
        while (seen.count(candidate)) candidate += "'";
        seen.emplace(candidate, 1);
        l = std::move(candidate);
    }
    return labels;
}

struct WeakEqualizerResult {
    FiniteSet object;
    FiniteMap arrow; // into the common domain of the parallel pair
};

// Elements where f and g agree; each appears `padding` times.  Minimal
// labels keep the original element label, padded copies get "#c" suffixes.
inline WeakEqualizerResult weak_equalizer(const FiniteMap& f, const FiniteMap& g,
                                          const WeakLimitStrategy& st) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw error("weak equalizer needs a parallel pair; got " + f.dom().describe() + "->" +
                    f.cod().describe() + " and " + g.dom().describe() + "->" + g.cod().describe());
    std::vector<std::string> labels;
    std::vector<int> arrow;
    for (int i = 0; i < f.dom().size(); ++i) {
        if (f(i) != g(i)) continue;
        for (int c = 0; c < st.padding; ++c) {
            labels.push_back(st.is_minimal() ? f.dom().label(i)
                                             : f.dom().label(i) + "#" + std::to_string(c));
            arrow.push_back(i);
        }
    }
    FiniteSet e(make_distinct_labels(std::move(labels)));
    return WeakEqualizerResult{e, FiniteMap(e, f.dom(), std::move(arrow))};
}

// A span is a pair of maps out of one apex.
struct Span {
    FiniteMap left, right;

    Span(FiniteMap left_, FiniteMap right_) : left(std::move(left_)), right(std::move(right_)) {
        if (left.dom() != right.dom())
            throw error("span legs must share their apex; got " + left.dom().describe() + " and " +
                        right.dom().describe());
    }

    const FiniteSet& apex() const { return left.dom(); }
    const FiniteSet& left_foot() const { return left.cod(); }
    const FiniteSet& right_foot() const { return right.cod(); }
};

// Does some apex element witness the pair (x, y)?  Image-level semantics:
// only presence matters, not how many witnesses there are.
inline bool rel_holds(const Span& s, int x, int y) {
    for (int w = 0; w < s.apex().size(); ++w)
        if (s.left(w) == x && s.right(w) == y) return true;
    return false;
}

inline std::vector<std::pair<int, int>> span_pairs(const Span& s) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(s.apex().size()));
    for (int w = 0; w < s.apex().size(); ++w) out.emplace_back(s.left(w), s.right(w));
    return out;
}

// Span over X, Y whose apex has one row per listed pair (repeats allowed;
// they become extra witnesses).  Rows are labeled "(x,y)".
inline Span span_from_pairs(const FiniteSet& x, const FiniteSet& y,
                            const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::string> labels;
    std::vector<int> lt, rt;
    labels.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        labels.push_back(tuple_label({x.label(a), y.label(b)}));
        lt.push_back(a);
        rt.push_back(b);
    }
    FiniteSet apex(make_distinct_labels(std::move(labels)));
    return Span(FiniteMap(apex, x, std::move(lt)), FiniteMap(apex, y, std::move(rt)));
}

// Weak pullback of f: X -> Z, g: Y -> Z, built as the weak equalizer of
// f.pr1 and g.pr2 over X x Y.  Result legs: X <- W -> Y.
inline Span weak_pullback(const FiniteMap& f, const FiniteMap& g, const WeakLimitStrategy& st) {
    if (f.cod() != g.cod())
        throw error("weak pullback needs a cospan; feet " + f.cod().describe() + " and " +
                    g.cod().describe() + " differ");
    ProductResult p = product(f.dom(), g.dom());
    WeakEqualizerResult e = weak_equalizer(compose(f, p.pr1), compose(g, p.pr2), st);
    return Span(compose(p.pr1, e.arrow), compose(p.pr2, e.arrow));
}

// ---------------------------------------------------------------------------
// Pseudo-equivalence relations: a span r: R -> X x X together with chosen
// (not necessarily unique) structure maps
//   rho: X -> R        both legs of r.rho are the identity      (reflexivity)
//   sym: R -> R        legs swap under sym                      (symmetry)
//   tau: W -> R        W a weak pullback of (r2, r1); tau glues
//                      composable witness pairs                 (transitivity)

struct PseudoEqRel {
    FiniteSet carrier;
    Span rel;  // both feet = carrier
    FiniteMap rho;
    FiniteMap sym;
    Span wpb;  // legs W -> R with rel.right . p1 = rel.left . p2
    FiniteMap tau;

    void validate() const {
        if (rel.left_foot() != carrier || rel.right_foot() != carrier)
            throw error("pseudo-equivalence relation span must land in carrier x carrier");
        if (rho.dom() != carrier || rho.cod() != rel.apex())
            throw error("reflexivity witness map has wrong boundaries");
        for (int x = 0; x < carrier.size(); ++x)
            if (rel.left(rho(x)) != x || rel.right(rho(x)) != x)
                throw std::logic_error("reflexivity square broken at " + carrier.label(x));
        if (sym.dom() != rel.apex() || sym.cod() != rel.apex())
            throw error("symmetry witness map has wrong boundaries");
        for (int w = 0; w < rel.apex().size(); ++w)
            if (rel.left(sym(w)) != rel.right(w) || rel.right(sym(w)) != rel.left(w))
                throw std::logic_error("symmetry square broken at witness " + rel.apex().label(w));
        if (wpb.left.cod() != rel.apex() || wpb.right.cod() != rel.apex())
            throw error("transitivity weak pullback legs must land in the witness apex");
        if (tau.dom() != wpb.apex() || tau.cod() != rel.apex())
            throw error("transitivity witness map has wrong boundaries");
        for (int p = 0; p < wpb.apex().size(); ++p) {
            int w1 = wpb.left(p), w2 = wpb.right(p);
            if (rel.right(w1) != rel.left(w2))
                throw std::logic_error("transitivity pullback row is not composable");
            if (rel.left(tau(p)) != rel.left(w1) || rel.right(tau(p)) != rel.right(w2))
                throw std::logic_error("transitivity square broken at row " + wpb.apex().label(p));
        }
    }
};

// Is the image of the span an equivalence relation?  Checked directly on the
// membership matrix, with no witness machinery, so it can serve as the
// independent oracle for the witness search below.
inline bool span_image_is_equivalence(const Span& rel) {
    if (rel.left_foot() != rel.right_foot()) return false;
    int n = rel.left_foot().size();
    std::vector<char> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int w = 0; w < rel.apex().size(); ++w)
        m[static_cast<std::size_t>(rel.left(w)) * n + rel.right(w)] = 1;
    auto has = [&](int a, int b) { return m[static_cast<std::size_t>(a) * n + b] != 0; };
    for (int a = 0; a < n; ++a)
        if (!has(a, a)) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (has(a, b) && !has(b, a)) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!has(a, b)) continue;
            for (int c = 0; c < n; ++c)
                if (has(b, c) && !has(a, c)) return false;
        }
    return true;
}

// Search the witness pack for a span.  Each component constraint is
// pointwise, so taking the least admissible witness per element returns the
// first solution in enumerate_maps order.  Succeeds exactly when the span's
// image is an equivalence relation; that equivalence is checked
// independently and any disagreement is a fatal internal error.
inline std::optional<PseudoEqRel> find_pseudo_eqrel_witnesses(const Span& rel,
                                                              const WeakLimitStrategy& st) {
    if (rel.left_foot() != rel.right_foot())
        throw error("pseudo-equivalence witness search needs a span with equal feet");
    const FiniteSet& x = rel.left_foot();
    int n = x.size();
    const int r = rel.apex().size();

    std::vector<int> first(static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n, 1)), -1);
    auto slot = [&](int a, int b) -> int& { return first[static_cast<std::size_t>(a) * n + b]; };
    for (int w = 0; w < r; ++w) {
        int& f = slot(rel.left(w), rel.right(w));
        if (f < 0) f = w;
    }

    bool searched_ok = true;

    std::vector<int> rho_t(static_cast<std::size_t>(n));
    for (int a = 0; a < n && searched_ok; ++a) {
        int w = slot(a, a);
        if (w < 0) searched_ok = false;
        else rho_t[static_cast<std::size_t>(a)] = w;
    }

    std::vector<int> sym_t(static_cast<std::size_t>(r));
    for (int w = 0; w < r && searched_ok; ++w) {
        int w2 = slot(rel.right(w), rel.left(w));
        if (w2 < 0) searched_ok = false;
        else sym_t[static_cast<std::size_t>(w)] = w2;
    }

    Span wpb = weak_pullback(rel.right, rel.left, st);
    std::vector<int> tau_t(static_cast<std::size_t>(wpb.apex().size()));
    for (int p = 0; p < wpb.apex().size() && searched_ok; ++p) {
        int w = slot(rel.left(wpb.left(p)), rel.right(wpb.right(p)));
        if (w < 0) searched_ok = false;
        else tau_t[static_cast<std::size_t>(p)] = w;
    }

    bool equiv = span_image_is_equivalence(rel);
    if (searched_ok != equiv)
        throw std::logic_error("witness search and equivalence test disagree on span over " +
                               x.describe());
    if (!searched_ok) return std::nullopt;

    PseudoEqRel out{x, rel, FiniteMap(x, rel.apex(), std::move(rho_t)),
                    FiniteMap(rel.apex(), rel.apex(), std::move(sym_t)), wpb,
                    FiniteMap(wpb.apex(), rel.apex(), std::move(tau_t))};
    out.validate();
    return out;
}

// Every finite set is a choice object: every surjection onto it splits.
// Verified by sweeping all surjections from canonical domains up to the cap.
inline bool is_choice_object(const FiniteSet& y, int domain_size_cap = 4) {
    int lo = y.size() == 0 ? 0 : y.size();
    for (int nd = lo; nd <= std::max(domain_size_cap, lo); ++nd) {
        FiniteSet d = canonical_set("d", nd);
        MapEnumerator en(d, y);
        while (auto f = en.next()) {
            if (!is_surjective(*f)) continue;
            if (!least_section(*f)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Choice principles that make element-level logic agree with arrow-level
// logic on this base:
//   (i)   every surjection has a section;
//   (ii)  the factorization order on presubobjects coincides with
//         element-level inclusion;
//   (iii) every relation that is total on its domain contains a choice map.
// (i) and (ii) are equivalent and (i) implies (iii); the report records the
// sweeps for all three.

struct ElementalLogicReport {
    long long surjections_checked = 0;
    long long leq_pairs_checked = 0;
    long long total_relations_checked = 0;
    bool sections_ok = true;
    bool leq_agree_ok = true;
    bool choice_ok = true;
    std::string first_failure;

    bool ok() const { return sections_ok && leq_agree_ok && choice_ok; }
};

inline ElementalLogicReport check_elemental_logic(int max_size = 3) {
    ElementalLogicReport rep;

    // (i) every surjection has a section
    for (int na = 0; na <= max_size; ++na)
        for (int nb = 0; nb <= max_size; ++nb) {
            FiniteSet a = canonical_set("a", na);
            FiniteSet b = canonical_set("b", nb);
            MapEnumerator en(a, b);
            while (auto f = en.next()) {
                if (!is_surjective(*f)) continue;
                ++rep.surjections_checked;
                if (sections_of(*f).empty()) {
                    rep.sections_ok = false;
                    if (rep.first_failure.empty())
                        rep.first_failure = "surjection without section onto " + b.describe();
                }
            }
        }

    // (ii) factorization order == element inclusion, over all representative
    // pairs on every target
    for (int nx = 0; nx <= max_size; ++nx) {
        FiniteSet x = canonical_set("x", nx);
        for (int na = 0; na <= max_size; ++na)
            for (int nb = 0; nb <= max_size; ++nb) {
                for (const auto& fa : all_maps(canonical_set("s", na), x))
                    for (const auto& fb : all_maps(canonical_set("t", nb), x)) {
                        Presubobject a(x, fa), b(x, fb);
                        ++rep.leq_pairs_checked;
                        if (psub_leq(a, b) != psub_leq_elementwise(a, b)) {
                            rep.leq_agree_ok = false;
                            if (rep.first_failure.empty())
                                rep.first_failure = "order disagreement over " + x.describe();
                        }
                    }
            }
    }

    // (iii) total relations contain choice maps
    for (int nx = 0; nx <= max_size; ++nx)
        for (int ny = 0; ny <= max_size; ++ny) {
            FiniteSet x = canonical_set("x", nx);
            FiniteSet y = canonical_set("y", ny);
            if (nx > 0 && ny == 0) continue; // no total relation exists
            // Enumerate every relation total on x by odometer over nonempty
            // witness subsets of y per element.
            std::vector<int> mask(static_cast<std::size_t>(nx), 1);
            const int full = (1 << ny);
            while (true) {
                std::vector<std::pair<int, int>> pairs;
                for (int i = 0; i < nx; ++i)
                    for (int j = 0; j < ny; ++j)
                        if (mask[static_cast<std::size_t>(i)] & (1 << j)) pairs.emplace_back(i, j);
                Span rel = span_from_pairs(x, y, pairs);
                ++rep.total_relations_checked;
                // least witness per element gives the choice map
                std::vector<int> t(static_cast<std::size_t>(nx), -1);
                for (int w = 0; w < rel.apex().size(); ++w) {
                    int a = rel.left(w);
                    if (t[static_cast<std::size_t>(a)] < 0) t[static_cast<std::size_t>(a)] = rel.right(w);
                }
                bool ok = true;
                for (int i = 0; i < nx; ++i)
                    if (t[static_cast<std::size_t>(i)] < 0 ||
                        !rel_holds(rel, i, t[static_cast<std::size_t>(i)]))
                        ok = false;
                if (!ok) {
                    rep.choice_ok = false;
                    if (rep.first_failure.empty())
                        rep.first_failure = "total relation without choice map over " + x.describe();
                }
                // advance odometer over nonempty masks
                int k = nx - 1;
                while (k >= 0) {
                    if (++mask[static_cast<std::size_t>(k)] < full) break;
                    mask[static_cast<std::size_t>(k)] = 1;
                    --k;
                }
                if (k < 0 || nx == 0) break;
            }
        }

    return rep;
}

} // namespace exfin
