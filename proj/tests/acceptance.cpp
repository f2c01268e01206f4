// Acceptance gate: eight end-to-end checks over the whole library, one
// verdict line each.  Every check enumerates its claim exhaustively on small
// carriers (plus seeded larger worlds) and compares construction output
// against independent brute-force recomputation.  Exit code 0 iff all pass.

#include "exfin/catalog.hpp"
#include "exfin/cetcs.hpp"
#include "exfin/depprod.hpp"
#include "exfin/ex.hpp"
#include "exfin/finset.hpp"
#include "exfin/fullness.hpp"
#include "exfin/presub.hpp"
#include "exfin/weaklim.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

using namespace exfin;

namespace {

constexpr long long kSat = 1'000'000'000'000'000LL;
// Per-family budget for enumerating total relations in covering-code checks.
constexpr long long kFullnessBudget = 200'000;

long long sat_mul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSat / b) return kSat;
    return a * b;
}

long long sat_add(long long a, long long b) { return (a > kSat - b) ? kSat : a + b; }

// How many total relations the covering-code check would enumerate for the
// family over (f, g): per index, the product over its fiber rows of
// (2^witnesses - 1), skipping indices with an unwitnessed row.
long long predicted_cover_relations(const FiniteMap& f, const FiniteMap& g) {
    const FiniteSet& X = f.dom();
    const FiniteSet& Y = g.dom();
    long long total = 0;
    for (int i = 0; i < f.cod().size(); ++i) {
        long long prod = 1;
        bool possible = true;
        for (int x = 0; x < X.size() && possible; ++x) {
            if (f(x) != i) continue;
            long long w = 0;
            for (int y = 0; y < Y.size(); ++y)
                if (g(y) == x) ++w;
            if (w == 0) possible = false;
            else prod = sat_mul(prod, w >= 50 ? kSat : (1LL << w) - 1);
        }
        if (possible) total = sat_add(total, prod);
        if (total >= kSat) return kSat;
    }
    return total;
}

// Identification classes of the constructed object, counted per index class.
std::vector<long long> classes_per_index(const DepProd& dp) {
    FiniteMap m = induced_class_map(dp.display);
    std::vector<long long> counts(static_cast<std::size_t>(m.cod().size()), 0);
    for (int c = 0; c < m.dom().size(); ++c) ++counts[static_cast<std::size_t>(m(c))];
    return counts;
}

struct SweepStats {
    long long instances = 0, built = 0, capped = 0;
    long long oracle_mismatches = 0, count_mismatches = 0;
    long long up_failures = 0, sections = 0;
    long long families = 0, cover_relations = 0, cover_misses = 0, cover_skipped = 0;
};

struct InstanceResult {
    bool built = false;
    bool matched = false;
    std::vector<long long> counts;
    std::optional<DepProd> dp;
    std::optional<DepProdIso> iso;
};

// full_checks also verifies the universal property and covering codes; the
// cross-strategy replay only needs the verdict and the isomorphism data.
InstanceResult run_instance(const ExArrow& f, const ExArrow& g, SweepStats& s,
                            bool full_checks, const DepProdOptions& opt = {}) {
    InstanceResult r;
    ++s.instances;
    try {
        r.dp.emplace(build_dependent_product(f, g, opt));
    } catch (const cap_error&) {
        ++s.capped;
        return r;
    }
    r.built = true;
    ++s.built;

    DepProdOracle oc = oracle_dependent_product(f, g);
    r.matched = true;
    try {
        r.iso.emplace(match_to_oracle(*r.dp, oc));
    } catch (const error&) {
        r.matched = false;
        ++s.oracle_mismatches;
    }
    r.counts = classes_per_index(*r.dp);
    if (r.counts != oc.sections_per_class) {
        ++s.count_mismatches;
        r.matched = false;
    }
    if (!full_checks) return r;

    UPReport up = verify_universal_property(*r.dp);
    s.sections += up.sections_checked;
    if (!up.ok()) ++s.up_failures;

    ++s.families;
    if (predicted_cover_relations(r.dp->fam.f, r.dp->fam.g) > kFullnessBudget) {
        ++s.cover_skipped;
    } else {
        FullnessReport fr = check_fullness(r.dp->fam, false);
        s.cover_relations += fr.relations_checked;
        s.cover_misses += fr.misses;
    }
    return r;
}

struct CrossStats {
    long long both_built = 0, pad_extra_caps = 0, pad_only_built = 0;
    long long verdict_mismatches = 0, iso_failures = 0;
};

// Compare the same instance built under two strategies: verdicts must agree,
// and when both worlds exist they must be isomorphic over the index object.
void compare_strategies(const InstanceResult& a, const InstanceResult& b, CrossStats& cs) {
    if (!a.built && !b.built) return;
    if (a.built && !b.built) {
        ++cs.pad_extra_caps;
        return;
    }
    if (!a.built && b.built) {
        ++cs.pad_only_built; // padding never shrinks a family; this is an anomaly
        return;
    }
    ++cs.both_built;
    if (a.matched != b.matched || a.counts != b.counts) {
        ++cs.verdict_mismatches;
        return;
    }
    if (!a.matched) return;
    try {
        // Both sides are matched to the same section catalogue, so composing
        // the two correspondences gives a class-level bijection...
        FiniteMap cls = compose(b.iso->backward, a.iso->forward);
        bool ok = is_injective(cls) && is_surjective(cls);
        // ...which lifts to an isomorphism of the constructed objects...
        const ExObj& ga = *a.dp->G;
        const ExObj& gb = *b.dp->G;
        std::vector<int> t(static_cast<std::size_t>(ga.carrier.size()));
        for (int x = 0; x < ga.carrier.size(); ++x)
            t[static_cast<std::size_t>(x)] = gb.class_rep[static_cast<std::size_t>(
                cls(ga.class_of[static_cast<std::size_t>(x)]))];
        ExArrow u = ex_arrow(a.dp->G, b.dp->G, FiniteMap(ga.carrier, gb.carrier, std::move(t)));
        ok = ok && is_ex_iso(u);
        // ...commuting with the display maps on identification classes.
        FiniteMap da = induced_class_map(a.dp->display);
        FiniteMap db = induced_class_map(b.dp->display);
        for (int c = 0; c < da.dom().size() && ok; ++c)
            if (da(c) != db(cls(c))) ok = false;
        if (!ok) ++cs.iso_failures;
    } catch (const error&) {
        ++cs.iso_failures;
    }
}

struct Criterion {
    bool pass = false;
    std::string detail;
};

std::string join_verdicts(const AuditReport& r) {
    std::string out;
    for (const auto& a : r.axioms) {
        if (!out.empty()) out += " ";
        out += a.axiom + "=" + a.verdict;
    }
    return out;
}

} // namespace

int main() {
    const WeakLimitStrategy kMin = WeakLimitStrategy::minimal();
    const WeakLimitStrategy kPad = WeakLimitStrategy::padded(2);
    const std::uint64_t kSeed = 20260816;

    Criterion crit[8];
    using clock = std::chrono::steady_clock;
    double minimal_seconds = 0.0;
    const bool timings = std::getenv("ACCEPTANCE_TIMINGS") != nullptr;
    auto phase_start = clock::now();
    auto phase = [&](const char* name) {
        if (timings)
            std::fprintf(stderr, "  [phase] %-28s %.1fs\n", name,
                         std::chrono::duration<double>(clock::now() - phase_start).count());
        phase_start = clock::now();
    };

    // ---- Dependent-product suite: exhaustive on carriers <= 3, then seeded
    // ---- worlds on carriers <= 4, under both strategies (criteria 1-3, 7).
    SweepStats exh_min, exh_pad, seed_min, seed_pad;
    CrossStats cross;
    double pad_seconds = 0.0, iso_seconds = 0.0;

    // The padded replay runs under a tighter family budget so that oversize
    // worlds bail out before materializing their proof products; every world
    // it does build goes through the full pipeline.
    DepProdOptions pad_opt;
    pad_opt.caps.max_family = 1024;

    std::vector<ExObjPtr> objs_min = all_exobjs(3, kMin);
    std::vector<ExObjPtr> objs_pad = all_exobjs(3, kPad);
    const int nobjs = static_cast<int>(objs_min.size());
    long long hom_table_mismatches = 0;

    {
        // Cache arrow classes between every ordered pair of suite objects.
        std::vector<std::vector<std::vector<ExArrow>>> hm(
            static_cast<std::size_t>(nobjs),
            std::vector<std::vector<ExArrow>>(static_cast<std::size_t>(nobjs)));
        auto hp = hm;
        for (int a = 0; a < nobjs; ++a)
            for (int b = 0; b < nobjs; ++b) {
                hm[a][b] = enumerate_ex_arrow_classes(objs_min[a], objs_min[b]);
                hp[a][b] = enumerate_ex_arrow_classes(objs_pad[a], objs_pad[b]);
                if (hm[a][b].size() != hp[a][b].size()) ++hom_table_mismatches;
            }

        for (int xi = 0; xi < nobjs; ++xi)
            for (int ii = 0; ii < nobjs; ++ii)
                for (int yi = 0; yi < nobjs; ++yi) {
                    const auto& fs = hm[xi][ii];
                    const auto& gs = hm[yi][xi];
                    for (std::size_t fi = 0; fi < fs.size(); ++fi)
                        for (std::size_t gi = 0; gi < gs.size(); ++gi) {
                            auto t0 = clock::now();
                            InstanceResult rm = run_instance(fs[fi], gs[gi], exh_min, true);
                            minimal_seconds += std::chrono::duration<double>(clock::now() - t0).count();
                            auto t1 = clock::now();
                            InstanceResult rp =
                                run_instance(hp[xi][ii][fi], hp[yi][xi][gi], exh_pad, false, pad_opt);
                            auto t2 = clock::now();
                            compare_strategies(rm, rp, cross);
                            auto t3 = clock::now();
                            pad_seconds += std::chrono::duration<double>(t2 - t1).count();
                            iso_seconds += std::chrono::duration<double>(t3 - t2).count();
                        }
                }
    }

    if (timings)
        std::fprintf(stderr, "  [phase]   padded builds %.1fs, iso lifts %.1fs\n", pad_seconds,
                     iso_seconds);
    phase("exhaustive product suite");
    long long seed_draws = 0, seed_incomposable = 0;
    {
        SeededGen gen(kSeed);
        while (seed_min.built < 100 && seed_draws < 2000) {
            ++seed_draws;
            ExObjPtr Im = gen.random_exobj("i", 0, 4, kMin);
            ExObjPtr Xm = gen.random_exobj("x", 0, 4, kMin);
            ExObjPtr Ym = gen.random_exobj("y", 0, 4, kMin);
            if ((Xm->num_classes > 0 && Im->num_classes == 0) ||
                (Ym->num_classes > 0 && Xm->num_classes == 0)) {
                ++seed_incomposable;
                continue;
            }
            ExArrow fm = gen.random_ex_arrow(Xm, Im);
            ExArrow gm = gen.random_ex_arrow(Ym, Xm);
            auto t0 = clock::now();
            InstanceResult rm = run_instance(fm, gm, seed_min, true);
            minimal_seconds += std::chrono::duration<double>(clock::now() - t0).count();

            // Same world rebuilt under padding: identical carriers,
            // identifications, and map tables.
            ExObjPtr Ip = ex_obj_from_partition(Im->carrier, Im->class_of, kPad);
            ExObjPtr Xp = ex_obj_from_partition(Xm->carrier, Xm->class_of, kPad);
            ExObjPtr Yp = ex_obj_from_partition(Ym->carrier, Ym->class_of, kPad);
            InstanceResult rp = run_instance(ex_arrow(Xp, Ip, fm.map), ex_arrow(Yp, Xp, gm.map),
                                             seed_pad, false, pad_opt);
            compare_strategies(rm, rp, cross);
        }
    }

    phase("seeded product suite");

    // Criterion 1: the construction matches the section-counting oracle.
    {
        long long mismatches = exh_min.oracle_mismatches + exh_min.count_mismatches +
                               seed_min.oracle_mismatches + seed_min.count_mismatches;
        bool pass = mismatches == 0 && seed_min.built == 100 && exh_min.built > 0 &&
                    minimal_seconds < 300.0;
        char buf[512];
        std::snprintf(buf, sizeof buf,
                      "dependent products vs. section oracle: %lld exhaustive instances on "
                      "carriers <=3 (%lld built, %lld capped) + %lld seeded draws on carriers "
                      "<=4 (100 built, %lld capped, %lld incomposable), %lld mismatches, "
                      "%.1fs",
                      exh_min.instances, exh_min.built, exh_min.capped, seed_draws,
                      seed_min.capped, seed_incomposable, mismatches, minimal_seconds);
        crit[0] = {pass, buf};
    }

    // Criterion 2: the universal property holds on every built instance.
    {
        long long bad = exh_min.up_failures + seed_min.up_failures;
        long long sections = exh_min.sections + seed_min.sections;
        bool pass = bad == 0 && sections > 0;
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "universal property: %lld class-level sections checked across %lld "
                      "built instances, %lld existence/uniqueness violations",
                      sections, exh_min.built + seed_min.built, bad);
        crit[1] = {pass, buf};
    }

    // Criterion 3: covering codes exist for every total relation, both for
    // every family in the suite and for an independent base-level sweep.
    long long base_families = 0, base_relations = 0, base_misses = 0;
    {
        for (int nx = 0; nx <= 3; ++nx)
            for (int ni = 0; ni <= 3; ++ni)
                for (int ny = 0; ny <= 3; ++ny) {
                    FiniteSet X = canonical_set("x", nx);
                    FiniteSet I = canonical_set("i", ni);
                    FiniteSet Y = canonical_set("y", ny);
                    for (const FiniteMap& f : all_maps(X, I))
                        for (const FiniteMap& g : all_maps(Y, X)) {
                            FullFamily fam = build_full_family(f, g, kMin);
                            FullnessReport fr = check_fullness(fam, false);
                            ++base_families;
                            base_relations += fr.relations_checked;
                            base_misses += fr.misses;
                        }
                }
        long long suite_relations = exh_min.cover_relations + seed_min.cover_relations;
        long long suite_misses = exh_min.cover_misses + seed_min.cover_misses;
        long long suite_skipped = exh_min.cover_skipped + seed_min.cover_skipped;
        bool pass = base_misses == 0 && suite_misses == 0 && base_relations > 0 &&
                    suite_relations > 0;
        char buf[384];
        std::snprintf(buf, sizeof buf,
                      "covering codes: %lld base families (%lld total relations) + %lld suite "
                      "families (%lld relations, %lld over budget), %lld misses",
                      base_families, base_relations, exh_min.families + seed_min.families,
                      suite_relations, suite_skipped, base_misses + suite_misses);
        crit[2] = {pass, buf};
    }

    phase("base covering-code sweep");

    // Criterion 4: elementwise and factorization-based comparison of
    // presubobjects agree, and choice carriers split every surjection.
    {
        ElementalLogicReport rep = check_elemental_logic(3);
        char buf[320];
        std::snprintf(buf, sizeof buf,
                      "elemental logic: %lld surjections split, %lld comparison pairs agree, "
                      "%lld total relations covered%s%s",
                      rep.surjections_checked, rep.leq_pairs_checked,
                      rep.total_relations_checked, rep.ok() ? "" : " — first failure: ",
                      rep.ok() ? "" : rep.first_failure.c_str());
        crit[3] = {rep.ok(), buf};
    }

    phase("elemental logic sweep");

    // Criterion 5: witness search succeeds exactly on spans whose image is an
    // equivalence relation, and returned witnesses satisfy their equations.
    long long wit_checked = 0, wit_disagreements = 0, wit_bad_equations = 0;
    long long wit_strategy_mismatches = 0;
    {
        std::vector<char> min_found;
        for (int pass_idx = 0; pass_idx < 2; ++pass_idx) {
            const WeakLimitStrategy& st = pass_idx == 0 ? kMin : kPad;
            std::size_t cursor = 0;
            for (int n = 0; n <= 3; ++n) {
                FiniteSet carrier = canonical_set("e", n);
                const int cells = n * n;
                for (unsigned long mask = 0; mask < (1UL << cells); ++mask) {
                    std::vector<std::pair<int, int>> pairs;
                    for (int c = 0; c < cells; ++c)
                        if (mask & (1UL << c)) pairs.emplace_back(c / n, c % n);
                    for (int variant = 0; variant < (pairs.empty() ? 1 : 2); ++variant) {
                        std::vector<std::pair<int, int>> rows = pairs;
                        if (variant == 1) rows.push_back(pairs.front()); // repeated witness
                        Span sp = span_from_pairs(carrier, carrier, rows);
                        bool equiv = span_image_is_equivalence(sp);
                        std::optional<PseudoEqRel> w = find_pseudo_eqrel_witnesses(sp, st);
                        if (pass_idx == 0) ++wit_checked;
                        if (w.has_value() != equiv) ++wit_disagreements;
                        if (w) {
                            bool ok = true;
                            try {
                                w->validate();
                            } catch (const error&) {
                                ok = false;
                            }
                            FiniteMap idc = FiniteMap::identity(carrier);
                            ok = ok && compose(sp.left, w->rho) == idc &&
                                 compose(sp.right, w->rho) == idc &&
                                 compose(sp.left, w->sym) == sp.right &&
                                 compose(sp.right, w->sym) == sp.left &&
                                 compose(sp.left, w->tau) == compose(sp.left, w->wpb.left) &&
                                 compose(sp.right, w->tau) == compose(sp.right, w->wpb.right);
                            if (!ok) ++wit_bad_equations;
                        }
                        if (pass_idx == 0)
                            min_found.push_back(w.has_value() ? 1 : 0);
                        else if (min_found[cursor++] != (w.has_value() ? 1 : 0))
                            ++wit_strategy_mismatches;
                    }
                }
            }
        }
        bool pass = wit_disagreements == 0 && wit_bad_equations == 0 && wit_checked > 0;
        char buf[320];
        std::snprintf(buf, sizeof buf,
                      "identification witnesses: %lld spans on carriers <=3 (repeats included), "
                      "search success == image is an equivalence on all, %lld disagreements, "
                      "%lld witness-equation failures",
                      wit_checked, wit_disagreements, wit_bad_equations);
        crit[4] = {pass, buf};
    }

    phase("witness-search sweep");

    // Criterion 6: quotients are effective (kernel pairs recover exactly the
    // identifications), sums are disjoint with a strict initial object and
    // distributive products, and the full audit is clean.
    AuditReport audit_min = audit(kMin, kSeed);
    AuditReport audit_pad = audit(kPad, kSeed);
    LextensiveReport lext_min = check_weakly_lextensive(kMin);
    LextensiveReport lext_pad = check_weakly_lextensive(kPad);
    WellpointedReport well_min = check_wellpointed(kMin);
    WellpointedReport well_pad = check_wellpointed(kPad);
    {
        long long kp_pairs = 0, kp_bad = 0;
        for (const auto& A : objs_min) {
            QuotientResult q = ex_quotient(A);
            ExPullbackResult K = ex_kernel_pair(q.project);
            const int n = A->carrier.size();
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    bool identified = A->class_of[static_cast<std::size_t>(a)] ==
                                      A->class_of[static_cast<std::size_t>(b)];
                    bool reached = false;
                    for (int r = 0; r < K.object->carrier.size() && !reached; ++r)
                        reached = K.to_left.map(r) == a && K.to_right.map(r) == b;
                    ++kp_pairs;
                    if (identified != reached) ++kp_bad;
                }
        }
        bool audits_ok = audit_min.all_ok() && audit_min.verdict("C3").verdict == "skipped";
        for (const auto& a : audit_min.axioms)
            if (a.axiom != "C3" && a.verdict != "pass") audits_ok = false;
        bool pass = kp_bad == 0 && lext_min.ok() && well_min.ok() && audits_ok;
        char buf[384];
        std::snprintf(buf, sizeof buf,
                      "exactness and pretopos laws: kernel pairs of quotients recover "
                      "identifications on %lld pairs over %d objects (%lld errors), "
                      "sum/initial/distributivity sweep %lld checks, generator sweep %lld "
                      "checks, audit %s",
                      kp_pairs, nobjs, kp_bad, lext_min.checks, well_min.checks,
                      join_verdicts(audit_min).c_str());
        crit[5] = {pass, buf};
    }

    phase("audits and pretopos sweeps");

    // Criterion 8 computes before 7 so strategy agreement can fold it in.
    long long adj_checked = 0, adj_violations = 0, adj_strategy_mismatches = 0;
    long long adj_capped = 0;
    {
        std::vector<char> min_verdicts;
        for (int pass_idx = 0; pass_idx < 2; ++pass_idx) {
            const WeakLimitStrategy& st = pass_idx == 0 ? kMin : kPad;
            std::size_t cursor = 0;
            for (int nx = 0; nx <= 3; ++nx)
                for (int ni = 0; ni <= 3; ++ni) {
                    FiniteSet X = canonical_set("x", nx);
                    FiniteSet I = canonical_set("i", ni);
                    for (const FiniteMap& f : all_maps(X, I))
                        for (unsigned long gm = 0; gm < (1UL << nx); ++gm) {
                            std::vector<char> ginc(static_cast<std::size_t>(nx), 0);
                            for (int x = 0; x < nx; ++x)
                                if (gm & (1UL << x)) ginc[static_cast<std::size_t>(x)] = 1;
                            for (int variant = 0; variant < 2; ++variant) {
                                Presubobject gp = psub_from_subset(X, ginc);
                                if (variant == 1) {
                                    // Same image presented with two witnesses
                                    // per element.
                                    std::vector<std::string> labels;
                                    std::vector<int> table;
                                    for (int x = 0; x < nx; ++x)
                                        if (ginc[static_cast<std::size_t>(x)]) {
                                            labels.push_back(X.label(x));
                                            labels.push_back(X.label(x));
                                            table.push_back(x);
                                            table.push_back(x);
                                        }
                                    FiniteSet dom(make_distinct_labels(std::move(labels)));
                                    gp = Presubobject(X, FiniteMap(dom, X, std::move(table)));
                                }
                                std::optional<Presubobject> phi;
                                try {
                                    phi.emplace(forall_along(f, gp, st));
                                } catch (const cap_error&) {
                                    ++adj_capped; // logged; the h-loop below records sentinels
                                }
                                for (unsigned long hm = 0; hm < (1UL << ni); ++hm) {
                                    char v = 'C';
                                    if (phi) {
                                        std::vector<char> hinc(static_cast<std::size_t>(ni), 0);
                                        for (int i = 0; i < ni; ++i)
                                            if (hm & (1UL << i))
                                                hinc[static_cast<std::size_t>(i)] = 1;
                                        Presubobject h = psub_from_subset(I, hinc);
                                        bool lhs = psub_leq(h, *phi);
                                        Span pb = weak_pullback(h.rep, f, st);
                                        Presubobject pulled(X, pb.right);
                                        bool rhs = psub_leq(pulled, gp);
                                        if (pass_idx == 0) ++adj_checked;
                                        if (lhs != rhs) ++adj_violations;
                                        v = static_cast<char>((lhs ? 2 : 0) | (rhs ? 1 : 0));
                                    }
                                    if (pass_idx == 0) {
                                        min_verdicts.push_back(v);
                                    } else {
                                        char m = min_verdicts[cursor++];
                                        if (m != 'C' && v != 'C' && m != v)
                                            ++adj_strategy_mismatches;
                                    }
                                }
                            }
                        }
                }
        }
        bool pass = adj_violations == 0 && adj_checked > 0;
        char buf[320];
        std::snprintf(buf, sizeof buf,
                      "quantification adjunction: h <= forall_along(f,g) iff pullback of h "
                      "along f <= g, on %lld (f,g,h) triples over carriers <=3 "
                      "(multiplicity variants included), %lld violations, %lld capped",
                      adj_checked, adj_violations, adj_capped);
        crit[7] = {pass, buf};
    }

    phase("adjunction sweep");

    // Criterion 7: strategy independence — identical verdicts everywhere,
    // isomorphic constructions where both strategies build.
    {
        bool audits_agree = audit_min.axioms.size() == audit_pad.axioms.size();
        if (audits_agree)
            for (std::size_t i = 0; i < audit_min.axioms.size(); ++i)
                if (audit_min.axioms[i].axiom != audit_pad.axioms[i].axiom ||
                    audit_min.axioms[i].verdict != audit_pad.axioms[i].verdict)
                    audits_agree = false;
        bool sweeps_agree = lext_min.ok() == lext_pad.ok() &&
                            lext_min.checks == lext_pad.checks &&
                            well_min.ok() == well_pad.ok() && well_min.checks == well_pad.checks;
        bool pad_nonvacuous =
            audit_pad.verdict("C2").checks > 0 && cross.both_built >= 100 && exh_pad.built > 0;
        bool pass = cross.verdict_mismatches == 0 && cross.iso_failures == 0 &&
                    cross.pad_only_built == 0 && hom_table_mismatches == 0 && audits_agree &&
                    sweeps_agree && pad_nonvacuous && wit_strategy_mismatches == 0 &&
                    adj_strategy_mismatches == 0;
        char buf[448];
        std::snprintf(buf, sizeof buf,
                      "strategy independence (minimal vs padded:2): %lld instances built under "
                      "both (all isomorphic over the index object, %lld verdict mismatches, "
                      "%lld iso failures), %lld extra padded caps at family budget 1024, "
                      "audits/sweeps/witnesses/"
                      "adjunction agree: %s/%s/%s/%s",
                      cross.both_built, cross.verdict_mismatches, cross.iso_failures,
                      cross.pad_extra_caps, audits_agree ? "yes" : "no",
                      sweeps_agree ? "yes" : "no", wit_strategy_mismatches == 0 ? "yes" : "no",
                      adj_strategy_mismatches == 0 ? "yes" : "no");
        crit[6] = {pass, buf};
    }

    int passed = 0;
    for (int i = 0; i < 8; ++i) {
        std::printf("[%s] %d. %s\n", crit[i].pass ? "PASS" : "FAIL", i + 1,
                    crit[i].detail.c_str());
        if (crit[i].pass) ++passed;
    }
    std::printf("acceptance: %d/8 criteria pass\n", passed);
    return passed == 8 ? 0 : 1;
}
