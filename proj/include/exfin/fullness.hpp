#pragma once

// Fullness families over finite maps.  Given f: X -> I and
// g: Y -> X, the family packages, for every index i, all ways of choosing a
// g-preimage for every proof that an element lies in the fiber of i:
//
//   f(i)* = rows of the weak equalizer of f and const_i    (proofs x in fiber)
//   g(x)* = rows of the weak equalizer of g and const_x    (proofs y over x)
//   F     = sum over i of the table of assignments  u in f(i)* |-> g(proj u)*
//   phi   = F -> I, the index of a code
//   P     = pairs (code, fiber proof) for the code's own index
//   alpha = P -> F x X x Y, the rows each code covers
//   eps   = P -> Y, the chosen preimage
//
// Every code satisfies: its rows are partial sections of g (g(y) = x), and
// its covered x's are exactly the fiber of its index.  The family is full:
// every relation of partial sections that is total on a fiber is covered by
// some code (check_fullness), and phi is the universal way of quantifying a
// predicate along f (forall_along).
//
// |F| is a sum of products and grows exponentially; construction is guarded
// by a hard cap and throws cap_error beyond it so sweeps can skip-and-count.

#include <exfin/presub.hpp>
#include <exfin/weaklim.hpp>

namespace exfin {

struct Caps {
    long long max_family = 4096;
};

class cap_error : public error {
public:
    using error::error;
};

struct FiberObject {
    int index;         // element of the map's codomain
    FiniteSet carrier; // one row per proof, times padding
    FiniteMap proj;    // carrier -> map's domain
};

inline FiberObject fiber_object(const FiniteMap& f, int index, const WeakLimitStrategy& st) {
    WeakEqualizerResult e = weak_equalizer(f, FiniteMap::constant(f.dom(), f.cod(), index), st);
    return FiberObject{index, e.object, e.arrow};
}

struct FullFamily {
    FiniteMap f; // X -> I
    FiniteMap g; // Y -> X
    WeakLimitStrategy strategy;

    std::vector<FiberObject> f_fibers; // per i
    std::vector<FiberObject> g_fibers; // per x

    FiniteSet F;
    FiniteMap phi;                               // F -> I
    std::vector<int> code_index;                 // per code: its i
    std::vector<std::vector<int>> code_assign;   // per code: per fiber row u, a row of g_fibers[proj u]

    FiniteSet P;
    TupleProduct fxy; // F x X x Y
    FiniteMap alpha;  // P -> F x X x Y
    FiniteMap eps;    // P -> Y
    std::vector<int> p_code, p_urow; // per row of P

    // Per code: covered base-level pairs (x, y), one per fiber proof.
    std::vector<std::vector<std::pair<int, int>>> code_rows;

    const FiniteSet& index_set() const { return f.cod(); }
};

inline FullFamily build_full_family(const FiniteMap& f, const FiniteMap& g,
                                    const WeakLimitStrategy& st, const Caps& caps = Caps{}) {
    if (g.cod() != f.dom())
        throw error("family needs composable data: g lands in " + g.cod().describe() +
                    ", f starts at " + f.dom().describe());
    FullFamily fam{f, g, st, {}, {}, FiniteSet(), FiniteMap::identity(terminal_set()), {}, {},
                   FiniteSet(), TupleProduct{}, FiniteMap::identity(terminal_set()),
                   FiniteMap::identity(terminal_set()), {}, {}, {}};

    const FiniteSet& I = f.cod();
    const FiniteSet& X = f.dom();
    const FiniteSet& Y = g.dom();

    for (int i = 0; i < I.size(); ++i) fam.f_fibers.push_back(fiber_object(f, i, st));
    for (int x = 0; x < X.size(); ++x) fam.g_fibers.push_back(fiber_object(g, x, st));

    // Size check first, with early clamping, so oversize inputs fail fast.
    long long total = 0;
    for (int i = 0; i < I.size(); ++i) {
        long long cnt = 1;
        for (int u = 0; u < fam.f_fibers[static_cast<std::size_t>(i)].carrier.size(); ++u) {
            int x = fam.f_fibers[static_cast<std::size_t>(i)].proj(u);
            cnt *= fam.g_fibers[static_cast<std::size_t>(x)].carrier.size();
            if (cnt > caps.max_family + 1) { cnt = caps.max_family + 1; break; }
        }
        total += cnt;
        if (total > caps.max_family)
            throw cap_error("family over " + I.describe() + " exceeds the size cap (" +
                            std::to_string(caps.max_family) + " codes)");
    }

    // Codes, in index-major order, assignments in odometer order.
    std::vector<std::string> flabels;
    for (int i = 0; i < I.size(); ++i) {
        const FiberObject& fib = fam.f_fibers[static_cast<std::size_t>(i)];
        const int nu = fib.carrier.size();
        std::vector<int> dims(static_cast<std::size_t>(nu));
        bool empty_factor = false;
        for (int u = 0; u < nu; ++u) {
            dims[static_cast<std::size_t>(u)] =
                fam.g_fibers[static_cast<std::size_t>(fib.proj(u))].carrier.size();
            if (dims[static_cast<std::size_t>(u)] == 0) empty_factor = true;
        }
        if (empty_factor) continue; // no assignment exists for this index
        std::vector<int> assign(static_cast<std::size_t>(nu), 0);
        while (true) {
            fam.code_index.push_back(i);
            fam.code_assign.push_back(assign);
            std::string lbl = "(" + I.label(i) + "|";
            for (int u = 0; u < nu; ++u) {
                if (u) lbl += ',';
                int x = fib.proj(u);
                lbl += fam.g_fibers[static_cast<std::size_t>(x)].carrier.label(
                    assign[static_cast<std::size_t>(u)]);
            }
            lbl += ')';
            flabels.push_back(std::move(lbl));
            int k = nu - 1;
            while (k >= 0) {
                if (++assign[static_cast<std::size_t>(k)] < dims[static_cast<std::size_t>(k)]) break;
                assign[static_cast<std::size_t>(k)] = 0;
                --k;
            }
            if (k < 0) break;
        }
    }
    fam.F = FiniteSet(make_distinct_labels(std::move(flabels)));
    {
        std::vector<int> phit(fam.code_index.begin(), fam.code_index.end());
        fam.phi = FiniteMap(fam.F, I, std::move(phit));
    }

    // P: one row per (code, fiber proof of the code's index).
    std::vector<std::string> plabels;
    std::vector<int> eps_t;
    fam.code_rows.assign(fam.code_index.size(), {});
    for (std::size_t v = 0; v < fam.code_index.size(); ++v) {
        const FiberObject& fib = fam.f_fibers[static_cast<std::size_t>(fam.code_index[v])];
        for (int u = 0; u < fib.carrier.size(); ++u) {
            int x = fib.proj(u);
            int w = fam.code_assign[v][static_cast<std::size_t>(u)];
            int y = fam.g_fibers[static_cast<std::size_t>(x)].proj(w);
            plabels.push_back("(" + fam.F.label(static_cast<int>(v)) + "," + fib.carrier.label(u) + ")");
            fam.p_code.push_back(static_cast<int>(v));
            fam.p_urow.push_back(u);
            eps_t.push_back(y);
            fam.code_rows[v].emplace_back(x, y);
        }
    }
    fam.P = FiniteSet(make_distinct_labels(std::move(plabels)));
    fam.eps = FiniteMap(fam.P, Y, std::move(eps_t));
    fam.fxy = tuple_product({fam.F, X, Y});
    {
        std::vector<int> at(static_cast<std::size_t>(fam.P.size()));
        for (int p = 0; p < fam.P.size(); ++p) {
            int v = fam.p_code[static_cast<std::size_t>(p)];
            const FiberObject& fib = fam.f_fibers[static_cast<std::size_t>(fam.code_index[
                static_cast<std::size_t>(v)])];
            int x = fib.proj(fam.p_urow[static_cast<std::size_t>(p)]);
            at[static_cast<std::size_t>(p)] = fam.fxy.encode({v, x, fam.eps(p)});
        }
        fam.alpha = FiniteMap(fam.P, fam.fxy.object, std::move(at));
    }

    // Construction invariants.  (a) rows are partial sections of g;
    // (b) a code covers x exactly when x lies in the fiber of its index.
    for (std::size_t v = 0; v < fam.code_index.size(); ++v) {
        std::vector<char> covered(static_cast<std::size_t>(X.size()), 0);
        for (const auto& [x, y] : fam.code_rows[v]) {
            if (g(y) != x)
                throw std::logic_error("family row is not a partial section of g");
            if (f(x) != fam.code_index[v])
                throw std::logic_error("family row escapes the fiber of its code");
            covered[static_cast<std::size_t>(x)] = 1;
        }
        for (int x = 0; x < X.size(); ++x)
            if ((f(x) == fam.code_index[v]) != (covered[static_cast<std::size_t>(x)] != 0))
                throw std::logic_error("family code does not cover its fiber exactly");
    }
    return fam;
}

// ---------------------------------------------------------------------------
// Fullness check: every relation of partial sections that is total on the
// fiber of its index is covered by some code, meaning every row of the code
// lies in the relation.  Relations are enumerated at image level: membership
// in a span only depends on its image, so subsets of
// {(x,y) : g y = x and f x = i} that are total on the fiber enumerate every
// case; larger witness apexes add nothing.

struct FullnessItem {
    int index;
    std::vector<std::pair<int, int>> relation;
    int code; // covering code, -1 on a miss
};

struct FullnessReport {
    long long relations_checked = 0;
    long long misses = 0;
    std::vector<FullnessItem> items;
    bool ok() const { return misses == 0; }
};

// The covering code the existence argument constructs: for each fiber proof,
// the least admissible witness row.  Returns -1 when some fiber element has
// no witness in the relation (then the relation was not total).
inline int canonical_covering_code(const FullFamily& fam, int index,
                                   const std::vector<std::pair<int, int>>& relation) {
    const FiberObject& fib = fam.f_fibers[static_cast<std::size_t>(index)];
    std::vector<int> assign(static_cast<std::size_t>(fib.carrier.size()));
    for (int u = 0; u < fib.carrier.size(); ++u) {
        int x = fib.proj(u);
        int ystar = -1;
        for (const auto& [rx, ry] : relation)
            if (rx == x && (ystar < 0 || ry < ystar)) ystar = ry;
        if (ystar < 0) return -1;
        const FiberObject& gf = fam.g_fibers[static_cast<std::size_t>(x)];
        int w = -1;
        for (int c = 0; c < gf.carrier.size(); ++c)
            if (gf.proj(c) == ystar) { w = c; break; }
        if (w < 0) return -1;
        assign[static_cast<std::size_t>(u)] = w;
    }
    for (std::size_t v = 0; v < fam.code_index.size(); ++v)
        if (fam.code_index[v] == index && fam.code_assign[v] == assign) return static_cast<int>(v);
    return -1;
}

inline bool code_covers(const FullFamily& fam, int code,
                        const std::vector<std::pair<int, int>>& relation) {
    for (const auto& row : fam.code_rows[static_cast<std::size_t>(code)]) {
        bool found = false;
        for (const auto& r : relation)
            if (r == row) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

inline FullnessReport check_fullness(const FullFamily& fam, bool keep_items = true) {
    FullnessReport rep;
    const FiniteMap& f = fam.f;
    const FiniteMap& g = fam.g;
    const FiniteSet& X = f.dom();
    const FiniteSet& Y = g.dom();

    for (int i = 0; i < f.cod().size(); ++i) {
        std::vector<int> fiber;
        for (int x = 0; x < X.size(); ++x)
            if (f(x) == i) fiber.push_back(x);
        std::vector<std::vector<int>> witnesses(fiber.size());
        bool possible = true;
        for (std::size_t k = 0; k < fiber.size(); ++k) {
            for (int y = 0; y < Y.size(); ++y)
                if (g(y) == fiber[k]) witnesses[k].push_back(y);
            if (witnesses[k].empty()) possible = false;
        }
        if (!possible) continue; // no total relation over this index

        // Odometer over nonempty witness subsets per fiber element.
        std::vector<unsigned> mask(fiber.size(), 1u);
        while (true) {
            std::vector<std::pair<int, int>> rel;
            for (std::size_t k = 0; k < fiber.size(); ++k)
                for (std::size_t j = 0; j < witnesses[k].size(); ++j)
                    if (mask[k] & (1u << j)) rel.emplace_back(fiber[k], witnesses[k][j]);
            ++rep.relations_checked;
            int code = canonical_covering_code(fam, i, rel);
            if (code >= 0 && (fam.phi(code) != i || !code_covers(fam, code, rel))) code = -1;
            if (code < 0) {
                // Fall back to exhaustive search before declaring a miss.
                for (std::size_t v = 0; v < fam.code_index.size(); ++v)
                    if (fam.code_index[v] == i && code_covers(fam, static_cast<int>(v), rel)) {
                        code = static_cast<int>(v);
                        break;
                    }
            }
            if (code < 0) ++rep.misses;
            if (keep_items) rep.items.push_back(FullnessItem{i, rel, code});

            bool done = true;
            for (std::size_t k = fiber.size(); k-- > 0;) {
                if (++mask[k] < (1u << witnesses[k].size())) { done = false; break; }
                mask[k] = 1u;
            }
            if (done) break;
        }
    }
    return rep;
}

// Universal quantification of a predicate along a map: the index map of the
// family over (f, predicate representative).  Satisfies the adjunction
//   h <= forall_along(f, g)   iff   pullback of h along f <= g.
inline Presubobject forall_along(const FiniteMap& f, const Presubobject& g,
                                 const WeakLimitStrategy& st, const Caps& caps = Caps{}) {
    if (g.target != f.dom())
        throw error("forall_along needs a predicate on the map's domain " + f.dom().describe());
    FullFamily fam = build_full_family(f, g.rep, st, caps);
    return Presubobject(f.cod(), fam.phi);
}

} // namespace exfin
