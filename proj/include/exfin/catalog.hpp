#pragma once

// Exhaustive and seeded enumeration of small objects and arrows, used by the
// sweep suites.  Partitions are enumerated as restricted growth strings, so
// every object carries the canonical one-row-per-related-pair span.

#include <exfin/ex.hpp>

#include <random>

namespace exfin {

// All partitions of {0..n-1} as class vectors in restricted growth order:
// entry 0 is class 0, and every entry is at most one more than the largest
// class seen before it.
inline std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(rgs);
        int k = n - 1;
        while (k > 0) {
            int maxbefore = 0;
            for (int j = 0; j < k; ++j) maxbefore = std::max(maxbefore, rgs[static_cast<std::size_t>(j)]);
            if (rgs[static_cast<std::size_t>(k)] <= maxbefore) break;
            --k;
        }
        if (k == 0) break;
        ++rgs[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < n; ++j) rgs[static_cast<std::size_t>(j)] = 0;
    }
    return out;
}

// Every object with carrier x0..x{n-1} for n in [min_size, max_size], one
// per partition, in (size, restricted-growth) order.
inline std::vector<ExObjPtr> all_exobjs(int max_size, const WeakLimitStrategy& st,
                                        int min_size = 0,
                                        long long pack_threshold = kDefaultPackThreshold) {
    std::vector<ExObjPtr> out;
    for (int n = min_size; n <= max_size; ++n) {
        FiniteSet carrier = canonical_set("x", n);
        for (const auto& classes : all_partitions(n))
            out.push_back(ex_obj_from_partition(carrier, classes, st, pack_threshold));
    }
    return out;
}

// Seeded sampling.  Everything goes through one engine so a run is fully
// reproducible from its seed.
struct SeededGen {
    std::mt19937_64 rng;

    explicit SeededGen(std::uint64_t seed) : rng(seed) {}

    int pick(int lo, int hi) { // inclusive bounds
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    std::vector<int> random_partition(int n) {
        std::vector<int> classes(static_cast<std::size_t>(n));
        int used = 0;
        for (int i = 0; i < n; ++i) {
            int c = pick(0, used); // new class when c == used
            classes[static_cast<std::size_t>(i)] = c;
            if (c == used) ++used;
        }
        return classes;
    }

    ExObjPtr random_exobj(const std::string& prefix, int min_size, int max_size,
                          const WeakLimitStrategy& st,
                          long long pack_threshold = kDefaultPackThreshold) {
        int n = pick(min_size, max_size);
        return ex_obj_from_partition(canonical_set(prefix, n), random_partition(n), st,
                                     pack_threshold);
    }

    // Random arrow, canonical representative of its class.
    ExArrow random_ex_arrow(const ExObjPtr& a, const ExObjPtr& b) {
        if (a->num_classes > 0 && b->num_classes == 0)
            throw error("no arrow exists into an empty object from a nonempty one");
        std::vector<int> table(static_cast<std::size_t>(a->carrier.size()));
        std::vector<int> pick_class(static_cast<std::size_t>(a->num_classes));
        for (int c = 0; c < a->num_classes; ++c) pick_class[static_cast<std::size_t>(c)] =
            pick(0, b->num_classes - 1);
        for (int x = 0; x < a->carrier.size(); ++x)
            table[static_cast<std::size_t>(x)] = b->class_rep[static_cast<std::size_t>(
                pick_class[static_cast<std::size_t>(a->class_of[static_cast<std::size_t>(x)])])];
        return ex_arrow(a, b, FiniteMap(a->carrier, b->carrier, std::move(table)));
    }
};

} // namespace exfin
