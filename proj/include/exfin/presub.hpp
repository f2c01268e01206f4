#pragma once

// Presubobjects: an arbitrary map a: A -> X regarded as a proof-relevant
// predicate on X.  The order a <= b means a factors through b; on finite sets
// this coincides with inclusion of images, and both tests are provided so
// they can be cross-checked.

#include <exfin/finset.hpp>

namespace exfin {

struct Presubobject {
    FiniteSet target;
    FiniteMap rep;

    Presubobject(FiniteSet target_, FiniteMap rep_)
        : target(std::move(target_)), rep(std::move(rep_)) {
        if (rep.cod() != target)
            throw error("presubobject representative lands in " + rep.cod().describe() +
                        ", not in its target " + target.describe());
    }

    int apex_size() const { return rep.dom().size(); }
};

inline Presubobject psub_identity(const FiniteSet& x) {
    return Presubobject(x, FiniteMap::identity(x));
}

// The subset of X selected by `included`, as an honest inclusion map.
inline Presubobject psub_from_subset(const FiniteSet& x, const std::vector<char>& included) {
    if (static_cast<int>(included.size()) != x.size())
        throw error("subset mask size mismatch");
    std::vector<std::string> labels;
    std::vector<int> incl;
    for (int i = 0; i < x.size(); ++i)
        if (included[static_cast<std::size_t>(i)]) {
            labels.push_back(x.label(i));
            incl.push_back(i);
        }
    FiniteSet a(std::move(labels));
    return Presubobject(x, FiniteMap(a, x, std::move(incl)));
}

// Which elements of the target are hit.
inline std::vector<char> element_image(const Presubobject& p) {
    std::vector<char> img(static_cast<std::size_t>(p.target.size()), 0);
    for (int v : p.rep.table()) img[static_cast<std::size_t>(v)] = 1;
    return img;
}

inline bool element_satisfies(const Presubobject& p, int x) {
    if (x < 0 || x >= p.target.size())
        throw error("element index out of range for presubobject target " + p.target.describe());
    for (int v : p.rep.table())
        if (v == x) return true;
    return false;
}

// First factorization h with b.rep . h = a.rep, if any.  The constraint is
// independent per element of A, so picking the least valid image for each
// element yields exactly the first solution in enumerate_maps order.
inline std::optional<FiniteMap> psub_factorization(const Presubobject& a, const Presubobject& b) {
    if (a.target != b.target)
        throw error("presubobject order compares predicates on one target; got " +
                    a.target.describe() + " and " + b.target.describe());
    const FiniteMap& ra = a.rep;
    const FiniteMap& rb = b.rep;
    // least preimage under b.rep per target element
    std::vector<int> least(static_cast<std::size_t>(b.target.size()), -1);
    for (int u = rb.dom().size() - 1; u >= 0; --u) least[static_cast<std::size_t>(rb(u))] = u;
    std::vector<int> t(static_cast<std::size_t>(ra.dom().size()));
    for (int u = 0; u < ra.dom().size(); ++u) {
        int w = least[static_cast<std::size_t>(ra(u))];
        if (w < 0) return std::nullopt;
        t[static_cast<std::size_t>(u)] = w;
    }
    return FiniteMap(ra.dom(), rb.dom(), std::move(t));
}

inline bool psub_leq(const Presubobject& a, const Presubobject& b) {
    return psub_factorization(a, b).has_value();
}

// Element-level inclusion; agrees with psub_leq on finite sets (every
// surjection splits).  Kept separate so the agreement itself is checkable.
inline bool psub_leq_elementwise(const Presubobject& a, const Presubobject& b) {
    if (a.target != b.target)
        throw error("presubobject order compares predicates on one target");
    std::vector<char> imgb = element_image(b);
    for (int v : a.rep.table())
        if (!imgb[static_cast<std::size_t>(v)]) return false;
    return true;
}

inline bool psub_equiv(const Presubobject& a, const Presubobject& b) {
    return psub_leq(a, b) && psub_leq(b, a);
}

} // namespace exfin
