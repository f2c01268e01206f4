#pragma once

// Finite sets with a fixed canonical order, total maps between them, and the
// finite-limit/colimit toolkit (products, equalizers, coproducts, sections,
// exhaustive map enumeration).  Everything is an immutable value; operations
// never mutate their arguments.  All enumeration orders are deterministic:
// the canonical order of a set is its label list, maps enumerate in
// lexicographic (odometer) order over that.

#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace exfin {

// Base error for precondition violations surfaced to callers (bad boundaries,
// unknown labels, malformed data).  Internal consistency violations use
// std::logic_error instead: those indicate a bug, not bad input.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class FiniteSet {
public:
    FiniteSet() : d_(empty_data()) {}

    explicit FiniteSet(std::vector<std::string> labels) {
        auto d = std::make_shared<Data>();
        d->labels = std::move(labels);
        d->index.reserve(d->labels.size());
        for (std::size_t i = 0; i < d->labels.size(); ++i) {
            auto [it, fresh] = d->index.emplace(d->labels[i], static_cast<int>(i));
            (void)it;
            if (!fresh)
                throw error("duplicate label \"" + d->labels[i] + "\" in finite set");
        }
        d_ = std::move(d);
    }

    int size() const { return static_cast<int>(d_->labels.size()); }
    bool empty() const { return d_->labels.empty(); }

    const std::string& label(int i) const {
        if (i < 0 || i >= size())
            throw error("element index " + std::to_string(i) + " out of range for set " + describe());
        return d_->labels[static_cast<std::size_t>(i)];
    }

    const std::vector<std::string>& labels() const { return d_->labels; }

    std::optional<int> find(std::string_view label) const {
        auto it = d_->index.find(std::string(label));
        if (it == d_->index.end()) return std::nullopt;
        return it->second;
    }

    int index_of(std::string_view label) const {
        auto i = find(label);
        if (!i) throw error("label \"" + std::string(label) + "\" is not an element of set " + describe());
        return *i;
    }

    bool contains(std::string_view label) const { return find(label).has_value(); }

    bool operator==(const FiniteSet& o) const {
        return d_ == o.d_ || d_->labels == o.d_->labels;
    }
    bool operator!=(const FiniteSet& o) const { return !(*this == o); }

    // "{a,b,c}", truncated past a few elements; used in error messages.
    std::string describe(std::size_t max_shown = 6) const {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < d_->labels.size(); ++i) {
            if (i == max_shown) { os << ",..(" << d_->labels.size() << " total)"; break; }
            if (i) os << ',';
            os << d_->labels[i];
        }
        os << '}';
        return os.str();
    }

private:
    struct Data {
        std::vector<std::string> labels;
        std::unordered_map<std::string, int> index;
    };
    static std::shared_ptr<const Data> empty_data() {
        static const auto d = std::make_shared<Data>();
        return d;
    }
    std::shared_ptr<const Data> d_;
};

// {prefix0, prefix1, ...}: the canonical n-element set used by sweeps.
inline FiniteSet canonical_set(const std::string& prefix, int n) {
    std::vector<std::string> ls;
    ls.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ls.push_back(prefix + std::to_string(i));
    return FiniteSet(std::move(ls));
}

class FiniteMap {
public:
    FiniteMap(FiniteSet dom, FiniteSet cod, std::vector<int> table) {
        if (static_cast<int>(table.size()) != dom.size())
            throw error("map table has " + std::to_string(table.size()) + " entries for domain " + dom.describe());
        for (int v : table)
            if (v < 0 || v >= cod.size())
                throw error("map table entry " + std::to_string(v) + " is outside codomain " + cod.describe());
        auto d = std::make_shared<Data>();
        d->dom = std::move(dom);
        d->cod = std::move(cod);
        d->table = std::move(table);
        d_ = std::move(d);
    }

    static FiniteMap identity(const FiniteSet& x) {
        std::vector<int> t(static_cast<std::size_t>(x.size()));
        for (int i = 0; i < x.size(); ++i) t[static_cast<std::size_t>(i)] = i;
        return FiniteMap(x, x, std::move(t));
    }

    static FiniteMap constant(const FiniteSet& dom, const FiniteSet& cod, int value) {
        if (value < 0 || value >= cod.size())
            throw error("constant value out of range for codomain " + cod.describe());
        return FiniteMap(dom, cod, std::vector<int>(static_cast<std::size_t>(dom.size()), value));
    }

    static FiniteMap from_labels(const FiniteSet& dom, const FiniteSet& cod,
                                 const std::vector<std::pair<std::string, std::string>>& entries) {
        std::vector<int> t(static_cast<std::size_t>(dom.size()), -1);
        for (const auto& [k, v] : entries)
            t[static_cast<std::size_t>(dom.index_of(k))] = cod.index_of(v);
        for (int i = 0; i < dom.size(); ++i)
            if (t[static_cast<std::size_t>(i)] < 0)
                throw error("map table is not total: no entry for \"" + dom.label(i) + "\"");
        return FiniteMap(dom, cod, std::move(t));
    }

    // Image labels listed in domain order.
    static FiniteMap from_images(const FiniteSet& dom, const FiniteSet& cod,
                                 const std::vector<std::string>& images) {
        if (static_cast<int>(images.size()) != dom.size())
            throw error("map table needs one image per domain element of " + dom.describe());
        std::vector<int> t;
        t.reserve(images.size());
        for (const auto& v : images) t.push_back(cod.index_of(v));
        return FiniteMap(dom, cod, std::move(t));
    }

    const FiniteSet& dom() const { return d_->dom; }
    const FiniteSet& cod() const { return d_->cod; }
    const std::vector<int>& table() const { return d_->table; }

    int operator()(int i) const {
        if (i < 0 || i >= dom().size())
            throw error("map applied to index " + std::to_string(i) + " outside domain " + dom().describe());
        return d_->table[static_cast<std::size_t>(i)];
    }

    const std::string& apply_label(std::string_view x) const {
        return cod().label((*this)(dom().index_of(x)));
    }

    bool operator==(const FiniteMap& o) const {
        return dom() == o.dom() && cod() == o.cod() && table() == o.table();
    }
    bool operator!=(const FiniteMap& o) const { return !(*this == o); }

    bool is_identity() const {
        if (dom() != cod()) return false;
        for (int i = 0; i < dom().size(); ++i)
            if (d_->table[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

private:
    struct Data {
        FiniteSet dom, cod;
        std::vector<int> table;
    };
    std::shared_ptr<const Data> d_;
};

inline bool is_surjective(const FiniteMap& f) {
    std::vector<char> hit(static_cast<std::size_t>(f.cod().size()), 0);
    for (int v : f.table()) hit[static_cast<std::size_t>(v)] = 1;
    for (char h : hit)
        if (!h) return false;
    return true;
}

inline bool is_injective(const FiniteMap& f) {
    std::vector<char> hit(static_cast<std::size_t>(f.cod().size()), 0);
    for (int v : f.table()) {
        if (hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

// g after f.  The boundary check names both sides so mismatches are readable.
inline FiniteMap compose(const FiniteMap& g, const FiniteMap& f) {
    if (f.cod() != g.dom())
        throw error("cannot compose: codomain " + f.cod().describe() +
                    " of the first map differs from domain " + g.dom().describe() + " of the second");
    std::vector<int> t(static_cast<std::size_t>(f.dom().size()));
    for (int i = 0; i < f.dom().size(); ++i) t[static_cast<std::size_t>(i)] = g(f(i));
    return FiniteMap(f.dom(), g.cod(), std::move(t));
}

inline FiniteSet terminal_set() { return FiniteSet({"*"}); }
inline FiniteSet initial_set() { return FiniteSet(std::vector<std::string>{}); }

// The unique map X -> 1.
inline FiniteMap terminal_map(const FiniteSet& x) {
    return FiniteMap(x, terminal_set(), std::vector<int>(static_cast<std::size_t>(x.size()), 0));
}

// ---------------------------------------------------------------------------
// n-ary products with tuple labels "(a,b,c)".  The binary product is the
// 2-ary case.  Component order is significant; the element order is
// lexicographic with the leftmost factor most significant, which matches the
// odometer order used everywhere else.

struct TupleProduct {
    FiniteSet object;
    std::vector<FiniteSet> factors;
    std::vector<FiniteMap> projections;

    int arity() const { return static_cast<int>(factors.size()); }

    // Row-major index of a component tuple.
    int encode(const std::vector<int>& comps) const {
        if (comps.size() != factors.size())
            throw error("tuple arity mismatch in product encode");
        long long ix = 0;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            int n = factors[k].size();
            int c = comps[k];
            if (c < 0 || c >= n) throw error("tuple component out of range in product encode");
            ix = ix * n + c;
        }
        return static_cast<int>(ix);
    }

    std::vector<int> decode(int ix) const {
        std::vector<int> comps(factors.size(), 0);
        for (std::size_t k = factors.size(); k-- > 0;) {
            int n = factors[k].size();
            comps[k] = ix % n;
            ix /= n;
        }
        return comps;
    }
};

inline std::string tuple_label(const std::vector<std::string>& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += parts[i];
    }
    s += ')';
    return s;
}

inline TupleProduct tuple_product(std::vector<FiniteSet> factors) {
    long long total = 1;
    for (const auto& f : factors) {
        total *= f.size();
        if (total > 4'000'000) throw error("product too large to materialize");
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(total));
    std::vector<int> comps(factors.size(), 0);
    for (long long ix = 0; ix < total; ++ix) {
        std::vector<std::string> parts;
        parts.reserve(factors.size());
        long long rest = ix;
        for (std::size_t k = factors.size(); k-- > 0;) {
            comps[k] = static_cast<int>(rest % factors[k].size());
            rest /= factors[k].size();
        }
        for (std::size_t k = 0; k < factors.size(); ++k)
            parts.push_back(factors[k].label(comps[k]));
        labels.push_back(tuple_label(parts));
    }
    TupleProduct tp;
    tp.object = FiniteSet(std::move(labels));
    tp.factors = std::move(factors);
    for (std::size_t k = 0; k < tp.factors.size(); ++k) {
        std::vector<int> t(static_cast<std::size_t>(tp.object.size()));
        for (int ix = 0; ix < tp.object.size(); ++ix) t[static_cast<std::size_t>(ix)] = tp.decode(ix)[k];
        tp.projections.emplace_back(tp.object, tp.factors[k], std::move(t));
    }
    return tp;
}

// <fs...>: the unique map into the product with the given components.
inline FiniteMap tupling(const std::vector<FiniteMap>& fs, const TupleProduct& tp) {
    if (fs.size() != tp.factors.size()) throw error("tupling arity mismatch");
    if (fs.empty())
        throw error("tupling into the empty product needs an explicit domain; map to its sole element instead");
    const FiniteSet& dom = fs[0].dom();
    for (std::size_t k = 0; k < fs.size(); ++k) {
        if (fs[k].dom() != dom) throw error("tupling components disagree on domain");
        if (fs[k].cod() != tp.factors[k])
            throw error("tupling component " + std::to_string(k) + " lands in " + fs[k].cod().describe() +
                        ", product factor is " + tp.factors[k].describe());
    }
    std::vector<int> t(static_cast<std::size_t>(dom.size()));
    std::vector<int> comps(fs.size());
    for (int i = 0; i < dom.size(); ++i) {
        for (std::size_t k = 0; k < fs.size(); ++k) comps[k] = fs[k](i);
        t[static_cast<std::size_t>(i)] = tp.encode(comps);
    }
    return FiniteMap(dom, tp.object, std::move(t));
}

struct ProductResult {
    FiniteSet object;
    FiniteMap pr1, pr2;
    TupleProduct tuple;
};

inline ProductResult product(const FiniteSet& a, const FiniteSet& b) {
    TupleProduct tp = tuple_product({a, b});
    return ProductResult{tp.object, tp.projections[0], tp.projections[1], tp};
}

inline FiniteMap pairing(const FiniteMap& f, const FiniteMap& g, const ProductResult& p) {
    return tupling({f, g}, p.tuple);
}

// ---------------------------------------------------------------------------
// Equalizer: the subset where two parallel maps agree, with its inclusion.

struct EqualizerResult {
    FiniteSet object;
    FiniteMap include;
};

inline EqualizerResult equalizer(const FiniteMap& f, const FiniteMap& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw error("equalizer needs a parallel pair; got " + f.dom().describe() + "->" + f.cod().describe() +
                    " and " + g.dom().describe() + "->" + g.cod().describe());
    std::vector<std::string> labels;
    std::vector<int> incl;
    for (int i = 0; i < f.dom().size(); ++i)
        if (f(i) == g(i)) {
            labels.push_back(f.dom().label(i));
            incl.push_back(i);
        }
    FiniteSet e(std::move(labels));
    return EqualizerResult{e, FiniteMap(e, f.dom(), std::move(incl))};
}

// ---------------------------------------------------------------------------
// Coproduct: tagged union, left labels "L:x", right labels "R:y".

struct CoproductResult {
    FiniteSet object;
    FiniteMap inl, inr;
};

inline CoproductResult coproduct(const FiniteSet& a, const FiniteSet& b) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(a.size() + b.size()));
    for (int i = 0; i < a.size(); ++i) labels.push_back("L:" + a.label(i));
    for (int i = 0; i < b.size(); ++i) labels.push_back("R:" + b.label(i));
    FiniteSet s(std::move(labels));
    std::vector<int> tl(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) tl[static_cast<std::size_t>(i)] = i;
    std::vector<int> tr(static_cast<std::size_t>(b.size()));
    for (int i = 0; i < b.size(); ++i) tr[static_cast<std::size_t>(i)] = a.size() + i;
    return CoproductResult{s, FiniteMap(a, s, std::move(tl)), FiniteMap(b, s, std::move(tr))};
}

// [f,g]: case analysis out of a coproduct.
inline FiniteMap copairing(const FiniteMap& f, const FiniteMap& g, const CoproductResult& c) {
    if (f.cod() != g.cod()) throw error("copairing legs disagree on codomain");
    if (f.dom().size() + g.dom().size() != c.object.size())
        throw error("copairing legs do not match the coproduct");
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(c.object.size()));
    for (int i = 0; i < f.dom().size(); ++i) t.push_back(f(i));
    for (int i = 0; i < g.dom().size(); ++i) t.push_back(g(i));
    return FiniteMap(c.object, f.cod(), std::move(t));
}

// ---------------------------------------------------------------------------
// Exhaustive map enumeration, lazily, in odometer order: the table
// (f(a0),...,f(an)) counts up with the last coordinate fastest, so the
// sequence is lexicographic over canonical element order.  |B|^|A| maps; an
// empty domain yields exactly the empty map, an empty codomain with a
// nonempty domain yields nothing.

class MapEnumerator {
public:
    MapEnumerator(FiniteSet dom, FiniteSet cod)
        : dom_(std::move(dom)), cod_(std::move(cod)),
          table_(static_cast<std::size_t>(dom_.size()), 0),
          alive_(cod_.size() > 0 || dom_.size() == 0) {}

    std::optional<FiniteMap> next() {
        if (!alive_) return std::nullopt;
        FiniteMap out(dom_, cod_, table_);
        // Advance the odometer.
        int k = dom_.size() - 1;
        while (k >= 0) {
            if (++table_[static_cast<std::size_t>(k)] < cod_.size()) break;
            table_[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) alive_ = false;
        return out;
    }

private:
    FiniteSet dom_, cod_;
    std::vector<int> table_;
    bool alive_;
};

inline MapEnumerator enumerate_maps(const FiniteSet& a, const FiniteSet& b) {
    return MapEnumerator(a, b);
}

inline std::uint64_t count_maps(const FiniteSet& a, const FiniteSet& b) {
    std::uint64_t n = 1;
    for (int i = 0; i < a.size(); ++i) n *= static_cast<std::uint64_t>(b.size());
    return n;
}

// Eager variant for small cases (tests, sweeps).
inline std::vector<FiniteMap> all_maps(const FiniteSet& a, const FiniteSet& b) {
    std::vector<FiniteMap> out;
    MapEnumerator en(a, b);
    while (auto f = en.next()) out.push_back(*f);
    return out;
}

// All s with f(s(y)) = y, in the enumeration order of maps cod -> dom.
// Empty exactly when f is not surjective.  The first section picks the least
// preimage of every element.
inline std::vector<FiniteMap> sections_of(const FiniteMap& f) {
    std::vector<FiniteMap> out;
    MapEnumerator en(f.cod(), f.dom());
    while (auto s = en.next()) {
        bool ok = true;
        for (int y = 0; y < f.cod().size(); ++y)
            if (f((*s)(y)) != y) { ok = false; break; }
        if (ok) out.push_back(*s);
    }
    return out;
}

// Least-preimage section when one exists: the canonical splitting used by
// choice arguments.
inline std::optional<FiniteMap> least_section(const FiniteMap& f) {
    std::vector<int> t(static_cast<std::size_t>(f.cod().size()), -1);
    for (int x = 0; x < f.dom().size(); ++x) {
        int y = f(x);
        if (t[static_cast<std::size_t>(y)] < 0) t[static_cast<std::size_t>(y)] = x;
    }
    for (int v : t)
        if (v < 0) return std::nullopt;
    return FiniteMap(f.cod(), f.dom(), std::move(t));
}

} // namespace exfin
