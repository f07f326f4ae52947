#pragma once

// I-filters, congruences, and the correspondence between them: filter
// generation (closure fixpoint, block products, lambda products), principal
// congruences, simplicity, subdirect irreducibility and congruence extension.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ririg/modal.hpp"
#include "ririg/subset.hpp"

namespace ririg {

struct IFilter {
    SubsetMask mask;

    friend bool operator==(const IFilter&, const IFilter&) = default;
    friend bool operator<(const IFilter& a, const IFilter& b) { return a.mask < b.mask; }
};

/// A partition of the universe, stored as a class id per element. Ids are
/// normalized to first-occurrence order, so equal partitions compare equal.
class Congruence {
public:
    Congruence() = default;
    explicit Congruence(std::vector<std::size_t> class_of) : class_of_(std::move(class_of)) { normalize(); }

    static Congruence identity(std::size_t n) {
        std::vector<std::size_t> c(n);
        std::iota(c.begin(), c.end(), std::size_t{0});
        return Congruence(std::move(c));
    }
    static Congruence full(std::size_t n) { return Congruence(std::vector<std::size_t>(n, 0)); }

    static Congruence from_classes(std::size_t n, const std::vector<std::vector<Elem>>& classes) {
        std::vector<std::size_t> c(n, n);
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (Elem e : classes[k]) {
                if (e >= n || c[e] != n) throw ShapeError("classes do not form a partition");
                c[e] = k;
            }
        for (auto v : c)
            if (v == n) throw ShapeError("classes do not cover the universe");
        return Congruence(std::move(c));
    }

    std::size_t universe() const noexcept { return class_of_.size(); }
    const std::vector<std::size_t>& class_of() const noexcept { return class_of_; }
    std::size_t class_id(Elem x) const { return class_of_[x]; }
    bool related(Elem x, Elem y) const { return class_of_[x] == class_of_[y]; }

    std::size_t num_classes() const {
        std::size_t k = 0;
        for (auto c : class_of_) k = std::max(k, c + 1);
        return k;
    }

    std::vector<std::vector<Elem>> classes() const {
        std::vector<std::vector<Elem>> out(num_classes());
        for (std::size_t x = 0; x < class_of_.size(); ++x) out[class_of_[x]].push_back(static_cast<Elem>(x));
        return out;
    }

    SubsetMask class_mask(Elem x) const {
        SubsetMask s(universe());
        for (std::size_t y = 0; y < class_of_.size(); ++y)
            if (class_of_[y] == class_of_[x]) s.insert(static_cast<Elem>(y));
        return s;
    }

    /// Inclusion of relations.
    bool finer_than(const Congruence& o) const {
        for (std::size_t x = 0; x < class_of_.size(); ++x)
            for (std::size_t y = x + 1; y < class_of_.size(); ++y)
                if (related(static_cast<Elem>(x), static_cast<Elem>(y)) &&
                    !o.related(static_cast<Elem>(x), static_cast<Elem>(y)))
                    return false;
        return true;
    }

    friend bool operator==(const Congruence&, const Congruence&) = default;
    friend bool operator<(const Congruence& a, const Congruence& b) { return a.class_of_ < b.class_of_; }

private:
    void normalize() {
        std::vector<std::size_t> keys;
        for (auto& c : class_of_) {
            auto it = std::find(keys.begin(), keys.end(), c);
            if (it == keys.end()) {
                keys.push_back(c);
                c = keys.size() - 1;
            } else {
                c = static_cast<std::size_t>(it - keys.begin());
            }
        }
    }

    std::vector<std::size_t> class_of_;
};

// ---------------------------------------------------------------------------
// Filters

inline SubsetMask up_set(const ModalRirig& a, const SubsetMask& s) {
    SubsetMask out(a.size());
    for (Elem x : s.elements())
        for (Elem y = 0; y < a.size(); ++y)
            if (a.leq(x, y)) out.insert(y);
    return out;
}

inline bool is_ifilter(const ModalRirig& a, const SubsetMask& s) {
    if (s.empty()) return false;
    const auto elems = s.elements();
    for (Elem x : elems) {
        for (Elem y = 0; y < a.size(); ++y)
            if (a.leq(x, y) && !s.contains(y)) return false;
        for (Elem y : elems)
            if (!s.contains(a.prod(x, y))) return false;
        for (const auto& t : a.modals)
            if (!s.contains(t[x])) return false;
    }
    return true;
}

/// Least I-filter containing X, by closing X + {1} under up-set, products and
/// every modal table until nothing changes.
inline IFilter generate_filter(const ModalRirig& a, const SubsetMask& x) {
    SubsetMask s = x;
    s.insert(a.one());
    while (true) {
        SubsetMask next = up_set(a, s);
        const auto elems = s.elements();
        for (Elem u : elems) {
            for (Elem v : elems) next.insert(a.prod(u, v));
            for (const auto& t : a.modals) next.insert(t[u]);
        }
        if (next == s) return IFilter{s};
        s = next;
    }
}

inline IFilter generate_filter(const ModalRirig& a, std::initializer_list<Elem> x) {
    return generate_filter(a, SubsetMask(a.size(), x));
}

namespace detail {

/// Products of at most `max_factors` elements of `values` (the empty product is 1).
inline SubsetMask bounded_products(const ModalRirig& a, const SubsetMask& values, std::size_t max_factors) {
    SubsetMask acc(a.size(), {a.one()});
    SubsetMask frontier = acc;
    for (std::size_t f = 0; f < max_factors; ++f) {
        SubsetMask next = acc;
        for (Elem p : frontier.elements())
            for (Elem v : values.elements()) next.insert(a.prod(p, v));
        if (next == acc) break;
        frontier = next;
        acc = next;
    }
    return acc;
}

/// All products (any number of factors) of elements of `values`.
inline SubsetMask multiplicative_closure(const ModalRirig& a, const SubsetMask& values) {
    return bounded_products(a, values, a.size() + 1);
}

}  // namespace detail

/// Up-set of all products M_1(x_1)...M_j(x_j) with j <= product_len_bound,
/// x_i in X and blocks of length <= block_len_bound.
inline SubsetMask generate_filter_blocks_oracle(const ModalRirig& a, const SubsetMask& x, std::size_t block_len_bound,
                                                std::size_t product_len_bound) {
    SubsetMask values(a.size());
    for (const auto& b : enumerate_blocks(a.sig, block_len_bound))
        for (Elem e : x.elements()) values.insert(apply_block(a, b, e));
    return up_set(a, detail::bounded_products(a, values, product_len_bound));
}

struct StabilizedOracle {
    SubsetMask filter;
    std::size_t bound = 0;  ///< first bound whose successor gave the same set
};

/// Raises both oracle bounds together until two consecutive rounds agree.
inline StabilizedOracle generate_filter_blocks_stabilized(const ModalRirig& a, const SubsetMask& x) {
    SubsetMask prev = generate_filter_blocks_oracle(a, x, 0, 0);
    for (std::size_t b = 1;; ++b) {
        SubsetMask cur = generate_filter_blocks_oracle(a, x, b, b);
        if (cur == prev) return {cur, b - 1};
        prev = cur;
    }
}

/// Up-set of the products of lambda^l(x_i), x_i in X, for a shared exponent l
/// up to the point where every lambda sequence of X has stabilized.
inline IFilter generate_filter_lambda(const ModalRirig& a, const SubsetMask& x) {
    std::size_t top = 0;
    for (Elem e : x.elements()) top = std::max(top, lambda_stabilization(a, e));
    SubsetMask result(a.size(), {a.one()});
    for (std::size_t l = 0; l <= top; ++l) {
        SubsetMask values(a.size());
        for (Elem e : x.elements()) values.insert(lambda_iter(a, l, e));
        result = result | up_set(a, detail::multiplicative_closure(a, values));
    }
    return IFilter{result};
}

/// Fg(a) for every element, indexed by element.
inline std::vector<IFilter> principal_filters(const ModalRirig& a) {
    std::vector<IFilter> out;
    for (Elem x = 0; x < a.size(); ++x) out.push_back(generate_filter(a, {x}));
    return out;
}

/// Every I-filter, sorted by (cardinality, mask). Each filter is the join of
/// the principal filters of its elements, so closing the principal filters
/// under joins finds them all.
inline std::vector<IFilter> all_ifilters(const ModalRirig& a) {
    std::vector<IFilter> found;
    auto known = [&](const SubsetMask& m) {
        return std::any_of(found.begin(), found.end(), [&](const IFilter& f) { return f.mask == m; });
    };
    const auto principal = principal_filters(a);
    for (const auto& f : principal)
        if (!known(f.mask)) found.push_back(f);
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (const auto& p : principal) {
            auto joined = generate_filter(a, found[i].mask | p.mask);
            if (!known(joined.mask)) found.push_back(joined);
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

/// Every I-filter by testing all 2^n subsets. Only for small universes.
inline std::vector<IFilter> all_ifilters_scan(const ModalRirig& a, std::size_t cap = 20) {
    if (a.size() > cap) throw CapExceeded("subset scan limited to universes of size " + std::to_string(cap));
    std::vector<IFilter> out;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << a.size()); ++bits) {
        SubsetMask s(a.size(), bits);
        if (is_ifilter(a, s)) out.push_back(IFilter{s});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Congruences

/// Whether the partition is compatible with every fundamental operation.
inline bool is_congruence(const ModalRirig& a, const Congruence& c) {
    if (c.universe() != a.size()) return false;
    const auto n = a.size();
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = x + 1; y < n; ++y) {
            if (!c.related(x, y)) continue;
            for (const auto& t : a.modals)
                if (!c.related(t[x], t[y])) return false;
            for (Elem z = 0; z < n; ++z) {
                if (!c.related(a.join(x, z), a.join(y, z))) return false;
                if (!c.related(a.prod(x, z), a.prod(y, z))) return false;
                if (!c.related(a.imp(x, z), a.imp(y, z))) return false;
                if (!c.related(a.imp(z, x), a.imp(z, y))) return false;
            }
        }
    }
    return true;
}

/// x ~ y iff x*y belongs to F.
inline Congruence theta_from_filter(const ModalRirig& a, const IFilter& f) {
    if (f.mask.universe() != a.size() || !is_ifilter(a, f.mask))
        throw PreconditionFailed("theta_from_filter: input is not an I-filter");
    std::vector<std::size_t> cls(a.size(), a.size());
    std::size_t next = 0;
    for (Elem x = 0; x < a.size(); ++x) {
        if (cls[x] != a.size()) continue;
        cls[x] = next;
        for (Elem y = x + 1; y < a.size(); ++y)
            if (cls[y] == a.size() && f.mask.contains(a.star(x, y))) cls[y] = next;
        ++next;
    }
    return Congruence(std::move(cls));
}

/// The class of 1.
inline IFilter filter_from_theta(const ModalRirig& a, const Congruence& c) {
    if (!is_congruence(a, c)) throw PreconditionFailed("filter_from_theta: partition is not a congruence");
    return IFilter{c.class_mask(a.one())};
}

namespace detail {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[std::max(x, y)] = std::min(x, y);
        return true;
    }
};

}  // namespace detail

/// Least congruence containing the given pairs, by closing the union under
/// every operation until stable. Independent of the filter machinery.
inline Congruence congruence_closure(const ModalRirig& a, const std::vector<std::pair<Elem, Elem>>& pairs) {
    const auto n = a.size();
    detail::UnionFind uf(n);
    for (auto [x, y] : pairs) uf.unite(x, y);
    bool changed = true;
    while (changed) {
        changed = false;
        for (Elem x = 0; x < n; ++x) {
            for (Elem y = x + 1; y < n; ++y) {
                if (uf.find(x) != uf.find(y)) continue;
                for (const auto& t : a.modals) changed |= uf.unite(t[x], t[y]);
                for (Elem z = 0; z < n; ++z) {
                    changed |= uf.unite(a.join(x, z), a.join(y, z));
                    changed |= uf.unite(a.prod(x, z), a.prod(y, z));
                    changed |= uf.unite(a.imp(x, z), a.imp(y, z));
                    changed |= uf.unite(a.imp(z, x), a.imp(z, y));
                }
            }
        }
    }
    std::vector<std::size_t> cls(n);
    for (Elem x = 0; x < n; ++x) cls[x] = uf.find(x);
    return Congruence(std::move(cls));
}

inline std::vector<std::pair<Elem, Elem>> related_pairs(const Congruence& c) {
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem x = 0; x < c.universe(); ++x)
        for (Elem y = x + 1; y < c.universe(); ++y)
            if (c.related(x, y)) out.emplace_back(x, y);
    return out;
}

/// Join in Con(A): transitive closure of the union, re-closed under the operations.
inline Congruence join(const ModalRirig& a, const Congruence& p, const Congruence& q) {
    auto pairs = related_pairs(p);
    auto more = related_pairs(q);
    pairs.insert(pairs.end(), more.begin(), more.end());
    return congruence_closure(a, pairs);
}

inline Congruence meet(const Congruence& p, const Congruence& q) {
    std::vector<std::size_t> cls(p.universe());
    for (std::size_t x = 0; x < cls.size(); ++x) cls[x] = p.class_of()[x] * (q.universe() + 1) + q.class_of()[x];
    return Congruence(std::move(cls));
}

/// Every partition (as restricted growth strings, lexicographic order) that
/// is compatible with all operations.
inline std::vector<Congruence> all_congruences_direct(const ModalRirig& a, std::size_t cap = 5) {
    const auto n = a.size();
    if (n > cap) throw CapExceeded("direct congruence enumeration limited to size " + std::to_string(cap));
    std::vector<Congruence> out;
    std::vector<std::size_t> rgs(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t max_used) -> void {
        if (i == n) {
            Congruence c(rgs);
            if (is_congruence(a, c)) out.push_back(std::move(c));
            return;
        }
        for (std::size_t v = 0; v <= max_used + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(max_used, v));
        }
    };
    if (n > 0) rec(rec, 1, 0);
    return out;
}

/// Principal congruence Cg(x, y), computed from the filter generated by x*y.
inline Congruence cg(const ModalRirig& a, Elem x, Elem y) {
    return theta_from_filter(a, generate_filter(a, {a.star(x, y)}));
}

// ---------------------------------------------------------------------------
// Simple and subdirectly irreducible algebras

/// Per element a: a product of block values reaching the target, and the
/// lambda route's exponent l with the least power p of lambda^l(a) reaching it.
struct SimplicityWitness {
    Elem element;
    std::optional<std::vector<Block>> blocks;  ///< fewest M_i with M_1(a)...M_k(a) at or below the target
    std::optional<std::size_t> exponent;       ///< least l such that some power of lambda^l(a) reaches the target
    std::optional<std::size_t> power;          ///< least such power for that l
};

struct SimplicityReport {
    bool simple = false;
    bool lambda_simple = false;
    std::vector<SimplicityWitness> witnesses;  ///< one per a != 1
    /// When not simple: an element whose generated filter is proper.
    std::optional<Elem> obstruction;
};

inline void require_nontrivial(const ModalRirig& a, const char* what) {
    if (a.size() < 2 || a.zero() == a.one()) throw PreconditionFailed(std::string(what) + ": trivial algebra");
}

namespace detail {

/// Every value M_1(x)...M_k(x) (k >= 1) with a witnessing block list of
/// least length k, shortest blocks first. Breadth-first over k. With a bound
/// only blocks of at most that length are used.
inline std::vector<std::optional<std::vector<Block>>> block_products(const ModalRirig& a, const BlockMonoid& monoid, Elem x,
                                                                     std::optional<std::size_t> bound = std::nullopt) {
    std::vector<std::optional<Block>> single(a.size());
    for (const auto& e : monoid.entries()) {
        if (bound && e.block.length() > *bound) continue;
        if (!single[e.map[x]] || e.block < *single[e.map[x]]) single[e.map[x]] = e.block;
    }
    std::vector<std::optional<std::vector<Block>>> reach(a.size());
    std::vector<Elem> frontier;
    for (Elem v = 0; v < a.size(); ++v)
        if (single[v]) {
            reach[v] = std::vector<Block>{*single[v]};
            frontier.push_back(v);
        }
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (Elem u : frontier)
            for (Elem v = 0; v < a.size(); ++v) {
                if (!single[v]) continue;
                const Elem w = a.prod(u, v);
                if (reach[w]) continue;
                auto list = *reach[u];
                list.push_back(*single[v]);
                reach[w] = std::move(list);
                next.push_back(w);
            }
        frontier = std::move(next);
    }
    return reach;
}

/// Fewest-factor block product at or below `target`.
inline std::optional<std::vector<Block>> block_product_below(const ModalRirig& a,
                                                             const std::vector<std::optional<std::vector<Block>>>& reach,
                                                             Elem target) {
    std::optional<std::vector<Block>> best;
    for (Elem v = 0; v < a.size(); ++v) {
        if (!reach[v] || !a.leq(v, target)) continue;
        if (!best || reach[v]->size() < best->size() ||
            (reach[v]->size() == best->size() && *reach[v] < *best))
            best = reach[v];
    }
    return best;
}

/// Least l, then least p, with lambda^l(x)^p <= target, for l up to stabilization.
inline std::optional<std::pair<std::size_t, std::size_t>> lambda_power_below(const ModalRirig& a, Elem x, Elem target) {
    const auto top = lambda_stabilization(a, x);
    for (std::size_t l = 0; l <= top; ++l) {
        const Elem y = lambda_iter(a, l, x);
        Elem p = y;
        for (std::size_t k = 1; k <= a.size() + 1; ++k) {
            if (a.leq(p, target)) return std::make_pair(l, k);
            const Elem q = a.prod(p, y);
            if (q == p) break;
            p = q;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Simple iff every a != 1 has block values whose product is 0 (the filter
/// generated by a contains 0), equivalently a power of some lambda^l(a) is 0.
inline SimplicityReport is_simple(const ModalRirig& a) {
    require_nontrivial(a, "is_simple");
    const BlockMonoid monoid(a);
    SimplicityReport r;
    r.simple = true;
    r.lambda_simple = true;
    for (Elem x = 0; x < a.size(); ++x) {
        if (x == a.one()) continue;
        const auto reach = detail::block_products(a, monoid, x);
        SimplicityWitness w{x, reach[a.zero()], std::nullopt, std::nullopt};
        if (auto lp = detail::lambda_power_below(a, x, a.zero())) {
            w.exponent = lp->first;
            w.power = lp->second;
        }
        if (!w.blocks) {
            r.simple = false;
            if (!r.obstruction) r.obstruction = x;
        }
        if (!w.exponent) r.lambda_simple = false;
        r.witnesses.push_back(std::move(w));
    }
    return r;
}

struct SIReport {
    bool si = false;
    bool lambda_si = false;
    /// Every b != 1 that every a != 1 reaches below through a product of block values.
    std::vector<Elem> valid_b;
    /// A maximal element of valid_b (the least index among maximal ones).
    std::optional<Elem> witness;
    /// Per a != 1: fewest blocks reaching below the witness, and the lambda exponent and power.
    std::vector<SimplicityWitness> reach;
    /// When not SI: two nontrivial filters meeting in {1}.
    std::optional<std::pair<IFilter, IFilter>> obstruction;
};

inline SIReport is_subdirectly_irreducible(const ModalRirig& a) {
    require_nontrivial(a, "is_subdirectly_irreducible");
    const BlockMonoid monoid(a);
    std::vector<std::vector<std::optional<std::vector<Block>>>> products(a.size());
    for (Elem x = 0; x < a.size(); ++x)
        if (x != a.one()) products[x] = detail::block_products(a, monoid, x);
    SIReport r;
    std::vector<Elem> lambda_valid;
    for (Elem b = 0; b < a.size(); ++b) {
        if (b == a.one()) continue;
        bool by_blocks = true;
        bool by_lambda = true;
        for (Elem x = 0; x < a.size() && (by_blocks || by_lambda); ++x) {
            if (x == a.one()) continue;
            if (!detail::block_product_below(a, products[x], b)) by_blocks = false;
            if (!detail::lambda_power_below(a, x, b)) by_lambda = false;
        }
        if (by_blocks) r.valid_b.push_back(b);
        if (by_lambda) lambda_valid.push_back(b);
    }
    r.si = !r.valid_b.empty();
    r.lambda_si = !lambda_valid.empty();
    for (Elem b : r.valid_b) {
        bool maximal = std::none_of(r.valid_b.begin(), r.valid_b.end(),
                                    [&](Elem c) { return c != b && a.leq(b, c); });
        if (maximal) {
            r.witness = b;
            break;
        }
    }
    if (r.witness) {
        const Elem b = *r.witness;
        for (Elem x = 0; x < a.size(); ++x) {
            if (x == a.one()) continue;
            SimplicityWitness w{x, detail::block_product_below(a, products[x], b), std::nullopt, std::nullopt};
            if (auto lp = detail::lambda_power_below(a, x, b)) {
                w.exponent = lp->first;
                w.power = lp->second;
            }
            r.reach.push_back(std::move(w));
        }
    } else {
        // Two distinct minimal nontrivial filters meet in {1}.
        std::vector<IFilter> minimal;
        const auto filters = all_ifilters(a);
        for (const auto& f : filters) {
            if (f.mask.count() == 1) continue;
            bool is_min = std::none_of(filters.begin(), filters.end(), [&](const IFilter& g) {
                return g.mask.count() > 1 && g.mask != f.mask && g.mask.subset_of(f.mask);
            });
            if (is_min) minimal.push_back(f);
        }
        if (minimal.size() >= 2) r.obstruction = std::make_pair(minimal[0], minimal[1]);
    }
    return r;
}

/// The least nontrivial filter, if the filter lattice has one.
inline std::optional<IFilter> monolith(const ModalRirig& a) {
    std::optional<IFilter> best;
    const auto filters = all_ifilters(a);
    for (const auto& f : filters) {
        if (f.mask.count() <= 1) continue;
        if (!best) best = f;
        else if (!best->mask.subset_of(f.mask)) {
            if (f.mask.subset_of(best->mask)) best = f;
        }
    }
    if (!best) return std::nullopt;
    for (const auto& f : filters)
        if (f.mask.count() > 1 && !best->mask.subset_of(f.mask)) return std::nullopt;
    return best;
}

// ---------------------------------------------------------------------------
// Subalgebras and congruence extension

/// Subsets containing 0 and 1 closed under every operation.
inline std::vector<SubsetMask> subuniverses(const ModalRirig& a, std::size_t cap = 6) {
    if (a.size() > cap) throw CapExceeded("subuniverse scan limited to size " + std::to_string(cap));
    std::vector<SubsetMask> out;
    const SubsetMask consts(a.size(), {a.zero(), a.one()});
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << a.size()); ++bits) {
        SubsetMask s(a.size(), bits);
        if (!consts.subset_of(s)) continue;
        bool closed = true;
        const auto elems = s.elements();
        for (Elem x : elems) {
            for (const auto& t : a.modals) closed = closed && s.contains(t[x]);
            for (Elem y : elems) {
                closed = closed && s.contains(a.join(x, y)) && s.contains(a.prod(x, y)) && s.contains(a.imp(x, y));
                if (!closed) break;
            }
            if (!closed) break;
        }
        if (closed) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The subalgebra on a subuniverse; element i of the result is the i-th
/// smallest index of `s`.
inline ModalRirig subalgebra(const ModalRirig& a, const SubsetMask& s) {
    const auto elems = s.elements();
    std::vector<Elem> pos(a.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<Elem>(i);
    const auto m = elems.size();
    Ririg b;
    b.n = m;
    b.zero = pos[a.zero()];
    b.one = pos[a.one()];
    b.join = BinaryTable(m);
    b.prod = BinaryTable(m);
    b.imp = BinaryTable(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            b.join.at(i, j) = pos[a.join(elems[i], elems[j])];
            b.prod.at(i, j) = pos[a.prod(elems[i], elems[j])];
            b.imp.at(i, j) = pos[a.imp(elems[i], elems[j])];
        }
        b.labels.push_back(a.label(elems[i]));
    }
    std::vector<UnaryTable> tables;
    for (const auto& t : a.modals) {
        UnaryTable u(m);
        for (std::size_t i = 0; i < m; ++i) u[i] = pos[t[elems[i]]];
        tables.push_back(std::move(u));
    }
    return ModalRirig(std::move(b), a.sig, std::move(tables));
}

struct CepCounterexample {
    SubsetMask subuniverse;
    Congruence theta;  ///< congruence of the subalgebra, in its own indexing
};

struct CepReport {
    bool holds = true;
    std::size_t subuniverses_checked = 0;
    std::size_t congruences_checked = 0;
    std::optional<CepCounterexample> counterexample;
};

/// Whether the least congruence of A containing theta restricts back to theta.
inline bool extends(const ModalRirig& a, const SubsetMask& s, const Congruence& theta) {
    const auto elems = s.elements();
    std::vector<std::pair<Elem, Elem>> pairs;
    for (auto [i, j] : related_pairs(theta)) pairs.emplace_back(elems[i], elems[j]);
    const Congruence xi = congruence_closure(a, pairs);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (xi.related(elems[i], elems[j]) != theta.related(static_cast<Elem>(i), static_cast<Elem>(j)))
                return false;
    return true;
}

/// For every subuniverse and every congruence of the induced subalgebra,
/// checks that some congruence of A restricts to it. Any extension contains
/// the generated one, so testing the least extension decides the question.
inline CepReport cep_check(const ModalRirig& a, std::size_t subuniverse_cap = 6, std::size_t congruence_cap = 5) {
    CepReport r;
    for (const auto& s : subuniverses(a, subuniverse_cap)) {
        ++r.subuniverses_checked;
        const auto sub = subalgebra(a, s);
        for (const auto& theta : all_congruences_direct(sub, congruence_cap)) {
            ++r.congruences_checked;
            if (!extends(a, s, theta)) {
                r.holds = false;
                r.counterexample = CepCounterexample{s, theta};
                return r;
            }
        }
    }
    return r;
}

}  // namespace ririg
