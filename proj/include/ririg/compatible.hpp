#pragma once

// Compatible functions: the definitional check against every congruence, the
// block and lambda witness characterizations, the slot-wise reduction, and
// the join representation of compatible functions on finite sets of tuples.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ririg/filters.hpp"
#include "ririg/term.hpp"

namespace ririg {

/// f : A^k -> A as a dense table in row-major tuple order (first argument
/// most significant).
struct FiniteFunction {
    std::size_t n = 0;
    std::size_t arity = 1;
    std::vector<Elem> table;

    FiniteFunction() = default;
    FiniteFunction(std::size_t universe, std::size_t k, std::vector<Elem> values)
        : n(universe), arity(k), table(std::move(values)) {
        if (k == 0) throw ShapeError("function arity must be at least 1");
        const auto expected = tuple_count();
        if (table.size() != expected)
            throw ShapeError("function table has " + std::to_string(table.size()) + " entries, expected " +
                             std::to_string(expected));
        for (std::size_t i = 0; i < table.size(); ++i)
            if (table[i] >= n) throw ShapeError("function value " + std::to_string(table[i]) + " at position " +
                                                std::to_string(i) + " out of range");
    }

    std::size_t tuple_count() const {
        std::size_t c = 1;
        for (std::size_t i = 0; i < arity; ++i) c *= n;
        return c;
    }

    std::size_t index_of(std::span<const Elem> xs) const {
        std::size_t idx = 0;
        for (Elem x : xs) idx = idx * n + x;
        return idx;
    }

    std::vector<Elem> tuple_of(std::size_t idx) const {
        std::vector<Elem> xs(arity);
        for (std::size_t i = arity; i-- > 0;) {
            xs[i] = static_cast<Elem>(idx % n);
            idx /= n;
        }
        return xs;
    }

    Elem operator()(std::span<const Elem> xs) const { return table[index_of(xs)]; }
    Elem operator()(std::initializer_list<Elem> xs) const {
        return (*this)(std::span<const Elem>(xs.begin(), xs.size()));
    }

    friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;
};

inline FiniteFunction random_function(std::size_t n, std::size_t arity, std::mt19937_64& rng) {
    FiniteFunction f;
    f.n = n;
    f.arity = arity;
    f.table.resize(f.tuple_count());
    for (auto& v : f.table) v = static_cast<Elem>(rng() % n);
    return f;
}

/// The function x1..xk |-> t(x1..xk) for the given variable order.
inline FiniteFunction term_function(const ModalRirig& a, const Term& t, const std::vector<std::string>& vars) {
    const CompiledTerm c(t, vars, a);
    FiniteFunction f;
    f.n = a.size();
    f.arity = vars.size();
    if (f.arity == 0) throw ShapeError("term function needs at least one variable");
    for_each_valuation(a.size(), vars.size(), [&](std::span<const Elem> v) {
        f.table.push_back(c.eval(v));
        return true;
    });
    return f;
}

enum class Verdict { compatible, not_compatible, undecided };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::compatible: return "compatible";
        case Verdict::not_compatible: return "not compatible";
        default: return "undecided at bound";
    }
}

struct PairWitness {
    std::vector<Elem> a;
    std::vector<Elem> b;
    /// Block route: per slot, blocks whose values at a_i*b_i are multiplied.
    std::vector<std::vector<Block>> blocks;
    std::optional<std::size_t> exponent;  ///< lambda route
    std::optional<std::size_t> power;     ///< lambda route
};

struct CompatFailure {
    std::vector<Elem> a;
    std::vector<Elem> b;
    std::optional<Congruence> theta;  ///< direct route only
};

struct CompatReport {
    std::string route;
    Verdict verdict = Verdict::compatible;
    std::vector<PairWitness> witnesses;
    std::optional<CompatFailure> failure;
    /// Largest block length (block routes) or exponent (lambda route) used.
    std::size_t bound_used = 0;

    bool compatible() const noexcept { return verdict == Verdict::compatible; }
};

/// Tables shared by the witness routes on a fixed algebra.
class CompatContext {
public:
    explicit CompatContext(const ModalRirig& a) : alg_(&a), monoid_(a), n_(a.size()) {
        star_.resize(n_ * n_);
        for (Elem x = 0; x < n_; ++x)
            for (Elem y = 0; y < n_; ++y) star_[x * n_ + y] = a.star(x, y);
        products_.reserve(n_);
        for (Elem x = 0; x < n_; ++x) products_.push_back(detail::block_products(a, monoid_, x));
        lambda_top_ = lambda_stabilization(a);
        lambda_.assign(lambda_top_ + 1, UnaryTable(n_));
        for (Elem x = 0; x < n_; ++x) lambda_[0][x] = x;
        for (std::size_t l = 1; l <= lambda_top_; ++l)
            for (Elem x = 0; x < n_; ++x) lambda_[l][x] = ririg::lambda(a, lambda_[l - 1][x]);
    }

    using Products = std::vector<std::optional<std::vector<Block>>>;

    const ModalRirig& algebra() const noexcept { return *alg_; }
    const BlockMonoid& monoid() const noexcept { return monoid_; }
    Elem star(Elem x, Elem y) const { return star_[x * n_ + y]; }
    /// Indexed by value: the fewest blocks whose values at x multiply to it.
    const Products& products(Elem x) const { return products_[x]; }
    std::size_t lambda_top() const noexcept { return lambda_top_; }
    Elem lambda_pow(std::size_t l, Elem x) const { return lambda_[std::min(l, lambda_top_)][x]; }

    const std::vector<Congruence>& congruences(std::size_t cap) const {
        if (!congruences_) congruences_ = all_congruences_direct(*alg_, cap);
        return *congruences_;
    }

private:
    const ModalRirig* alg_;
    BlockMonoid monoid_;
    std::size_t n_;
    std::vector<Elem> star_;
    std::vector<Products> products_;
    std::size_t lambda_top_ = 0;
    std::vector<UnaryTable> lambda_;
    mutable std::optional<std::vector<Congruence>> congruences_;
};

namespace detail {

inline void require_fits(const ModalRirig& a, const FiniteFunction& f) {
    if (f.n != a.size()) throw ShapeError("function universe size differs from the algebra");
}

/// Calls g(a_index, b_index) for every ordered pair of argument tuples.
template <class G>
bool for_each_tuple_pair(const FiniteFunction& f, G&& g) {
    const std::size_t total = f.tuple_count();
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j)
            if (!g(i, j)) return false;
    return true;
}

}  // namespace detail

/// Definition check: f preserves every congruence found by the direct oracle.
inline CompatReport is_compatible_direct(const CompatContext& ctx, const FiniteFunction& f,
                                         std::size_t congruence_cap = 5) {
    const auto& a = ctx.algebra();
    detail::require_fits(a, f);
    CompatReport r;
    r.route = "direct";
    for (const auto& theta : ctx.congruences(congruence_cap)) {
        const bool ok = detail::for_each_tuple_pair(f, [&](std::size_t i, std::size_t j) {
            const auto xs = f.tuple_of(i);
            const auto ys = f.tuple_of(j);
            for (std::size_t s = 0; s < f.arity; ++s)
                if (!theta.related(xs[s], ys[s])) return true;
            if (theta.related(f.table[i], f.table[j])) return true;
            r.verdict = Verdict::not_compatible;
            r.failure = CompatFailure{xs, ys, theta};
            return false;
        });
        if (!ok) return r;
    }
    return r;
}

inline CompatReport is_compatible_direct(const ModalRirig& a, const FiniteFunction& f, std::size_t congruence_cap = 5) {
    return is_compatible_direct(CompatContext(a), f, congruence_cap);
}

namespace detail {

/// Per slot a list of blocks, the product over all slots of their values at
/// c_i lying at or below target. Slots are combined left to right keeping,
/// per partial product, the choice with fewest factors, then shortest blocks.
inline std::optional<std::vector<std::vector<Block>>> search_block_vector(const CompatContext& ctx,
                                                                          const std::vector<Elem>& cs, Elem target,
                                                                          std::optional<std::size_t> bound) {
    const auto& a = ctx.algebra();
    using Choice = std::vector<std::vector<Block>>;
    auto key = [](const Choice& v) {
        std::size_t count = 0, mx = 0, sum = 0;
        for (const auto& slot : v)
            for (const auto& b : slot) {
                ++count;
                mx = std::max(mx, b.length());
                sum += b.length();
            }
        return std::make_tuple(count, mx, sum);
    };
    auto better = [&](const Choice& x, const Choice& y) {
        const auto kx = key(x), ky = key(y);
        return kx < ky || (kx == ky && x < y);
    };
    std::vector<std::optional<Choice>> acc(a.size());
    acc[a.one()] = Choice{};
    for (Elem c : cs) {
        const auto bounded = bound ? block_products(a, ctx.monoid(), c, bound) : CompatContext::Products{};
        const auto& reach = bound ? bounded : ctx.products(c);
        std::vector<std::optional<Choice>> next(a.size());
        for (Elem u = 0; u < a.size(); ++u) {
            if (!acc[u]) continue;
            for (Elem v = 0; v < a.size(); ++v) {
                if (!reach[v]) continue;
                Choice cand = *acc[u];
                cand.push_back(*reach[v]);
                auto& slot = next[a.prod(u, v)];
                if (!slot || better(cand, *slot)) slot = std::move(cand);
            }
        }
        acc = std::move(next);
    }
    std::optional<Choice> best;
    for (Elem v = 0; v < a.size(); ++v)
        if (acc[v] && a.leq(v, target) && (!best || better(*acc[v], *best))) best = acc[v];
    return best;
}

/// Least l, then least p, with (prod_i lambda^l(c_i))^p <= target.
inline std::optional<std::pair<std::size_t, std::size_t>> lambda_product_power(const CompatContext& ctx,
                                                                               const std::vector<Elem>& cs, Elem target) {
    const auto& a = ctx.algebra();
    for (std::size_t l = 0; l <= ctx.lambda_top(); ++l) {
        Elem y = a.one();
        for (Elem c : cs) y = a.prod(y, ctx.lambda_pow(l, c));
        Elem p = y;
        for (std::size_t k = 1;; ++k) {
            if (a.leq(p, target)) return std::make_pair(l, k);
            const Elem q = a.prod(p, y);
            if (q == p) break;
            p = q;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Block route: every pair of argument tuples needs, per slot i, blocks whose
/// values at a_i*b_i multiply (over all slots) to at most f(a)*f(b). Exact over the finite block
/// monoid; with an explicit bound shorter than the monoid depth a missing
/// witness that exists beyond the bound yields "undecided".
inline CompatReport compat_witness_kary(const CompatContext& ctx, const FiniteFunction& f,
                                        std::optional<std::size_t> block_len_bound = std::nullopt,
                                        bool keep_witnesses = true) {
    const auto& a = ctx.algebra();
    detail::require_fits(a, f);
    CompatReport r;
    r.route = "blocks";
    bool undecided = false;
    std::optional<CompatFailure> first_gap;
    detail::for_each_tuple_pair(f, [&](std::size_t i, std::size_t j) {
        const auto xs = f.tuple_of(i);
        const auto ys = f.tuple_of(j);
        std::vector<Elem> cs(f.arity);
        for (std::size_t s = 0; s < f.arity; ++s) cs[s] = ctx.star(xs[s], ys[s]);
        const Elem target = ctx.star(f.table[i], f.table[j]);
        auto found = detail::search_block_vector(ctx, cs, target, block_len_bound);
        if (found) {
            for (const auto& slot : *found)
                for (const auto& b : slot) r.bound_used = std::max(r.bound_used, b.length());
            if (keep_witnesses) r.witnesses.push_back({xs, ys, std::move(*found), std::nullopt, std::nullopt});
            return true;
        }
        if (block_len_bound && detail::search_block_vector(ctx, cs, target, std::nullopt)) {
            undecided = true;
            if (!first_gap) first_gap = CompatFailure{xs, ys, std::nullopt};
            return true;
        }
        r.verdict = Verdict::not_compatible;
        r.failure = CompatFailure{xs, ys, std::nullopt};
        return false;
    });
    if (r.verdict != Verdict::not_compatible && undecided) {
        r.verdict = Verdict::undecided;
        r.failure = first_gap;
    }
    return r;
}

inline CompatReport compat_witness_kary(const ModalRirig& a, const FiniteFunction& f,
                                        std::optional<std::size_t> block_len_bound = std::nullopt) {
    return compat_witness_kary(CompatContext(a), f, block_len_bound);
}

inline CompatReport compat_witness_unary(const CompatContext& ctx, const FiniteFunction& f,
                                         std::optional<std::size_t> block_len_bound = std::nullopt,
                                         bool keep_witnesses = true) {
    if (f.arity != 1) throw PreconditionFailed("compat_witness_unary: function is not unary");
    auto r = compat_witness_kary(ctx, f, block_len_bound, keep_witnesses);
    r.route = "blocks (unary)";
    return r;
}

inline CompatReport compat_witness_unary(const ModalRirig& a, const FiniteFunction& f,
                                         std::optional<std::size_t> block_len_bound = std::nullopt) {
    return compat_witness_unary(CompatContext(a), f, block_len_bound);
}

/// Lambda route: an exponent l and power p with (prod_i lambda^l(a_i*b_i))^p <= f(a)*f(b).
/// Since lambda^l is decreasing in l, searching up to stabilization is exact.
inline CompatReport compat_witness_lambda(const CompatContext& ctx, const FiniteFunction& f, bool keep_witnesses = true) {
    const auto& a = ctx.algebra();
    detail::require_fits(a, f);
    CompatReport r;
    r.route = "lambda";
    detail::for_each_tuple_pair(f, [&](std::size_t i, std::size_t j) {
        const auto xs = f.tuple_of(i);
        const auto ys = f.tuple_of(j);
        const Elem target = ctx.star(f.table[i], f.table[j]);
        std::vector<Elem> cs(f.arity);
        for (std::size_t s = 0; s < f.arity; ++s) cs[s] = ctx.star(xs[s], ys[s]);
        if (auto lp = detail::lambda_product_power(ctx, cs, target)) {
            r.bound_used = std::max(r.bound_used, lp->first);
            if (keep_witnesses) r.witnesses.push_back({xs, ys, {}, lp->first, lp->second});
            return true;
        }
        r.verdict = Verdict::not_compatible;
        r.failure = CompatFailure{xs, ys, std::nullopt};
        return false;
    });
    return r;
}

inline CompatReport compat_witness_lambda(const ModalRirig& a, const FiniteFunction& f) {
    return compat_witness_lambda(CompatContext(a), f);
}

/// Slot-wise reduction: f is compatible iff every unary section
/// x |-> f(a_1..x..a_k) is. Each section is decided by the unary block route;
/// the first failing section is reported with its anchor as `failure.a`.
inline CompatReport compat_slotwise(const CompatContext& ctx, const FiniteFunction& f) {
    const auto& a = ctx.algebra();
    detail::require_fits(a, f);
    CompatReport r;
    r.route = "slot-wise";
    const std::size_t total = f.tuple_count();
    for (std::size_t idx = 0; idx < total; ++idx) {
        const auto anchor = f.tuple_of(idx);
        for (std::size_t s = 0; s < f.arity; ++s) {
            FiniteFunction section;
            section.n = f.n;
            section.arity = 1;
            auto xs = anchor;
            for (Elem x = 0; x < f.n; ++x) {
                xs[s] = x;
                section.table.push_back(f(xs));
            }
            auto sub = compat_witness_kary(ctx, section, std::nullopt, false);
            r.bound_used = std::max(r.bound_used, sub.bound_used);
            if (!sub.compatible()) {
                r.verdict = Verdict::not_compatible;
                auto ys = anchor;
                xs = anchor;
                xs[s] = sub.failure->a[0];
                ys[s] = sub.failure->b[0];
                r.failure = CompatFailure{xs, ys, std::nullopt};
                return r;
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Join representation on a finite set of tuples

struct LafReport {
    std::vector<std::vector<Elem>> tuples;           ///< B, in the given order
    std::vector<std::vector<std::size_t>> exponent;  ///< exponent[i][j] = n(B_i, B_j)
    std::vector<std::vector<std::size_t>> power;     ///< power[i][j], least for exponent[i][j]
    std::vector<std::size_t> anchor_exponent;        ///< n_{B_i} = max_j exponent[i][j]
    std::vector<std::size_t> anchor_power;           ///< p_{B_i} = max_j power[i][j]
    std::vector<std::vector<Elem>> terms;            ///< terms[j] = T_{B_j}, one entry per anchor
    std::vector<Elem> joins;                         ///< join of terms[j]
    std::vector<Elem> values;                        ///< f(B_j)
    bool verified = true;
    std::optional<std::size_t> first_mismatch;
};

/// For compatible f and a finite set B of argument tuples, represents f on B
/// as f(x) = join of { (prod_i lambda^{n_a}(a_i*x_i))^{p_a} * f(a) : a in B }.
/// Per pair the least exponent, then the least power, is taken.
inline LafReport laf_representation(const CompatContext& ctx, const FiniteFunction& f,
                                    const std::vector<std::vector<Elem>>& tuples) {
    const auto& a = ctx.algebra();
    detail::require_fits(a, f);
    if (tuples.empty()) throw PreconditionFailed("laf_representation: the tuple set is empty");
    for (const auto& t : tuples) {
        if (t.size() != f.arity) throw ShapeError("laf_representation: tuple arity differs from the function");
        for (Elem x : t)
            if (x >= a.size()) throw ShapeError("laf_representation: tuple entry out of range");
    }
    if (!compat_witness_lambda(ctx, f, false).compatible())
        throw PreconditionFailed("laf_representation: function is not compatible");

    auto weight = [&](std::size_t l, std::size_t pw, const std::vector<Elem>& anchor, const std::vector<Elem>& x) {
        Elem y = a.one();
        for (std::size_t s = 0; s < f.arity; ++s) y = a.prod(y, ctx.lambda_pow(l, ctx.star(anchor[s], x[s])));
        Elem p = a.one();
        for (std::size_t k = 0; k < pw; ++k) p = a.prod(p, y);
        return p;
    };

    LafReport r;
    r.tuples = tuples;
    const std::size_t m = tuples.size();
    r.exponent.assign(m, std::vector<std::size_t>(m, 0));
    r.power.assign(m, std::vector<std::size_t>(m, 1));
    r.anchor_exponent.assign(m, 0);
    r.anchor_power.assign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<Elem> cs(f.arity);
            for (std::size_t s = 0; s < f.arity; ++s) cs[s] = ctx.star(tuples[i][s], tuples[j][s]);
            const auto lp = detail::lambda_product_power(ctx, cs, a.star(f(tuples[i]), f(tuples[j])));
            if (!lp) throw Error("laf_representation: compatible function without a lambda witness");
            r.exponent[i][j] = lp->first;
            r.power[i][j] = lp->second;
            r.anchor_exponent[i] = std::max(r.anchor_exponent[i], lp->first);
            r.anchor_power[i] = std::max(r.anchor_power[i], lp->second);
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Elem> t;
        Elem acc = a.zero();
        for (std::size_t i = 0; i < m; ++i) {
            const Elem term = a.prod(weight(r.anchor_exponent[i], r.anchor_power[i], tuples[i], tuples[j]), f(tuples[i]));
            t.push_back(term);
            acc = a.join(acc, term);
        }
        r.terms.push_back(std::move(t));
        r.joins.push_back(acc);
        r.values.push_back(f(tuples[j]));
        if (acc != r.values.back() && r.verified) {
            r.verified = false;
            r.first_mismatch = j;
        }
    }
    return r;
}

inline LafReport laf_representation(const ModalRirig& a, const FiniteFunction& f,
                                    const std::vector<std::vector<Elem>>& tuples) {
    return laf_representation(CompatContext(a), f, tuples);
}

/// All n^k tuples in row-major order.
inline std::vector<std::vector<Elem>> all_tuples(std::size_t n, std::size_t k) {
    std::vector<std::vector<Elem>> out;
    for_each_valuation(n, k, [&](std::span<const Elem> v) {
        out.emplace_back(v.begin(), v.end());
        return true;
    });
    return out;
}

}  // namespace ririg
