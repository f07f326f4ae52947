#pragma once

// Finite residuated integral rigs: tables, axiom validation, order and
// residuation utilities.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ririg/errors.hpp"

namespace ririg {

/// An element of a finite algebra, identified by its index in 0..n-1.
using Elem = std::uint16_t;

/// Largest universe the library accepts (subset masks are 64-bit).
inline constexpr std::size_t max_universe = 64;

/// Dense n x n operation table.
class BinaryTable {
public:
    BinaryTable() = default;
    explicit BinaryTable(std::size_t n, Elem fill = 0) : n_(n), data_(n * n, fill) {}
    BinaryTable(std::size_t n, std::vector<Elem> data) : n_(n), data_(std::move(data)) {
        if (data_.size() != n * n) throw ShapeError("binary table must have n*n entries");
    }

    std::size_t size() const noexcept { return n_; }
    Elem operator()(Elem a, Elem b) const { return data_[a * n_ + b]; }
    Elem& at(Elem a, Elem b) { return data_[a * n_ + b]; }
    const std::vector<Elem>& raw() const noexcept { return data_; }

    friend bool operator==(const BinaryTable&, const BinaryTable&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Elem> data_;
};

using UnaryTable = std::vector<Elem>;

/// A finite ririg (or a candidate for one): universe 0..n-1 with join,
/// product, implication and the two constants. Values are only meaningful
/// once `validate_ririg` has passed.
struct Ririg {
    std::size_t n = 0;
    Elem zero = 0;
    Elem one = 0;
    BinaryTable join;
    BinaryTable prod;
    BinaryTable imp;
    /// Optional display names, one per element. Empty means "use indices".
    std::vector<std::string> labels;

    std::size_t size() const noexcept { return n; }

    friend bool operator==(const Ririg& a, const Ririg& b) {
        return a.n == b.n && a.zero == b.zero && a.one == b.one && a.join == b.join &&
               a.prod == b.prod && a.imp == b.imp;
    }
};

/// Display name of an element: its label when present, else its index.
inline std::string label_of(const std::vector<std::string>& labels, Elem a) {
    if (a < labels.size() && !labels[a].empty()) return labels[a];
    return std::to_string(a);
}

struct AxiomFailure {
    std::string axiom;
    std::vector<Elem> witness;

    friend bool operator==(const AxiomFailure&, const AxiomFailure&) = default;
};

/// Outcome of an axiom scan: one entry per violated axiom, with the first
/// failing tuple in lexicographic order.
struct AxiomReport {
    std::vector<AxiomFailure> failures;

    bool passed() const noexcept { return failures.empty(); }

    const AxiomFailure* find(const std::string& axiom) const {
        for (const auto& f : failures)
            if (f.axiom == axiom) return &f;
        return nullptr;
    }
};

namespace detail {

inline void check_entries(const BinaryTable& t, std::size_t n, const char* name) {
    if (t.size() != n) throw ShapeError(std::string("table '") + name + "' has wrong dimension");
    for (std::size_t i = 0; i < t.raw().size(); ++i) {
        if (t.raw()[i] >= n) {
            throw ShapeError(std::string("table '") + name + "' entry (" + std::to_string(i / n) +
                             "," + std::to_string(i % n) + ") = " + std::to_string(t.raw()[i]) +
                             " is out of range");
        }
    }
}

/// Scans all k-tuples over 0..n-1 in lexicographic order and returns the first
/// one for which `ok` is false.
template <std::size_t K, class Pred>
std::optional<std::vector<Elem>> first_violation(std::size_t n, Pred&& ok) {
    std::vector<Elem> t(K, 0);
    if (n == 0) return std::nullopt;
    while (true) {
        bool good;
        if constexpr (K == 1) good = ok(t[0]);
        else if constexpr (K == 2) good = ok(t[0], t[1]);
        else good = ok(t[0], t[1], t[2]);
        if (!good) return t;
        std::size_t i = K;
        while (i > 0) {
            --i;
            if (++t[i] < n) break;
            t[i] = 0;
            if (i == 0) return std::nullopt;
        }
    }
}

}  // namespace detail

/// Throws ShapeError unless every table entry and constant lies in range.
inline void check_shape(const Ririg& a) {
    if (a.n == 0) throw ShapeError("universe must be nonempty");
    if (a.n > max_universe) throw ShapeError("universe larger than " + std::to_string(max_universe));
    if (a.zero >= a.n) throw ShapeError("constant 'zero' is out of range");
    if (a.one >= a.n) throw ShapeError("constant 'one' is out of range");
    detail::check_entries(a.join, a.n, "join");
    detail::check_entries(a.prod, a.n, "prod");
    detail::check_entries(a.imp, a.n, "imp");
}

/// One ririg axiom: its report name, the number of quantified elements, and
/// the check at a given tuple.
struct AxiomSpec {
    const char* name;
    std::size_t arity;
    bool (*holds)(const Ririg&, const Elem*);
};

inline const std::vector<AxiomSpec>& ririg_axioms() {
    static const std::vector<AxiomSpec> specs = {
        {"join commutativity", 2, [](const Ririg& a, const Elem* t) { return a.join(t[0], t[1]) == a.join(t[1], t[0]); }},
        {"join associativity", 3,
         [](const Ririg& a, const Elem* t) {
             return a.join(a.join(t[0], t[1]), t[2]) == a.join(t[0], a.join(t[1], t[2]));
         }},
        {"join unit", 1, [](const Ririg& a, const Elem* t) { return a.join(a.zero, t[0]) == t[0]; }},
        {"prod commutativity", 2, [](const Ririg& a, const Elem* t) { return a.prod(t[0], t[1]) == a.prod(t[1], t[0]); }},
        {"prod associativity", 3,
         [](const Ririg& a, const Elem* t) {
             return a.prod(a.prod(t[0], t[1]), t[2]) == a.prod(t[0], a.prod(t[1], t[2]));
         }},
        {"prod unit", 1, [](const Ririg& a, const Elem* t) { return a.prod(a.one, t[0]) == t[0]; }},
        {"distribution", 3,
         [](const Ririg& a, const Elem* t) {
             return a.prod(t[0], a.join(t[1], t[2])) == a.join(a.prod(t[0], t[1]), a.prod(t[0], t[2]));
         }},
        {"annihilation", 1, [](const Ririg& a, const Elem* t) { return a.prod(t[0], a.zero) == a.zero; }},
        {"integrality", 1, [](const Ririg& a, const Elem* t) { return a.join(a.one, t[0]) == a.one; }},
        {"residuation", 3,
         [](const Ririg& a, const Elem* t) {
             auto le = [&](Elem x, Elem y) { return a.join(x, y) == y; };
             return le(a.prod(t[0], t[1]), t[2]) == le(t[0], a.imp(t[1], t[2]));
         }},
    };
    return specs;
}

namespace detail {

/// First k-tuple in lexicographic order failing `ok`, for run-time k.
template <class Pred>
std::optional<std::vector<Elem>> first_violation_n(std::size_t n, std::size_t k, Pred&& ok) {
    std::vector<Elem> t(k, 0);
    if (n == 0) return std::nullopt;
    while (true) {
        if (!ok(t.data())) return t;
        std::size_t i = k;
        while (true) {
            if (i == 0) return std::nullopt;
            --i;
            if (++t[i] < n) break;
            t[i] = 0;
        }
    }
}

}  // namespace detail

/// Checks every ririg axiom and reports each violated one with its first
/// failing tuple. Throws ShapeError on out-of-range entries.
inline AxiomReport validate_ririg(const Ririg& a) {
    check_shape(a);
    AxiomReport report;
    for (const auto& law : ririg_axioms()) {
        auto w = detail::first_violation_n(a.n, law.arity, [&](const Elem* t) { return law.holds(a, t); });
        if (w) report.failures.push_back({law.name, std::move(*w)});
    }
    return report;
}

/// Evaluates one named axiom at a tuple; nullopt for an unknown name, a
/// wrong tuple length or out-of-range elements.
inline std::optional<bool> axiom_holds_at(const Ririg& a, const std::string& name, const std::vector<Elem>& tuple) {
    for (const auto& law : ririg_axioms()) {
        if (name != law.name) continue;
        if (tuple.size() != law.arity) return std::nullopt;
        for (Elem e : tuple)
            if (e >= a.n) return std::nullopt;
        return law.holds(a, tuple.data());
    }
    return std::nullopt;
}

/// a <= b in the join order.
inline bool leq(const Ririg& a, Elem x, Elem y) { return a.join(x, y) == y; }

/// max{x : x*b <= c} in the order induced by `join`, or nullopt when the set
/// has no maximum.
inline std::optional<Elem> residual_of(const BinaryTable& join, const BinaryTable& prod, Elem b, Elem c) {
    const auto n = join.size();
    auto le = [&](Elem x, Elem y) { return join(x, y) == y; };
    std::optional<Elem> best;
    for (Elem x = 0; x < n; ++x) {
        if (!le(prod(x, b), c)) continue;
        if (!best || le(*best, x)) best = x;
    }
    if (!best) return std::nullopt;
    for (Elem x = 0; x < n; ++x)
        if (le(prod(x, b), c) && !le(x, *best)) return std::nullopt;
    return best;
}

/// Builds the implication table from join and prod. Throws PreconditionFailed
/// naming the first (b, c) without a residual.
inline BinaryTable synthesize_imp(const BinaryTable& join, const BinaryTable& prod) {
    const auto n = join.size();
    BinaryTable imp(n);
    for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
            auto r = residual_of(join, prod, b, c);
            if (!r)
                throw PreconditionFailed("not residuated: no maximum of {x : x*" + std::to_string(b) +
                                         " <= " + std::to_string(c) + "}");
            imp.at(b, c) = *r;
        }
    }
    return imp;
}

/// The algebraic biconditional (a->b)(b->a).
inline Elem star(const Ririg& a, Elem x, Elem y) { return a.prod(a.imp(x, y), a.imp(y, x)); }

/// Index of the element with the given label, or of the given decimal index.
inline std::optional<Elem> find_element(const Ririg& a, const std::string& token) {
    for (std::size_t i = 0; i < a.labels.size(); ++i)
        if (a.labels[i] == token) return static_cast<Elem>(i);
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return std::nullopt;
    auto v = std::stoul(token);
    if (v >= a.n) return std::nullopt;
    return static_cast<Elem>(v);
}

/// Checks the fourteen elementary laws every ririg satisfies (unit laws for
/// ->, modus ponens inequality, currying, contraposition forms, and the
/// order characterization a <= b iff a->b = 1). Each law is reported under
/// the name "law <k>" with its first failing tuple.
inline AxiomReport check_ririg_laws(const Ririg& a) {
    AxiomReport report;
    const auto n = a.n;
    const auto& j = a.join;
    const auto& p = a.prod;
    const auto& i = a.imp;
    const Elem one = a.one;
    auto le = [&](Elem x, Elem y) { return j(x, y) == y; };
    auto record = [&](int k, std::optional<std::vector<Elem>> w) {
        if (w) report.failures.push_back({"law " + std::to_string(k), std::move(*w)});
    };
    record(1, detail::first_violation<1>(n, [&](Elem x) { return i(x, one) == one; }));
    record(2, detail::first_violation<1>(n, [&](Elem x) { return i(one, x) == x; }));
    record(3, detail::first_violation<1>(n, [&](Elem x) { return i(x, x) == one; }));
    record(4, detail::first_violation<2>(n, [&](Elem x, Elem y) { return le(p(x, i(x, y)), y); }));
    record(5, detail::first_violation<3>(n, [&](Elem x, Elem y, Elem z) {
               return le(i(x, y), i(p(x, z), p(y, z)));
           }));
    record(6, detail::first_violation<2>(n, [&](Elem x, Elem y) { return le(x, i(i(x, y), y)); }));
    record(7, detail::first_violation<3>(n, [&](Elem x, Elem y, Elem z) {
               if (!le(x, y)) return true;
               return le(i(z, x), i(z, y)) && le(i(y, z), i(x, z));
           }));
    record(8, detail::first_violation<3>(n, [&](Elem x, Elem y, Elem z) {
               return i(x, i(y, z)) == i(p(x, y), z) && i(p(x, y), z) == i(y, i(x, z));
           }));
    record(9, detail::first_violation<3>(n, [&](Elem x, Elem y, Elem z) {
               return le(x, i(y, z)) == le(y, i(x, z));
           }));
    record(10, detail::first_violation<2>(n, [&](Elem x, Elem y) { return le(x, i(y, x)); }));
    record(11, detail::first_violation<3>(n, [&](Elem x, Elem y, Elem z) {
               return le(i(x, y), i(i(z, x), i(z, y)));
           }));
    record(12, detail::first_violation<3>(n, [&](Elem x, Elem y, Elem z) {
               return le(i(x, y), i(i(y, z), i(x, z)));
           }));
    record(13, detail::first_violation<2>(n, [&](Elem x, Elem y) { return i(x, y) == i(i(i(x, y), y), y); }));
    record(14, detail::first_violation<2>(n, [&](Elem x, Elem y) { return le(x, y) == (i(x, y) == one); }));
    return report;
}

/// Componentwise product of two ririgs; the pair (x, y) is encoded as
/// x * |B| + y.
inline Ririg direct_product(const Ririg& a, const Ririg& b) {
    Ririg r;
    r.n = a.n * b.n;
    if (r.n > max_universe) throw ShapeError("product universe too large");
    auto enc = [&](Elem x, Elem y) { return static_cast<Elem>(x * b.n + y); };
    r.zero = enc(a.zero, b.zero);
    r.one = enc(a.one, b.one);
    r.join = BinaryTable(r.n);
    r.prod = BinaryTable(r.n);
    r.imp = BinaryTable(r.n);
    for (Elem u = 0; u < r.n; ++u) {
        for (Elem v = 0; v < r.n; ++v) {
            const Elem ux = u / b.n, uy = u % b.n, vx = v / b.n, vy = v % b.n;
            r.join.at(u, v) = enc(a.join(ux, vx), b.join(uy, vy));
            r.prod.at(u, v) = enc(a.prod(ux, vx), b.prod(uy, vy));
            r.imp.at(u, v) = enc(a.imp(ux, vx), b.imp(uy, vy));
        }
    }
    for (Elem u = 0; u < r.n; ++u)
        r.labels.push_back("(" + label_of(a.labels, u / b.n) + "," + label_of(b.labels, u % b.n) + ")");
    return r;
}

}  // namespace ririg
