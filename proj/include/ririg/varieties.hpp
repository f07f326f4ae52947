#pragma once

// Equations, the contractive subvariety, R_C(I) membership, chains, the
// join-splitting block construction and the Fg-intersection law.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ririg/filters.hpp"
#include "ririg/term.hpp"

namespace ririg {

/// Default ceiling on the number of valuations `holds` will scan (4 variables
/// over a 4-element universe).
inline constexpr std::size_t default_valuation_cap = 256;
inline constexpr std::size_t no_valuation_cap = std::numeric_limits<std::size_t>::max();

/// n^k, or nullopt on overflow.
inline std::optional<std::size_t> valuation_count(std::size_t n, std::size_t k) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (n != 0 && total > std::numeric_limits<std::size_t>::max() / n) return std::nullopt;
        total *= n;
    }
    return total;
}

inline void require_valuation_budget(std::size_t n, std::size_t k, std::size_t cap) {
    const auto total = valuation_count(n, k);
    if (!total || *total > cap)
        throw CapExceeded(std::to_string(k) + " variables over " + std::to_string(n) +
                          " elements exceeds the valuation cap of " + std::to_string(cap));
}

struct HoldsResult {
    bool holds = true;
    std::optional<Valuation> countervaluation;
};

/// Exhaustive check of A |= lhs = rhs; the first failing valuation in
/// lexicographic order (canonical variable order) is returned.
inline HoldsResult holds(const ModalRirig& a, const Equation& eq, std::size_t cap = default_valuation_cap) {
    const auto vars = eq.variables();
    require_valuation_budget(a.size(), vars.size(), cap);
    const CompiledTerm l(eq.lhs, vars, a);
    const CompiledTerm r(eq.rhs, vars, a);
    HoldsResult out;
    for_each_valuation(a.size(), vars.size(), [&](std::span<const Elem> v) {
        if (l.eval(v) == r.eval(v)) return true;
        out.holds = false;
        Valuation cv;
        for (std::size_t i = 0; i < vars.size(); ++i) cv[vars[i]] = v[i];
        out.countervaluation = std::move(cv);
        return false;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Membership tests

struct ModalWitness {
    std::size_t modal;
    std::vector<Elem> elements;
};

/// First (modal, x) with m(x) not below x.
inline std::optional<ModalWitness> contractivity_violation(const ModalRirig& a) {
    for (std::size_t m = 0; m < a.modals.size(); ++m)
        for (Elem x = 0; x < a.size(); ++x)
            if (!a.leq(a.modal(m, x), x)) return ModalWitness{m, {x}};
    return std::nullopt;
}

inline bool is_contractive(const ModalRirig& a) { return !contractivity_violation(a); }

/// First pair with (x->y) | (y->x) != 1.
inline std::optional<std::pair<Elem, Elem>> prelinearity_violation(const ModalRirig& a) {
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
            if (a.join(a.imp(x, y), a.imp(y, x)) != a.one()) return std::make_pair(x, y);
    return std::nullopt;
}

inline bool satisfies_prelinearity(const ModalRirig& a) { return !prelinearity_violation(a); }

/// First (modal, x, y) with m(x|y) not below m(x) | m(y).
inline std::optional<ModalWitness> cm_violation(const ModalRirig& a) {
    for (std::size_t m = 0; m < a.modals.size(); ++m)
        for (Elem x = 0; x < a.size(); ++x)
            for (Elem y = 0; y < a.size(); ++y)
                if (!a.leq(a.modal(m, a.join(x, y)), a.join(a.modal(m, x), a.modal(m, y)))) return ModalWitness{m, {x, y}};
    return std::nullopt;
}

inline bool satisfies_cm(const ModalRirig& a) { return !cm_violation(a); }

inline bool in_RC(const ModalRirig& a) { return is_contractive(a) && satisfies_prelinearity(a) && satisfies_cm(a); }

/// First incomparable pair, if any.
inline std::optional<std::pair<Elem, Elem>> incomparable_pair(const ModalRirig& a) {
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = x + 1; y < a.size(); ++y)
            if (!a.leq(x, y) && !a.leq(y, x)) return std::make_pair(x, y);
    return std::nullopt;
}

inline bool is_chain(const ModalRirig& a) { return !incomparable_pair(a); }

// ---------------------------------------------------------------------------
// Join-splitting blocks

/// A block Q with Q(x | y) <= M(x) | N(y) on every member of R_C(I). Built by
/// the recursion: both blocks of length <= 1 are handled directly (m,n gives
/// m m n; a missing letter is replaced by doubling the other one), otherwise
/// the first letter of the longer side is peeled off and prepended.
inline Block join_splitting_block(const Block& m, const Block& n) {
    if (m.length() <= 1 && n.length() <= 1) {
        if (m.empty() && n.empty()) return {};
        if (m.empty()) return Block{{n.word[0], n.word[0]}};
        if (n.empty()) return Block{{m.word[0], m.word[0]}};
        return Block{{m.word[0], m.word[0], n.word[0]}};
    }
    if (m.length() >= 2) {
        Block rest{{m.word.begin() + 1, m.word.end()}};
        return Block{{m.word[0]}} + join_splitting_block(rest, n);
    }
    Block rest{{n.word.begin() + 1, n.word.end()}};
    return Block{{n.word[0]}} + join_splitting_block(m, rest);
}

/// First (x, y) with Q(x | y) not below M(x) | N(y).
inline std::optional<std::pair<Elem, Elem>> join_splitting_violation(const ModalRirig& a, const Block& q, const Block& m,
                                                                     const Block& n) {
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
            if (!a.leq(apply_block(a, q, a.join(x, y)), a.join(apply_block(a, m, x), apply_block(a, n, y))))
                return std::make_pair(x, y);
    return std::nullopt;
}

/// First (m, n, x, y) with m n (x | y) not below x | n(y).
inline std::optional<ModalWitness> two_letter_bound_violation(const ModalRirig& a) {
    for (std::size_t m = 0; m < a.modals.size(); ++m)
        for (std::size_t n = 0; n < a.modals.size(); ++n)
            for (Elem x = 0; x < a.size(); ++x)
                for (Elem y = 0; y < a.size(); ++y) {
                    const Elem lhs = a.modal(m, a.modal(n, a.join(x, y)));
                    if (!a.leq(lhs, a.join(x, a.modal(n, y)))) return ModalWitness{m * a.modals.size() + n, {x, y}};
                }
    return std::nullopt;
}

struct FgIntersectionReport {
    bool holds = true;
    std::optional<std::pair<Elem, Elem>> counterexample;
};

/// Checks Fg(a | b) = Fg(a) & Fg(b) for all pairs. Refuses algebras outside R_C(I).
inline FgIntersectionReport fg_intersection_check(const ModalRirig& a) {
    if (!in_RC(a)) throw PreconditionFailed("fg_intersection_check: algebra is not in R_C(I)");
    std::vector<SubsetMask> principal;
    for (Elem x = 0; x < a.size(); ++x) principal.push_back(generate_filter(a, SubsetMask(a.size(), {x})).mask);
    FgIntersectionReport r;
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
            if (principal[a.join(x, y)] != (principal[x] & principal[y])) {
                r.holds = false;
                r.counterexample = std::make_pair(x, y);
                return r;
            }
    return r;
}

// ---------------------------------------------------------------------------
// Summary flags

struct Classification {
    bool trivial = false;
    bool simple = false;
    bool si = false;
    bool chain = false;
    bool contractive = false;
    bool prelinear = false;
    bool cm = false;
    bool in_rc = false;
};

inline Classification classify(const ModalRirig& a) {
    Classification c;
    c.trivial = a.size() < 2;
    if (!c.trivial) {
        c.simple = is_simple(a).simple;
        c.si = is_subdirectly_irreducible(a).si;
    }
    c.chain = is_chain(a);
    c.contractive = is_contractive(a);
    c.prelinear = satisfies_prelinearity(a);
    c.cm = satisfies_cm(a);
    c.in_rc = c.contractive && c.prelinear && c.cm;
    return c;
}

}  // namespace ririg
