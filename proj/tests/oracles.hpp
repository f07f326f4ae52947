#pragma once

// Brute-force reference computations. These deliberately avoid the library's
// algorithms and only read operation tables.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "ririg/ririg.hpp"

namespace oracle {

using ririg::Elem;
using ririg::ModalRirig;

inline bool le(const ModalRirig& a, Elem x, Elem y) { return a.base.join(x, y) == y; }

inline bool in(std::uint64_t s, Elem x) { return (s >> x) & 1U; }

/// Definition check of an I-filter on a bit set.
inline bool is_filter(const ModalRirig& a, std::uint64_t s) {
    const std::size_t n = a.size();
    if (s == 0) return false;
    for (Elem x = 0; x < n; ++x) {
        if (!in(s, x)) continue;
        for (Elem y = 0; y < n; ++y) {
            if (le(a, x, y) && !in(s, y)) return false;
            if (in(s, y) && !in(s, a.base.prod(x, y))) return false;
        }
        for (const auto& m : a.modals)
            if (!in(s, m[x])) return false;
    }
    return true;
}

/// Every I-filter by a scan over all 2^n subsets, in increasing mask order.
inline std::vector<std::uint64_t> filters(const ModalRirig& a) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << a.size()); ++s)
        if (is_filter(a, s)) out.push_back(s);
    return out;
}

/// Least filter containing X: intersection of every filter above X.
inline std::uint64_t least_filter(const ModalRirig& a, std::uint64_t x) {
    std::uint64_t acc = (std::uint64_t{1} << a.size()) - 1;
    for (auto f : filters(a))
        if ((f & x) == x) acc &= f;
    return acc;
}

inline bool is_congruence(const ModalRirig& a, const std::vector<int>& cls) {
    const std::size_t n = a.size();
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            if (cls[x] != cls[y]) continue;
            for (const auto& m : a.modals)
                if (cls[m[x]] != cls[m[y]]) return false;
            for (Elem u = 0; u < n; ++u)
                for (Elem v = 0; v < n; ++v) {
                    if (cls[u] != cls[v]) continue;
                    if (cls[a.base.join(x, u)] != cls[a.base.join(y, v)]) return false;
                    if (cls[a.base.prod(x, u)] != cls[a.base.prod(y, v)]) return false;
                    if (cls[a.base.imp(x, u)] != cls[a.base.imp(y, v)]) return false;
                }
        }
    return true;
}

/// All partitions as class arrays (restricted growth strings), recursively.
inline void partitions(std::size_t n, std::vector<int>& cur, int used, const std::function<void(const std::vector<int>&)>& f) {
    if (cur.size() == n) {
        f(cur);
        return;
    }
    for (int c = 0; c <= used; ++c) {
        cur.push_back(c);
        partitions(n, cur, std::max(used, c + 1), f);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> congruences(const ModalRirig& a) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions(a.size(), cur, 0, [&](const std::vector<int>& p) {
        if (is_congruence(a, p)) out.push_back(p);
    });
    return out;
}

inline bool finer(const std::vector<int>& p, const std::vector<int>& q) {
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p[x] == p[y] && q[x] != q[y]) return false;
    return true;
}

inline bool is_identity(const std::vector<int>& p) { return std::set<int>(p.begin(), p.end()).size() == p.size(); }

/// Simple: exactly two congruences.
inline bool simple(const ModalRirig& a) { return congruences(a).size() == 2; }

/// SI: among the non-identity congruences there is a least one.
inline bool subdirectly_irreducible(const ModalRirig& a) {
    auto cs = congruences(a);
    std::vector<std::vector<int>> nontriv;
    for (auto& c : cs)
        if (!is_identity(c)) nontriv.push_back(c);
    for (auto& c : nontriv) {
        bool least = true;
        for (auto& d : nontriv)
            if (!finer(c, d)) least = false;
        if (least) return true;
    }
    return false;
}

/// Largest x with x*b <= c by scanning, if one exists.
inline std::optional<Elem> residual(const ModalRirig& a, Elem b, Elem c) {
    std::vector<Elem> below;
    for (Elem x = 0; x < a.size(); ++x)
        if (le(a, a.base.prod(x, b), c)) below.push_back(x);
    for (Elem x : below) {
        bool top = true;
        for (Elem y : below)
            if (!le(a, y, x)) top = false;
        if (top) return x;
    }
    return std::nullopt;
}

/// f compatible with every congruence, by definition.
inline bool compatible(const ModalRirig& a, const ririg::FiniteFunction& f) {
    const auto cs = congruences(a);
    const std::size_t total = f.table.size();
    for (const auto& c : cs)
        for (std::size_t i = 0; i < total; ++i)
            for (std::size_t j = 0; j < total; ++j) {
                std::size_t u = i, v = j;
                bool related = true;
                for (std::size_t s = 0; s < f.arity; ++s) {
                    if (c[u % f.n] != c[v % f.n]) related = false;
                    u /= f.n;
                    v /= f.n;
                }
                if (related && c[f.table[i]] != c[f.table[j]]) return false;
            }
    return true;
}

/// Ririgs of size n up to isomorphism by scanning every join and product
/// table. No pruning: each table is tested against the axioms as written.
/// Each result is the relabeling-minimal flat (join, prod) encoding.
inline std::set<std::vector<int>> ririgs_naive(int n) {
    const int cells = n * n;
    std::vector<std::vector<int>> tables;
    std::vector<int> t(static_cast<std::size_t>(cells), 0);
    while (true) {
        tables.push_back(t);
        int i = cells;
        while (i > 0 && ++t[static_cast<std::size_t>(i - 1)] == n) t[static_cast<std::size_t>(--i)] = 0;
        if (i == 0) break;
    }
    auto at = [n](const std::vector<int>& tb, int x, int y) { return tb[static_cast<std::size_t>(x * n + y)]; };
    auto encode = [&](const std::vector<int>& j, const std::vector<int>& p, const std::vector<int>& perm) {
        std::vector<int> inv(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = x;
        std::vector<int> out;
        for (const auto* tb : {&j, &p})
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    out.push_back(perm[static_cast<std::size_t>(at(*tb, inv[static_cast<std::size_t>(x)], inv[static_cast<std::size_t>(y)]))]);
        return out;
    };
    std::set<std::vector<int>> found;
    for (const auto& j : tables) {
        bool ok = true;
        int zero = -1, one = -1;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y) {
                ok = at(j, x, y) == at(j, y, x);
                for (int z = 0; z < n && ok; ++z) ok = at(j, at(j, x, y), z) == at(j, x, at(j, y, z));
            }
        if (!ok) continue;
        for (int e = 0; e < n; ++e) {
            bool unit = true, top = true;
            for (int x = 0; x < n; ++x) {
                unit = unit && at(j, e, x) == x;
                top = top && at(j, e, x) == e;
            }
            if (unit) zero = e;
            if (top) one = e;
        }
        if (zero < 0 || one < 0) continue;
        for (const auto& p : tables) {
            bool good = true;
            for (int x = 0; x < n && good; ++x) {
                good = at(p, one, x) == x && at(p, zero, x) == zero;
                for (int y = 0; y < n && good; ++y) {
                    good = at(p, x, y) == at(p, y, x);
                    for (int z = 0; z < n && good; ++z)
                        good = at(p, at(p, x, y), z) == at(p, x, at(p, y, z)) &&
                               at(p, x, at(j, y, z)) == at(j, at(p, x, y), at(p, x, z));
                }
            }
            // Every b, c needs a greatest a with a*b <= c.
            for (int b = 0; b < n && good; ++b)
                for (int c = 0; c < n && good; ++c) {
                    int best = -1;
                    for (int a = 0; a < n; ++a)
                        if (at(j, at(p, a, b), c) == c) best = best < 0 ? a : at(j, best, a);
                    good = best >= 0 && at(j, at(p, best, b), c) == c;
                }
            if (!good) continue;
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) perm[static_cast<std::size_t>(x)] = x;
            std::vector<int> best;
            do {
                auto e = encode(j, p, perm);
                if (best.empty() || e < best) best = std::move(e);
            } while (std::next_permutation(perm.begin(), perm.end()));
            found.insert(best);
        }
    }
    return found;
}

}  // namespace oracle
