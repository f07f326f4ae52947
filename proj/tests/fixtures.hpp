#pragma once

// Small named algebras used across the suites. Tables are written out by
// hand from their textbook definitions, not produced by the library.

#include <algorithm>
#include <map>
#include <utility>
#include <string>
#include <vector>

#include "ririg/ririg.hpp"

namespace fx {

using ririg::BinaryTable;
using ririg::Elem;
using ririg::ModalRirig;
using ririg::ModalSignature;
using ririg::Ririg;
using ririg::UnaryTable;

/// Goedel chain 0 < 1 < ... < n-1: join = max, prod = min, x->y = top if x <= y else y.
inline Ririg goedel_chain(std::size_t n, std::vector<std::string> labels = {}) {
    Ririg r;
    r.n = n;
    r.zero = 0;
    r.one = static_cast<Elem>(n - 1);
    r.join = BinaryTable(n);
    r.prod = BinaryTable(n);
    r.imp = BinaryTable(n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            r.join.at(x, y) = std::max(x, y);
            r.prod.at(x, y) = std::min(x, y);
            r.imp.at(x, y) = x <= y ? r.one : y;
        }
    r.labels = std::move(labels);
    return r;
}

/// Lukasiewicz chain on {0, 1/(n-1), ..., 1}: prod = max(0, x+y-top), x->y = min(top, top-x+y).
inline Ririg lukasiewicz_chain(std::size_t n) {
    Ririg r;
    const int top = static_cast<int>(n) - 1;
    r.n = n;
    r.zero = 0;
    r.one = static_cast<Elem>(top);
    r.join = BinaryTable(n);
    r.prod = BinaryTable(n);
    r.imp = BinaryTable(n);
    for (int x = 0; x <= top; ++x)
        for (int y = 0; y <= top; ++y) {
            r.join.at(static_cast<Elem>(x), static_cast<Elem>(y)) = static_cast<Elem>(std::max(x, y));
            r.prod.at(static_cast<Elem>(x), static_cast<Elem>(y)) = static_cast<Elem>(std::max(0, x + y - top));
            r.imp.at(static_cast<Elem>(x), static_cast<Elem>(y)) = static_cast<Elem>(std::min(top, top - x + y));
        }
    return r;
}

inline Ririg b2() { return goedel_chain(2, {"0", "1"}); }
inline Ririg g3() { return goedel_chain(3, {"0", "a", "1"}); }

inline ModalRirig with_modal(const Ririg& r, UnaryTable m, const std::string& name = "m") {
    return ModalRirig(r, ModalSignature({name}), {std::move(m)});
}

/// Element codes for the three-element fixtures.
inline constexpr Elem Z = 0;
inline constexpr Elem A = 1;
inline constexpr Elem O = 2;

inline ModalRirig g3delta() { return with_modal(g3(), {0, 0, 2}); }
inline ModalRirig g3id() { return with_modal(g3(), {0, 1, 2}); }

/// B2 x B2 with pairs coded x*2+y: 0=(0,0), 1=(0,1), 2=(1,0), 3=(1,1).
inline Ririg b2xb2_bare() {
    Ririg r;
    r.n = 4;
    r.zero = 0;
    r.one = 3;
    r.join = BinaryTable(4);
    r.prod = BinaryTable(4);
    r.imp = BinaryTable(4);
    auto fst = [](Elem u) { return u / 2; };
    auto snd = [](Elem u) { return u % 2; };
    for (Elem u = 0; u < 4; ++u)
        for (Elem v = 0; v < 4; ++v) {
            const Elem j0 = std::max(fst(u), fst(v)), j1 = std::max(snd(u), snd(v));
            const Elem p0 = std::min(fst(u), fst(v)), p1 = std::min(snd(u), snd(v));
            const Elem i0 = fst(u) <= fst(v) ? 1 : 0, i1 = snd(u) <= snd(v) ? 1 : 0;
            r.join.at(u, v) = static_cast<Elem>(j0 * 2 + j1);
            r.prod.at(u, v) = static_cast<Elem>(p0 * 2 + p1);
            r.imp.at(u, v) = static_cast<Elem>(i0 * 2 + i1);
        }
    return r;
}

inline ModalRirig b2xb2_id() { return with_modal(b2xb2_bare(), {0, 1, 2, 3}); }

inline std::vector<ModalRirig> small_named_catalog() { return {ModalRirig(b2()), ModalRirig(g3()), g3delta(), g3id()}; }

/// Shared enumerated catalogs, built once per process.
inline const ririg::Catalog& catalog_upto(std::size_t n, std::size_t k) {
    static std::map<std::pair<std::size_t, std::size_t>, ririg::Catalog> cache;
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, ririg::catalog_build(n, k)).first;
    return it->second;
}

/// Size <= n, with zero and with one modal symbol.
inline std::vector<ModalRirig> mixed_catalog(std::size_t n) {
    auto a = catalog_upto(n, 0).algebras();
    auto b = catalog_upto(n, 1).algebras();
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace fx
