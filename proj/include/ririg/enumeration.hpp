#pragma once

// Exhaustive generation of small ririgs and their modal expansions up to
// isomorphism, canonical forms, and persisted catalogs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ririg/io.hpp"
#include "ririg/parallel.hpp"
#include "ririg/varieties.hpp"

namespace ririg {

inline constexpr std::size_t default_enumeration_cap = 5;
inline constexpr std::size_t max_canonical_size = 8;
inline constexpr std::size_t max_expansion_modals = 2;

// ---------------------------------------------------------------------------
// Canonical forms

using CanonicalForm = std::vector<std::uint8_t>;

namespace detail {

inline CanonicalForm encode(const ModalRirig& a, const std::vector<Elem>& perm, const std::vector<Elem>& inv) {
    const std::size_t n = a.size();
    CanonicalForm out;
    out.reserve(4 + 3 * n * n + a.modals.size() * n);
    out.push_back(static_cast<std::uint8_t>(n));
    out.push_back(static_cast<std::uint8_t>(a.modals.size()));
    out.push_back(static_cast<std::uint8_t>(perm[a.zero()]));
    out.push_back(static_cast<std::uint8_t>(perm[a.one()]));
    for (const BinaryTable* t : {&a.base.join, &a.base.prod, &a.base.imp})
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) out.push_back(static_cast<std::uint8_t>(perm[(*t)(inv[x], inv[y])]));
    for (const auto& m : a.modals)
        for (std::size_t x = 0; x < n; ++x) out.push_back(static_cast<std::uint8_t>(perm[m[inv[x]]]));
    return out;
}

}  // namespace detail

/// Minimum over all relabelings of the encoded tables (constants and modal
/// tables included, labels and modal names excluded).
inline CanonicalForm canonical_form(const ModalRirig& a) {
    const std::size_t n = a.size();
    if (n > max_canonical_size) throw CapExceeded("canonical_form: size above " + std::to_string(max_canonical_size));
    std::vector<Elem> inv(n);
    std::iota(inv.begin(), inv.end(), Elem{0});
    std::vector<Elem> perm(n);
    CanonicalForm best;
    bool first = true;
    do {
        for (std::size_t i = 0; i < n; ++i) perm[inv[i]] = static_cast<Elem>(i);
        auto enc = detail::encode(a, perm, inv);
        if (first || enc < best) {
            best = std::move(enc);
            first = false;
        }
    } while (std::next_permutation(inv.begin(), inv.end()));
    return best;
}

inline std::string form_to_hex(const CanonicalForm& f) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (auto b : f) {
        s += digits[b >> 4];
        s += digits[b & 15];
    }
    return s;
}

inline bool isomorphic(const ModalRirig& a, const ModalRirig& b) {
    return a.size() == b.size() && a.modals.size() == b.modals.size() && canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// Ririgs

namespace detail {

inline std::vector<std::string> default_labels(std::size_t n) {
    if (n == 1) return {"0"};
    std::vector<std::string> labels{"0"};
    for (std::size_t i = 1; i + 1 < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i - 1)));
    labels.push_back("1");
    return labels;
}

/// Join tables of bounded lattices on {0..n-1} with bottom 0 and top n-1,
/// one per labelled order on the middle elements.
inline std::vector<BinaryTable> bounded_join_tables(std::size_t n) {
    const std::size_t m = n - 2;
    std::vector<std::pair<std::size_t, std::size_t>> offdiag;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) offdiag.emplace_back(i, j);
    std::vector<BinaryTable> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << offdiag.size()); ++bits) {
        std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) {
            le[0][i] = true;
            le[i][n - 1] = true;
            le[i][i] = true;
        }
        for (std::size_t b = 0; b < offdiag.size(); ++b)
            if ((bits >> b) & 1U) le[offdiag[b].first + 1][offdiag[b].second + 1] = true;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                if (i != j && le[i][j] && le[j][i]) ok = false;
                for (std::size_t k = 0; k < n && ok; ++k)
                    if (le[i][j] && le[j][k] && !le[i][k]) ok = false;
            }
        if (!ok) continue;
        BinaryTable join(n);
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                // least upper bound
                std::optional<std::size_t> lub;
                for (std::size_t u = 0; u < n; ++u) {
                    if (!le[i][u] || !le[j][u]) continue;
                    bool least = true;
                    for (std::size_t v = 0; v < n; ++v)
                        if (le[i][v] && le[j][v] && !le[u][v]) least = false;
                    if (least) lub = u;
                }
                if (!lub) ok = false;
                else join.at(static_cast<Elem>(i), static_cast<Elem>(j)) = static_cast<Elem>(*lub);
            }
        if (ok) out.push_back(std::move(join));
    }
    return out;
}

/// Every product table on the given bounded lattice that makes a ririg.
/// Backtracking over the unordered pairs of middle elements; values are
/// restricted to common lower bounds and pruned by monotonicity.
inline std::vector<Ririg> products_for(const BinaryTable& join) {
    const std::size_t n = join.size();
    const Elem top = static_cast<Elem>(n - 1);
    auto le = [&](Elem x, Elem y) { return join(x, y) == y; };
    BinaryTable prod(n);
    for (Elem x = 0; x < n; ++x) {
        prod.at(x, top) = x;
        prod.at(top, x) = x;
        prod.at(x, 0) = 0;
        prod.at(0, x) = 0;
    }
    std::vector<std::pair<Elem, Elem>> cells;
    for (Elem x = 1; x < top; ++x)
        for (Elem y = x; y < top; ++y) cells.emplace_back(x, y);
    std::vector<bool> assigned(n * n, false);
    for (Elem x = 0; x < n; ++x) {
        assigned[x * n + top] = assigned[top * n + x] = true;
        assigned[x * n] = assigned[x] = true;
    }
    auto monotone_ok = [&](Elem x, Elem y) {
        // Compare (x,y) with every assigned cell sharing a coordinate.
        const Elem v = prod(x, y);
        for (Elem z = 0; z < n; ++z) {
            if (!assigned[x * n + z]) continue;
            const Elem w = prod(x, z);
            if (le(y, z) && !le(v, w)) return false;
            if (le(z, y) && !le(w, v)) return false;
        }
        return true;
    };
    std::vector<Ririg> out;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            Ririg r;
            r.n = n;
            r.zero = 0;
            r.one = top;
            r.join = join;
            r.prod = prod;
            for (Elem x = 0; x < n; ++x)
                for (Elem y = 0; y < n; ++y)
                    for (Elem z = 0; z < n; ++z) {
                        if (prod(prod(x, y), z) != prod(x, prod(y, z))) return;
                        if (prod(x, join(y, z)) != join(prod(x, y), prod(x, z))) return;
                    }
            for (Elem b = 0; b < n; ++b)
                for (Elem cc = 0; cc < n; ++cc)
                    if (!residual_of(join, prod, b, cc)) return;
            r.imp = synthesize_imp(join, prod);
            r.labels = default_labels(n);
            out.push_back(std::move(r));
            return;
        }
        const auto [x, y] = cells[c];
        for (Elem v = 0; v < n; ++v) {
            if (!le(v, x) || !le(v, y)) continue;
            prod.at(x, y) = v;
            prod.at(y, x) = v;
            assigned[x * n + y] = assigned[y * n + x] = true;
            if (monotone_ok(x, y) && monotone_ok(y, x)) rec(c + 1);
            assigned[x * n + y] = assigned[y * n + x] = false;
        }
    };
    rec(0);
    return out;
}

}  // namespace detail

/// All ririgs of size n up to isomorphism, with 0 at index 0 and 1 at n-1.
/// Order is deterministic for every `jobs` value.
inline std::vector<Ririg> enumerate_ririgs(std::size_t n, std::size_t cap = default_enumeration_cap, std::size_t jobs = 1) {
    if (n == 0) throw PreconditionFailed("enumerate_ririgs: size must be positive");
    if (n > cap) throw CapExceeded("enumerate_ririgs: size " + std::to_string(n) + " above cap " + std::to_string(cap));
    if (n == 1) {
        Ririg r;
        r.n = 1;
        r.join = r.prod = r.imp = BinaryTable(1);
        r.labels = detail::default_labels(1);
        return {r};
    }
    const auto joins = detail::bounded_join_tables(n);
    const auto per_order =
        parallel_map<std::vector<Ririg>>(joins.size(), jobs, [&](std::size_t i) { return detail::products_for(joins[i]); });
    std::set<CanonicalForm> seen;
    std::vector<Ririg> out;
    for (const auto& batch : per_order)
        for (const auto& r : batch)
            if (seen.insert(canonical_form(ModalRirig(r))).second) out.push_back(r);
    return out;
}

// ---------------------------------------------------------------------------
// Modal expansions

struct ExpansionConstraints {
    bool contractive = false;
    bool prelinear = false;  ///< (P) on the base algebra
    bool cm = false;
    bool chain = false;

    bool any() const noexcept { return contractive || prelinear || cm || chain; }
};

/// Unary tables that are modal operators (and meet the per-table constraints).
inline std::vector<UnaryTable> modal_operator_tables(const ModalRirig& base, const ExpansionConstraints& c = {}) {
    const std::size_t n = base.size();
    std::vector<UnaryTable> out;
    UnaryTable t(n, 0);
    while (true) {
        if (t[base.one()] == base.one() && is_modal_operator(base, t)) {
            bool ok = true;
            if (c.contractive)
                for (Elem x = 0; x < n && ok; ++x) ok = base.leq(t[x], x);
            if (c.cm)
                for (Elem x = 0; x < n && ok; ++x)
                    for (Elem y = 0; y < n && ok; ++y) ok = base.leq(t[base.join(x, y)], base.join(t[x], t[y]));
            if (ok) out.push_back(t);
        }
        std::size_t i = n;
        while (i > 0 && ++t[i - 1] == n) t[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

inline std::vector<std::string> default_modal_names(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k; ++i) names.push_back("m" + std::to_string(i));
    return names;
}

/// All expansions of A by k modal operators named m1..mk, up to isomorphism
/// of the expanded structure.
inline std::vector<ModalRirig> enumerate_modal_expansions(const Ririg& a, std::size_t k,
                                                          const ExpansionConstraints& c = {}) {
    if (k > max_expansion_modals)
        throw CapExceeded("enumerate_modal_expansions: at most " + std::to_string(max_expansion_modals) + " modal symbols");
    const ModalRirig bare(a);
    if (c.prelinear && !satisfies_prelinearity(bare)) return {};
    if (c.chain && !is_chain(bare)) return {};
    const auto tables = modal_operator_tables(bare, c);
    std::vector<ModalRirig> out;
    std::set<CanonicalForm> seen;
    std::vector<std::size_t> pick(k, 0);
    if (k > 0 && tables.empty()) return out;
    while (true) {
        std::vector<UnaryTable> chosen;
        for (std::size_t i : pick) chosen.push_back(tables[i]);
        ModalRirig e(a, ModalSignature(default_modal_names(k)), std::move(chosen));
        if (seen.insert(canonical_form(e)).second) out.push_back(std::move(e));
        std::size_t i = k;
        while (i > 0 && ++pick[i - 1] == tables.size()) pick[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Catalogs

struct CatalogEntry {
    ModalRirig algebra;
    CanonicalForm form;
    Classification flags;

    friend bool operator==(const CatalogEntry& a, const CatalogEntry& b) {
        return a.algebra == b.algebra && a.algebra.base.labels == b.algebra.base.labels && a.form == b.form &&
               a.flags.trivial == b.flags.trivial && a.flags.simple == b.flags.simple && a.flags.si == b.flags.si &&
               a.flags.chain == b.flags.chain && a.flags.contractive == b.flags.contractive &&
               a.flags.prelinear == b.flags.prelinear && a.flags.cm == b.flags.cm && a.flags.in_rc == b.flags.in_rc;
    }
};

struct Catalog {
    std::vector<CatalogEntry> entries;

    std::vector<ModalRirig> algebras() const {
        std::vector<ModalRirig> out;
        for (const auto& e : entries) out.push_back(e.algebra);
        return out;
    }

    /// Entries whose algebra satisfies pred.
    template <class Pred>
    Catalog filter(Pred&& pred) const {
        Catalog c;
        for (const auto& e : entries)
            if (pred(e)) c.entries.push_back(e);
        return c;
    }

    friend bool operator==(const Catalog&, const Catalog&) = default;
};

inline CatalogEntry make_entry(ModalRirig a) {
    CatalogEntry e;
    e.form = canonical_form(a);
    e.flags = classify(a);
    e.algebra = std::move(a);
    return e;
}

/// Every algebra of size 1..n_max with exactly k modal symbols satisfying the
/// constraints, sizes ascending.
inline Catalog catalog_build(std::size_t n_max, std::size_t k, const ExpansionConstraints& c = {},
                             std::size_t jobs = 1, std::size_t cap = default_enumeration_cap) {
    std::vector<ModalRirig> algebras;
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (const auto& r : enumerate_ririgs(n, cap, jobs)) {
            if (k == 0) {
                ModalRirig bare(r);
                if (c.prelinear && !satisfies_prelinearity(bare)) continue;
                if (c.chain && !is_chain(bare)) continue;
                algebras.push_back(std::move(bare));
            } else {
                for (auto& e : enumerate_modal_expansions(r, k, c)) algebras.push_back(std::move(e));
            }
        }
    }
    Catalog cat;
    cat.entries = parallel_map<CatalogEntry>(algebras.size(), jobs, [&](std::size_t i) { return make_entry(algebras[i]); });
    return cat;
}

inline Catalog catalog_concat(const Catalog& a, const Catalog& b) {
    Catalog c = a;
    c.entries.insert(c.entries.end(), b.entries.begin(), b.entries.end());
    return c;
}

inline constexpr const char* catalog_header = "ririg-catalog v1";

inline ojson flags_to_json(const Classification& f) {
    ojson j;
    j["trivial"] = f.trivial;
    j["simple"] = f.simple;
    j["si"] = f.si;
    j["chain"] = f.chain;
    j["contractive"] = f.contractive;
    j["prelinear"] = f.prelinear;
    j["cm"] = f.cm;
    j["in_rc"] = f.in_rc;
    return j;
}

inline std::string catalog_to_string(const Catalog& c) {
    std::string out = std::string(catalog_header) + "\n";
    for (const auto& e : c.entries) {
        ojson rec = algebra_to_json(e.algebra);
        rec["form"] = form_to_hex(e.form);
        rec["flags"] = flags_to_json(e.flags);
        out += rec.dump() + "\n";
    }
    return out;
}

inline bool is_catalog_text(std::string_view text) {
    return text.substr(0, std::string_view(catalog_header).size()) == catalog_header ||
           text.substr(0, 14) == "ririg-catalog ";
}

inline Catalog parse_catalog(std::string_view text) {
    const auto first_nl = text.find('\n');
    const std::string header = detail::trim(text.substr(0, first_nl));
    if (header.rfind("ririg-catalog", 0) != 0) throw ParseError("not a catalog file (missing header)", 1);
    if (header != catalog_header) throw ParseError("unsupported catalog version '" + header + "'", 1);
    Catalog c;
    std::size_t line_no = 1;
    std::size_t pos = first_nl == std::string_view::npos ? text.size() : first_nl + 1;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (detail::trim(raw).empty()) continue;
        const ojson rec = detail::parse_json(raw, line_no - 1);
        CatalogEntry e;
        e.algebra = algebra_from_json(rec, {}, line_no - 1);
        e.form = canonical_form(e.algebra);
        if (auto it = rec.find("form"); it != rec.end() && (!it->is_string() || it->get<std::string>() != form_to_hex(e.form)))
            throw ParseError("stored canonical form does not match the tables", line_no);
        e.flags = classify(e.algebra);
        if (auto it = rec.find("flags"); it != rec.end() && *it != flags_to_json(e.flags))
            throw ParseError("stored flags do not match recomputation", line_no);
        c.entries.push_back(std::move(e));
    }
    return c;
}

inline void catalog_save(const Catalog& c, const std::string& path) { write_file(path, catalog_to_string(c)); }

inline Catalog catalog_load(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_catalog(text);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), 0);
    }
}

}  // namespace ririg
