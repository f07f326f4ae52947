#pragma once

// I-modal ririgs: modal operator validation, I-block words and their
// interpretation, and the lambda operator for finite signatures.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ririg/algebra.hpp"

namespace ririg {

/// Ordered, duplicate-free list of modal symbol names.
class ModalSignature {
public:
    ModalSignature() = default;
    explicit ModalSignature(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!valid_name(names_[i])) throw PreconditionFailed("invalid modal name '" + names_[i] + "'");
            for (std::size_t j = 0; j < i; ++j)
                if (names_[i] == names_[j]) throw PreconditionFailed("duplicate modal name '" + names_[i] + "'");
        }
    }

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }
    const std::string& operator[](std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    /// Identifiers that do not collide with the term syntax.
    static bool valid_name(std::string_view s) {
        if (s.empty()) return false;
        if (s == "eps" || s == "bot" || s == "top") return false;
        auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
        if (!alpha(s[0])) return false;
        for (char c : s)
            if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
        return true;
    }

    friend bool operator==(const ModalSignature&, const ModalSignature&) = default;

private:
    std::vector<std::string> names_;
};

/// A ririg expanded with one unary table per modal symbol.
struct ModalRirig {
    Ririg base;
    ModalSignature sig;
    std::vector<UnaryTable> modals;

    ModalRirig() = default;
    ModalRirig(Ririg b) : base(std::move(b)) {}  // NOLINT: a ririg is a modal ririg over the empty signature
    ModalRirig(Ririg b, ModalSignature s, std::vector<UnaryTable> m)
        : base(std::move(b)), sig(std::move(s)), modals(std::move(m)) {
        if (sig.size() != modals.size()) throw ShapeError("one table per modal symbol required");
        for (const auto& t : modals) {
            if (t.size() != base.n) throw ShapeError("modal table has wrong length");
            for (Elem v : t)
                if (v >= base.n) throw ShapeError("modal table entry out of range");
        }
    }

    std::size_t size() const noexcept { return base.n; }
    Elem zero() const noexcept { return base.zero; }
    Elem one() const noexcept { return base.one; }
    Elem join(Elem a, Elem b) const { return base.join(a, b); }
    Elem prod(Elem a, Elem b) const { return base.prod(a, b); }
    Elem imp(Elem a, Elem b) const { return base.imp(a, b); }
    bool leq(Elem a, Elem b) const { return base.join(a, b) == b; }
    Elem star(Elem a, Elem b) const { return ririg::star(base, a, b); }
    Elem modal(std::size_t m, Elem a) const { return modals[m][a]; }
    std::string label(Elem a) const { return label_of(base.labels, a); }

    std::size_t modal_index(std::string_view name) const {
        auto i = sig.index_of(name);
        if (!i) throw SignatureMismatch("unknown modal symbol '" + std::string(name) + "'");
        return *i;
    }

    friend bool operator==(const ModalRirig& a, const ModalRirig& b) {
        return a.base == b.base && a.sig == b.sig && a.modals == b.modals;
    }
};

/// Componentwise product; both factors must carry the same signature.
inline ModalRirig direct_product(const ModalRirig& a, const ModalRirig& b) {
    if (!(a.sig == b.sig)) throw SignatureMismatch("product factors have different modal signatures");
    Ririg base = direct_product(a.base, b.base);
    std::vector<UnaryTable> tables;
    for (std::size_t m = 0; m < a.modals.size(); ++m) {
        UnaryTable t(base.n);
        for (Elem u = 0; u < base.n; ++u)
            t[u] = static_cast<Elem>(a.modals[m][u / b.size()] * b.size() + b.modals[m][u % b.size()]);
        tables.push_back(std::move(t));
    }
    return ModalRirig(std::move(base), a.sig, std::move(tables));
}

/// A word over the modal signature. The word m N denotes "apply N, then m",
/// so the first letter is applied last. The empty word is the identity.
struct Block {
    std::vector<std::size_t> word;

    std::size_t length() const noexcept { return word.size(); }
    bool empty() const noexcept { return word.empty(); }

    /// Concatenation: (M + N)(x) = M(N(x)).
    friend Block operator+(const Block& m, const Block& n) {
        Block r = m;
        r.word.insert(r.word.end(), n.word.begin(), n.word.end());
        return r;
    }

    friend bool operator==(const Block&, const Block&) = default;
    friend auto operator<=>(const Block& a, const Block& b) {
        if (a.word.size() != b.word.size()) return a.word.size() <=> b.word.size();
        return a.word <=> b.word;
    }
};

/// Block literal: names joined by '.', or "eps" for the empty word.
inline std::string format_block(const ModalSignature& sig, const Block& b) {
    if (b.empty()) return "eps";
    std::string out;
    for (std::size_t i = 0; i < b.word.size(); ++i) {
        if (i) out += '.';
        out += sig[b.word[i]];
    }
    return out;
}

inline Block parse_block(const ModalSignature& sig, std::string_view text) {
    Block b;
    if (text == "eps") return b;
    std::size_t start = 0;
    while (true) {
        auto dot = text.find('.', start);
        auto name = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        auto idx = sig.index_of(name);
        if (!idx) {
            if (!ModalSignature::valid_name(name)) throw ParseError("malformed block '" + std::string(text) + "'");
            throw SignatureMismatch("unknown modal symbol '" + std::string(name) + "' in block '" + std::string(text) + "'");
        }
        b.word.push_back(*idx);
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return b;
}

inline Elem apply_block(const ModalRirig& a, const Block& b, Elem x) {
    for (auto it = b.word.rbegin(); it != b.word.rend(); ++it) x = a.modals[*it][x];
    return x;
}

/// The unary map interpreting a block.
inline UnaryTable block_table(const ModalRirig& a, const Block& b) {
    UnaryTable t(a.size());
    for (Elem x = 0; x < a.size(); ++x) t[x] = apply_block(a, b, x);
    return t;
}

/// All words of length <= max_len over k letters, ordered by length then
/// lexicographically; the first entry is the empty word.
inline std::vector<Block> enumerate_blocks(std::size_t k, std::size_t max_len) {
    std::vector<Block> out{Block{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len && k > 0; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (std::size_t m = 0; m < k; ++m) {
                Block b = out[i];
                b.word.push_back(m);
                out.push_back(std::move(b));
            }
        }
        level_begin = level_end;
    }
    return out;
}

inline std::vector<Block> enumerate_blocks(const ModalSignature& sig, std::size_t max_len) {
    return enumerate_blocks(sig.size(), max_len);
}

/// Whether `t` satisfies t(1) = 1 and t(x->y) <= t(x)->t(y).
inline bool is_modal_operator(const ModalRirig& a, const UnaryTable& t) {
    if (t[a.one()] != a.one()) return false;
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
            if (!a.leq(t[a.imp(x, y)], a.imp(t[x], t[y]))) return false;
    return true;
}

/// Reports, per modal symbol, failures of "<m>(1)=1" and
/// "<m>(x->y)<=<m>(x)-><m>(y)" with their first failing tuple.
inline AxiomReport validate_modal(const ModalRirig& a) {
    AxiomReport report;
    for (std::size_t m = 0; m < a.modals.size(); ++m) {
        const auto& t = a.modals[m];
        const auto& name = a.sig[m];
        if (t[a.one()] != a.one()) report.failures.push_back({name + "(1)=1", {}});
        auto w = detail::first_violation<2>(a.size(), [&](Elem x, Elem y) {
            return a.leq(t[a.imp(x, y)], a.imp(t[x], t[y]));
        });
        if (w) report.failures.push_back({name + "(x->y)<=" + name + "(x)->" + name + "(y)", std::move(*w)});
    }
    return report;
}

/// Evaluates a modal axiom as named by `validate_modal` at a tuple; nullopt
/// when the name or tuple does not fit the algebra.
inline std::optional<bool> modal_axiom_holds_at(const ModalRirig& a, const std::string& name,
                                                const std::vector<Elem>& tuple) {
    for (Elem e : tuple)
        if (e >= a.size()) return std::nullopt;
    for (std::size_t m = 0; m < a.modals.size(); ++m) {
        const auto& s = a.sig[m];
        const auto& t = a.modals[m];
        if (name == s + "(1)=1") {
            if (!tuple.empty()) return std::nullopt;
            return t[a.one()] == a.one();
        }
        if (name == s + "(x->y)<=" + s + "(x)->" + s + "(y)") {
            if (tuple.size() != 2) return std::nullopt;
            return a.leq(t[a.imp(tuple[0], tuple[1])], a.imp(t[tuple[0]], t[tuple[1]]));
        }
    }
    return std::nullopt;
}

/// m(x)m(y) <= m(xy) for all x, y.
inline bool check_product_form(const ModalRirig& a, std::size_t m) {
    const auto& t = a.modals.at(m);
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
            if (!a.leq(a.prod(t[x], t[y]), t[a.prod(x, y)])) return false;
    return true;
}

inline bool check_product_form(const ModalRirig& a, std::string_view name) {
    return check_product_form(a, a.modal_index(name));
}

/// m(x->y) <= m(x)->m(y) for all x, y.
inline bool check_distribution_law(const ModalRirig& a, std::size_t m) {
    const auto& t = a.modals.at(m);
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
            if (!a.leq(t[a.imp(x, y)], a.imp(t[x], t[y]))) return false;
    return true;
}

/// lambda(x) = x * m_1(x) * ... * m_k(x), product taken in signature order.
inline Elem lambda(const ModalRirig& a, Elem x) {
    Elem r = x;
    for (const auto& t : a.modals) r = a.prod(r, t[x]);
    return r;
}

inline Elem lambda_iter(const ModalRirig& a, std::size_t l, Elem x) {
    for (std::size_t i = 0; i < l; ++i) {
        Elem next = lambda(a, x);
        if (next == x) break;
        x = next;
    }
    return x;
}

inline UnaryTable lambda_table(const ModalRirig& a) {
    UnaryTable t(a.size());
    for (Elem x = 0; x < a.size(); ++x) t[x] = lambda(a, x);
    return t;
}

/// Least l with lambda^(l+1)(x) = lambda^l(x).
inline std::size_t lambda_stabilization(const ModalRirig& a, Elem x) {
    std::size_t l = 0;
    for (Elem next = lambda(a, x); next != x; next = lambda(a, x)) {
        x = next;
        ++l;
    }
    return l;
}

/// Maximum stabilization index over the whole universe; never exceeds n.
inline std::size_t lambda_stabilization(const ModalRirig& a) {
    std::size_t l = 0;
    for (Elem x = 0; x < a.size(); ++x) l = std::max(l, lambda_stabilization(a, x));
    return l;
}

/// The finite monoid of block interpretations, each with its first block in
/// length-then-lexicographic order. Entries appear in discovery order, so
/// `depth` (the longest of those shortest blocks) bounds every block search.
class BlockMonoid {
public:
    struct Entry {
        UnaryTable map;
        Block block;
    };

    explicit BlockMonoid(const ModalRirig& a) {
        UnaryTable id(a.size());
        for (Elem x = 0; x < a.size(); ++x) id[x] = x;
        std::map<UnaryTable, bool> seen;
        seen.emplace(id, true);
        entries_.push_back({id, Block{}});
        // Level by level: a shortest word for a new map is m N with N a
        // shortest word of the previous level; keep the least such word.
        std::size_t level_begin = 0;
        while (level_begin < entries_.size()) {
            const std::size_t level_end = entries_.size();
            std::map<UnaryTable, Block> level;
            for (std::size_t i = level_begin; i < level_end; ++i) {
                for (std::size_t m = 0; m < a.modals.size(); ++m) {
                    UnaryTable next(a.size());
                    for (Elem x = 0; x < a.size(); ++x) next[x] = a.modals[m][entries_[i].map[x]];
                    if (seen.count(next)) continue;
                    Block b;
                    b.word.push_back(m);
                    b.word.insert(b.word.end(), entries_[i].block.word.begin(), entries_[i].block.word.end());
                    auto it = level.find(next);
                    if (it == level.end()) level.emplace(std::move(next), std::move(b));
                    else if (b < it->second) it->second = std::move(b);
                }
            }
            std::vector<Entry> fresh;
            for (auto& [map, block] : level) {
                seen.emplace(map, true);
                fresh.push_back({map, block});
            }
            std::sort(fresh.begin(), fresh.end(), [](const Entry& x, const Entry& y) { return x.block < y.block; });
            for (auto& e : fresh) {
                depth_ = std::max(depth_, e.block.length());
                entries_.push_back(std::move(e));
            }
            level_begin = level_end;
        }
    }

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::size_t depth() const noexcept { return depth_; }

    /// Shortest block M with pred(M(x)), searching words of length <= bound
    /// (all of them when bound is nullopt).
    template <class Pred>
    std::optional<Block> find(Elem x, Pred&& pred, std::optional<std::size_t> bound = std::nullopt) const {
        std::optional<Block> best;
        for (const auto& e : entries_) {
            if (bound && e.block.length() > *bound) continue;
            if (!pred(e.map[x])) continue;
            if (!best || e.block < *best) best = e.block;
        }
        return best;
    }

    /// All values M(x) over the monoid.
    std::vector<Elem> orbit(Elem x) const {
        std::vector<bool> hit;
        std::vector<Elem> out;
        for (const auto& e : entries_) {
            Elem v = e.map[x];
            if (v >= hit.size()) hit.resize(v + 1, false);
            if (!hit[v]) {
                hit[v] = true;
                out.push_back(v);
            }
        }
        return out;
    }

private:
    std::vector<Entry> entries_;
    std::size_t depth_ = 0;
};

}  // namespace ririg
