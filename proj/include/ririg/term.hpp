#pragma once

// Terms over {|, *, ->, 0, 1, modal symbols} with named variables. The same
// trees serve as equation sides and as formulas of the Hilbert calculus.
//
// Concrete syntax: `|` join, `*` product, `->` implication (right
// associative), constants `0` `1`, `bot` for 0, `top` for `0 -> 0`, modal
// application `m(t)`, any other identifier is a variable. Binding strength:
// modal > `*` > `|` > `->`.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ririg/modal.hpp"

namespace ririg {

class Term {
public:
    enum class Kind { zero, one, var, join, prod, imp, modal };

    Term() : Term(zero()) {}

    static Term zero() { return Term(std::make_shared<Node>(Node{Kind::zero, {}, nullptr, nullptr})); }
    static Term one() { return Term(std::make_shared<Node>(Node{Kind::one, {}, nullptr, nullptr})); }
    static Term var(std::string name) {
        return Term(std::make_shared<Node>(Node{Kind::var, std::move(name), nullptr, nullptr}));
    }
    static Term join(const Term& a, const Term& b) { return binary(Kind::join, a, b); }
    static Term prod(const Term& a, const Term& b) { return binary(Kind::prod, a, b); }
    static Term imp(const Term& a, const Term& b) { return binary(Kind::imp, a, b); }
    static Term modal(std::string name, const Term& a) {
        return Term(std::make_shared<Node>(Node{Kind::modal, std::move(name), a.node_, nullptr}));
    }
    /// The derived constant 0 -> 0.
    static Term top() { return imp(zero(), zero()); }

    Kind kind() const noexcept { return node_->kind; }
    const std::string& name() const noexcept { return node_->name; }
    bool is_binary() const noexcept {
        return node_->kind == Kind::join || node_->kind == Kind::prod || node_->kind == Kind::imp;
    }
    Term lhs() const { return Term(node_->lhs); }
    Term rhs() const { return Term(node_->rhs); }
    /// Operand of a modal node.
    Term arg() const { return Term(node_->lhs); }

    std::size_t size() const {
        std::size_t s = 1;
        if (node_->lhs) s += lhs().size();
        if (node_->rhs) s += rhs().size();
        return s;
    }

    friend bool operator==(const Term& a, const Term& b) { return equal(a.node_.get(), b.node_.get()); }

    /// Variables in canonical order (see `variable_less`).
    std::vector<std::string> variables() const {
        std::set<std::string, decltype(&variable_less)> acc(&variable_less);
        collect_vars(node_.get(), acc);
        return {acc.begin(), acc.end()};
    }

    std::set<std::string> modal_names() const {
        std::set<std::string> acc;
        collect_modals(node_.get(), acc);
        return acc;
    }

    std::string to_string() const { return render(node_.get(), 0); }

    /// Canonical variable order: identifier prefix, then numeric suffix
    /// value, then the full spelling (so v2 < v10 and p < q).
    static bool variable_less(const std::string& a, const std::string& b) {
        auto split = [](const std::string& s) {
            std::size_t i = s.size();
            while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
            std::string digits = s.substr(i);
            while (digits.size() > 1 && digits[0] == '0') digits.erase(0, 1);
            return std::make_pair(s.substr(0, i), digits);
        };
        auto [pa, da] = split(a);
        auto [pb, db] = split(b);
        if (pa != pb) return pa < pb;
        if (da.size() != db.size()) return da.size() < db.size();
        if (da != db) return da < db;
        return a < b;
    }

private:
    struct Node {
        Kind kind;
        std::string name;
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
    };

    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static Term binary(Kind k, const Term& a, const Term& b) {
        return Term(std::make_shared<Node>(Node{k, {}, a.node_, b.node_}));
    }

    static bool equal(const Node* a, const Node* b) {
        if (a == b) return true;
        if (!a || !b) return false;
        if (a->kind != b->kind || a->name != b->name) return false;
        return equal(a->lhs.get(), b->lhs.get()) && equal(a->rhs.get(), b->rhs.get());
    }

    template <class Set>
    static void collect_vars(const Node* n, Set& acc) {
        if (!n) return;
        if (n->kind == Kind::var) acc.insert(n->name);
        collect_vars(n->lhs.get(), acc);
        collect_vars(n->rhs.get(), acc);
    }

    static void collect_modals(const Node* n, std::set<std::string>& acc) {
        if (!n) return;
        if (n->kind == Kind::modal) acc.insert(n->name);
        collect_modals(n->lhs.get(), acc);
        collect_modals(n->rhs.get(), acc);
    }

    // Precedence levels: 1 ->, 2 |, 3 *, 4 atoms and modal applications.
    static int level(Kind k) {
        switch (k) {
            case Kind::imp: return 1;
            case Kind::join: return 2;
            case Kind::prod: return 3;
            default: return 4;
        }
    }

    static std::string render(const Node* n, int context) {
        std::string s;
        switch (n->kind) {
            case Kind::zero: return "0";
            case Kind::one: return "1";
            case Kind::var: return n->name;
            case Kind::modal: return n->name + "(" + render(n->lhs.get(), 0) + ")";
            case Kind::imp:
                s = render(n->lhs.get(), 2) + " -> " + render(n->rhs.get(), 1);
                break;
            case Kind::join:
                s = render(n->lhs.get(), 2) + " | " + render(n->rhs.get(), 3);
                break;
            case Kind::prod:
                s = render(n->lhs.get(), 3) + " * " + render(n->rhs.get(), 4);
                break;
        }
        return level(n->kind) < context ? "(" + s + ")" : s;
    }

    std::shared_ptr<const Node> node_;
};

struct Equation {
    Term lhs;
    Term rhs;

    std::vector<std::string> variables() const {
        auto v = lhs.variables();
        auto w = rhs.variables();
        v.insert(v.end(), w.begin(), w.end());
        std::sort(v.begin(), v.end(), &Term::variable_less);
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    std::string to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }

    friend bool operator==(const Equation& a, const Equation& b) { return a.lhs == b.lhs && a.rhs == b.rhs; }
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

class TermParser {
public:
    explicit TermParser(std::string_view text) : text_(text) {}

    Term parse_all() {
        Term t = parse_imp();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return t;
    }

    Term parse_imp() {
        Term lhs = parse_join();
        if (eat("->")) return Term::imp(lhs, parse_imp());
        return lhs;
    }

    std::size_t pos() const { return pos_; }
    std::string_view text() const { return text_; }

private:
    Term parse_join() {
        Term t = parse_prod();
        while (eat("|")) t = Term::join(t, parse_prod());
        return t;
    }

    Term parse_prod() {
        Term t = parse_atom();
        while (eat("*")) t = Term::prod(t, parse_atom());
        return t;
    }

    Term parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Term t = parse_imp();
            if (!eat(")")) fail("expected ')'");
            return t;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            if (pos_ < text_.size() && is_ident_char(text_[pos_])) fail("malformed constant");
            return c == '0' ? Term::zero() : Term::one();
        }
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            std::string id(text_.substr(start, pos_ - start));
            if (id == "bot") return Term::zero();
            if (id == "top") return Term::top();
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '(') {
                ++pos_;
                Term arg = parse_imp();
                if (!eat(")")) fail("expected ')' closing modal application");
                return Term::modal(std::move(id), arg);
            }
            return Term::var(std::move(id));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    bool eat(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at column " + std::to_string(pos_ + 1), 0, 0);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Term parse_term(std::string_view text) { return detail::TermParser(text).parse_all(); }

/// "lhs = rhs".
inline Equation parse_equation(std::string_view text) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ParseError("equation needs '='");
    if (text.find('=', eq + 1) != std::string_view::npos) throw ParseError("equation has more than one '='");
    return {parse_term(text.substr(0, eq)), parse_term(text.substr(eq + 1))};
}

// ---------------------------------------------------------------------------
// Evaluation

using Valuation = std::map<std::string, Elem>;

/// A term flattened to postfix code with variables and modal symbols
/// resolved against a fixed variable list and algebra.
class CompiledTerm {
public:
    CompiledTerm(const Term& t, const std::vector<std::string>& vars, const ModalRirig& a) : alg_(&a) {
        emit(t, vars);
    }

    Elem eval(std::span<const Elem> values) const {
        std::array<Elem, 64> small{};
        std::vector<Elem> big;
        Elem* stack = small.data();
        if (max_depth_ > small.size()) {
            big.resize(max_depth_);
            stack = big.data();
        }
        std::size_t sp = 0;
        const auto& a = *alg_;
        for (const auto& op : code_) {
            switch (op.code) {
                case Op::constant: stack[sp++] = static_cast<Elem>(op.arg); break;
                case Op::variable: stack[sp++] = values[op.arg]; break;
                case Op::join: --sp; stack[sp - 1] = a.join(stack[sp - 1], stack[sp]); break;
                case Op::prod: --sp; stack[sp - 1] = a.prod(stack[sp - 1], stack[sp]); break;
                case Op::imp: --sp; stack[sp - 1] = a.imp(stack[sp - 1], stack[sp]); break;
                case Op::modal: stack[sp - 1] = a.modals[op.arg][stack[sp - 1]]; break;
            }
        }
        return stack[0];
    }

private:
    struct Op {
        enum Code { constant, variable, join, prod, imp, modal } code;
        std::size_t arg;
    };

    void emit(const Term& t, const std::vector<std::string>& vars) {
        switch (t.kind()) {
            case Term::Kind::zero: push({Op::constant, alg_->zero()}, 1); return;
            case Term::Kind::one: push({Op::constant, alg_->one()}, 1); return;
            case Term::Kind::var: {
                auto it = std::find(vars.begin(), vars.end(), t.name());
                if (it == vars.end()) throw PreconditionFailed("unbound variable '" + t.name() + "'");
                push({Op::variable, static_cast<std::size_t>(it - vars.begin())}, 1);
                return;
            }
            case Term::Kind::modal:
                emit(t.arg(), vars);
                push({Op::modal, alg_->modal_index(t.name())}, 0);
                return;
            default: {
                emit(t.lhs(), vars);
                emit(t.rhs(), vars);
                Op::Code c = t.kind() == Term::Kind::join ? Op::join : t.kind() == Term::Kind::prod ? Op::prod : Op::imp;
                push({c, 0}, -1);
            }
        }
    }

    void push(Op op, int delta) {
        code_.push_back(op);
        depth_ += delta;
        max_depth_ = std::max(max_depth_, static_cast<std::size_t>(depth_));
    }

    const ModalRirig* alg_;
    std::vector<Op> code_;
    long depth_ = 0;
    std::size_t max_depth_ = 0;
};

/// Homomorphic evaluation. Throws on unbound variables and unknown modal symbols.
inline Elem eval_term(const ModalRirig& a, const Valuation& v, const Term& t) {
    std::vector<std::string> vars;
    std::vector<Elem> values;
    for (const auto& [name, e] : v) {
        if (e >= a.size()) throw ShapeError("valuation of '" + name + "' out of range");
        vars.push_back(name);
        values.push_back(e);
    }
    return CompiledTerm(t, vars, a).eval(values);
}

/// Odometer over all n^k valuations in lexicographic order (first variable
/// most significant). Calls f(values) until it returns false.
template <class F>
void for_each_valuation(std::size_t n, std::size_t k, F&& f) {
    std::vector<Elem> vals(k, 0);
    while (true) {
        if (!f(std::span<const Elem>(vals))) return;
        std::size_t i = k;
        while (true) {
            if (i == 0) return;
            --i;
            if (++vals[i] < n) break;
            vals[i] = 0;
        }
    }
}

/// Random term over the given variables and modal names; `depth` bounds the
/// tree height. Deterministic for a given engine state.
inline Term random_term(std::mt19937_64& rng, const std::vector<std::string>& vars,
                        const std::vector<std::string>& modal_names, std::size_t depth) {
    auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
    if (depth == 0 || pick(4) == 0) {
        const std::size_t leaves = vars.size() + 2;
        const std::size_t r = pick(leaves + vars.size());  // bias toward variables
        if (r < 2 && pick(3) == 0) return r == 0 ? Term::zero() : Term::one();
        if (vars.empty()) return pick(2) ? Term::one() : Term::zero();
        return Term::var(vars[r % vars.size()]);
    }
    const std::size_t shapes = modal_names.empty() ? 3 : 4;
    switch (pick(shapes)) {
        case 0: return Term::join(random_term(rng, vars, modal_names, depth - 1), random_term(rng, vars, modal_names, depth - 1));
        case 1: return Term::prod(random_term(rng, vars, modal_names, depth - 1), random_term(rng, vars, modal_names, depth - 1));
        case 2: return Term::imp(random_term(rng, vars, modal_names, depth - 1), random_term(rng, vars, modal_names, depth - 1));
        default: return Term::modal(modal_names[pick(modal_names.size())], random_term(rng, vars, modal_names, depth - 1));
    }
}

}  // namespace ririg
