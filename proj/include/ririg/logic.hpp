#pragma once

// The Hilbert calculus over the ririg signature: axiom schemas and matching,
// proof files and the proof checker, the tau/rho transformers, equational
// consequence over a finite catalog, and local deduction-detachment witnesses.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ririg/parallel.hpp"
#include "ririg/term.hpp"
#include "ririg/varieties.hpp"

namespace ririg {

using Formula = Term;

inline Formula parse_formula(std::string_view text) { return parse_term(text); }

// ---------------------------------------------------------------------------
// Schemas and matching

/// Metavariables phi, psi, chi and one modal metavariable.
struct Substitution {
    std::map<std::string, Formula> formulas;
    std::optional<std::string> modal;

    friend bool operator==(const Substitution&, const Substitution&) = default;
};

inline std::string format_substitution(const Substitution& s) {
    static const char* const order[] = {"phi", "psi", "chi"};
    std::string out;
    for (const char* key : order) {
        auto it = s.formulas.find(key);
        if (it == s.formulas.end()) continue;
        if (!out.empty()) out += ", ";
        out += std::string(key) + " -> " + it->second.to_string();
    }
    if (s.modal) {
        if (!out.empty()) out += ", ";
        out += "m -> " + *s.modal;
    }
    return out;
}

struct Schema {
    std::string id;
    std::vector<Formula> patterns;  ///< alternatives; ax11 has both directions
    bool modal = false;
};

inline const std::vector<Schema>& axiom_schemas() {
    static const std::vector<Schema> schemas = [] {
        auto p = [](const char* s) { return parse_term(s); };
        return std::vector<Schema>{
            {"ax1", {p("phi -> phi")}, false},
            {"ax2", {p("(phi -> psi) -> ((psi -> chi) -> (phi -> chi))")}, false},
            {"ax3", {p("phi * psi -> phi")}, false},
            {"ax4", {p("phi * psi -> psi * phi")}, false},
            {"ax5", {p("(phi * psi -> chi) -> (psi -> (phi -> chi))")}, false},
            {"ax6", {p("(psi -> (phi -> chi)) -> (phi * psi -> chi)")}, false},
            {"ax7", {p("phi -> phi | psi")}, false},
            {"ax8", {p("psi -> phi | psi")}, false},
            {"ax9", {p("phi * (psi | chi) -> phi * psi | phi * chi")}, false},
            {"ax10", {p("bot -> phi")}, false},
            {"ax11", {p("m(top) -> top"), p("top -> m(top)")}, true},
            {"ax12", {p("m(phi -> psi) -> (m(phi) -> m(psi))")}, true},
        };
    }();
    return schemas;
}

inline const Schema& schema_by_id(std::string_view id) {
    for (const auto& s : axiom_schemas())
        if (s.id == id) return s;
    throw PreconditionFailed("unknown axiom schema '" + std::string(id) + "'");
}

namespace detail {

inline bool match_into(const Formula& pat, const Formula& f, Substitution& s) {
    switch (pat.kind()) {
        case Term::Kind::var: {
            auto [it, fresh] = s.formulas.emplace(pat.name(), f);
            return fresh || it->second == f;
        }
        case Term::Kind::zero:
        case Term::Kind::one: return f.kind() == pat.kind();
        case Term::Kind::modal:
            if (f.kind() != Term::Kind::modal) return false;
            if (s.modal && *s.modal != f.name()) return false;
            s.modal = f.name();
            return match_into(pat.arg(), f.arg(), s);
        default:
            return f.kind() == pat.kind() && match_into(pat.lhs(), f.lhs(), s) && match_into(pat.rhs(), f.rhs(), s);
    }
}

}  // namespace detail

/// First-order matching of a formula against an axiom schema.
inline std::optional<Substitution> match_schema(const Formula& f, const Schema& schema) {
    for (const auto& pat : schema.patterns) {
        Substitution s;
        if (detail::match_into(pat, f, s)) return s;
    }
    return std::nullopt;
}

inline std::optional<Substitution> match_schema(const Formula& f, std::string_view id) {
    return match_schema(f, schema_by_id(id));
}

/// Replaces metavariables and the modal metavariable in a schema pattern.
inline Formula instantiate(const Formula& pat, const Substitution& s) {
    switch (pat.kind()) {
        case Term::Kind::var: {
            auto it = s.formulas.find(pat.name());
            if (it == s.formulas.end()) throw PreconditionFailed("no formula for metavariable '" + pat.name() + "'");
            return it->second;
        }
        case Term::Kind::zero:
        case Term::Kind::one: return pat;
        case Term::Kind::modal: {
            if (!s.modal) throw PreconditionFailed("no modal symbol for the modal metavariable");
            return Term::modal(*s.modal, instantiate(pat.arg(), s));
        }
        case Term::Kind::join: return Term::join(instantiate(pat.lhs(), s), instantiate(pat.rhs(), s));
        case Term::Kind::prod: return Term::prod(instantiate(pat.lhs(), s), instantiate(pat.rhs(), s));
        default: return Term::imp(instantiate(pat.lhs(), s), instantiate(pat.rhs(), s));
    }
}

// ---------------------------------------------------------------------------
// Proofs

struct Justification {
    enum class Kind { hyp, axiom, mp, nec, vel } kind = Kind::hyp;
    std::string schema;  ///< axiom id, e.g. "ax5"
    std::string modal;   ///< ax11, ax12 and nec
    std::size_t i = 0;   ///< cited lines, 1-based
    std::size_t j = 0;

    std::string to_string() const {
        switch (kind) {
            case Kind::hyp: return "hyp";
            case Kind::axiom: return modal.empty() ? schema : schema + ":" + modal;
            case Kind::mp: return "mp " + std::to_string(i) + " " + std::to_string(j);
            case Kind::nec: return "nec:" + modal + " " + std::to_string(i);
            default: return "vel " + std::to_string(i) + " " + std::to_string(j);
        }
    }
};

struct ProofLine {
    Formula formula;
    Justification just;
    std::size_t source_line = 0;  ///< line in the proof file, 0 if built in memory
};

struct Proof {
    std::vector<Formula> hypotheses;
    std::vector<ProofLine> lines;

    const Formula& conclusion() const {
        if (lines.empty()) throw PreconditionFailed("empty proof");
        return lines.back().formula;
    }
};

namespace detail {

inline std::size_t parse_index(const std::string& tok, std::size_t line, const char* what) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError(std::string("expected a line number for ") + what + ", got '" + tok + "'", line);
    return static_cast<std::size_t>(std::stoul(tok));
}

inline Formula parse_formula_at(std::string_view text, std::size_t line) {
    try {
        return parse_formula(text);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
    }
}

inline const Schema& schema_by_id_or_throw(const std::string& id, std::size_t line) {
    for (const auto& s : axiom_schemas())
        if (s.id == id) return s;
    throw ParseError("unknown axiom '" + id + "'", line);
}

inline Justification parse_justification(const std::string& text, std::size_t line) {
    std::istringstream in(text);
    std::vector<std::string> toks;
    for (std::string t; in >> t;) toks.push_back(t);
    if (toks.empty()) throw ParseError("missing justification", line);
    Justification j;
    const std::string& head = toks[0];
    auto expect_args = [&](std::size_t k) {
        if (toks.size() != k + 1)
            throw ParseError("'" + head + "' takes " + std::to_string(k) + " line number(s)", line);
    };
    const auto colon = head.find(':');
    const std::string name = head.substr(0, colon);
    const std::string modal = colon == std::string::npos ? "" : head.substr(colon + 1);
    if (name == "hyp") {
        expect_args(0);
        j.kind = Justification::Kind::hyp;
    } else if (name == "mp" || name == "vel") {
        expect_args(2);
        j.kind = name == "mp" ? Justification::Kind::mp : Justification::Kind::vel;
        j.i = parse_index(toks[1], line, name.c_str());
        j.j = parse_index(toks[2], line, name.c_str());
    } else if (name == "nec") {
        if (modal.empty()) throw ParseError("'nec' needs a modal symbol, as in nec:m 3", line);
        expect_args(1);
        j.kind = Justification::Kind::nec;
        j.modal = modal;
        j.i = parse_index(toks[1], line, "nec");
    } else if (name.rfind("ax", 0) == 0) {
        expect_args(0);
        const auto& schema = schema_by_id_or_throw(name, line);
        if (schema.modal && modal.empty()) throw ParseError("'" + name + "' needs a modal symbol, as in " + name + ":m", line);
        if (!schema.modal && !modal.empty()) throw ParseError("'" + name + "' takes no modal symbol", line);
        j.kind = Justification::Kind::axiom;
        j.schema = name;
        j.modal = modal;
    } else {
        throw ParseError("unknown justification '" + head + "'", line);
    }
    if (!modal.empty() && !ModalSignature::valid_name(modal)) throw ParseError("bad modal symbol '" + modal + "'", line);
    return j;
}

}  // namespace detail

/// Proof file syntax: `assume: <formula>` headers, then `<idx>. <formula> ;
/// <justification>` with consecutive indices from 1. `#` starts a comment.
inline Proof parse_proof(std::string_view text) {
    Proof p;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string line = detail::trim(raw);
        if (line.empty()) continue;
        if (line.rfind("assume:", 0) == 0) {
            if (!p.lines.empty()) throw ParseError("'assume:' after the first proof line", line_no);
            p.hypotheses.push_back(detail::parse_formula_at(line.substr(7), line_no));
            continue;
        }
        const auto dot = line.find('.');
        if (dot == std::string::npos) throw ParseError("expected '<index>. <formula> ; <justification>'", line_no);
        const auto idx = detail::parse_index(detail::trim(line.substr(0, dot)), line_no, "the step index");
        if (idx != p.lines.size() + 1)
            throw ParseError("step index " + std::to_string(idx) + " out of sequence, expected " +
                                 std::to_string(p.lines.size() + 1),
                             line_no);
        const auto semi = line.rfind(';');
        if (semi == std::string::npos || semi < dot) throw ParseError("missing ';' before the justification", line_no);
        ProofLine pl;
        pl.formula = detail::parse_formula_at(line.substr(dot + 1, semi - dot - 1), line_no);
        pl.just = detail::parse_justification(line.substr(semi + 1), line_no);
        pl.source_line = line_no;
        p.lines.push_back(std::move(pl));
    }
    if (p.lines.empty()) throw ParseError("proof has no steps");
    return p;
}

inline std::string format_proof(const Proof& p) {
    std::string out;
    for (const auto& h : p.hypotheses) out += "assume: " + h.to_string() + "\n";
    for (std::size_t i = 0; i < p.lines.size(); ++i)
        out += std::to_string(i + 1) + ". " + p.lines[i].formula.to_string() + " ; " + p.lines[i].just.to_string() + "\n";
    return out;
}

struct ProofCheck {
    bool ok = true;
    std::optional<std::size_t> bad_line;  ///< 1-based step index
    std::string reason;
    std::vector<std::optional<Substitution>> substitutions;  ///< per step, for axiom steps
};

/// Validates every step against Gamma (hypotheses) and the axioms and rules.
inline ProofCheck check_proof(const std::vector<Formula>& gamma, const Proof& proof) {
    ProofCheck r;
    auto fail = [&](std::size_t k, std::string why) {
        r.ok = false;
        r.bad_line = k + 1;
        r.reason = std::move(why);
        return r;
    };
    if (proof.lines.empty()) {
        r.ok = false;
        r.reason = "empty proof";
        return r;
    }
    for (std::size_t k = 0; k < proof.lines.size(); ++k) {
        const auto& line = proof.lines[k];
        const auto& f = line.formula;
        const auto& j = line.just;
        auto cited = [&](std::size_t idx) -> const Formula* {
            if (idx == 0 || idx > k) return nullptr;
            return &proof.lines[idx - 1].formula;
        };
        std::optional<Substitution> subst;
        switch (j.kind) {
            case Justification::Kind::hyp:
                if (std::find(gamma.begin(), gamma.end(), f) == gamma.end()) return fail(k, "hypothesis not assumed");
                break;
            case Justification::Kind::axiom: {
                const auto& schema = schema_by_id(j.schema);
                subst = match_schema(f, schema);
                if (!subst) return fail(k, "not an instance of " + j.schema);
                if (schema.modal && subst->modal != j.modal)
                    return fail(k, "axiom modal mismatch: formula uses " + subst->modal.value_or("?") + ", step names " + j.modal);
                break;
            }
            case Justification::Kind::mp: {
                const Formula* major = cited(j.i);
                const Formula* minor = cited(j.j);
                if (!major || !minor) return fail(k, "cited line out of range");
                if (major->kind() != Term::Kind::imp) return fail(k, "major premise shape");
                if (!(major->lhs() == *minor)) return fail(k, "minor premise mismatch");
                if (!(major->rhs() == f)) return fail(k, "conclusion mismatch");
                break;
            }
            case Justification::Kind::nec: {
                const Formula* prem = cited(j.i);
                if (!prem) return fail(k, "cited line out of range");
                if (!(f == Term::modal(j.modal, *prem))) return fail(k, "necessitation shape");
                break;
            }
            case Justification::Kind::vel: {
                const Formula* left = cited(j.i);
                const Formula* right = cited(j.j);
                if (!left || !right) return fail(k, "cited line out of range");
                if (left->kind() != Term::Kind::imp || right->kind() != Term::Kind::imp)
                    return fail(k, "join elimination premise shape");
                if (!(left->rhs() == right->rhs())) return fail(k, "join elimination premises disagree on the consequent");
                if (!(f == Term::imp(Term::join(left->lhs(), right->lhs()), left->rhs())))
                    return fail(k, "join elimination conclusion mismatch");
                break;
            }
        }
        r.substitutions.push_back(std::move(subst));
    }
    return r;
}

inline ProofCheck check_proof(const Proof& proof) { return check_proof(proof.hypotheses, proof); }

// ---------------------------------------------------------------------------
// Transformers

inline std::vector<Equation> tau(const Formula& f) { return {Equation{f, Term::one()}}; }

inline std::vector<Formula> rho(const Equation& e) { return {Term::imp(e.lhs, e.rhs), Term::imp(e.rhs, e.lhs)}; }

// ---------------------------------------------------------------------------
// Equational consequence over a finite catalog

struct Countermodel {
    std::size_t algebra = 0;  ///< index into the catalog
    Valuation valuation;
};

struct EntailmentResult {
    bool entails = true;
    std::optional<Countermodel> countermodel;
    std::size_t algebras_checked = 0;
    std::size_t valuations_checked = 0;
    /// Agreement on a finite catalog refutes but never proves consequence in the whole variety.
    static constexpr const char* scope_note =
        "consequence relative to the finite catalog: a countermodel refutes entailment, agreement does not prove it";
};

/// Every modal symbol used must be interpreted by every catalog algebra.
inline void require_signature(const std::vector<ModalRirig>& catalog, const std::set<std::string>& used) {
    for (std::size_t i = 0; i < catalog.size(); ++i)
        for (const auto& name : used)
            if (!catalog[i].sig.index_of(name))
                throw SignatureMismatch("catalog algebra " + std::to_string(i) + " has no modal symbol '" + name + "'");
}

/// Theta |= goal over the catalog: every valuation (into every algebra) that
/// satisfies all of Theta satisfies the goal. The countermodel reported is
/// the first in (algebra index, lexicographic valuation) order.
inline EntailmentResult semantic_entails(const std::vector<ModalRirig>& catalog, const std::vector<Equation>& theta,
                                         const Equation& goal, std::size_t valuation_cap = default_valuation_cap,
                                         std::size_t jobs = 1) {
    std::set<std::string> used = goal.lhs.modal_names();
    for (const auto& name : goal.rhs.modal_names()) used.insert(name);
    std::vector<std::string> vars = goal.variables();
    for (const auto& e : theta) {
        for (const auto& side : {e.lhs, e.rhs}) {
            auto m = side.modal_names();
            used.insert(m.begin(), m.end());
        }
        auto v = e.variables();
        vars.insert(vars.end(), v.begin(), v.end());
    }
    std::sort(vars.begin(), vars.end(), &Term::variable_less);
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    require_signature(catalog, used);
    for (const auto& a : catalog) require_valuation_budget(a.size(), vars.size(), valuation_cap);

    struct PerAlgebra {
        std::optional<Valuation> counter;
        std::size_t checked = 0;
    };
    auto scan = [&](std::size_t idx) {
        const auto& a = catalog[idx];
        std::vector<std::pair<CompiledTerm, CompiledTerm>> prem;
        for (const auto& e : theta) prem.emplace_back(CompiledTerm(e.lhs, vars, a), CompiledTerm(e.rhs, vars, a));
        const CompiledTerm gl(goal.lhs, vars, a), gr(goal.rhs, vars, a);
        PerAlgebra out;
        for_each_valuation(a.size(), vars.size(), [&](std::span<const Elem> v) {
            ++out.checked;
            for (const auto& [l, r] : prem)
                if (l.eval(v) != r.eval(v)) return true;
            if (gl.eval(v) == gr.eval(v)) return true;
            Valuation cv;
            for (std::size_t i = 0; i < vars.size(); ++i) cv[vars[i]] = v[i];
            out.counter = std::move(cv);
            return false;
        });
        return out;
    };
    const auto results = parallel_map<PerAlgebra>(catalog.size(), jobs, scan);
    EntailmentResult r;
    for (std::size_t i = 0; i < results.size(); ++i) {
        ++r.algebras_checked;
        r.valuations_checked += results[i].checked;
        if (results[i].counter) {
            r.entails = false;
            r.countermodel = Countermodel{i, *results[i].counter};
            break;
        }
    }
    return r;
}

/// tau[Gamma] |= tau(phi) over the catalog.
inline EntailmentResult semantic_consequence(const std::vector<ModalRirig>& catalog, const std::vector<Formula>& gamma,
                                             const Formula& phi, std::size_t valuation_cap = default_valuation_cap,
                                             std::size_t jobs = 1) {
    std::vector<Equation> theta;
    for (const auto& g : gamma) {
        auto t = tau(g);
        theta.insert(theta.end(), t.begin(), t.end());
    }
    return semantic_entails(catalog, theta, tau(phi).front(), valuation_cap, jobs);
}

struct SoundnessReport {
    ProofCheck check;
    EntailmentResult semantics;
    bool sound() const noexcept { return check.ok && semantics.entails; }
};

/// Checks the proof, then confirms tau[Gamma] |= tau(conclusion) on the catalog.
/// A failure of the second step after the first succeeded is a bug certificate.
inline SoundnessReport soundness_check(const std::vector<Formula>& gamma, const Proof& proof,
                                       const std::vector<ModalRirig>& catalog,
                                       std::size_t valuation_cap = default_valuation_cap, std::size_t jobs = 1) {
    SoundnessReport r;
    r.check = check_proof(gamma, proof);
    if (!r.check.ok)
        throw PreconditionFailed("soundness_check: proof does not check at step " +
                                 std::to_string(r.check.bad_line.value_or(0)) + ": " + r.check.reason);
    r.semantics = semantic_consequence(catalog, gamma, proof.conclusion(), valuation_cap, jobs);
    return r;
}

// ---------------------------------------------------------------------------
// Local deduction-detachment witnesses

struct LddtBounds {
    std::size_t block_len = 2;
    std::size_t product = 2;
    std::size_t lambda_exponent = 4;
};

struct LddtWitness {
    std::vector<std::pair<Block, Formula>> factors;  ///< block route
    std::optional<std::size_t> exponent;             ///< lambda route
    std::vector<Formula> lambda_factors;             ///< lambda route: the psi_j
    Formula formula;                                 ///< prod_j M_j(psi_j) -> psi
    EntailmentResult certificate;
    std::optional<ProofCheck> attached_proof;
};

/// Modal symbols interpreted by every catalog algebra, in the first algebra's order.
inline ModalSignature common_signature(const std::vector<ModalRirig>& catalog) {
    if (catalog.empty()) return ModalSignature{};
    std::vector<std::string> names;
    for (const auto& name : catalog.front().sig.names()) {
        bool everywhere = std::all_of(catalog.begin(), catalog.end(),
                                      [&](const ModalRirig& a) { return a.sig.index_of(name).has_value(); });
        if (everywhere) names.push_back(name);
    }
    return ModalSignature(std::move(names));
}

inline Formula apply_block_formula(const ModalSignature& sig, const Block& b, Formula f) {
    for (std::size_t i = b.word.size(); i-- > 0;) f = Term::modal(sig[b.word[i]], f);
    return f;
}

/// lambda(f) = f * m_1(f) * ... * m_k(f) as a formula.
inline Formula lambda_formula(const ModalSignature& sig, const Formula& f) {
    Formula out = f;
    for (const auto& name : sig.names()) out = Term::prod(out, Term::modal(name, f));
    return out;
}

inline Formula lambda_power_formula(const ModalSignature& sig, std::size_t l, Formula f) {
    for (std::size_t i = 0; i < l; ++i) f = lambda_formula(sig, f);
    return f;
}

inline Formula product_formula(const std::vector<Formula>& factors) {
    if (factors.empty()) return Term::one();
    Formula out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = Term::prod(out, factors[i]);
    return out;
}

namespace detail {

/// Nondecreasing index sequences of length `len` over [0, choices), lexicographic.
template <class F>
bool for_each_multiset(std::size_t choices, std::size_t len, F&& f) {
    if (len == 0) return f(std::vector<std::size_t>{});
    if (choices == 0) return true;
    std::vector<std::size_t> idx(len, 0);
    while (true) {
        if (!f(idx)) return false;
        std::size_t i = len;
        while (true) {
            if (i == 0) return true;
            --i;
            if (idx[i] + 1 < choices) break;
        }
        ++idx[i];
        for (std::size_t t = i + 1; t < len; ++t) idx[t] = idx[i];
    }
}

inline void attach_proof(LddtWitness& w, const std::vector<Formula>& gamma, const std::optional<Proof>& proof) {
    if (!proof) return;
    auto check = check_proof(gamma, *proof);
    if (check.ok && !(proof->conclusion() == w.formula)) {
        check.ok = false;
        check.bad_line = proof->lines.size();
        check.reason = "attached proof does not conclude the witness formula";
    }
    w.attached_proof = std::move(check);
}

}  // namespace detail

/// Searches for blocks M_j and psi_j in Delta with tau[Gamma] |= tau(prod_j
/// M_j(psi_j) -> psi) over the catalog, by product size, then by the
/// (block, Delta index) sequence. Nullopt means nothing within the bounds,
/// which is not a disproof.
inline std::optional<LddtWitness> lddt_witness(const std::vector<Formula>& gamma, const std::vector<Formula>& delta,
                                               const Formula& psi, const std::vector<ModalRirig>& catalog,
                                               const LddtBounds& bounds = {},
                                               const std::optional<Proof>& proof = std::nullopt,
                                               std::size_t valuation_cap = default_valuation_cap) {
    const ModalSignature sig = common_signature(catalog);
    const auto blocks = enumerate_blocks(sig, bounds.block_len);
    std::vector<std::pair<Block, std::size_t>> atoms;  // (block, Delta index)
    for (const auto& b : blocks)
        for (std::size_t d = 0; d < delta.size(); ++d) atoms.emplace_back(b, d);
    std::optional<LddtWitness> found;
    for (std::size_t len = 0; len <= bounds.product && !found; ++len) {
        detail::for_each_multiset(atoms.size(), len, [&](const std::vector<std::size_t>& pick) {
            std::vector<Formula> factors;
            for (std::size_t i : pick) factors.push_back(apply_block_formula(sig, atoms[i].first, delta[atoms[i].second]));
            const Formula f = Term::imp(product_formula(factors), psi);
            auto res = semantic_consequence(catalog, gamma, f, valuation_cap);
            if (!res.entails) return true;
            LddtWitness w;
            for (std::size_t i : pick) w.factors.emplace_back(atoms[i].first, delta[atoms[i].second]);
            w.formula = f;
            w.certificate = std::move(res);
            found = std::move(w);
            return false;
        });
    }
    if (found) detail::attach_proof(*found, gamma, proof);
    return found;
}

/// Lambda route: the least exponent l (then product size, then Delta
/// sequence) with tau[Gamma] |= tau(prod_j lambda^l(psi_j) -> psi).
inline std::optional<LddtWitness> lddt_witness_lambda(const std::vector<Formula>& gamma,
                                                      const std::vector<Formula>& delta, const Formula& psi,
                                                      const std::vector<ModalRirig>& catalog,
                                                      const LddtBounds& bounds = {},
                                                      const std::optional<Proof>& proof = std::nullopt,
                                                      std::size_t valuation_cap = default_valuation_cap) {
    const ModalSignature sig = common_signature(catalog);
    std::optional<LddtWitness> found;
    for (std::size_t l = 0; l <= bounds.lambda_exponent && !found; ++l) {
        for (std::size_t len = 0; len <= bounds.product && !found; ++len) {
            detail::for_each_multiset(delta.size(), len, [&](const std::vector<std::size_t>& pick) {
                std::vector<Formula> factors;
                for (std::size_t i : pick) factors.push_back(lambda_power_formula(sig, l, delta[i]));
                const Formula f = Term::imp(product_formula(factors), psi);
                auto res = semantic_consequence(catalog, gamma, f, valuation_cap);
                if (!res.entails) return true;
                LddtWitness w;
                w.exponent = l;
                for (std::size_t i : pick) w.lambda_factors.push_back(delta[i]);
                w.formula = f;
                w.certificate = std::move(res);
                found = std::move(w);
                return false;
            });
        }
    }
    if (found) detail::attach_proof(*found, gamma, proof);
    return found;
}

}  // namespace ririg
