#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "ririg/ririg.hpp"

namespace ririg::cli {
namespace {

// ---------------------------------------------------------------------------
// Shared state and formatting

struct Settings {
    bool json = false;
    std::size_t jobs = 1;
    std::string seed = "0x161";
    std::optional<std::size_t> index;
    std::optional<std::string> verify;
    std::size_t valuation_cap = default_valuation_cap;
};

struct Io {
    std::ostream& out;
    std::ostream& err;
    const Settings& s;
};

std::string elem(const ModalRirig& a, Elem x) { return a.label(x); }

std::string join_strings(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::vector<std::string> labels_of(const ModalRirig& a, const std::vector<Elem>& xs) {
    std::vector<std::string> out;
    for (Elem x : xs) out.push_back(elem(a, x));
    return out;
}

std::string set_text(const ModalRirig& a, const SubsetMask& s) {
    return "{" + join_strings(labels_of(a, s.elements()), ", ") + "}";
}

std::string tuple_text(const ModalRirig& a, const std::vector<Elem>& xs) {
    return "(" + join_strings(labels_of(a, xs), ", ") + ")";
}

/// Compact list for witnesses: "a,b,1".
std::string list_token(const ModalRirig& a, const std::vector<Elem>& xs) { return join_strings(labels_of(a, xs), ","); }

std::string classes_text(const ModalRirig& a, const Congruence& c) {
    std::string out;
    for (const auto& cls : c.classes()) out += "{" + join_strings(labels_of(a, cls), ", ") + "}";
    return out;
}

ojson classes_json(const ModalRirig& a, const Congruence& c) {
    ojson out = ojson::array();
    for (const auto& cls : c.classes()) out.push_back(labels_of(a, cls));
    return out;
}

std::string blocks_text(const ModalRirig& a, const std::optional<std::vector<Block>>& bs) {
    if (!bs) return "none";
    std::vector<std::string> parts;
    for (const auto& b : *bs) parts.push_back(format_block(a.sig, b));
    return join_strings(parts, " * ");
}

ojson blocks_json(const ModalRirig& a, const std::optional<std::vector<Block>>& bs) {
    if (!bs) return nullptr;
    ojson out = ojson::array();
    for (const auto& b : *bs) out.push_back(format_block(a.sig, b));
    return out;
}

ojson reach_json(const ModalRirig& a, const SimplicityWitness& w) {
    ojson j = {{"element", elem(a, w.element)}};
    j["blocks"] = blocks_json(a, w.blocks);
    j["exponent"] = w.exponent ? ojson(*w.exponent) : ojson(nullptr);
    j["power"] = w.power ? ojson(*w.power) : ojson(nullptr);
    return j;
}

std::string lambda_text(const SimplicityWitness& w, const char* rel) {
    if (!w.exponent) return "";
    std::string out = ", lambda^" + std::to_string(*w.exponent) + "(x)";
    if (w.power && *w.power > 1) out += " to the power " + std::to_string(*w.power);
    return out + " " + rel;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(detail::trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(detail::trim(cur));
    return out;
}

Elem parse_elem(const ModalRirig& a, const std::string& token) {
    auto e = find_element(a.base, detail::trim(token));
    if (!e) throw ParseError("unknown element '" + detail::trim(token) + "'");
    return *e;
}

std::vector<Elem> parse_elems(const ModalRirig& a, const std::string& text) {
    std::vector<Elem> out;
    if (detail::trim(text).empty()) return out;
    for (const auto& tok : split(text, ',')) out.push_back(parse_elem(a, tok));
    return out;
}

std::uint64_t parse_seed(const std::string& text) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(text, &used, 0);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError("invalid seed '" + text + "'");
    }
}

void emit(const Io& io, const ojson& doc) { io.out << doc.dump(2) << "\n"; }

void print_witness(const Io& io, const std::string& w) {
    io.out << "witness: " << w << "\n";
    io.out << "replay: add --verify-witness '" << w << "'\n";
}

int verdict(const Io& io, bool confirmed, const std::string& what) {
    if (io.s.json) {
        ojson doc;
        doc["witness_confirmed"] = confirmed;
        doc["detail"] = what;
        emit(io, doc);
    } else {
        io.out << (confirmed ? "witness confirmed: " : "witness NOT confirmed: ") << what << "\n";
    }
    return confirmed ? Exit::ok : Exit::fails;
}

// ---------------------------------------------------------------------------
// Inputs

std::vector<ModalRirig> load_any(const std::string& path) {
    const std::string text = read_file(path);
    if (is_catalog_text(text)) return catalog_load(path).algebras();
    return {load_algebra(path)};
}

std::vector<std::pair<std::size_t, ModalRirig>> load_selected(const std::string& path, const Settings& s,
                                                              bool allow_all) {
    auto all = load_any(path);
    std::vector<std::pair<std::size_t, ModalRirig>> out;
    if (s.index) {
        if (*s.index >= all.size())
            throw ParseError(path + ": --index " + std::to_string(*s.index) + " out of range (" +
                             std::to_string(all.size()) + " algebras)");
        out.emplace_back(*s.index, all[*s.index]);
        return out;
    }
    if (all.size() != 1 && !allow_all)
        throw ParseError(path + ": holds " + std::to_string(all.size()) + " algebras; pick one with --index");
    for (std::size_t i = 0; i < all.size(); ++i) out.emplace_back(i, std::move(all[i]));
    return out;
}

ModalRirig load_one(const std::string& path, const Settings& s) { return load_selected(path, s, false).front().second; }

void require_valid(const ModalRirig& a) {
    const auto r = validate_ririg(a.base);
    const auto m = validate_modal(a);
    const AxiomFailure* f = !r.passed() ? &r.failures.front() : !m.passed() ? &m.failures.front() : nullptr;
    if (f)
        throw PreconditionFailed("input is not an I-modal ririg: " + f->axiom + " fails at " + tuple_text(a, f->witness) +
                                 " (see the check command)");
}

std::vector<ModalRirig> load_catalogs(const std::vector<std::string>& paths) {
    std::vector<std::string> use = paths;
    if (use.empty()) {
        if (const char* env = std::getenv(catalog_env); env && *env) use.emplace_back(env);
    }
    if (use.empty()) throw ParseError(std::string("no catalog given: pass --catalog or set ") + catalog_env);
    std::vector<ModalRirig> out;
    for (const auto& p : use) {
        auto more = load_any(p);
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

/// Formula or equation: text with '=' is an equation, otherwise tau of a formula.
Equation parse_claim(const std::string& text) {
    if (text.find('=') != std::string::npos) return parse_equation(text);
    return tau(parse_formula(text)).front();
}

// ---------------------------------------------------------------------------
// check

int cmd_check(const Io& io, const std::string& path) {
    const ModalRirig a = load_one(path, io.s);
    if (io.s.verify) {
        const auto at = io.s.verify->rfind('@');
        if (at == std::string::npos) throw ParseError("witness must look like '<axiom>@<elements>'");
        const std::string name = io.s.verify->substr(0, at);
        const auto tuple = parse_elems(a, io.s.verify->substr(at + 1));
        auto res = axiom_holds_at(a.base, name, tuple);
        if (!res) res = modal_axiom_holds_at(a, name, tuple);
        if (!res) throw ParseError("witness does not name an axiom of this algebra with a fitting tuple");
        return verdict(io, !*res, name + " at " + tuple_text(a, tuple));
    }
    const auto base = validate_ririg(a.base);
    const auto modal = validate_modal(a);
    auto modal_failures = [&](const std::string& m) {
        std::vector<const AxiomFailure*> out;
        for (const auto& f : modal.failures)
            if (f.axiom.rfind(m + "(", 0) == 0) out.push_back(&f);
        return out;
    };
    const AxiomFailure* first = !base.passed() ? &base.failures.front() : !modal.passed() ? &modal.failures.front() : nullptr;
    const std::string witness = first ? first->axiom + "@" + list_token(a, first->witness) : "";
    if (io.s.json) {
        auto failures = [&](const std::vector<AxiomFailure>& fs) {
            ojson arr = ojson::array();
            for (const auto& f : fs) arr.push_back({{"axiom", f.axiom}, {"witness", labels_of(a, f.witness)}});
            return arr;
        };
        ojson doc;
        doc["ririg"] = {{"ok", base.passed()}, {"failures", failures(base.failures)}};
        if (base.passed()) doc["laws"] = {{"ok", check_ririg_laws(a.base).passed()}};
        ojson ms = ojson::object();
        for (const auto& m : a.sig.names()) {
            std::vector<AxiomFailure> fs;
            for (const auto* f : modal_failures(m)) fs.push_back(*f);
            ms[m] = {{"ok", fs.empty()}, {"failures", failures(fs)}};
        }
        doc["modals"] = std::move(ms);
        if (first) doc["witness"] = witness;
        emit(io, doc);
    } else {
        std::vector<std::string> parts{std::string("ririg: ") + (base.passed() ? "ok" : "FAIL")};
        for (const auto& m : a.sig.names()) parts.push_back("modal " + m + ": " + (modal_failures(m).empty() ? "ok" : "FAIL"));
        io.out << join_strings(parts, ", ") << "\n";
        for (const auto* fs : {&base.failures, &modal.failures})
            for (const auto& f : *fs) io.out << "  " << f.axiom << " fails at " << tuple_text(a, f.witness) << "\n";
        if (first) print_witness(io, witness);
    }
    return first ? Exit::fails : Exit::ok;
}

// ---------------------------------------------------------------------------
// filters, congruences, gen-filter

int cmd_filters(const Io& io, const std::string& path) {
    const ModalRirig a = load_one(path, io.s);
    require_valid(a);
    const auto fs = all_ifilters(a);
    if (io.s.json) {
        ojson arr = ojson::array();
        for (const auto& f : fs)
            arr.push_back({{"filter", labels_of(a, f.mask.elements())}, {"classes", classes_json(a, theta_from_filter(a, f))}});
        emit(io, {{"count", fs.size()}, {"filters", arr}});
    } else {
        io.out << "I-filters: " << fs.size() << "\n";
        for (const auto& f : fs) io.out << "  " << set_text(a, f.mask) << "  classes " << classes_text(a, theta_from_filter(a, f)) << "\n";
    }
    return Exit::ok;
}

int cmd_congruences(const Io& io, const std::string& path, std::size_t cap) {
    const ModalRirig a = load_one(path, io.s);
    require_valid(a);
    const auto cs = all_congruences_direct(a, cap);
    const auto fs = all_ifilters(a);
    bool round_trip = cs.size() == fs.size();
    for (const auto& c : cs) round_trip = round_trip && theta_from_filter(a, filter_from_theta(a, c)) == c;
    for (const auto& f : fs) round_trip = round_trip && filter_from_theta(a, theta_from_filter(a, f)) == f;
    if (io.s.json) {
        ojson arr = ojson::array();
        for (const auto& c : cs)
            arr.push_back({{"classes", classes_json(a, c)}, {"filter", labels_of(a, filter_from_theta(a, c).mask.elements())}});
        emit(io, {{"count", cs.size()}, {"filters", fs.size()}, {"round_trip", round_trip}, {"congruences", arr}});
    } else {
        io.out << "congruences: " << cs.size() << ", I-filters: " << fs.size() << ", round trip: " << (round_trip ? "ok" : "FAIL") << "\n";
        for (const auto& c : cs) io.out << "  " << classes_text(a, c) << "  1-class " << set_text(a, filter_from_theta(a, c).mask) << "\n";
    }
    return round_trip ? Exit::ok : Exit::fails;
}

int cmd_gen_filter(const Io& io, const std::string& path, const std::string& set) {
    const ModalRirig a = load_one(path, io.s);
    require_valid(a);
    const std::string text = io.s.verify ? *io.s.verify : set;
    const SubsetMask x = SubsetMask::of(a.size(), parse_elems(a, text));
    const auto closure = generate_filter(a, x);
    const auto blocks = generate_filter_blocks_stabilized(a, x);
    const auto lam = generate_filter_lambda(a, x);
    const bool agree = closure.mask == blocks.filter && closure.mask == lam.mask;
    if (io.s.verify) return verdict(io, !agree, "generation routes on " + set_text(a, x));
    if (io.s.json) {
        emit(io, {{"set", labels_of(a, x.elements())},
                  {"closure", labels_of(a, closure.mask.elements())},
                  {"blocks", labels_of(a, blocks.filter.elements())},
                  {"blocks_bound", blocks.bound},
                  {"lambda", labels_of(a, lam.mask.elements())},
                  {"agree", agree}});
    } else {
        io.out << "closure: " << set_text(a, closure.mask) << "\n";
        io.out << "blocks:  " << set_text(a, blocks.filter) << " (stable from bound " << blocks.bound << ")\n";
        io.out << "lambda:  " << set_text(a, lam.mask) << "\n";
        io.out << (agree ? "routes agree" : "routes DISAGREE") << "\n";
        if (!agree) print_witness(io, list_token(a, x.elements()));
    }
    return agree ? Exit::ok : Exit::fails;
}

// ---------------------------------------------------------------------------
// simple, si, classify

int cmd_simple(const Io& io, const std::string& path) {
    const ModalRirig a = load_one(path, io.s);
    require_valid(a);
    if (io.s.verify) {
        const Elem x = parse_elem(a, *io.s.verify);
        const auto f = generate_filter(a, {x});
        return verdict(io, x != a.one() && !f.mask.contains(a.zero()),
                       "Fg(" + elem(a, x) + ") = " + set_text(a, f.mask) + " is proper");
    }
    const auto r = is_simple(a);
    const std::string witness = r.obstruction ? elem(a, *r.obstruction) : "";
    if (io.s.json) {
        ojson ws = ojson::array();
        for (const auto& w : r.witnesses) ws.push_back(reach_json(a, w));
        ojson doc = {{"simple", r.simple}, {"lambda_simple", r.lambda_simple}, {"witnesses", ws}};
        if (r.obstruction) doc["witness"] = witness;
        emit(io, doc);
    } else {
        io.out << "simple: " << (r.simple ? "yes" : "no") << " (lambda route: " << (r.lambda_simple ? "yes" : "no") << ")\n";
        for (const auto& w : r.witnesses) {
            io.out << "  " << elem(a, w.element) << ": ";
            if (w.blocks) io.out << "product of " << blocks_text(a, w.blocks) << " gives 0";
            else io.out << "no product of block values gives 0";
            io.out << lambda_text(w, "= 0") << "\n";
        }
        if (r.obstruction) {
            io.out << "obstruction: Fg(" << witness << ") = " << set_text(a, generate_filter(a, {*r.obstruction}).mask)
                   << " misses 0\n";
            print_witness(io, witness);
        }
    }
    return r.simple ? Exit::ok : Exit::fails;
}

int cmd_si(const Io& io, const std::string& path) {
    const ModalRirig a = load_one(path, io.s);
    require_valid(a);
    if (io.s.verify) {
        const auto parts = split(*io.s.verify, '|');
        if (parts.size() != 2) throw ParseError("witness must look like '<filter>|<filter>'");
        const auto f = SubsetMask::of(a.size(), parse_elems(a, parts[0]));
        const auto g = SubsetMask::of(a.size(), parse_elems(a, parts[1]));
        const bool ok = is_ifilter(a, f) && is_ifilter(a, g) && f.count() > 1 && g.count() > 1 &&
                        (f & g) == SubsetMask(a.size(), {a.one()});
        return verdict(io, ok, set_text(a, f) + " and " + set_text(a, g) + " are nontrivial I-filters meeting in {1}");
    }
    const auto r = is_subdirectly_irreducible(a);
    const auto mono = monolith(a);
    std::string witness;
    if (r.obstruction) witness = list_token(a, r.obstruction->first.mask.elements()) + "|" + list_token(a, r.obstruction->second.mask.elements());
    if (io.s.json) {
        ojson doc = {{"si", r.si}, {"lambda_si", r.lambda_si}, {"valid_b", labels_of(a, r.valid_b)}};
        doc["b"] = r.witness ? ojson(elem(a, *r.witness)) : ojson(nullptr);
        ojson reach = ojson::array();
        for (const auto& w : r.reach) reach.push_back(reach_json(a, w));
        doc["reach"] = std::move(reach);
        doc["monolith"] = mono ? ojson(labels_of(a, mono->mask.elements())) : ojson(nullptr);
        if (r.obstruction) doc["witness"] = witness;
        emit(io, doc);
    } else {
        io.out << "subdirectly irreducible: " << (r.si ? "yes" : "no") << " (lambda route: " << (r.lambda_si ? "yes" : "no") << ")\n";
        if (r.witness) {
            io.out << "b = " << elem(a, *r.witness) << " (valid: {" << join_strings(labels_of(a, r.valid_b), ", ") << "})\n";
            for (const auto& w : r.reach) {
                io.out << "  " << elem(a, w.element) << ": product of " << blocks_text(a, w.blocks) << " <= b"
                       << lambda_text(w, "<= b") << "\n";
            }
        }
        if (mono) io.out << "monolith filter: " << set_text(a, mono->mask) << "\n";
        if (r.obstruction) {
            io.out << "obstruction: " << set_text(a, r.obstruction->first.mask) << " and " << set_text(a, r.obstruction->second.mask)
                   << " meet in {1}\n";
            print_witness(io, witness);
        }
    }
    return r.si ? Exit::ok : Exit::fails;
}

ojson flags_json(const Classification& c) {
    return {{"trivial", c.trivial}, {"simple", c.simple},           {"si", c.si}, {"chain", c.chain},
            {"contractive", c.contractive}, {"prelinear", c.prelinear}, {"cm", c.cm}, {"in_rc", c.in_rc}};
}

int cmd_classify(const Io& io, const std::string& path) {
    const auto picked = load_selected(path, io.s, true);
    ojson arr = ojson::array();
    for (const auto& [idx, a] : picked) {
        require_valid(a);
        const auto c = classify(a);
        if (io.s.json) {
            ojson j = flags_json(c);
            j["index"] = idx;
            j["size"] = a.size();
            arr.push_back(std::move(j));
            continue;
        }
        if (picked.size() > 1) io.out << "[" << idx << "] size " << a.size() << ": ";
        std::vector<std::string> parts;
        const ojson flags = flags_json(c);
        for (const auto& [k, v] : flags.items()) parts.push_back(k + "=" + (v.get<bool>() ? "yes" : "no"));
        io.out << join_strings(parts, " ") << "\n";
    }
    if (io.s.json) emit(io, picked.size() == 1 ? arr[0] : arr);
    return Exit::ok;
}

// ---------------------------------------------------------------------------
// compatible, laf

struct CompatOptions {
    std::string fn_path;
    std::string route = "all";
    std::optional<std::size_t> bound;
    std::size_t random = 0;
    std::size_t arity = 1;
};

std::vector<CompatReport> compat_routes(const CompatContext& ctx, const FiniteFunction& f, const CompatOptions& o) {
    std::vector<CompatReport> out;
    const bool all = o.route == "all";
    if (all || o.route == "direct") out.push_back(is_compatible_direct(ctx, f, max_canonical_size));
    if (all || o.route == "blocks") out.push_back(compat_witness_kary(ctx, f, o.bound));
    if (all || o.route == "lambda") out.push_back(compat_witness_lambda(ctx, f));
    if (all || o.route == "slotwise") out.push_back(compat_slotwise(ctx, f));
    return out;
}

int cmd_compatible(const Io& io, const std::string& path, const CompatOptions& o) {
    const ModalRirig a = load_one(path, io.s);
    require_valid(a);
    const CompatContext ctx(a);
    if (o.random > 0) {
        std::mt19937_64 rng(parse_seed(io.s.seed));
        std::size_t compatible = 0, disagreements = 0;
        std::optional<FiniteFunction> first_bad;
        for (std::size_t i = 0; i < o.random; ++i) {
            const auto f = random_function(a.size(), o.arity, rng);
            const auto rs = compat_routes(ctx, f, o);
            bool same = true;
            for (const auto& r : rs) same = same && r.verdict == rs.front().verdict;
            if (!same && !first_bad) first_bad = f;
            disagreements += same ? 0 : 1;
            compatible += rs.front().compatible() ? 1 : 0;
        }
        if (io.s.json) {
            ojson doc = {{"functions", o.random}, {"arity", o.arity}, {"seed", io.s.seed}, {"compatible", compatible},
                         {"disagreements", disagreements}};
            if (first_bad) doc["first_disagreement"] = first_bad->table;
            emit(io, doc);
        } else {
            io.out << o.random << " random functions of arity " << o.arity << " (seed " << io.s.seed << "): " << compatible
                   << " compatible, " << disagreements << " route disagreements\n";
            if (first_bad) io.out << "first disagreement: " << format_function(*first_bad);
        }
        return disagreements == 0 ? Exit::ok : Exit::fails;
    }
    if (o.fn_path.empty()) throw ParseError("compatible needs a function file or --random");
    const FiniteFunction f = load_function(o.fn_path, a.size());
    if (io.s.verify) {
        const auto parts = split(*io.s.verify, ';');
        if (parts.size() != 2) throw ParseError("witness must look like '<tuple>;<tuple>'");
        const auto xs = parse_elems(a, parts[0]);
        const auto ys = parse_elems(a, parts[1]);
        if (xs.size() != f.arity || ys.size() != f.arity) throw ParseError("witness tuples must have the function's arity");
        std::vector<std::pair<Elem, Elem>> pairs;
        for (std::size_t i = 0; i < xs.size(); ++i) pairs.emplace_back(xs[i], ys[i]);
        const auto theta = congruence_closure(a, pairs);
        const Elem fx = f(std::span<const Elem>(xs)), fy = f(std::span<const Elem>(ys));
        return verdict(io, !theta.related(fx, fy),
                       "Cg of the argument pairs is " + classes_text(a, theta) + " and does not relate f" + tuple_text(a, xs) +
                           " = " + elem(a, fx) + " with f" + tuple_text(a, ys) + " = " + elem(a, fy));
    }
    if (o.route != "all" && o.route != "direct" && o.route != "blocks" && o.route != "lambda" && o.route != "slotwise")
        throw ParseError("unknown route '" + o.route + "'");
    const auto rs = compat_routes(ctx, f, o);
    const CompatReport* failing = nullptr;
    bool undecided_seen = false;
    for (const auto& r : rs) {
        if (r.verdict == Verdict::not_compatible && !failing) failing = &r;
        if (r.verdict == Verdict::undecided) undecided_seen = true;
    }
    std::string witness;
    if (failing && failing->failure) witness = list_token(a, failing->failure->a) + ";" + list_token(a, failing->failure->b);
    if (io.s.json) {
        ojson routes = ojson::array();
        for (const auto& r : rs) {
            ojson j = {{"route", r.route}, {"verdict", to_string(r.verdict)}, {"bound_used", r.bound_used}};
            if (r.failure) j["failure"] = {{"a", labels_of(a, r.failure->a)}, {"b", labels_of(a, r.failure->b)}};
            routes.push_back(std::move(j));
        }
        ojson doc = {{"routes", routes}};
        if (!witness.empty()) doc["witness"] = witness;
        emit(io, doc);
    } else {
        for (const auto& r : rs) {
            io.out << r.route << ": " << to_string(r.verdict);
            if (r.compatible() && r.route.rfind("blocks", 0) == 0) io.out << " (longest block " << r.bound_used << ")";
            if (r.compatible() && r.route == "lambda") io.out << " (exponent " << r.bound_used << ")";
            if (r.failure) io.out << " at " << tuple_text(a, r.failure->a) << " vs " << tuple_text(a, r.failure->b);
            io.out << "\n";
        }
        if (!witness.empty()) print_witness(io, witness);
    }
    if (failing) return Exit::fails;
    return undecided_seen ? Exit::undecided : Exit::ok;
}

int cmd_laf(const Io& io, const std::string& path, const std::string& fn_path, const std::string& tuples_text) {
    const ModalRirig a = load_one(path, io.s);
    require_valid(a);
    const FiniteFunction f = load_function(fn_path, a.size());
    std::vector<std::vector<Elem>> tuples;
    if (tuples_text.empty()) tuples = all_tuples(a.size(), f.arity);
    else
        for (const auto& t : split(tuples_text, ';')) tuples.push_back(parse_elems(a, t));
    const auto r = laf_representation(a, f, tuples);
    if (io.s.verify) {
        const auto j = std::stoul(*io.s.verify);
        if (j >= tuples.size()) throw ParseError("witness tuple index out of range");
        return verdict(io, r.joins[j] != r.values[j], "join at " + tuple_text(a, tuples[j]));
    }
    if (io.s.json) {
        ojson rows = ojson::array();
        for (std::size_t j = 0; j < tuples.size(); ++j)
            rows.push_back({{"tuple", labels_of(a, tuples[j])}, {"anchor_exponent", r.anchor_exponent[j]},
                            {"anchor_power", r.anchor_power[j]},
                            {"terms", labels_of(a, r.terms[j])}, {"join", elem(a, r.joins[j])}, {"value", elem(a, r.values[j])}});
        ojson doc = {{"verified", r.verified}, {"rows", rows}};
        if (r.first_mismatch) doc["witness"] = std::to_string(*r.first_mismatch);
        emit(io, doc);
    } else {
        for (std::size_t j = 0; j < tuples.size(); ++j)
            io.out << "  x = " << tuple_text(a, tuples[j]) << ": n = " << r.anchor_exponent[j] << ", p = " << r.anchor_power[j] << ", join of "
                   << tuple_text(a, r.terms[j]) << " = " << elem(a, r.joins[j]) << ", f(x) = " << elem(a, r.values[j]) << "\n";
        io.out << "representation " << (r.verified ? "verified" : "FAILS") << " on " << tuples.size() << " tuples\n";
        if (r.first_mismatch) print_witness(io, std::to_string(*r.first_mismatch));
    }
    return r.verified ? Exit::ok : Exit::fails;
}

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate(const Io& io, std::size_t max_size, std::size_t modals, const std::vector<std::string>& require,
                  const std::string& output, std::size_t cap) {
    ExpansionConstraints c;
    for (const auto& r : require) {
        for (const auto& item : split(r, ',')) {
            if (item == "contractive") c.contractive = true;
            else if (item == "P") c.prelinear = true;
            else if (item == "Cm") c.cm = true;
            else if (item == "chain") c.chain = true;
            else throw ParseError("unknown constraint '" + item + "' (expected contractive, P, Cm or chain)");
        }
    }
    const Catalog cat = catalog_build(max_size, modals, c, io.s.jobs, cap);
    std::vector<std::size_t> per_size(max_size + 1, 0);
    for (const auto& e : cat.entries) ++per_size[e.algebra.size()];
    if (!output.empty()) catalog_save(cat, output);
    if (io.s.json) {
        ojson sizes = ojson::object();
        for (std::size_t n = 1; n <= max_size; ++n) sizes[std::to_string(n)] = per_size[n];
        ojson entries = ojson::array();
        for (const auto& e : cat.entries) {
            ojson j = flags_json(e.flags);
            j["size"] = e.algebra.size();
            j["form"] = form_to_hex(e.form);
            entries.push_back(std::move(j));
        }
        emit(io, {{"total", cat.entries.size()}, {"per_size", sizes}, {"entries", entries}});
    } else {
        for (std::size_t n = 1; n <= max_size; ++n) io.out << "size " << n << ": " << per_size[n] << "\n";
        io.out << "total: " << cat.entries.size() << "\n";
        if (!output.empty()) io.out << "wrote " << output << "\n";
    }
    return Exit::ok;
}

// ---------------------------------------------------------------------------
// prove, entails, lddt

std::set<std::string> proof_modals(const Proof& p) {
    std::set<std::string> out;
    for (const auto& h : p.hypotheses) {
        auto m = h.modal_names();
        out.insert(m.begin(), m.end());
    }
    for (const auto& l : p.lines) {
        auto m = l.formula.modal_names();
        out.insert(m.begin(), m.end());
    }
    return out;
}

std::string valuation_token(const ModalRirig& a, const Valuation& v) {
    std::vector<std::string> parts;
    for (const auto& [k, x] : v) parts.push_back(k + "=" + elem(a, x));
    return join_strings(parts, ",");
}

ojson certificate_json(const EntailmentResult& r) {
    return {{"entails", r.entails}, {"algebras", r.algebras_checked}, {"valuations", r.valuations_checked},
            {"scope", EntailmentResult::scope_note}};
}

/// Checks a countermodel claim "index:var=elem,..." against premises and goal.
int verify_countermodel(const Io& io, const std::vector<ModalRirig>& catalog, const std::vector<Equation>& theta,
                        const Equation& goal) {
    const auto colon = io.s.verify->find(':');
    if (colon == std::string::npos) throw ParseError("witness must look like '<algebra index>:<var>=<elem>,...'");
    const auto idx = std::stoul(io.s.verify->substr(0, colon));
    if (idx >= catalog.size()) throw ParseError("witness algebra index out of range");
    const auto& a = catalog[idx];
    Valuation v;
    const std::string rest = io.s.verify->substr(colon + 1);
    if (!detail::trim(rest).empty())
        for (const auto& kv : split(rest, ',')) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw ParseError("malformed assignment '" + kv + "'");
            v[detail::trim(kv.substr(0, eq))] = parse_elem(a, kv.substr(eq + 1));
        }
    for (const auto& e : theta)
        if (eval_term(a, v, e.lhs) != eval_term(a, v, e.rhs))
            return verdict(io, false, "premise " + e.to_string() + " fails under the valuation");
    const Elem l = eval_term(a, v, goal.lhs), r = eval_term(a, v, goal.rhs);
    return verdict(io, l != r, "in algebra " + std::to_string(idx) + " the goal sides evaluate to " + elem(a, l) + " and " + elem(a, r));
}

int cmd_prove(const Io& io, const std::string& path, const std::vector<std::string>& catalogs) {
    const Proof proof = [&] {
        try {
            return parse_proof(read_file(path));
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + e.what());
        }
    }();
    const auto check = check_proof(proof.hypotheses, proof);
    std::optional<std::vector<ModalRirig>> catalog;
    const bool want_catalog = !catalogs.empty() || (std::getenv(catalog_env) && *std::getenv(catalog_env));
    std::size_t skipped = 0;
    if (check.ok && want_catalog) {
        const auto used = proof_modals(proof);
        catalog.emplace();
        for (auto& a : load_catalogs(catalogs)) {
            bool fits = std::all_of(used.begin(), used.end(), [&](const std::string& m) { return a.sig.index_of(m).has_value(); });
            if (fits) catalog->push_back(std::move(a));
            else ++skipped;
        }
    }
    if (io.s.verify) {
        if (io.s.verify->find(':') != std::string::npos && catalog) {
            std::vector<Equation> theta;
            for (const auto& h : proof.hypotheses) theta.push_back(tau(h).front());
            return verify_countermodel(io, *catalog, theta, tau(proof.conclusion()).front());
        }
        const auto line = std::stoul(*io.s.verify);
        return verdict(io, !check.ok && check.bad_line == line, "step " + std::to_string(line) + " does not check");
    }
    std::optional<SoundnessReport> sound;
    if (check.ok && catalog) sound = soundness_check(proof.hypotheses, proof, *catalog, io.s.valuation_cap, io.s.jobs);
    std::string witness;
    if (!check.ok) witness = std::to_string(check.bad_line.value_or(0));
    else if (sound && !sound->semantics.entails) {
        const auto& cm = *sound->semantics.countermodel;
        witness = std::to_string(cm.algebra) + ":" + valuation_token((*catalog)[cm.algebra], cm.valuation);
    }
    if (io.s.json) {
        ojson steps = ojson::array();
        for (std::size_t k = 0; k < check.substitutions.size(); ++k) {
            ojson j = {{"step", k + 1}, {"formula", proof.lines[k].formula.to_string()}, {"justification", proof.lines[k].just.to_string()}};
            if (check.substitutions[k]) j["substitution"] = format_substitution(*check.substitutions[k]);
            steps.push_back(std::move(j));
        }
        ojson doc = {{"ok", check.ok}, {"steps", steps}};
        if (!check.ok) doc["bad_line"] = check.bad_line.value_or(0), doc["reason"] = check.reason;
        else doc["conclusion"] = proof.conclusion().to_string();
        if (sound) {
            doc["soundness"] = certificate_json(sound->semantics);
            doc["soundness"]["skipped_signature"] = skipped;
        }
        if (!witness.empty()) doc["witness"] = witness;
        emit(io, doc);
    } else {
        for (std::size_t k = 0; k < check.substitutions.size(); ++k) {
            io.out << "  " << k + 1 << ". " << proof.lines[k].formula.to_string() << " ; " << proof.lines[k].just.to_string();
            if (check.substitutions[k]) io.out << "  [" << format_substitution(*check.substitutions[k]) << "]";
            io.out << "\n";
        }
        if (!check.ok) {
            io.out << "proof: FAIL at step " << check.bad_line.value_or(0) << ": " << check.reason << "\n";
        } else {
            io.out << "proof: ok (" << proof.lines.size() << " steps), conclusion " << proof.conclusion().to_string() << "\n";
        }
        if (sound) {
            io.out << "soundness: " << (sound->semantics.entails ? "holds" : "FAILS") << " over "
                   << sound->semantics.algebras_checked << " algebras, " << sound->semantics.valuations_checked << " valuations";
            if (skipped) io.out << " (" << skipped << " algebras lack the proof's modal symbols)";
            io.out << "\nnote: " << EntailmentResult::scope_note << "\n";
        }
        if (!witness.empty()) print_witness(io, witness);
    }
    if (!check.ok) return Exit::fails;
    return sound && !sound->semantics.entails ? Exit::fails : Exit::ok;
}

int cmd_entails(const Io& io, const std::vector<std::string>& catalogs, const std::vector<std::string>& assumes,
                const std::string& goal_text) {
    const auto catalog = load_catalogs(catalogs);
    std::vector<Equation> theta;
    for (const auto& s : assumes) theta.push_back(parse_claim(s));
    const Equation goal = parse_claim(goal_text);
    if (io.s.verify) return verify_countermodel(io, catalog, theta, goal);
    const auto r = semantic_entails(catalog, theta, goal, io.s.valuation_cap, io.s.jobs);
    std::string witness;
    if (r.countermodel) witness = std::to_string(r.countermodel->algebra) + ":" + valuation_token(catalog[r.countermodel->algebra], r.countermodel->valuation);
    if (io.s.json) {
        ojson doc = certificate_json(r);
        doc["goal"] = goal.to_string();
        if (r.countermodel) {
            const auto& a = catalog[r.countermodel->algebra];
            ojson val = ojson::object();
            for (const auto& [k, x] : r.countermodel->valuation) val[k] = elem(a, x);
            doc["countermodel"] = {{"algebra", r.countermodel->algebra}, {"size", a.size()}, {"valuation", val},
                                   {"lhs", elem(a, eval_term(a, r.countermodel->valuation, goal.lhs))},
                                   {"rhs", elem(a, eval_term(a, r.countermodel->valuation, goal.rhs))}};
            doc["witness"] = witness;
        }
        emit(io, doc);
    } else if (r.entails) {
        io.out << "entails: yes over " << r.algebras_checked << " algebras, " << r.valuations_checked << " valuations\n";
        io.out << "note: " << EntailmentResult::scope_note << "\n";
    } else {
        const auto& cm = *r.countermodel;
        const auto& a = catalog[cm.algebra];
        io.out << "entails: no\ncountermodel: algebra " << cm.algebra << " (size " << a.size() << "), "
               << valuation_token(a, cm.valuation) << "\n";
        io.out << "  " << goal.lhs.to_string() << " = " << elem(a, eval_term(a, cm.valuation, goal.lhs)) << ", "
               << goal.rhs.to_string() << " = " << elem(a, eval_term(a, cm.valuation, goal.rhs)) << "\n";
        print_witness(io, witness);
    }
    return r.entails ? Exit::ok : Exit::fails;
}

int cmd_lddt(const Io& io, const std::vector<std::string>& catalogs, const std::vector<std::string>& gamma_text,
             const std::vector<std::string>& delta_text, const std::string& psi_text, const LddtBounds& bounds,
             bool lambda_mode, const std::string& proof_path) {
    const auto catalog = load_catalogs(catalogs);
    std::vector<Formula> gamma, delta;
    for (const auto& s : gamma_text) gamma.push_back(parse_formula(s));
    for (const auto& s : delta_text) delta.push_back(parse_formula(s));
    const Formula psi = parse_formula(psi_text);
    std::optional<Proof> proof;
    if (!proof_path.empty()) proof = parse_proof(read_file(proof_path));
    const auto w = lambda_mode ? lddt_witness_lambda(gamma, delta, psi, catalog, bounds, proof, io.s.valuation_cap)
                               : lddt_witness(gamma, delta, psi, catalog, bounds, proof, io.s.valuation_cap);
    const ModalSignature sig = common_signature(catalog);
    if (io.s.json) {
        ojson doc = {{"found", w.has_value()}, {"mode", lambda_mode ? "lambda" : "blocks"},
                     {"bounds", {{"block_len", bounds.block_len}, {"product", bounds.product}, {"lambda", bounds.lambda_exponent}}}};
        if (w) {
            doc["formula"] = w->formula.to_string();
            ojson factors = ojson::array();
            for (const auto& [b, f] : w->factors) factors.push_back({{"block", format_block(sig, b)}, {"formula", f.to_string()}});
            for (const auto& f : w->lambda_factors) factors.push_back({{"formula", f.to_string()}});
            doc["factors"] = factors;
            if (w->exponent) doc["exponent"] = *w->exponent;
            doc["certificate"] = certificate_json(w->certificate);
            if (w->attached_proof)
                doc["attached_proof"] = {{"ok", w->attached_proof->ok}, {"reason", w->attached_proof->reason}};
        }
        emit(io, doc);
    } else if (w) {
        io.out << "witness: " << w->formula.to_string() << "\n";
        if (lambda_mode) {
            io.out << "  exponent " << *w->exponent << " over";
            for (const auto& f : w->lambda_factors) io.out << " " << f.to_string();
            io.out << "\n";
        } else {
            for (const auto& [b, f] : w->factors) io.out << "  (" << format_block(sig, b) << ", " << f.to_string() << ")\n";
        }
        io.out << "certificate: tau[Gamma] |= tau(witness) over " << w->certificate.algebras_checked << " algebras, "
               << w->certificate.valuations_checked << " valuations\n";
        if (w->attached_proof)
            io.out << "attached proof: " << (w->attached_proof->ok ? "ok" : "FAIL: " + w->attached_proof->reason) << "\n";
        io.out << "note: " << EntailmentResult::scope_note << "\n";
    } else {
        io.out << "no witness within the bounds (this is not a disproof)\n";
    }
    return w ? Exit::ok : Exit::undecided;
}

// ---------------------------------------------------------------------------
// cep

int cmd_cep(const Io& io, const std::string& path) {
    const auto picked = load_selected(path, io.s, true);
    if (io.s.verify) {
        if (picked.size() != 1) throw ParseError("replaying a CEP witness on a catalog needs --index");
        const auto& a = picked.front().second;
        const auto parts = split(*io.s.verify, '|');
        if (parts.size() != 2) throw ParseError("witness must look like '<subuniverse>|<class>;<class>...'");
        const auto s = SubsetMask::of(a.size(), parse_elems(a, parts[0]));
        const auto subs = subuniverses(a, max_canonical_size);
        if (std::find(subs.begin(), subs.end(), s) == subs.end()) return verdict(io, false, set_text(a, s) + " is not a subuniverse");
        const auto sub = subalgebra(a, s);
        std::vector<std::vector<Elem>> classes;
        for (const auto& cls : split(parts[1], ';')) classes.push_back(parse_elems(sub, cls));
        const auto theta = Congruence::from_classes(sub.size(), classes);
        if (!is_congruence(sub, theta)) return verdict(io, false, "the classes are not a congruence of the subalgebra");
        return verdict(io, !extends(a, s, theta), "congruence " + classes_text(sub, theta) + " of " + set_text(a, s) + " has no extension");
    }
    for (const auto& p : picked) require_valid(p.second);
    const auto reports = parallel_map<CepReport>(picked.size(), io.s.jobs, [&](std::size_t i) {
        return cep_check(picked[i].second, max_canonical_size, max_canonical_size);
    });
    std::optional<std::size_t> bad;
    std::size_t subs = 0, cons = 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        subs += reports[i].subuniverses_checked;
        cons += reports[i].congruences_checked;
        if (!reports[i].holds && !bad) bad = i;
    }
    std::string witness;
    if (bad) {
        const auto& a = picked[*bad].second;
        const auto& ce = *reports[*bad].counterexample;
        const auto sub = subalgebra(a, ce.subuniverse);
        std::vector<std::string> cls;
        for (const auto& c : ce.theta.classes()) cls.push_back(list_token(sub, c));
        witness = list_token(a, ce.subuniverse.elements()) + "|" + join_strings(cls, ";");
    }
    if (io.s.json) {
        ojson doc = {{"holds", !bad}, {"algebras", picked.size()}, {"subuniverses", subs}, {"congruences", cons}};
        if (bad) doc["index"] = picked[*bad].first, doc["witness"] = witness;
        emit(io, doc);
    } else {
        io.out << "cep: " << (bad ? "FAILS" : "holds") << " (" << picked.size() << " algebras, " << subs << " subuniverses, "
               << cons << " subalgebra congruences)\n";
        if (bad) {
            io.out << "counterexample in algebra " << picked[*bad].first << "\n";
            print_witness(io, witness);
        }
    }
    return bad ? Exit::fails : Exit::ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Workbench for finite modal residuated integral rigs", "ririg"};
    app.fallthrough();
    app.require_subcommand(1);
    Settings s;
    app.add_flag("--json", s.json, "Structured output");
    app.add_option("--jobs", s.jobs, "Worker threads for parallel scans (0 = hardware)");
    app.add_option("--seed", s.seed, "Seed for randomized suites (decimal or 0x hex)");
    app.add_option("--index", s.index, "Algebra to use when an input is a catalog");
    app.add_option("--verify-witness", s.verify, "Replay a witness from an earlier failing report");
    app.add_option("--valuation-cap", s.valuation_cap, "Maximum valuations per algebra for semantic checks");

    std::string alg, fn, set, tuples, output, proof_path, goal;
    std::size_t direct_cap = default_enumeration_cap, max_size = 3, modals = 0, enum_cap = default_enumeration_cap;
    std::vector<std::string> require, catalogs, assumes, gamma, delta;
    CompatOptions co;
    LddtBounds bounds;
    bool lambda_mode = false;
    std::function<int(const Io&)> action;

    auto alg_arg = [&](CLI::App* sub) { sub->add_option("algebra", alg, "Algebra file or catalog")->required(); };
    auto cat_opt = [&](CLI::App* sub) {
        sub->add_option("--catalog", catalogs, "Catalog or algebra file (repeatable)")->allow_extra_args(false);
    };

    auto* check = app.add_subcommand("check", "Validate the ririg and modal axioms");
    alg_arg(check);
    check->callback([&] { action = [&](const Io& io) { return cmd_check(io, alg); }; });

    auto* filters = app.add_subcommand("filters", "List every I-filter with its congruence");
    alg_arg(filters);
    filters->callback([&] { action = [&](const Io& io) { return cmd_filters(io, alg); }; });

    auto* congruences = app.add_subcommand("congruences", "List every congruence by direct search");
    alg_arg(congruences);
    congruences->add_option("--max-direct", direct_cap, "Largest universe for the partition scan");
    congruences->callback([&] { action = [&](const Io& io) { return cmd_congruences(io, alg, direct_cap); }; });

    auto* gen = app.add_subcommand("gen-filter", "Least I-filter containing a set, by three routes");
    alg_arg(gen);
    gen->add_option("--set", set, "Comma-separated elements")->required();
    gen->callback([&] { action = [&](const Io& io) { return cmd_gen_filter(io, alg, set); }; });

    auto* simple = app.add_subcommand("simple", "Decide simplicity");
    alg_arg(simple);
    simple->callback([&] { action = [&](const Io& io) { return cmd_simple(io, alg); }; });

    auto* si = app.add_subcommand("si", "Decide subdirect irreducibility");
    alg_arg(si);
    si->callback([&] { action = [&](const Io& io) { return cmd_si(io, alg); }; });

    auto* cls = app.add_subcommand("classify", "Property flags");
    alg_arg(cls);
    cls->callback([&] { action = [&](const Io& io) { return cmd_classify(io, alg); }; });

    auto* compat = app.add_subcommand("compatible", "Decide whether a function preserves every congruence");
    alg_arg(compat);
    compat->add_option("function", co.fn_path, "Function file");
    compat->add_option("--route", co.route, "all, direct, blocks, lambda or slotwise");
    compat->add_option("--bound", co.bound, "Block length bound for the blocks route");
    compat->add_option("--random", co.random, "Test this many random functions instead of a file");
    compat->add_option("--arity", co.arity, "Arity of the random functions")->check(CLI::Range(1, 8));
    compat->callback([&] { action = [&](const Io& io) { return cmd_compatible(io, alg, co); }; });

    auto* laf = app.add_subcommand("laf", "Join representation of a compatible function");
    alg_arg(laf);
    laf->add_option("function", fn, "Function file")->required();
    laf->add_option("--tuples", tuples, "Semicolon-separated argument tuples (default: all)");
    laf->callback([&] { action = [&](const Io& io) { return cmd_laf(io, alg, fn, tuples); }; });

    auto* en = app.add_subcommand("enumerate", "Enumerate algebras up to isomorphism");
    en->add_option("--max-size", max_size, "Largest universe")->check(CLI::Range(1, 64));
    en->add_option("--modals", modals, "Number of modal symbols");
    en->add_option("--require", require, "contractive, P, Cm, chain (comma-separated or repeated)")->allow_extra_args(false);
    en->add_option("-o,--output", output, "Write the catalog here");
    en->add_option("--cap", enum_cap, "Largest size the enumerator accepts");
    en->callback([&] { action = [&](const Io& io) { return cmd_enumerate(io, max_size, modals, require, output, enum_cap); }; });

    auto* prove = app.add_subcommand("prove", "Check a Hilbert proof, then its soundness over a catalog");
    prove->add_option("proof", proof_path, "Proof file")->required();
    cat_opt(prove);
    prove->callback([&] { action = [&](const Io& io) { return cmd_prove(io, proof_path, catalogs); }; });

    auto* ent = app.add_subcommand("entails", "Equational consequence over a catalog");
    cat_opt(ent);
    ent->add_option("--assume", assumes, "Premise: an equation, or a formula read as formula = 1")->allow_extra_args(false);
    ent->add_option("goal", goal, "Goal equation or formula")->required();
    ent->callback([&] { action = [&](const Io& io) { return cmd_entails(io, catalogs, assumes, goal); }; });

    auto* ld = app.add_subcommand("lddt", "Search a local deduction-detachment witness");
    cat_opt(ld);
    ld->add_option("--gamma", gamma, "Formula of Gamma (repeatable)")->allow_extra_args(false);
    ld->add_option("--delta", delta, "Formula of Delta (repeatable)")->allow_extra_args(false);
    ld->add_option("psi", goal, "Target formula")->required();
    ld->add_option("--block-len", bounds.block_len, "Longest block");
    ld->add_option("--product", bounds.product, "Most factors");
    ld->add_option("--lambda-bound", bounds.lambda_exponent, "Largest lambda exponent");
    ld->add_flag("--lambda", lambda_mode, "Search one lambda exponent instead of blocks");
    ld->add_option("--proof", proof_path, "Hilbert proof of the witness to attach");
    ld->callback([&] {
        action = [&](const Io& io) { return cmd_lddt(io, catalogs, gamma, delta, goal, bounds, lambda_mode, proof_path); };
    });

    auto* cep = app.add_subcommand("cep", "Congruence extension property");
    alg_arg(cep);
    cep->callback([&] { action = [&](const Io& io) { return cmd_cep(io, alg); }; });

    std::vector<std::string> argv_store{"ririg"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Exit::ok : Exit::bad_input;
    }
    const Io io{out, err, s};
    try {
        return action(io);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return Exit::bad_input;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return Exit::bad_input;
    } catch (const std::invalid_argument& e) {
        err << "error: malformed number in '" << e.what() << "'\n";
        return Exit::bad_input;
    } catch (const std::out_of_range& e) {
        err << "error: number out of range\n";
        return Exit::bad_input;
    }
}

}  // namespace ririg::cli
