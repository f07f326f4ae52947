#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace ririg;
using fx::A;
using fx::O;
using fx::Z;

namespace {

const std::string data_dir = RIRIG_DATA_DIR;

Proof load_proof(const std::string& name) { return parse_proof(read_file(data_dir + "/proofs/" + name)); }

Formula F(std::string_view s) { return parse_formula(s); }

/// The named fixtures with the modal renamed m1, as in proof files.
std::vector<ModalRirig> named_m1() {
    return {ModalRirig(fx::b2()), ModalRirig(fx::g3()), fx::with_modal(fx::g3(), {0, 0, 2}, "m1"),
            fx::with_modal(fx::g3(), {0, 1, 2}, "m1")};
}

std::vector<ModalRirig> modal_only(const std::vector<ModalRirig>& v) {
    std::vector<ModalRirig> out;
    for (const auto& a : v)
        if (!a.sig.empty()) out.push_back(a);
    return out;
}

/// Value of a formula under every valuation of its variables, checked against 1.
bool valid_in(const ModalRirig& a, const Formula& f) { return holds(a, Equation{f, Term::one()}, no_valuation_cap).holds; }

}  // namespace

TEST(Formulas, Parse) {
    EXPECT_EQ(F("v0 -> v0"), Term::imp(Term::var("v0"), Term::var("v0")));
    EXPECT_EQ(F("m1(v0 | v1)"), Term::modal("m1", Term::join(Term::var("v0"), Term::var("v1"))));
    EXPECT_EQ(F("top"), Term::imp(Term::zero(), Term::zero()));
    EXPECT_EQ(F("bot"), Term::zero());
    EXPECT_THROW(F("v0 ->"), ParseError);
}

TEST(Schemas, MatchExamples) {
    const auto s1 = match_schema(F("bot -> bot"), "ax1");
    ASSERT_TRUE(s1.has_value());
    EXPECT_EQ(s1->formulas.at("phi"), Term::zero());

    const auto s12 = match_schema(F("m1(v0 -> v1) -> (m1(v0) -> m1(v1))"), "ax12");
    ASSERT_TRUE(s12.has_value());
    EXPECT_EQ(s12->formulas.at("phi"), F("v0"));
    EXPECT_EQ(s12->formulas.at("psi"), F("v1"));
    EXPECT_EQ(s12->modal, std::optional<std::string>("m1"));

    EXPECT_FALSE(match_schema(F("v0 -> v1"), "ax3").has_value());
    EXPECT_FALSE(match_schema(F("m1(v0 -> v1) -> (m2(v0) -> m1(v1))"), "ax12").has_value());
    EXPECT_FALSE(match_schema(F("p * q -> q"), "ax3").has_value());
    EXPECT_TRUE(match_schema(F("m2(top) -> top"), "ax11").has_value());
    EXPECT_TRUE(match_schema(F("top -> m2(top)"), "ax11").has_value());
    EXPECT_THROW(match_schema(F("p"), "ax13"), PreconditionFailed);
}

TEST(Schemas, InstantiateThenMatch) {
    std::mt19937_64 rng(0x161);
    for (const auto& schema : axiom_schemas()) {
        for (int i = 0; i < 50; ++i) {
            Substitution s;
            for (const char* v : {"phi", "psi", "chi"}) s.formulas[v] = random_term(rng, {"p", "q"}, {"m1"}, 3);
            if (schema.modal) s.modal = "m1";
            for (const auto& pat : schema.patterns) {
                const auto inst = instantiate(pat, s);
                EXPECT_TRUE(match_schema(inst, schema).has_value()) << schema.id << ": " << inst.to_string();
            }
        }
    }
}

TEST(Proofs, CorpusChecks) {
    for (const char* name : {"top.prf", "nec.prf", "thm1.prf", "thm2.prf", "thm3.prf", "thm4.prf", "modal-k.prf", "vel.prf"}) {
        const auto p = load_proof(name);
        const auto r = check_proof(p);
        EXPECT_TRUE(r.ok) << name << " step " << r.bad_line.value_or(0) << ": " << r.reason;
    }
}

TEST(Proofs, TheoremConclusions) {
    EXPECT_EQ(load_proof("thm1.prf").conclusion(), F("p -> top"));
    EXPECT_EQ(load_proof("thm2.prf").conclusion(), F("p -> (q -> p)"));
    EXPECT_EQ(load_proof("thm3.prf").conclusion(), F("(p -> q) -> (p * r -> q * r)"));
    EXPECT_EQ(load_proof("thm4.prf").conclusion(), F("(p * q) * r -> p * (q * r)"));
}

TEST(Proofs, Examples) {
    const auto top = parse_proof("1. bot -> bot ; ax1\n");
    EXPECT_TRUE(check_proof({}, top).ok);
    const auto nec = parse_proof("assume: p\n1. p ; hyp\n2. m1(p) ; nec:m1 1\n");
    EXPECT_TRUE(check_proof(nec).ok);
    const auto bad = check_proof(load_proof("bad-mp.prf"));
    EXPECT_FALSE(bad.ok);
    EXPECT_EQ(bad.bad_line, std::optional<std::size_t>(3));
    EXPECT_EQ(bad.reason, "major premise shape");
}

TEST(Proofs, Rejections) {
    auto expect_bad = [](const std::string& text, std::size_t line, const std::string& reason) {
        const auto r = check_proof(parse_proof(text));
        EXPECT_FALSE(r.ok) << text;
        EXPECT_EQ(r.bad_line, std::optional<std::size_t>(line)) << text;
        EXPECT_EQ(r.reason, reason) << text;
    };
    expect_bad("1. p ; hyp\n", 1, "hypothesis not assumed");
    expect_bad("1. p -> q ; ax1\n", 1, "not an instance of ax1");
    expect_bad("1. m2(p -> q) -> (m2(p) -> m2(q)) ; ax12:m1\n", 1,
               "axiom modal mismatch: formula uses m2, step names m1");
    expect_bad("assume: p\nassume: p -> q\n1. p ; hyp\n2. p -> q ; hyp\n3. p ; mp 2 1\n", 3, "conclusion mismatch");
    expect_bad("assume: p\nassume: q -> r\n1. p ; hyp\n2. q -> r ; hyp\n3. r ; mp 2 1\n", 3, "minor premise mismatch");
    expect_bad("1. bot -> bot ; ax1\n2. bot ; mp 2 1\n", 2, "cited line out of range");
    expect_bad("assume: p\n1. p ; hyp\n2. m2(p) ; nec:m1 1\n", 2, "necessitation shape");
    expect_bad("1. p -> p | q ; ax7\n2. q -> q | p ; ax8\n3. p | q -> p | q ; vel 1 2\n", 2, "not an instance of ax8");
    expect_bad("1. p -> p ; ax1\n2. q -> q ; ax1\n3. p | q -> p ; vel 1 2\n", 3,
               "join elimination premises disagree on the consequent");
    EXPECT_FALSE(check_proof(Proof{}).ok);
}

TEST(Proofs, ParseErrors) {
    EXPECT_THROW(parse_proof("1. p ; frob\n"), ParseError);
    EXPECT_THROW(parse_proof("1. p\n"), ParseError);
    EXPECT_THROW(parse_proof("2. p ; hyp\n"), ParseError);
    EXPECT_THROW(parse_proof("1. p ; ax12\n"), ParseError);
    EXPECT_THROW(parse_proof("1. p ; ax1:m1\n"), ParseError);
    EXPECT_THROW(parse_proof("1. p ; mp 1\n"), ParseError);
    EXPECT_THROW(parse_proof("1. p -> ; ax1\n"), ParseError);
    try {
        parse_proof("# header\nassume: p\n1. p ; hyp\n2. q ; nec 1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find('4'), std::string::npos);
    }
}

TEST(Proofs, FormatRoundTrip) {
    for (const char* name : {"thm3.prf", "modal-k.prf", "vel.prf"}) {
        const auto p = load_proof(name);
        const auto q = parse_proof(format_proof(p));
        ASSERT_EQ(p.lines.size(), q.lines.size());
        EXPECT_EQ(p.hypotheses, q.hypotheses);
        for (std::size_t i = 0; i < p.lines.size(); ++i) {
            EXPECT_EQ(p.lines[i].formula, q.lines[i].formula);
            EXPECT_EQ(p.lines[i].just.to_string(), q.lines[i].just.to_string());
        }
    }
}

TEST(Transformers, Examples) {
    EXPECT_EQ(tau(F("p")), (std::vector<Equation>{Equation{F("p"), Term::one()}}));
    EXPECT_EQ(rho(Equation{F("p"), F("q")}), (std::vector<Formula>{F("p -> q"), F("q -> p")}));
    EXPECT_EQ(tau(F("bot -> bot")).front().lhs, Term::top());
}

TEST(Transformers, RhoTauCoherence) {
    std::mt19937_64 rng(0x161);
    for (const auto& a : fx::mixed_catalog(3)) {
        for (int i = 0; i < 40; ++i) {
            const auto phi = random_term(rng, {"p", "q"}, a.sig.names(), 4);
            const auto pair = rho(tau(phi).front());
            for (Elem p = 0; p < a.size(); ++p)
                for (Elem q = 0; q < a.size(); ++q) {
                    const Valuation v{{"p", p}, {"q", q}};
                    const bool one = eval_term(a, v, phi) == a.one();
                    const bool both = eval_term(a, v, pair[0]) == a.one() && eval_term(a, v, pair[1]) == a.one();
                    EXPECT_EQ(one, both);
                }
        }
    }
}

TEST(Entailment, Examples) {
    const auto cat = fx::small_named_catalog();
    const auto mp = semantic_entails(cat, {parse_equation("p = 1"), parse_equation("p -> q = 1")}, parse_equation("q = 1"));
    EXPECT_TRUE(mp.entails);
    EXPECT_GT(mp.valuations_checked, 0u);
    EXPECT_EQ(mp.algebras_checked, cat.size());

    const auto lem = semantic_entails({ModalRirig(fx::g3())}, {}, parse_equation("p | (p -> bot) = 1"));
    EXPECT_FALSE(lem.entails);
    ASSERT_TRUE(lem.countermodel.has_value());
    EXPECT_EQ(lem.countermodel->algebra, 0u);
    EXPECT_EQ(lem.countermodel->valuation, (Valuation{{"p", A}}));

    const auto k1 = fx::catalog_upto(3, 1).algebras();
    EXPECT_TRUE(semantic_entails(k1, {parse_equation("p = 1")}, parse_equation("m1(p) = 1")).entails);
    EXPECT_THROW(semantic_entails(cat, {}, parse_equation("m1(p) = 1")), SignatureMismatch);
}

TEST(Entailment, CountermodelsReplay) {
    const auto cat = fx::mixed_catalog(3);
    std::mt19937_64 rng(0x161);
    std::size_t refuted = 0;
    for (int i = 0; i < 60; ++i) {
        const auto goal = random_term(rng, {"p", "q"}, {}, 3);
        const auto hyp = random_term(rng, {"p", "q"}, {}, 2);
        const auto r = semantic_consequence(cat, {hyp}, goal);
        if (r.entails) continue;
        ++refuted;
        const auto& a = cat[r.countermodel->algebra];
        Valuation v = r.countermodel->valuation;
        for (const char* name : {"p", "q"}) v.emplace(name, 0);
        EXPECT_EQ(eval_term(a, v, hyp), a.one());
        EXPECT_NE(eval_term(a, v, goal), a.one());
    }
    EXPECT_GT(refuted, 0u);
}

TEST(Entailment, ParallelAgreesWithSequential) {
    const auto cat = fx::mixed_catalog(4);
    const auto eq = parse_equation("(p -> q) | (q -> p) = 1");
    const auto s = semantic_entails(cat, {}, eq, default_valuation_cap, 1);
    const auto p = semantic_entails(cat, {}, eq, default_valuation_cap, 4);
    EXPECT_EQ(s.entails, p.entails);
    ASSERT_EQ(s.countermodel.has_value(), p.countermodel.has_value());
    if (s.countermodel) {
        EXPECT_EQ(s.countermodel->algebra, p.countermodel->algebra);
        EXPECT_EQ(s.countermodel->valuation, p.countermodel->valuation);
    }
}

TEST(Soundness, Examples) {
    const auto top = soundness_check({}, load_proof("top.prf"), fx::small_named_catalog());
    EXPECT_TRUE(top.sound());
    const auto nec = load_proof("nec.prf");
    EXPECT_TRUE(soundness_check(nec.hypotheses, nec, modal_only(named_m1())).sound());
    EXPECT_THROW(soundness_check(nec.hypotheses, nec, named_m1()), SignatureMismatch);
    const auto bad = load_proof("bad-mp.prf");
    EXPECT_THROW(soundness_check(bad.hypotheses, bad, named_m1()), PreconditionFailed);
}

TEST(Soundness, CorruptedCheckerIsCaught) {
    // A checker that accepted p |- q would be refuted by the semantic gate on B2.
    const auto r = semantic_consequence(fx::small_named_catalog(), {F("p")}, F("q"));
    EXPECT_FALSE(r.entails);
    ASSERT_TRUE(r.countermodel.has_value());
    EXPECT_EQ(r.countermodel->algebra, 0u);
    EXPECT_EQ(r.countermodel->valuation, (Valuation{{"p", 1}, {"q", 0}}));
}

TEST(Soundness, CorpusOverEnumeratedCatalogs) {
    const auto cat0 = fx::catalog_upto(3, 0).algebras();
    const auto cat1 = fx::catalog_upto(3, 1).algebras();
    for (const char* name : {"top.prf", "thm1.prf", "thm2.prf", "thm3.prf", "thm4.prf", "vel.prf"}) {
        const auto p = load_proof(name);
        EXPECT_TRUE(soundness_check(p.hypotheses, p, fx::mixed_catalog(3)).sound()) << name;
    }
    for (const char* name : {"nec.prf", "modal-k.prf"}) {
        const auto p = load_proof(name);
        EXPECT_TRUE(soundness_check(p.hypotheses, p, cat1).sound()) << name;
    }
    EXPECT_FALSE(cat0.empty());
}

TEST(Axioms, RandomInstancesAreValid) {
    std::mt19937_64 rng(0x161);
    const auto cat = fx::catalog_upto(3, 1).algebras();
    for (const auto& schema : axiom_schemas()) {
        for (int i = 0; i < 40; ++i) {
            Substitution s;
            for (const char* v : {"phi", "psi", "chi"}) s.formulas[v] = random_term(rng, {"p", "q"}, {"m1"}, 3);
            if (schema.modal) s.modal = "m1";
            for (const auto& pat : schema.patterns) {
                const auto inst = instantiate(pat, s);
                for (const auto& a : cat) EXPECT_TRUE(valid_in(a, inst)) << schema.id << ": " << inst.to_string();
            }
        }
    }
}

TEST(Axioms, TheoremSchemasAreValid) {
    for (const auto& a : fx::mixed_catalog(4))
        for (const char* t : {"p -> top", "p -> (q -> p)", "(p -> q) -> (p * r -> q * r)", "(p * q) * r -> p * (q * r)"})
            EXPECT_TRUE(valid_in(a, F(t))) << t;
}

TEST(Lddt, Examples) {
    const auto cat = fx::catalog_upto(3, 1).algebras();
    const auto w1 = lddt_witness({}, {F("p")}, F("m1(p)"), cat);
    ASSERT_TRUE(w1.has_value());
    ASSERT_EQ(w1->factors.size(), 1u);
    EXPECT_EQ(format_block(ModalSignature({"m1"}), w1->factors[0].first), "m1");
    EXPECT_EQ(w1->formula, F("m1(p) -> m1(p)"));

    const auto w2 = lddt_witness({}, {F("p"), F("q")}, F("p * q"), cat);
    ASSERT_TRUE(w2.has_value());
    ASSERT_EQ(w2->factors.size(), 2u);
    EXPECT_TRUE(w2->factors[0].first.empty() && w2->factors[1].first.empty());
    EXPECT_EQ(w2->factors[0].second, F("p"));
    EXPECT_EQ(w2->factors[1].second, F("q"));

    const auto w3 = lddt_witness({F("p -> q")}, {F("p")}, F("q"), cat);
    ASSERT_TRUE(w3.has_value());
    ASSERT_EQ(w3->factors.size(), 1u);
    EXPECT_TRUE(w3->factors[0].first.empty());
    EXPECT_TRUE(w3->certificate.entails);
}

TEST(Lddt, LambdaMode) {
    const auto cat = fx::catalog_upto(3, 1).algebras();
    const auto w = lddt_witness_lambda({}, {F("p")}, F("m1(p)"), cat);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->exponent, std::optional<std::size_t>(1));
    EXPECT_EQ(w->formula, F("p * m1(p) -> m1(p)"));
    const auto w0 = lddt_witness_lambda({F("p -> q")}, {F("p")}, F("q"), cat);
    ASSERT_TRUE(w0.has_value());
    EXPECT_EQ(w0->exponent, std::optional<std::size_t>(0));
}

TEST(Lddt, ExhaustedBoundsGiveNothing) {
    const auto cat = fx::catalog_upto(3, 1).algebras();
    EXPECT_FALSE(lddt_witness({}, {F("p")}, F("q"), cat).has_value());
    EXPECT_FALSE(lddt_witness({}, {F("p")}, F("m1(m1(m1(p)))"), fx::catalog_upto(3, 1).algebras(), LddtBounds{0, 2, 0})
                     .has_value());
}

TEST(Lddt, AttachedProofIsChecked) {
    const auto cat = fx::catalog_upto(3, 1).algebras();
    const auto good = parse_proof("1. m1(p) -> m1(p) ; ax1\n");
    const auto w = lddt_witness({}, {F("p")}, F("m1(p)"), cat, {}, good);
    ASSERT_TRUE(w && w->attached_proof);
    EXPECT_TRUE(w->attached_proof->ok);
    const auto other = parse_proof("1. p -> p ; ax1\n");
    const auto v = lddt_witness({}, {F("p")}, F("m1(p)"), cat, {}, other);
    ASSERT_TRUE(v && v->attached_proof);
    EXPECT_FALSE(v->attached_proof->ok);
}

TEST(Lddt, WitnessesAreSemanticallyValid) {
    // Whatever the search returns must itself be entailed, checked here by direct evaluation.
    const auto cat = fx::catalog_upto(3, 1).algebras();
    const auto w = lddt_witness({F("p -> q")}, {F("p"), F("m1(p)")}, F("m1(q)"), cat);
    ASSERT_TRUE(w.has_value());
    for (const auto& a : cat)
        for (Elem p = 0; p < a.size(); ++p)
            for (Elem q = 0; q < a.size(); ++q) {
                const Valuation v{{"p", p}, {"q", q}};
                if (eval_term(a, v, F("p -> q")) != a.one()) continue;
                EXPECT_EQ(eval_term(a, v, w->formula), a.one());
            }
}
