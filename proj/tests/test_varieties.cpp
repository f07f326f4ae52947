#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ririg;
using fx::A;
using fx::O;
using fx::Z;

namespace {

std::vector<ModalRirig> rc_members(std::size_t n) {
    std::vector<ModalRirig> out;
    for (const auto& a : fx::mixed_catalog(n))
        if (in_RC(a)) out.push_back(a);
    return out;
}

}  // namespace

TEST(Terms, ParseAndPrint) {
    const auto t = parse_term("v0 * (v1 | v0) -> m1(v2)");
    EXPECT_EQ(t.kind(), Term::Kind::imp);
    EXPECT_EQ(parse_term(t.to_string()), t);
    EXPECT_EQ(parse_term("a -> b -> c"), parse_term("a -> (b -> c)"));
    EXPECT_EQ(parse_term("a | b * c"), parse_term("a | (b * c)"));
    EXPECT_EQ(parse_term("a | b -> c"), parse_term("(a | b) -> c"));
    EXPECT_EQ(parse_term("m(a) * b"), parse_term("(m(a)) * b"));
    EXPECT_THROW(parse_term("a -> "), ParseError);
    EXPECT_THROW(parse_term("(a"), ParseError);
    EXPECT_THROW(parse_equation("a"), ParseError);
    EXPECT_THROW(parse_equation("a = b = c"), ParseError);
}

TEST(Terms, EvalExamples) {
    const ModalRirig g(fx::g3());
    EXPECT_EQ(eval_term(g, {{"v0", A}}, parse_term("v0 -> v0")), O);
    EXPECT_EQ(eval_term(fx::g3delta(), {{"v0", A}}, parse_term("m(v0)")), Z);
    EXPECT_EQ(eval_term(g, {{"v0", A}, {"v1", Z}}, parse_term("v0 * (v1 | v0)")), A);
    EXPECT_THROW(eval_term(g, {{"v0", A}}, parse_term("v1")), PreconditionFailed);
    EXPECT_THROW(eval_term(g, {{"v0", A}}, parse_term("m(v0)")), SignatureMismatch);
}

TEST(Terms, EvalMatchesRecursiveDefinition) {
    std::mt19937_64 rng(0x161);
    const auto a = fx::g3delta();
    std::function<Elem(const Term&, const Valuation&)> rec = [&](const Term& t, const Valuation& v) -> Elem {
        switch (t.kind()) {
            case Term::Kind::zero: return a.zero();
            case Term::Kind::one: return a.one();
            case Term::Kind::var: return v.at(t.name());
            case Term::Kind::modal: return a.modals[0][rec(t.arg(), v)];
            case Term::Kind::join: return a.base.join(rec(t.lhs(), v), rec(t.rhs(), v));
            case Term::Kind::prod: return a.base.prod(rec(t.lhs(), v), rec(t.rhs(), v));
            case Term::Kind::imp: return a.base.imp(rec(t.lhs(), v), rec(t.rhs(), v));
        }
        return 0;
    };
    for (int i = 0; i < 500; ++i) {
        const auto t = random_term(rng, {"x", "y"}, {"m"}, 5);
        for (Elem x = 0; x < 3; ++x)
            for (Elem y = 0; y < 3; ++y) {
                const Valuation v{{"x", x}, {"y", y}};
                EXPECT_EQ(eval_term(a, v, t), rec(t, v));
            }
    }
}

TEST(Holds, Examples) {
    const ModalRirig g(fx::g3());
    EXPECT_TRUE(holds(g, parse_equation("(v0 -> v1) | (v1 -> v0) = 1")).holds);
    const auto r = holds(fx::g3delta(), parse_equation("m(v0) = v0"));
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.countervaluation.has_value());
    EXPECT_EQ(*r.countervaluation, (Valuation{{"v0", A}}));
    for (const auto& a : fx::small_named_catalog()) EXPECT_TRUE(holds(a, parse_equation("v0 = v0")).holds);
}

TEST(Holds, CountervaluationIsLexicographicallyFirst) {
    const ModalRirig g(fx::g3());
    // v0 -> v1 = 1 fails first at v0=a, v1=0.
    const auto r = holds(g, parse_equation("v0 -> v1 = 1"));
    ASSERT_FALSE(r.holds);
    EXPECT_EQ(*r.countervaluation, (Valuation{{"v0", A}, {"v1", Z}}));
}

TEST(Holds, ValuationCap) {
    const ModalRirig l(fx::lukasiewicz_chain(5));
    const auto eq = parse_equation("v0 * v1 * v2 * v3 = v3 * v2 * v1 * v0");
    EXPECT_THROW(holds(l, eq), CapExceeded);
    EXPECT_TRUE(holds(l, eq, no_valuation_cap).holds);
    EXPECT_TRUE(holds(ModalRirig(fx::lukasiewicz_chain(4)), eq).holds);
}

TEST(Membership, Contractive) {
    EXPECT_TRUE(is_contractive(fx::g3delta()));
    EXPECT_TRUE(is_contractive(fx::g3id()));
    EXPECT_FALSE(is_contractive(fx::with_modal(fx::g3(), {O, A, O})));
    const auto w = contractivity_violation(fx::with_modal(fx::g3(), {O, A, O}));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->elements, (std::vector<Elem>{Z}));
}

TEST(Membership, RC) {
    EXPECT_TRUE(in_RC(fx::g3delta()));
    EXPECT_TRUE(in_RC(fx::g3id()));
    EXPECT_TRUE(satisfies_prelinearity(fx::b2xb2_id()));
    EXPECT_TRUE(in_RC(fx::b2xb2_id()));
    // Cm fails for a modal that collapses both atoms of B2xB2 but not their join.
    const auto bad = fx::with_modal(fx::b2xb2_bare(), {0, 0, 0, 3});
    EXPECT_TRUE(validate_modal(bad).passed());
    EXPECT_FALSE(satisfies_cm(bad));
    EXPECT_FALSE(in_RC(bad));
}

TEST(Membership, Chains) {
    EXPECT_TRUE(is_chain(ModalRirig(fx::g3())));
    EXPECT_TRUE(is_chain(ModalRirig(fx::b2())));
    EXPECT_FALSE(is_chain(ModalRirig(fx::b2xb2_bare())));
    EXPECT_EQ(incomparable_pair(ModalRirig(fx::b2xb2_bare())), (std::optional<std::pair<Elem, Elem>>{{1, 2}}));
}

TEST(Membership, AgreeWithEquationalChecks) {
    const auto p = parse_equation("(x -> y) | (y -> x) = 1");
    for (const auto& a : fx::mixed_catalog(4)) {
        EXPECT_EQ(satisfies_prelinearity(a), holds(a, p).holds);
        if (a.sig.size() == 1) {
            EXPECT_EQ(is_contractive(a), holds(a, parse_equation("m1(x) | x = x")).holds);
            EXPECT_EQ(satisfies_cm(a), holds(a, parse_equation("m1(x | y) | (m1(x) | m1(y)) = m1(x) | m1(y)")).holds);
        }
    }
}

TEST(Variety, SubdirectlyIrreducibleMembersOfRCAreChains) {
    std::size_t members = 0;
    for (const auto& a : rc_members(4)) {
        if (a.size() < 2) continue;
        if (!oracle::subdirectly_irreducible(a)) continue;
        ++members;
        EXPECT_TRUE(is_chain(a));
    }
    EXPECT_GT(members, 0u);
}

TEST(Variety, ContractiveChainsSatisfyPAndCm) {
    for (const auto& a : fx::mixed_catalog(4))
        if (is_chain(a) && is_contractive(a)) {
            EXPECT_TRUE(satisfies_prelinearity(a));
            EXPECT_TRUE(satisfies_cm(a));
        }
}

TEST(JoinSplitting, Examples) {
    const ModalSignature sig({"m"});
    const Block m{{0}};
    EXPECT_EQ(format_block(sig, join_splitting_block(m, m)), "m.m.m");
    EXPECT_EQ(join_splitting_block(Block{}, Block{}), Block{});
    const auto d = fx::g3delta();
    const auto q = join_splitting_block(m, m);
    EXPECT_EQ(apply_block(d, q, d.join(A, Z)), Z);
    EXPECT_FALSE(join_splitting_violation(d, q, m, m).has_value());
}

TEST(JoinSplitting, HoldsOnEveryRCMemberForBlocksUpToTwo) {
    const auto members = rc_members(4);
    ASSERT_FALSE(members.empty());
    for (const auto& a : members) {
        const auto blocks = enumerate_blocks(a.sig, 2);
        for (const auto& m : blocks)
            for (const auto& n : blocks) {
                const auto q = join_splitting_block(m, n);
                EXPECT_FALSE(join_splitting_violation(a, q, m, n).has_value());
            }
    }
}

TEST(JoinSplitting, TwoLetterBoundOnRCMembers) {
    for (const auto& a : rc_members(4)) EXPECT_FALSE(two_letter_bound_violation(a).has_value());
    // Contractivity alone is not enough; the bound also uses (Cm).
    std::size_t contractive_failures = 0;
    for (const auto& a : fx::mixed_catalog(4))
        if (is_contractive(a) && two_letter_bound_violation(a)) {
            ++contractive_failures;
            EXPECT_FALSE(satisfies_cm(a));
        }
    EXPECT_GT(contractive_failures, 0u);
    EXPECT_TRUE(two_letter_bound_violation(fx::with_modal(fx::g3(), {Z, O, O})).has_value());
}

TEST(FgIntersection, Examples) {
    EXPECT_TRUE(fg_intersection_check(fx::g3delta()).holds);
    EXPECT_TRUE(fg_intersection_check(fx::g3id()).holds);
    EXPECT_TRUE(fg_intersection_check(ModalRirig(fx::b2())).holds);
    EXPECT_EQ(generate_filter(ModalRirig(fx::b2()), {1}).mask,
              generate_filter(ModalRirig(fx::b2()), {0}).mask & generate_filter(ModalRirig(fx::b2()), {1}).mask);
    EXPECT_THROW(fg_intersection_check(fx::with_modal(fx::g3(), {Z, O, O})), PreconditionFailed);
}

TEST(FgIntersection, HoldsOnRCMembers) {
    for (const auto& a : rc_members(4)) EXPECT_TRUE(fg_intersection_check(a).holds);
}

TEST(FgIntersection, PrincipalCongruenceJoin) {
    // The congruence generated by {(1,y) : y in Y} has Fg(Y) as its filter.
    for (const auto& a : fx::mixed_catalog(4))
        for (std::uint64_t ys = 0; ys < (std::uint64_t{1} << a.size()); ++ys) {
            const SubsetMask y(a.size(), ys);
            std::vector<std::pair<Elem, Elem>> pairs;
            for (Elem e : y.elements()) pairs.emplace_back(a.one(), e);
            Congruence c = Congruence::identity(a.size());
            for (Elem e : y.elements()) c = join(a, c, cg(a, a.one(), e));
            EXPECT_EQ(c, congruence_closure(a, pairs));
            EXPECT_EQ(filter_from_theta(a, c).mask, generate_filter(a, y).mask);
        }
}

TEST(Classify, Flags) {
    const auto c = classify(fx::g3delta());
    EXPECT_TRUE(c.simple && c.si && c.chain && c.contractive && c.prelinear && c.cm && c.in_rc);
    EXPECT_FALSE(c.trivial);
    const auto p = classify(fx::b2xb2_id());
    EXPECT_FALSE(p.simple || p.si || p.chain);
    EXPECT_TRUE(p.in_rc);
    EXPECT_TRUE(classify(ModalRirig(fx::goedel_chain(1))).trivial);
}
