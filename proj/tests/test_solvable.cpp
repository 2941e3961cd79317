#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordgap/errors.hpp"
#include "wordgap/solvable.hpp"

using namespace wordgap;

namespace {

FiniteGroup c3wrc3() {
    return FiniteGroup::from_generators(
        9, {{1, 2, 0, 3, 4, 5, 6, 7, 8}, {3, 4, 5, 6, 7, 8, 0, 1, 2}}, "c3wrc3");
}

FiniteGroup sl23() {
    // Action on the 8 nonzero vectors of F3^2; (x,y) -> 3x+y-1.
    auto idx = [](int x, int y) { return 3 * x + y - 1; };
    std::vector<int> upper(8), lower(8);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            if (x == 0 && y == 0) continue;
            upper[idx(x, y)] = idx((x + y) % 3, y);
            lower[idx(x, y)] = idx(x, (x + y) % 3);
        }
    return FiniteGroup::from_generators(8, {upper, lower}, "sl23");
}

}  // namespace

TEST_CASE("verbal subgroups: shortcuts agree with plain enumeration") {
    for (const char* spec : {"sym:3", "sym:4", "dihedral:16", "sz:2"}) {
        CAPTURE(spec);
        FiniteGroup G = FiniteGroup::named(spec);
        for (const char* wname : {"comm", "metab", "gammaR:3"}) {
            Word w = Word::parse(wname);
            Subgroup fast = verbal_subgroup(G, w);
            // Oracle: collect every value and generate.
            const int d = w.rank();
            std::vector<int> args(static_cast<std::size_t>(d), 0);
            std::vector<int> values;
            std::vector<std::uint8_t> seen(static_cast<std::size_t>(G.order()), 0);
            while (true) {
                const int v = evaluate(w, G, args);
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    values.push_back(v);
                }
                int k = d - 1;
                while (k >= 0 && ++args[static_cast<std::size_t>(k)] == G.order()) {
                    args[static_cast<std::size_t>(k)] = 0;
                    --k;
                }
                if (k < 0) break;
            }
            CHECK(fast == subgroup_generated(G, values));
        }
    }
}

TEST_CASE("reduction to the minimal verbal context") {
    {
        VerbalContext ctx = reduce_to_minimal_verbal(FiniteGroup::named("dihedral:16"),
                                                     Word::parse("engel2"));
        CHECK(ctx.group.order() == 16);  // already minimal, unchanged
        CHECK(ctx.verbal.count == 2);
        CHECK(ctx.p == 2);
        CHECK(ctx.dim == 1);
        CHECK(ctx.trivial_action);
        CHECK(ctx.reduction_trail.empty());
        CHECK(ctx.reps.size() == 8);
    }
    {
        // dihedral:32 needs one quotient step down to dihedral:16.
        VerbalContext ctx = reduce_to_minimal_verbal(FiniteGroup::named("dihedral:32"),
                                                     Word::parse("engel2"));
        CHECK(ctx.group.order() == 16);
        CHECK(ctx.reduction_trail.size() == 1);
        CHECK(ctx.verbal.count == 2);
    }
    {
        VerbalContext ctx = reduce_to_minimal_verbal(FiniteGroup::named("sym:4"),
                                                     Word::parse("metab"));
        CHECK(ctx.group.order() == 24);
        CHECK(ctx.verbal.count == 4);  // the Klein four subgroup
        CHECK(ctx.p == 2);
        CHECK(ctx.dim == 2);
        CHECK_FALSE(ctx.trivial_action);
    }
    CHECK_THROWS_AS(reduce_to_minimal_verbal(FiniteGroup::named("alt:5"), Word::parse("comm")),
                    ContractError);
    // metab is an identity in dihedral groups (metacyclic, hence metabelian).
    CHECK_THROWS_AS(
        reduce_to_minimal_verbal(FiniteGroup::named("dihedral:16"), Word::parse("metab")),
        ContractError);
    // quaternion:8 is 2-Engel.
    CHECK_THROWS_AS(
        reduce_to_minimal_verbal(FiniteGroup::named("quaternion:8"), Word::parse("engel2")),
        ContractError);
}

TEST_CASE("exponent operators") {
    {
        // comm with identity representatives: both operators vanish.
        VerbalContext ctx = reduce_to_minimal_verbal(FiniteGroup::named("sym:3"),
                                                     Word::parse("comm"));
        ExponentOperators ops = derive_operators(ctx, {0, 0});
        CHECK(ops.all_zero());
        CHECK(ops.base_value == 0);
    }
    {
        // Central V absorbs every slot: the operators vanish on all of R^2.
        VerbalContext ctx = reduce_to_minimal_verbal(FiniteGroup::named("dihedral:16"),
                                                     Word::parse("engel2"));
        for (int x : {ctx.reps[1], ctx.reps[3]})
            for (int y : {ctx.reps[2], ctx.reps[5]})
                CHECK(derive_operators(ctx, {x, y}).all_zero());
    }
    {
        // Nontrivial action: the second slot sees the reflection coset.
        VerbalContext ctx = reduce_to_minimal_verbal(FiniteGroup::named("sym:3"),
                                                     Word::parse("engel2"));
        REQUIRE(ctx.reps.size() == 2);
        ExponentOperators with_identity = derive_operators(ctx, {ctx.reps[1], ctx.reps[0]});
        CHECK(with_identity.all_zero());
        ExponentOperators with_reflection = derive_operators(ctx, {ctx.reps[0], ctx.reps[1]});
        CHECK_FALSE(with_reflection.all_zero());
    }
    {
        VerbalContext ctx = reduce_to_minimal_verbal(FiniteGroup::named("sym:4"),
                                                     Word::parse("metab"));
        ExponentOperators ops = derive_operators(ctx, {ctx.reps[1], ctx.reps[2], ctx.reps[3], ctx.reps[4]});
        CHECK(ops.mats.size() == 4);
        CHECK(ops.dim == 2);
        CHECK(ops.p == 2);
    }
}

TEST_CASE("generic badness report") {
    {
        // Central verbal subgroup: every tuple is bad and the generic bound
        // degenerates to 1; the attained probability is exactly 3/4.
        VerbalContext ctx = reduce_to_minimal_verbal(FiniteGroup::named("dihedral:16"),
                                                     Word::parse("engel2"));
        BadnessReport rep = badness_report(ctx);
        CHECK(rep.bad == rep.space);
        CHECK(rep.attained.eq(3, 4));
        CHECK(rep.all_hold());
    }
    {
        VerbalContext ctx = reduce_to_minimal_verbal(FiniteGroup::named("sym:4"),
                                                     Word::parse("metab"));
        BadnessReport rep = badness_report(ctx);
        CHECK(rep.space == 1296);
        CHECK(rep.all_hold());
    }
}

TEST_CASE("engel badness: central branch") {
    {
        VerbalContext ctx = reduce_to_minimal_verbal(FiniteGroup::named("dihedral:16"),
                                                     Word::parse("engel2"));
        BadnessReport rep = engel_badness(ctx);
        CHECK(rep.branch == "engel-central-homomorphism");
        CHECK(rep.bad == 8);  // the rotation subgroup; exactly |G|/2
        CHECK(rep.attained.eq(3, 4));
        CHECK(rep.all_hold());
    }
    {
        // Class-3 wreath product: p = 3 exercises the equivalence claim and
        // its gamma_3 <= V consequence.
        VerbalContext ctx = reduce_to_minimal_verbal(c3wrc3(), Word::parse("engel2"));
        CHECK(ctx.p == 3);
        CHECK(ctx.trivial_action);
        BadnessReport rep = engel_badness(ctx);
        CHECK(rep.branch == "engel-central-homomorphism");
        CHECK(rep.bad == 27);
        CHECK(rep.attained.eq(5, 9));
        CHECK(rep.find("claim-equivalence") != nullptr);
        CHECK(rep.find("claim-gamma3-le-V") != nullptr);
        CHECK(rep.all_hold());
    }
}

TEST_CASE("engel badness: nontrivial action branch") {
    VerbalContext ctx = reduce_to_minimal_verbal(FiniteGroup::named("sym:3"),
                                                 Word::parse("engel2"));
    CHECK_FALSE(ctx.trivial_action);
    BadnessReport rep = engel_badness(ctx);
    CHECK(rep.branch == "engel-nontrivial-action");
    CHECK(rep.all_hold());
    CHECK(rep.find("bad-included-in-quadratic-strip") != nullptr);
    CHECK(rep.find("G-mod-C-not-p-group") != nullptr);
}

TEST_CASE("engel phi expansion law") {
    // Holds verbatim in the reduced central settings.
    FiniteGroup d16 = FiniteGroup::named("dihedral:16");
    for (int y = 0; y < d16.order(); ++y) CHECK(engel_phi(d16, y).expansion_law_checked);
    // y central makes phi trivial.
    PhiMap central = engel_phi(d16, 0);
    for (int v : central.image) CHECK(v == 0);
    // The law is specific to the reduced setting: sym:4 violates it.
    CHECK_THROWS_AS(
        [] {
            FiniteGroup s4 = FiniteGroup::named("sym:4");
            for (int y = 0; y < s4.order(); ++y) engel_phi(s4, y);
        }(),
        InternalCheckError);
}

TEST_CASE("restricted homomorphism claim holds exhaustively in reduced contexts") {
    for (const FiniteGroup& G : {FiniteGroup::named("dihedral:16"), c3wrc3()}) {
        Subgroup Gp = derived_subgroup(G);
        for (int y = 0; y < G.order(); ++y) {
            PhiMap phi = engel_phi(G, y);
            for (int g = 0; g < G.order(); ++g)
                for (int h : Gp.elements())
                    CHECK(phi.image[static_cast<std::size_t>(G.mul(g, h))] ==
                          G.mul(phi.image[static_cast<std::size_t>(g)],
                                phi.image[static_cast<std::size_t>(h)]));
        }
    }
}

TEST_CASE("metab badness: nontrivial action on sym:4") {
    VerbalContext ctx = reduce_to_minimal_verbal(FiniteGroup::named("sym:4"),
                                                 Word::parse("metab"));
    BadnessReport rep = metab_badness(ctx);
    CHECK(rep.branch == "metab-nontrivial-action");
    REQUIRE(rep.ugly.has_value());
    CHECK(*rep.ugly == 18);  // commuting probability 1/2 of S4/V4 = S3
    CHECK(rep.bad == 360);
    CHECK(rep.attained.eq(BigInt(172800), BigInt(331776)));
    CHECK(rep.all_hold());
}

TEST_CASE("metab badness: trivial action on sl(2,3)") {
    FiniteGroup G = sl23();
    REQUIRE(G.order() == 24);
    VerbalContext ctx = reduce_to_minimal_verbal(G, Word::parse("metab"));
    CHECK(ctx.verbal.count == 2);
    CHECK(ctx.trivial_action);
    BadnessReport rep = metab_badness(ctx);
    CHECK(rep.branch == "metab-trivial-action");
    CHECK(rep.bad == 5376);
    REQUIRE(rep.ugly.has_value());
    CHECK(*rep.ugly == 192);
    REQUIRE(rep.bad_prime.has_value());
    CHECK(*rep.bad_prime == 7680);
    CHECK(rep.attained.eq(BigInt(233472), BigInt(331776)));
    CHECK(rep.all_hold());
    // 13/16 bound is strict here: 5376/13824 = 7/18.
    const CheckedBound* b = rep.find("bad-le-13/16");
    REQUIRE(b != nullptr);
    CHECK(b->holds);
}

TEST_CASE("fiber bound check") {
    FiniteGroup c4 = FiniteGroup::named("cyclic:4");
    // g -> g^2 is a homomorphism onto the order-2 subgroup; fiber is half.
    std::vector<int> squares(4);
    for (int g = 0; g < 4; ++g) squares[static_cast<std::size_t>(g)] = c4.mul(g, g);
    CHECK(fiber_bound_check(c4, squares, c4.whole()) == FiberVerdict::BoundHolds);

    // A trivial map violates the hypothesis.
    std::vector<int> trivial(4, 0);
    CHECK(fiber_bound_check(c4, trivial, c4.whole()) == FiberVerdict::HypothesisViolated);

    // A non-homomorphism violates the hypothesis.
    std::vector<int> scramble = {1, 0, 3, 2};
    CHECK(fiber_bound_check(c4, scramble, c4.whole()) == FiberVerdict::HypothesisViolated);

    // engel phi on dihedral:16 with a reflection: nontrivial homomorphism.
    FiniteGroup d16 = FiniteGroup::named("dihedral:16");
    const int s = d16.generators()[1];
    PhiMap phi = engel_phi(d16, s);
    CHECK(fiber_bound_check(d16, phi.image, d16.whole()) == FiberVerdict::BoundHolds);
    // ... and with a rotation phi is trivial.
    PhiMap rot = engel_phi(d16, d16.generators()[0]);
    CHECK(fiber_bound_check(d16, rot.image, d16.whole()) == FiberVerdict::HypothesisViolated);
}

TEST_CASE("gamma recursion ladder") {
    {
        GammaRecursionReport rep = gamma_recursion_check(FiniteGroup::named("dihedral:8"), 2);
        REQUIRE(rep.steps.size() == 1);
        CHECK(rep.steps[0].prob.eq(5, 8));  // sharp at the bound
        CHECK(rep.steps[0].within);
        CHECK(rep.bad_identity_holds);
        CHECK(rep.bad_count == 2);  // the center
    }
    {
        GammaRecursionReport rep = gamma_recursion_check(FiniteGroup::named("dihedral:16"), 3);
        REQUIRE(rep.steps.size() == 2);
        CHECK(rep.steps[1].prob.eq(13, 16));  // sharp at 1 - 3/2^4
        CHECK(rep.all_within());
        CHECK(rep.bad_count == 160);
        CHECK(rep.bad_expected == 160);
    }
    CHECK_THROWS_AS(gamma_recursion_check(FiniteGroup::named("cyclic:12"), 2), ContractError);
    // dihedral:8 has class 2, so gamma_3 is an identity there.
    CHECK_THROWS_AS(gamma_recursion_check(FiniteGroup::named("dihedral:8"), 3), ContractError);
}

TEST_CASE("badness report json rendering") {
    VerbalContext ctx = reduce_to_minimal_verbal(FiniteGroup::named("dihedral:16"),
                                                 Word::parse("engel2"));
    BadnessReport rep = engel_badness(ctx);
    const std::string json = rep.to_json();
    CHECK(json.find("\"branch\"") != std::string::npos);
    CHECK(json.find("engel-central-homomorphism") != std::string::npos);
    CHECK(json.find("probability-assembly") != std::string::npos);
}
