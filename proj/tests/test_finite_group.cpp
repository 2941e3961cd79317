#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordgap/errors.hpp"
#include "wordgap/finite_group.hpp"
#include "wordgap/util.hpp"

#include <set>

using namespace wordgap;

namespace {

// Independent closure oracle: plain set-based BFS over permutations, no
// canonical ordering, no tables.
std::size_t closure_size_oracle(int degree, const std::vector<std::vector<int>>& gens) {
    std::vector<int> id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;
    std::set<std::vector<int>> seen = {id};
    std::vector<std::vector<int>> work = {id};
    while (!work.empty()) {
        std::vector<int> cur = work.back();
        work.pop_back();
        for (const auto& g : gens) {
            std::vector<int> nxt(degree);
            for (int i = 0; i < degree; ++i) nxt[i] = g[static_cast<std::size_t>(cur[i])];
            if (seen.insert(nxt).second) work.push_back(nxt);
        }
    }
    return seen.size();
}

bool verify_homomorphism(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& map,
                         std::uint64_t seed = 17) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(G.order()) * G.order();
    if (pairs <= 10000) {
        for (int a = 0; a < G.order(); ++a)
            for (int b = 0; b < G.order(); ++b)
                if (map[G.mul(a, b)] != H.mul(map[a], map[b])) return false;
        return true;
    }
    Rng rng(seed);
    for (int t = 0; t < 100000; ++t) {
        const int a = static_cast<int>(rng.below(G.order()));
        const int b = static_cast<int>(rng.below(G.order()));
        if (map[G.mul(a, b)] != H.mul(map[a], map[b])) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("closure from generators") {
    FiniteGroup s3 = FiniteGroup::from_generators(3, {{1, 2, 0}, {1, 0, 2}});
    CHECK(s3.order() == 6);
    CHECK(closure_size_oracle(3, {{1, 2, 0}, {1, 0, 2}}) == 6);

    FiniteGroup triv = FiniteGroup::from_generators(1, {});
    CHECK(triv.order() == 1);

    // Alt(5) from a 5-cycle and a 3-cycle; cross-checked by the oracle.
    std::vector<std::vector<int>> a5 = {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}};
    CHECK(closure_size_oracle(5, a5) == 60);
    CHECK(FiniteGroup::from_generators(5, a5).order() == 60);
}

TEST_CASE("non-bijective generators and order cap are rejected") {
    CHECK_THROWS_AS(FiniteGroup::from_generators(3, {{0, 0, 1}}), ContractError);
    CHECK_THROWS_AS(FiniteGroup::from_generators(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}, "", 30),
                    ResourceError);
}

TEST_CASE("named groups have the documented orders") {
    CHECK(FiniteGroup::named("cyclic:12").order() == 12);
    CHECK(FiniteGroup::named("dihedral:16").order() == 16);  // order-16 convention
    CHECK(FiniteGroup::named("dihedral:4").order() == 4);
    CHECK(FiniteGroup::named("quaternion:8").order() == 8);
    CHECK(FiniteGroup::named("sym:4").order() == 24);
    CHECK(FiniteGroup::named("alt:5").order() == 60);
    CHECK(FiniteGroup::named("sz:2").order() == 20);
    CHECK(FiniteGroup::named("product:alt:5,cyclic:2").order() == 120);
    CHECK(FiniteGroup::named("product:sym:3,product:cyclic:2,cyclic:3").order() == 36);
    CHECK_THROWS_AS(FiniteGroup::named("dihedral:7"), ContractError);
    CHECK_THROWS_AS(FiniteGroup::named("psl2:6"), ContractError);
    CHECK_THROWS_AS(FiniteGroup::named("nosuch:3"), ContractError);
}

TEST_CASE("psl2 orders match q(q^2-1)/gcd(2,q-1)") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
        CAPTURE(q);
        const std::uint64_t expect = static_cast<std::uint64_t>(q) * (q - 1) * (q + 1) / (q % 2 ? 2 : 1);
        CHECK(FiniteGroup::named("psl2:" + std::to_string(q)).order() == static_cast<int>(expect));
    }
}

TEST_CASE("sz:2 is nonabelian and solvable") {
    FiniteGroup G = FiniteGroup::named("sz:2");
    CHECK_FALSE(G.is_abelian());
    CHECK(is_solvable(G));
}

TEST_CASE("group axioms hold for constructed groups") {
    for (const char* spec : {"cyclic:7", "dihedral:16", "quaternion:8", "sym:4", "alt:5",
                             "sz:2", "psl2:9", "product:sym:3,cyclic:4"}) {
        CAPTURE(spec);
        CHECK(check_group_axioms(FiniteGroup::named(spec)));
    }
}

TEST_CASE("center, derived subgroup, centralizer") {
    CHECK(center(FiniteGroup::named("sym:3")).count == 1);

    FiniteGroup d16 = FiniteGroup::named("dihedral:16");
    Subgroup der = derived_subgroup(d16);
    CHECK(der.count == 4);
    // cyclic of order 4
    bool cyclic = false;
    for (int g : der.elements())
        if (d16.element_order(g) == 4) cyclic = true;
    CHECK(cyclic);

    FiniteGroup q8 = FiniteGroup::named("quaternion:8");
    int minus_one = -1;
    for (int g = 1; g < 8; ++g)
        if (q8.element_order(g) == 2) minus_one = g;
    REQUIRE(minus_one > 0);
    CHECK(centralizer(q8, std::vector<int>{minus_one}).count == 8);
}

TEST_CASE("subgroup masks are closed under mul and inv") {
    for (const char* spec : {"sym:4", "dihedral:16", "quaternion:8", "sz:2"}) {
        FiniteGroup G = FiniteGroup::named(spec);
        for (const Subgroup& S : {center(G), derived_subgroup(G), G.trivial(), G.whole()}) {
            CHECK(is_subgroup(G, S));
        }
    }
}

TEST_CASE("quotients") {
    FiniteGroup d16 = FiniteGroup::named("dihedral:16");
    Subgroup z = center(d16);
    CHECK(z.count == 2);
    QuotientGroup q = quotient(d16, z);
    CHECK(q.group.order() == 8);
    CHECK(verify_homomorphism(d16, q.group, q.projection));

    // Quotient by the trivial subgroup is isomorphic to G (same table under
    // the identity projection).
    QuotientGroup qt = quotient(d16, d16.trivial());
    CHECK(qt.group.order() == 16);
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b)
            CHECK(qt.group.mul(qt.projection[a], qt.projection[b]) == qt.projection[d16.mul(a, b)]);

    FiniteGroup s4 = FiniteGroup::named("sym:4");
    Subgroup a4 = derived_subgroup(s4);
    CHECK(a4.count == 12);
    CHECK(quotient(s4, a4).group.order() == 2);

    Subgroup noncentral = subgroup_generated(s4, {s4.generators()[1]});
    CHECK_THROWS_AS(quotient(s4, noncentral), ContractError);
}

TEST_CASE("quotient projection is a homomorphism on larger groups") {
    FiniteGroup G = FiniteGroup::named("psl2:9");  // order 360; randomized pairs
    QuotientGroup q = quotient(G, G.trivial());
    CHECK(verify_homomorphism(G, q.group, q.projection));
}

TEST_CASE("minimal normal subgroups") {
    std::vector<Subgroup> mins = minimal_normal_subgroups(FiniteGroup::named("cyclic:12"));
    REQUIRE(mins.size() == 2);
    CHECK(mins[0].count == 2);
    CHECK(mins[1].count == 3);

    // A simple group has itself as the only minimal normal subgroup.
    std::vector<Subgroup> a5 = minimal_normal_subgroups(FiniteGroup::named("alt:5"));
    REQUIRE(a5.size() == 1);
    CHECK(a5[0].count == 60);

    FiniteGroup s4 = FiniteGroup::named("sym:4");
    std::vector<Subgroup> s4m = minimal_normal_subgroups(s4);
    REQUIRE(s4m.size() == 1);
    CHECK(s4m[0].count == 4);  // the Klein four subgroup
}

TEST_CASE("solvability and nilpotency") {
    CHECK_FALSE(is_solvable(FiniteGroup::named("alt:5")));
    CHECK(is_solvable(FiniteGroup::named("sym:4")));
    CHECK(is_nilpotent(FiniteGroup::named("dihedral:16")));
    CHECK_FALSE(is_nilpotent(FiniteGroup::named("sym:3")));
    CHECK(is_nilpotent(FiniteGroup::named("quaternion:8")));
}

TEST_CASE("coset representatives are canonical") {
    FiniteGroup s4 = FiniteGroup::named("sym:4");
    Subgroup v4 = minimal_normal_subgroups(s4)[0];
    std::vector<int> reps = coset_reps(s4, v4);
    CHECK(reps.size() == 6);
    CHECK(reps[0] == 0);
    for (std::size_t i = 1; i < reps.size(); ++i) CHECK(reps[i] > reps[i - 1]);
}

TEST_CASE("sylow subgroup of a nilpotent group") {
    FiniteGroup G = FiniteGroup::named("product:dihedral:8,cyclic:3");
    Subgroup s2 = sylow_of_nilpotent(G, 2);
    CHECK(s2.count == 8);
    Subgroup s3 = sylow_of_nilpotent(G, 3);
    CHECK(s3.count == 3);
    // The 2-elements of a non-nilpotent group need not close up.
    CHECK_THROWS_AS(sylow_of_nilpotent(FiniteGroup::named("sym:3"), 2), InternalCheckError);
}

TEST_CASE("automorphism groups of small groups") {
    CHECK(automorphism_perms(FiniteGroup::named("sym:3")).size() == 6);
    CHECK(automorphism_perms(FiniteGroup::named("cyclic:8")).size() == 4);
    CHECK(automorphism_perms(FiniteGroup::named("sz:2")).size() == 20);     // complete group
    CHECK(automorphism_perms(FiniteGroup::named("quaternion:8")).size() == 24);
    // Every enumerated map really is an automorphism.
    FiniteGroup f20 = FiniteGroup::named("sz:2");
    for (const auto& a : automorphism_perms(f20)) CHECK(verify_homomorphism(f20, f20, a));
}

TEST_CASE("cayley table input") {
    // C3 as a table.
    FiniteGroup c3 = FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, "c3");
    CHECK(c3.order() == 3);
    CHECK(c3.mul(1, 1) == 2);
    CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}, "bad"), ContractError);
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 0}, {1, 1}}, "bad"), ContractError);
}
