#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordgap/errors.hpp"
#include "wordgap/fq.hpp"

#include <vector>

using namespace wordgap;

TEST_CASE("modulus is the lexicographically smallest monic irreducible") {
    CHECK(Fq(2, 1).modulus() == std::vector<int>{0, 1});        // x
    CHECK(Fq(2, 2).modulus() == std::vector<int>{1, 1, 1});     // x^2+x+1
    CHECK(Fq(2, 3).modulus() == std::vector<int>{1, 1, 0, 1});  // x^3+x+1
    CHECK(Fq(2, 4).modulus() == std::vector<int>{1, 1, 0, 0, 1});
    CHECK(Fq(3, 2).modulus() == std::vector<int>{1, 0, 1});     // x^2+1
    CHECK(Fq(3, 3).modulus() == std::vector<int>{1, 2, 0, 1});  // x^3+2x+1
}

TEST_CASE("least primitive elements") {
    CHECK(Fq(2, 1).omega() == 1);
    CHECK(Fq(3, 1).omega() == 2);
    CHECK(Fq(5, 1).omega() == 2);
    CHECK(Fq(7, 1).omega() == 3);
    CHECK(Fq(2, 2).omega() == 2);  // x
    CHECK(Fq(3, 2).omega() == 4);  // 1 + x
    CHECK(Fq(3, 3).omega() == 3);  // x
}

TEST_CASE("field axioms hold on the full field") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u, 81u}) {
        CAPTURE(q);
        Fq F = Fq::of_order(q);
        REQUIRE(F.q() == q);
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
            }
        }
        // Associativity and distributivity on all triples.
        bool ok = true;
        for (std::uint32_t a = 0; a < q && ok; ++a)
            for (std::uint32_t b = 0; b < q && ok; ++b)
                for (std::uint32_t c = 0; c < q && ok; ++c) {
                    ok = F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)) &&
                         F.add(F.add(a, b), c) == F.add(a, F.add(b, c)) &&
                         F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c));
                }
        CHECK(ok);
    }
}

TEST_CASE("omega generates the multiplicative group") {
    for (std::uint32_t q : {3u, 4u, 5u, 8u, 9u, 27u, 81u}) {
        Fq F = Fq::of_order(q);
        CHECK(F.mul_order(F.omega()) == q - 1);
        // No smaller value is primitive.
        for (std::uint32_t a = 1; a < F.omega(); ++a) CHECK(F.mul_order(a) < q - 1);
    }
}

TEST_CASE("frobenius is a field automorphism of order n") {
    for (std::uint32_t q : {4u, 8u, 9u, 27u, 81u}) {
        Fq F = Fq::of_order(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(F.frob(a) == F.pow(a, F.p()));
            CHECK(F.frob(a, F.degree()) == a);
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b)));
                CHECK(F.frob(F.mul(a, b)) == F.mul(F.frob(a), F.frob(b)));
            }
        }
    }
}

TEST_CASE("rejects invalid orders") {
    CHECK_THROWS_AS(Fq::of_order(6), ContractError);
    CHECK_THROWS_AS(Fq::of_order(12), ContractError);
    CHECK_THROWS_AS(Fq(4, 1), ContractError);
    CHECK_THROWS_AS(Fq(2, 17), ContractError);  // 2^17 > 2^16
}
