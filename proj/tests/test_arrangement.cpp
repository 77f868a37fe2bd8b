#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arratlas/arrangement.hpp"
#include "arratlas/formulas.hpp"

#include <random>

using namespace arratlas;

namespace {

Polynomial poly(std::vector<long long> ascending) {
    std::vector<BigInt> cs;
    for (long long c : ascending) cs.emplace_back(c);
    return Polynomial(std::move(cs));
}

TypeCSubarrangement random_subarrangement(std::mt19937_64& rng, int n) {
    std::bernoulli_distribution coin(0.5);
    TypeCSubarrangement arr(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (coin(rng)) arr.add(Hyperplane::sum_zero(i, j));
            if (coin(rng)) arr.add(Hyperplane::diff_zero(i, j));
        }
        if (coin(rng)) arr.add(Hyperplane::coord_zero(i));
    }
    return arr;
}

}  // namespace

TEST_CASE("threshold_arrangement sizes") {
    CHECK(threshold_arrangement(2).hyperplanes() ==
          std::vector<Hyperplane>{Hyperplane::sum_zero(1, 2)});
    CHECK(threshold_arrangement(0).size() == 0);
    CHECK(threshold_arrangement(4).size() == 6);
}

TEST_CASE("box") {
    CHECK(box(threshold_arrangement(2)).size() == 5);
    const TypeCSubarrangement boxed_line = box(TypeCSubarrangement(1));
    CHECK(boxed_line.hyperplanes() ==
          std::vector<Hyperplane>{Hyperplane::box_low(1), Hyperplane::box_high(1)});
    CHECK(box(threshold_arrangement(3)).size() == 9);
    CHECK_THROWS_AS(box(box(threshold_arrangement(2))), AlreadyBoxed);
}

TEST_CASE("hyperplane ordering is canonical") {
    TypeCSubarrangement arr(3);
    arr.add(Hyperplane::box_high(1));
    arr.add(Hyperplane::coord_zero(2));
    arr.add(Hyperplane::sum_zero(1, 3));
    arr.add(Hyperplane::diff_zero(1, 2));
    arr.add(Hyperplane::sum_zero(1, 2));
    arr.add(Hyperplane::sum_zero(1, 2));  // duplicate ignored
    const auto& hs = arr.hyperplanes();
    REQUIRE(hs.size() == 5);
    CHECK(hs[0] == Hyperplane::sum_zero(1, 2));
    CHECK(hs[1] == Hyperplane::sum_zero(1, 3));
    CHECK(hs[2] == Hyperplane::diff_zero(1, 2));
    CHECK(hs[3] == Hyperplane::coord_zero(2));
    CHECK(hs[4] == Hyperplane::box_high(1));
}

TEST_CASE("count_complement examples") {
    CHECK(count_complement(threshold_arrangement(3), 7) == 216);  // (7-1)^3
    CHECK(count_complement(TypeCSubarrangement(2), 5) == 25);
    CHECK(count_complement(box(threshold_arrangement(2)), 7) == 20);
    CHECK_THROWS_AS(count_complement(threshold_arrangement(2), 4), EvenModulus);
    CHECK_THROWS_AS(count_complement(threshold_arrangement(2), 1), EvenModulus);
}

TEST_CASE("count_complement sharding is exact") {
    const TypeCSubarrangement arr = box(threshold_arrangement(3));
    for (int q : {9, 11, 13})
        CHECK(count_complement(arr, q, 1) == count_complement(arr, q, 3));
}

TEST_CASE("char_poly known polynomials") {
    CHECK(char_poly(threshold_arrangement(2)) == poly({0, -1, 1}));
    CHECK(char_poly(TypeCSubarrangement(3)) == poly({0, 0, 0, 1}));
    CHECK(char_poly(box(threshold_arrangement(3))) == poly({-27, 27, -9, 1}));
}

TEST_CASE("char_poly independent of starting modulus") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const TypeCSubarrangement arr = random_subarrangement(rng, 3);
        const Polynomial a = char_poly(arr, 9);
        const Polynomial b = char_poly(arr, 13);
        CHECK(a == b);
    }
}

TEST_CASE("char_poly monic of degree n") {
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const TypeCSubarrangement arr = random_subarrangement(rng, n);
            const Polynomial chi = char_poly(arr);
            CHECK(chi.degree() == n);
            CHECK(chi.leading_coefficient() == 1);
        }
    }
}

TEST_CASE("shift law on random sub-arrangements") {
    std::mt19937_64 rng(23);
    for (int n = 2; n <= 3; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const TypeCSubarrangement arr = random_subarrangement(rng, n);
            CHECK(char_poly(box(arr)) == poly_shift(char_poly(arr), BigInt(2)));
        }
    }
}

TEST_CASE("regions and bounded regions") {
    CHECK(regions(box(threshold_arrangement(2))) == 12);
    CHECK(bounded_regions(box(threshold_arrangement(2))) == 2);
    CHECK(regions(threshold_arrangement(2)) == 2);
    CHECK(regions(box(threshold_arrangement(4))) == 436);
    for (int n = 2; n <= 5; ++n)
        CHECK(bounded_regions(box(threshold_arrangement(n))) == regions(threshold_arrangement(n)));
}

TEST_CASE("arrangement json round trip") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        TypeCSubarrangement arr = random_subarrangement(rng, 4);
        if (trial % 2 == 0) arr = box(arr);
        CHECK(arrangement_from_json(arrangement_to_json(arr)) == arr);
    }
    const std::string js = arrangement_to_json(box(threshold_arrangement(2)));
    CHECK(js.find("\"boxed\":true") != std::string::npos);
    CHECK(js.find("\"kind\":\"sum\"") != std::string::npos);
    CHECK(js.find("\"kind\":\"box_low\"") != std::string::npos);
}
