#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "jseg/semidirect.hpp"
#include "test_support.hpp"

using namespace jseg;

TEST_CASE("construction validates both coordinates against the level") {
    CHECK_NOTHROW(GElement(1, VMap{{-1, 1}}, transposition(-1, 0)));
    CHECK_THROWS_AS(GElement(1, VMap{{-2}}, ShiftedPermutation{}), std::invalid_argument);
    CHECK_THROWS_AS(GElement(1, VMap{}, transposition(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(GElement(1, VMap{}, shift_map(1)), std::invalid_argument);
    CHECK_THROWS_AS(GElement(0, VMap{}, ShiftedPermutation{}), std::invalid_argument);
}

TEST_CASE("twisted product and inverse") {
    GElement a{1, VMap{{0}}, transposition(0, 1)};
    GElement b{1, VMap{{1}}, transposition(-1, 0)};
    GElement ab = gmul(a, b);
    // the map part of b is twisted by the permutation part of a
    CHECK(ab.v == vmul(VMap{{0}}, conj(transposition(0, 1), VMap{{1}})));
    CHECK(ab.v.is_trivial());
    CHECK(ab.h == compose(transposition(0, 1), transposition(-1, 0)));

    GElement ai = ginv(a);
    CHECK(gmul(a, ai).is_identity());
    CHECK(gmul(ai, a).is_identity());
}

TEST_CASE("group laws hold at several levels") {
    jseg::testing::Rng rng(7);
    for (long long i : {1, 2, 4}) {
        for (int n = 0; n < 150; ++n) {
            GElement a = jseg::testing::random_g(rng, i);
            GElement b = jseg::testing::random_g(rng, i);
            GElement c = jseg::testing::random_g(rng, i);
            CHECK(gmul(gmul(a, b), c) == gmul(a, gmul(b, c)));
            CHECK(gmul(a, g_identity(i)) == a);
            CHECK(gmul(ginv(a), a).is_identity());
            CHECK(ginv(gmul(a, b)) == gmul(ginv(b), ginv(a)));
        }
    }
}

TEST_CASE("elements at distinct levels never multiply") {
    GElement a{1, VMap{}, ShiftedPermutation{}};
    GElement b{2, VMap{}, ShiftedPermutation{}};
    CHECK_THROWS_WITH_AS(gmul(a, b), "level mismatch", std::invalid_argument);
}

TEST_CASE("enumerations have the right orders") {
    CHECK(enumerate_V_i(1).size() == 8);
    CHECK(enumerate_G(1).size() == 48);   // 2^3 * 3!
    CHECK(enumerate_K(1).size() == 12);   // 2 * 3!
    CHECK(enumerate_G(2).size() == 3840); // 2^5 * 5!
    CHECK(enumerate_K(2).size() == 240);  // 2 * 5!
    CHECK_THROWS_WITH_AS(enumerate_G(3), "enumeration too large", std::length_error);
    CHECK_THROWS_WITH_AS(enumerate_K(4), "enumeration too large", std::length_error);

    std::vector<GElement> g1 = enumerate_G(1);
    std::vector<GElement> sorted = g1;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::unique(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("the all-window map is central in its own group") {
    for (long long i : {1, 2}) {
        GElement zi{i, z(i), ShiftedPermutation{}};
        for (const GElement& g : enumerate_G(i))
            CHECK(gmul(g, zi) == gmul(zi, g));
    }
}

TEST_CASE("shared subgroup membership at both designated levels") {
    GElement inner{1, z(1), transposition(-1, 1)};
    CHECK(in_K(inner, 1));
    CHECK(in_K(GElement{2, z(1), transposition(-1, 1)}, 1));
    CHECK(in_K(g_identity(2), 1));
    CHECK_FALSE(in_K(GElement{1, VMap{{0}}, ShiftedPermutation{}}, 1));
    CHECK_FALSE(in_K(GElement{2, z(2), ShiftedPermutation{}}, 1));
    CHECK_FALSE(in_K(GElement{2, VMap{}, transposition(1, 2)}, 1));
    CHECK_THROWS_WITH_AS(in_K(GElement{3, VMap{}, ShiftedPermutation{}}, 1),
                         "K_i not a designated subgroup of this factor",
                         std::invalid_argument);
}

TEST_CASE("transfer retags without changing the data") {
    GElement a{1, z(1), transposition(0, 1)};
    GElement up = transfer_K(a, 1, 2);
    CHECK(up.level == 2);
    CHECK(up.v == a.v);
    CHECK(up.h == a.h);
    CHECK(transfer_K(up, 1, 1) == a);
    CHECK_THROWS_WITH_AS(transfer_K(GElement{1, VMap{{0}}, ShiftedPermutation{}}, 1, 2),
                         "not in K_i", std::invalid_argument);
    CHECK_THROWS_AS(transfer_K(a, 1, 3), std::invalid_argument);
}

TEST_CASE("transfer is a homomorphism on the shared subgroup") {
    for (const GElement& a : enumerate_K(1)) {
        for (const GElement& b : enumerate_K(1)) {
            CHECK(transfer_K(gmul(a, b), 1, 2) ==
                  gmul(transfer_K(a, 1, 2), transfer_K(b, 1, 2)));
        }
    }
}

TEST_CASE("intersection of consecutive shared subgroups inside the upper group") {
    // Inside G_2 the elements of K_2 that also lie in K_1 are exactly the
    // embedded window-1 permutations.
    std::vector<GElement> meet;
    for (const GElement& a : enumerate_K(2)) {
        if (in_K(a, 1))
            meet.push_back(a);
    }
    std::sort(meet.begin(), meet.end());
    std::vector<GElement> expected;
    for (const ShiftedPermutation& h : enumerate_H_i(1))
        expected.emplace_back(2, VMap{}, h);
    std::sort(expected.begin(), expected.end());
    CHECK(meet == expected);
    CHECK(meet.size() == 6);
}
