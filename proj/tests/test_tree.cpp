#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "jseg/certify.hpp"
#include "jseg/io.hpp"
#include "jseg/tree.hpp"
#include "test_support.hpp"

using namespace jseg;

TEST_CASE("coset counts follow the index formulas") {
    CHECK(coset_count(1, Side::A) == 4);
    CHECK(coset_count(1, Side::B) == 320);
    CHECK(coset_count(2, Side::A) == 16);
    CHECK(coset_count(2, Side::B) == 2688);
    CHECK(factor_order(1) == 48);
    CHECK(factor_order(2) == 3840);
    CHECK(coset_count(1, Side::A) * 12 == factor_order(1));
    CHECK(coset_count(1, Side::B) * 12 == factor_order(2));
}

TEST_CASE("projected ball sizes at the pinned cases") {
    CHECK(projected_ball_vertices(1, 0) == 1);
    CHECK(projected_ball_vertices(1, 1) == 5);
    CHECK(projected_ball_vertices(1, 3) == 5109);
    CHECK(projected_ball_vertices(2, 2) == 43009);
    CHECK(projected_ball_vertices(3, 2) == 1179649);
}

TEST_CASE("representative lists are canonical, sorted and complete") {
    for (Side side : {Side::A, Side::B}) {
        std::vector<GElement> reps = coset_reps(1, side);
        CHECK(reps.size() == coset_count(1, side));
        CHECK(reps.front().is_identity());
        for (std::size_t k = 0; k < reps.size(); ++k) {
            CHECK(coset_rep(reps[k], 1) == reps[k]); // already canonical
            if (k + 1 < reps.size())
                CHECK(reps[k] < reps[k + 1]);
        }
    }
    CHECK(coset_reps(2, Side::A).size() == 16);
}

TEST_CASE("canonical representative agrees with brute-force coset minima") {
    // Group the elements of each factor into K_1-cosets by the membership
    // test a^-1 b in K_1, then compare each coset minimum with coset_rep.
    for (long long level : {1, 2}) {
        std::map<GElement, std::vector<GElement>> cosets;
        for (const GElement& a : enumerate_G(level)) {
            bool placed = false;
            for (auto& [rep, members] : cosets) {
                if (in_K(gmul(ginv(rep), a), 1)) {
                    members.push_back(a);
                    placed = true;
                    break;
                }
            }
            if (!placed)
                cosets[a].push_back(a);
        }
        Side side = (level == 1) ? Side::A : Side::B;
        CHECK(cosets.size() == coset_count(1, side));
        std::vector<GElement> canonical;
        for (const auto& [first, members] : cosets) {
            GElement least = *std::min_element(members.begin(), members.end());
            for (const GElement& a : members)
                CHECK(coset_rep(a, 1) == least);
            canonical.push_back(least);
        }
        std::sort(canonical.begin(), canonical.end());
        CHECK(canonical == coset_reps(1, side));
    }
}

TEST_CASE("base vertices and vertex equality") {
    TreeVertex a = base_vertex(1, Side::A);
    TreeVertex b = base_vertex(1, Side::B);
    CHECK(vertex_equal(a, a));
    CHECK_FALSE(vertex_equal(a, b));
    // translating the representative by a factor element fixes the coset
    jseg::testing::Rng rng(5);
    GElement g = jseg::testing::random_g(rng, 1);
    TreeVertex moved{Side::A, word_from(1, Side::A, g)};
    CHECK(vertex_equal(a, moved));
    TreeVertex crossed{Side::B, word_from(1, Side::A, g)};
    CHECK(vertex_equal(b, crossed) == in_K(g, 1));
}

TEST_CASE("radius-one ball around the base") {
    Ball ball = build_ball(1, 1);
    REQUIRE(ball.vertices.size() == 5);
    CHECK(ball.edges.size() == 4);
    const Ball::Vertex& base = ball.vertices[ball.base_index];
    CHECK(base.side == Side::A);
    CHECK(base.rep.empty());
    CHECK(base.depth == 0);
    std::size_t a_count = 0;
    for (const Ball::Vertex& v : ball.vertices)
        a_count += (v.side == Side::A) ? 1 : 0;
    CHECK(a_count == 1); // every neighbour of an A-vertex is a B-vertex
    for (const auto& [u, v] : ball.edges)
        CHECK((u == ball.base_index || v == ball.base_index));
}

TEST_CASE("ball layers match the degree recursion and vertices are distinct") {
    Ball ball = build_ball(1, 2);
    REQUIRE(ball.vertices.size() == 1281);
    CHECK(ball.edges.size() == 1280);
    std::map<std::size_t, std::size_t> layer;
    for (const Ball::Vertex& v : ball.vertices)
        ++layer[v.depth];
    CHECK(layer[0] == 1);
    CHECK(layer[1] == 4);
    CHECK(layer[2] == 1276);
    for (const Ball::Vertex& v : ball.vertices) {
        if (v.parent != Ball::npos) {
            CHECK(ball.vertices[v.parent].depth + 1 == v.depth);
            CHECK(ball.vertices[v.parent].side == other_side(v.side));
        }
    }
    // ids are sorted by printed representative
    for (std::size_t k = 0; k + 1 < ball.vertices.size(); ++k) {
        std::string a = to_string(ball.vertices[k].rep);
        std::string b = to_string(ball.vertices[k + 1].rep);
        CHECK(a <= b);
    }
    // sampled pairs denote distinct cosets
    jseg::testing::Rng rng(17);
    for (int n = 0; n < 300; ++n) {
        std::size_t x = rng() % ball.vertices.size();
        std::size_t y = rng() % ball.vertices.size();
        if (x == y)
            continue;
        CHECK_FALSE(vertex_equal(TreeVertex{ball.vertices[x].side, ball.vertices[x].rep},
                                 TreeVertex{ball.vertices[y].side, ball.vertices[y].rep}));
    }
    // the full radius-one ball sits inside, pairwise distinct
    Ball small = build_ball(1, 1);
    for (std::size_t x = 0; x < small.vertices.size(); ++x) {
        for (std::size_t y = x + 1; y < small.vertices.size(); ++y)
            CHECK_FALSE(
                vertex_equal(TreeVertex{small.vertices[x].side, small.vertices[x].rep},
                             TreeVertex{small.vertices[y].side, small.vertices[y].rep}));
    }
}

TEST_CASE("distances follow depths") {
    Ball ball = build_ball(1, 3);
    CHECK(ball.vertices.size() == 5109);
    jseg::testing::Rng rng(23);
    for (int n = 0; n < 500; ++n) {
        std::size_t x = rng() % ball.vertices.size();
        CHECK(tree_distance(ball, ball.base_index, x) == ball.vertices[x].depth);
        CHECK(tree_distance(ball, x, x) == 0);
        std::size_t y = rng() % ball.vertices.size();
        CHECK(tree_distance(ball, x, y) == tree_distance(ball, y, x));
    }
    CHECK_THROWS_AS(tree_distance(ball, 0, ball.vertices.size()), std::invalid_argument);
}

TEST_CASE("exports are deterministic and well formed") {
    Ball ball = build_ball(1, 1);
    std::string text = export_ball(ball);
    CHECK(text == export_ball(build_ball(1, 1)));
    CHECK(text.find("A w@1[]") != std::string::npos);
    CHECK(text.find("B w@1[]") != std::string::npos);
    std::size_t edge_lines = 0;
    for (std::size_t at = text.find("edge "); at != std::string::npos;
         at = text.find("edge ", at + 1))
        ++edge_lines;
    CHECK(edge_lines == ball.edges.size());
}

TEST_CASE("factor elements fix their base vertex") {
    Ball ball = build_ball(1, 2);
    jseg::testing::Rng rng(29);
    for (int n = 0; n < 20; ++n) {
        GElement a = jseg::testing::random_g(rng, 1);
        CHECK(displacement(word_from(1, Side::A, a), base_vertex(1, Side::A), ball) == 0);
        GElement b = jseg::testing::random_g(rng, 2);
        CHECK(displacement(word_from(1, Side::B, b), base_vertex(1, Side::B), ball) == 0);
    }
    // an A-element outside the shared subgroup moves the B-base two steps
    GElement a = jseg::testing::random_non_k(rng, 1, 1);
    CHECK(displacement(word_from(1, Side::A, a), base_vertex(1, Side::B), ball) == 2);
    GElement k{1, z(1), transposition(0, 1)};
    CHECK(displacement(word_from(1, Side::A, k), base_vertex(1, Side::B), ball) == 0);
}

TEST_CASE("a translation witness is displaced by its translation length") {
    VMap phi{{0, 1}};
    ShiftedPermutation t = transposition(-1, 0);
    VMap psi{{-1, 0}};
    ShiftedPermutation s = transposition(-2, -1);
    Word g{1, {Syllable{Side::A, GElement{1, phi, t}},
               Syllable{Side::B, GElement{2, psi, s}}}};
    CHECK(classify(g).kind == Classification::Kind::loxodromic);
    Ball ball = build_ball(1, 3);
    CHECK(displacement(g, base_vertex(1, Side::A), ball) == 2);
    CHECK(displacement(winv(g), base_vertex(1, Side::A), ball) == 2);
    // squaring leaves the radius-3 ball around the base
    CHECK(displacement(wmul(g, g), base_vertex(1, Side::A), ball) == std::nullopt);
}

TEST_CASE("classification by cyclic length") {
    CHECK(classify(Word{1}).kind == Classification::Kind::elliptic);
    jseg::testing::Rng rng(31);
    GElement a = jseg::testing::random_g(rng, 1);
    CHECK(classify(word_from(1, Side::A, a)).kind == Classification::Kind::elliptic);
    Word w = jseg::testing::random_reduced_word(rng, 1, Side::A, 2);
    Classification c = classify(w);
    CHECK(c.kind == Classification::Kind::loxodromic);
    CHECK(c.translation_length == 2);
    Classification c2 = classify(wmul(w, w));
    CHECK(c2.translation_length == 4);
    // a conjugate of an elliptic element is elliptic even when long as a word
    Word u = jseg::testing::random_word(rng, 1, 3);
    Word conj_word = wmul(wmul(u, word_from(1, Side::A, a)), winv(u));
    CHECK(classify(conj_word).kind == Classification::Kind::elliptic);
}

TEST_CASE("budget refusals carry the projected size") {
    CHECK_THROWS_AS(build_ball(1, 4), std::length_error); // radius cap
    CHECK_THROWS_WITH_AS(build_ball(3, 2),
                         "ball too large: projected 1179649 vertices exceeds budget 200000",
                         std::length_error);
    Limits tight = default_limits();
    tight.ball_vertex_budget = 100;
    CHECK_THROWS_AS(build_ball(1, 2, tight), std::length_error);
    CHECK_NOTHROW(build_ball(1, 1, tight));
}

TEST_CASE("joint stabilizer census") {
    CHECK(joint_stabilizer_census(1, 0) == 48);
    CHECK(joint_stabilizer_census(1, 1) == 12);
    std::size_t prev = 12;
    for (long long d = 1; d <= 4; ++d) {
        std::size_t count = joint_stabilizer_census(1, d);
        CHECK(count <= prev);
        CHECK(count >= 1); // the identity always fixes the geodesic
        prev = count;
    }
    CHECK(joint_stabilizer_census(2, 0) == 3840);
    CHECK(joint_stabilizer_census(2, 1) == 240);
    CHECK_THROWS_WITH_AS(joint_stabilizer_census(1, 5), "census budget exceeded",
                         std::length_error);
    CHECK_THROWS_WITH_AS(joint_stabilizer_census(3, 1), "census budget exceeded",
                         std::length_error);
}

TEST_CASE("vertices outside the ball are reported") {
    Ball ball = build_ball(1, 1);
    jseg::testing::Rng rng(41);
    Word far = jseg::testing::random_reduced_word(rng, 1, Side::A, 4);
    TreeVertex outside{Side::A, far};
    CHECK(find_vertex(ball, outside) == std::nullopt);
    CHECK_THROWS_WITH_AS(displacement(Word{1}, outside, ball), "vertex not in ball",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(displacement(Word{2}, base_vertex(2, Side::A), ball),
                         "level mismatch", std::invalid_argument);
}
