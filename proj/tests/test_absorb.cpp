#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "halin/halin.hpp"
#include "oracles.hpp"

using namespace halin;

TEST_CASE("precondition examples") {
    CHECK(check_absorb_preconditions(fixture::complete_absorb_instance(30, 2)));

    AbsorbInstance low = fixture::complete_absorb_instance(30, 2);
    for (Vertex s = 2; s < 25; ++s) low.F.remove_edge(0, s);
    const AbsorbCheck c = check_absorb_preconditions(low);
    CHECK(c.violated == 1);
    CHECK(c.witness == std::vector<Vertex>{0});

    // K6 with one vertex to absorb: two helpers share only three other helpers.
    CHECK(check_absorb_preconditions(fixture::complete_absorb_instance(6, 1)).violated == 2);
    CHECK(check_absorb_preconditions(fixture::complete_absorb_instance(11, 1)));
    CHECK(check_absorb_preconditions(fixture::complete_absorb_instance(5, 0)));
}

TEST_CASE("partition is validated") {
    AbsorbInstance inst = fixture::complete_absorb_instance(10, 1);
    inst.S.pop_back();
    CHECK_THROWS_AS(check_absorb_preconditions(inst), Error);
    inst = fixture::complete_absorb_instance(10, 1);
    inst.S.push_back(0);
    CHECK_THROWS_AS(check_absorb_preconditions(inst), Error);
    inst = fixture::complete_absorb_instance(10, 1);
    inst.R.push_back(10);
    CHECK_THROWS_AS(check_absorb_preconditions(inst), Error);
}

TEST_CASE("precondition check agrees with literal evaluation") {
    std::mt19937 rng(13);
    int seen[4] = {0, 0, 0, 0};
    for (int t = 0; t < 300; ++t) {
        const int r = 1 + static_cast<int>(rng() % 3);
        const int s = 6 * r + static_cast<int>(rng() % 25);
        const double p = std::uniform_real_distribution<double>(0.6, 1.0)(rng);
        AbsorbInstance inst{gen::random_graph(r + s, p, rng), {}, {}};
        for (Vertex v = 0; v < r + s; ++v) (v < r ? inst.R : inst.S).push_back(v);
        const int expected = oracle::absorb_violation(inst.F, inst.S, inst.R);
        REQUIRE(check_absorb_preconditions(inst).violated == expected);
        ++seen[expected];
    }
    // The sample exercises every outcome.
    for (int k = 0; k < 4; ++k) CHECK(seen[k] > 0);

    const AbsorbInstance dense = fixture::absorb_instance(3, 60, 0.9, rng);
    CHECK(oracle::absorb_violation(dense.F, dense.S, dense.R) == 0);
}

TEST_CASE("one vertex absorbed into a six-vertex ladder") {
    const AbsorbInstance inst = fixture::complete_absorb_instance(11, 1);
    const AbsorbResult res = absorb_detailed(inst);
    const Ladder& l = res.ladder;
    REQUIRE(l.order() == 6);
    const AbsorbBlock& b = res.blocks.at(0);
    CHECK(make_vertex_set(l.vertices()) == make_vertex_set({b.w, b.x1, b.x2, b.x3, b.y12, b.y23}));
    CHECK_FALSE(b.z.has_value());
    CHECK(oracle::is_ladder_in(inst.F, l.a_side(), l.b_side()));
    CHECK(oracle::count_ladder_embeddings(inst.F.induced(l.vertices()), 3) > 0);
    // Lowest-index greedy: w = 0 takes 1, 2, 3, then y12 = 4, y23 = 5.
    CHECK(l.a_side() == std::vector<Vertex>{4, 0, 5});
    CHECK(l.b_side() == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("two vertices absorbed into a fourteen-vertex ladder") {
    const AbsorbInstance inst = fixture::complete_absorb_instance(30, 2);
    const AbsorbResult res = absorb_detailed(inst);
    CHECK(res.ladder.order() == 14);
    CHECK(res.helpers().size() == 12);
    CHECK(validate_ladder(inst.F, res.ladder));
    CHECK(res.ladder.a(2) == 0);
    CHECK(res.ladder.a(6) == 1);
}

TEST_CASE("absorb edge cases") {
    CHECK(absorb(fixture::complete_absorb_instance(5, 0)).empty());
    CHECK_THROWS_WITH(absorb(fixture::complete_absorb_instance(6, 1)),
                      Catch::Matchers::ContainsSubstring("preconditions"));
}

TEST_CASE("absorbed ladders on random dense instances") {
    std::mt19937 rng(99);
    for (int t = 0; t < 40; ++t) {
        const int r = 1 + static_cast<int>(rng() % 4);
        const int s = 20 * r + 20 + static_cast<int>(rng() % 30);
        const AbsorbInstance inst = fixture::absorb_instance(r, s, 0.9, rng);
        const AbsorbResult res = absorb_detailed(inst);
        const Ladder& l = res.ladder;
        REQUIRE(l.order() == 8 * r - 2);
        REQUIRE(oracle::is_ladder_in(inst.F, l.a_side(), l.b_side()));

        const std::vector<Vertex> vs = l.vertices();
        const std::set<Vertex> on(vs.begin(), vs.end());
        for (Vertex w : inst.R) REQUIRE(on.count(w));
        const VertexSet helpers = res.helpers();
        REQUIRE(helpers.size() == static_cast<std::size_t>(7 * r - 2));
        for (Vertex h : helpers) REQUIRE(std::binary_search(inst.S.begin(), inst.S.end(), h));
        for (int i = 0; i < r; ++i) REQUIRE(l.a(4 * i + 2) == inst.R[static_cast<std::size_t>(i)]);
        for (const AbsorbBlock& b : res.blocks) {
            for (Vertex x : {b.x1, b.x2, b.x3}) REQUIRE(inst.F.has_edge(b.w, x));
            REQUIRE((inst.F.has_edge(b.y12, b.x1) && inst.F.has_edge(b.y12, b.x2)));
            REQUIRE((inst.F.has_edge(b.y23, b.x2) && inst.F.has_edge(b.y23, b.x3)));
        }
    }
}
