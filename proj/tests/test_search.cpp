#include <random>

#include "catch_amalgamated.hpp"
#include "halin/halin.hpp"
#include "oracles.hpp"

using namespace halin;

TEST_CASE("search examples") {
    const SearchResult k4 = find_spanning_halin(gen::complete(4));
    REQUIRE(k4.found());
    CHECK(k4.certificate->tree_edges.size() == 3);
    CHECK(k4.certificate->leaf_cycle.size() == 3);
    CHECK(verify_halin(gen::complete(4), *k4.certificate, VerifyMode::full));

    CHECK(find_spanning_halin(gen::complete_bipartite(3, 3)).status == SearchStatus::none);

    Graph k5 = gen::complete(5);
    k5.remove_edge(1, 2);
    k5.remove_edge(3, 4);
    const SearchResult w4 = find_spanning_halin(k5);
    REQUIRE(w4.found());
    CHECK(verify_halin(k5, *w4.certificate));
    // The only spanning Halin graph here is the wheel with hub 0.
    const Graph tree = tree_graph(5, *w4.certificate);
    CHECK(tree.degree(0) == 4);
}

TEST_CASE("search boundaries") {
    CHECK(find_spanning_halin(gen::complete(3)).status == SearchStatus::none);
    CHECK_THROWS_AS(find_spanning_halin(gen::complete(13)), BudgetExceeded);
    SearchBudget wide;
    wide.max_vertices = 17;
    CHECK_THROWS_AS(find_spanning_halin(gen::complete(5), wide), Error);

    SearchBudget tiny;
    tiny.prune = false;
    tiny.max_nodes = 5;
    const SearchResult r = find_spanning_halin(gen::complete_bipartite(4, 4), tiny);
    CHECK(r.status == SearchStatus::timeout);
    CHECK_FALSE(r.found());
    CHECK(std::string(to_string(r.status)) == "timeout");
}

TEST_CASE("spanning tree enumeration counts labelled trees") {
    for (int k = 1; k <= 6; ++k) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) edges.push_back({u, v});
        long long count = 0;
        detail::for_each_spanning_tree(k, edges, [&](const std::vector<int>&) {
            ++count;
            return false;
        });
        long long cayley = 1;
        for (int i = 0; i < k - 2; ++i) cayley *= k;
        CHECK(count == cayley);
    }
}

TEST_CASE("internal sets are ordered by size") {
    const auto sets = detail::internal_set_candidates(gen::complete(7));
    REQUIRE_FALSE(sets.empty());
    for (std::size_t i = 1; i < sets.size(); ++i)
        REQUIRE(std::popcount(sets[i - 1]) <= std::popcount(sets[i]));
    CHECK(std::popcount(sets.front()) == 1);
}

TEST_CASE("search agrees with the spanning tree oracle") {
    std::mt19937 rng(17);
    int yes = 0, no = 0;
    for (int t = 0; t < 120; ++t) {
        const int n = 4 + static_cast<int>(rng() % 4);
        const double p = std::uniform_real_distribution<double>(0.45, 0.95)(rng);
        const Graph g = gen::random_graph(n, p, rng);
        const bool expected = oracle::has_spanning_halin(g);
        const SearchResult r = find_spanning_halin(g);
        REQUIRE(r.status != SearchStatus::timeout);
        REQUIRE(r.found() == expected);
        (expected ? yes : no)++;
    }
    CHECK(yes > 10);
    CHECK(no > 10);
}

TEST_CASE("pruning and threading do not change the verdict") {
    std::mt19937 rng(18);
    for (int t = 0; t < 60; ++t) {
        const int n = 5 + static_cast<int>(rng() % 4);
        const Graph g = gen::random_graph(n, 0.7, rng);
        SearchBudget plain, unpruned, parallel;
        unpruned.prune = false;
        parallel.threads = 4;
        const SearchResult a = find_spanning_halin(g, plain);
        const SearchResult b = find_spanning_halin(g, unpruned);
        const SearchResult c = find_spanning_halin(g, parallel);
        REQUIRE(a.status == b.status);
        REQUIRE(a.status == c.status);
        if (a.found()) {
            REQUIRE(a.certificate->tree_edges == c.certificate->tree_edges);
            REQUIRE(a.certificate->leaf_cycle == c.certificate->leaf_cycle);
        }
    }
}

TEST_CASE("adding edges never loses a spanning Halin subgraph") {
    std::mt19937 rng(19);
    for (int t = 0; t < 60; ++t) {
        const int n = 5 + static_cast<int>(rng() % 4);
        Graph g = gen::random_graph(n, 0.6, rng);
        const bool before = find_spanning_halin(g).found();
        for (int k = 0; k < 3; ++k) {
            const Vertex u = static_cast<Vertex>(rng() % n);
            const Vertex v = static_cast<Vertex>((u + 1 + static_cast<int>(rng() % (n - 1))) % n);
            g.add_edge(u, v);
        }
        if (before) REQUIRE(find_spanning_halin(g).found());
    }
}

TEST_CASE("sharpness") {
    for (int n : {4, 6, 8}) CHECK(sharpness_probe(n));
    CHECK_THROWS_AS(sharpness_probe(5), Error);
}

TEST_CASE("threshold arithmetic") {
    CHECK(dirac_threshold(5) == 3);
    CHECK(dirac_threshold(6) == 4);
    CHECK(dirac_threshold(7) == 4);
    CHECK(max_missing_degree(7) == 2);
    CHECK(max_missing_degree(4) == 0);
}

TEST_CASE("dense graph enumeration") {
    int count = 0;
    for_each_dense_graph(5, 1, [&](const Graph& g) {
        CHECK(g.min_degree() >= 3);
        ++count;
    });
    CHECK(count == 26);  // matchings of K5
    count = 0;
    for_each_dense_graph(6, 1, [&](const Graph&) { ++count; });
    CHECK(count == 76);  // matchings of K6
}

TEST_CASE("experiment on small orders") {
    ExperimentOptions opt;
    opt.n_min = 4;
    opt.n_max = 7;
    opt.samples_per_n = 10;
    opt.sharpness_probes = true;
    const ExperimentReport rep = dirac_experiment(opt);
    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.rows[0].sampled == 1);
    CHECK(rep.rows[0].succeeded == 1);
    CHECK(rep.rows[1].sampled == 26);
    CHECK(rep.rows[1].succeeded == 26);
    CHECK(rep.rows[2].exhaustive);
    CHECK_FALSE(rep.rows[3].exhaustive);
    for (const ExperimentRow& row : rep.rows) CHECK(row.sampled == row.succeeded + row.failed + row.timed_out);
    REQUIRE(rep.probes.size() == 2);
    for (const ExperimentRow& p : rep.probes) CHECK(p.failed == 1);
}
