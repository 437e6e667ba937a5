#pragma once

// Seeded instance generators shared by the unit tests and the acceptance run.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "halin/halin.hpp"

namespace fixture {

using namespace halin;

/// Dense random instance satisfying the absorbing preconditions: G(n, p) with
/// R a random r-subset. Resamples until the preconditions hold.
inline AbsorbInstance absorb_instance(int r, int s_size, double p, std::mt19937& rng) {
    for (;;) {
        const int n = r + s_size;
        AbsorbInstance inst{gen::random_graph(n, p, rng), {}, {}};
        std::vector<Vertex> vs(static_cast<std::size_t>(n));
        std::iota(vs.begin(), vs.end(), 0);
        std::shuffle(vs.begin(), vs.end(), rng);
        inst.R.assign(vs.begin(), vs.begin() + r);
        inst.S = make_vertex_set({vs.begin() + r, vs.end()});
        if (check_absorb_preconditions(inst)) return inst;
    }
}

/// K_n with R = {0..r-1}.
inline AbsorbInstance complete_absorb_instance(int n, int r) {
    AbsorbInstance inst{gen::complete(n), {}, {}};
    for (Vertex v = 0; v < n; ++v) (v < r ? inst.R : inst.S).push_back(v);
    return inst;
}

/// Balanced bipartite graph on U = 0..m-1, V = m..2m-1 with minimum degree
/// at least min_deg: K_{m,m} with random edges removed while both ends stay above it.
inline Graph dense_bipartite(int m, int min_deg, std::mt19937& rng) {
    Graph g = gen::complete_bipartite(m, m);
    std::vector<Edge> pairs = g.edges();
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (const Edge& e : pairs)
        if (g.degree(e.u) > min_deg && g.degree(e.v) > min_deg && std::bernoulli_distribution(0.5)(rng))
            g.remove_edge(e.u, e.v);
    return g;
}

/// Pairwise vertex-disjoint random edges of g.
inline std::vector<Edge> disjoint_edges(const Graph& g, int count, std::mt19937& rng) {
    for (;;) {
        std::vector<Edge> all = g.edges();
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<Edge> out;
        for (const Edge& e : all) {
            if (static_cast<int>(out.size()) == count) break;
            if (std::none_of(out.begin(), out.end(), [&](const Edge& f) { return f.shares_endpoint(e); }))
                out.push_back(e);
        }
        if (static_cast<int>(out.size()) == count) return out;
    }
}

inline int ladder_regime_degree(int m) { return (7 * m + 7) / 8 + 1; }

}  // namespace fixture
