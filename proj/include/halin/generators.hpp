#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "halin/graph.hpp"
#include "halin/verify.hpp"

namespace halin::gen {

inline Graph complete(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n) {
    if (n < 3) throw Error("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

/// W_k: hub 0 joined to the rim cycle 1..k.
inline Graph wheel(int k) {
    if (k < 3) throw Error("wheel needs a rim of at least 3 vertices");
    Graph g(k + 1);
    for (Vertex i = 1; i <= k; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i == k ? 1 : i + 1);
    }
    return g;
}

/// K_{p,q} with sides 0..p-1 and p..p+q-1.
inline Graph complete_bipartite(int p, int q) {
    Graph g(p + q);
    for (Vertex u = 0; u < p; ++u)
        for (Vertex v = p; v < p + q; ++v) g.add_edge(u, v);
    return g;
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

/// Erdős–Rényi G(n,p).
template <class Rng>
Graph random_graph(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// Random graph whose complement has maximum degree at most `max_missing`,
/// i.e. minimum degree at least n-1-max_missing. Each non-edge is proposed
/// with probability `keep_missing` in a random order.
template <class Rng>
Graph random_dense_graph(int n, int max_missing, double keep_missing, Rng& rng) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::bernoulli_distribution coin(keep_missing);
    std::vector<int> missing(static_cast<std::size_t>(n), 0);
    Graph g(n);
    for (const Edge& e : pairs) {
        auto& mu = missing[static_cast<std::size_t>(e.u)];
        auto& mv = missing[static_cast<std::size_t>(e.v)];
        if (mu < max_missing && mv < max_missing && coin(rng)) {
            ++mu;
            ++mv;
        } else {
            g.add_edge(e);
        }
    }
    return g;
}

/// Random balanced bipartite graph on U = 0..m-1, V = m..2m-1 in which every
/// vertex misses at most `max_missing` vertices of the opposite side.
template <class Rng>
Graph random_dense_bipartite(int m, int max_missing, double keep_missing, Rng& rng) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = m; v < 2 * m; ++v) pairs.push_back({u, v});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::bernoulli_distribution coin(keep_missing);
    std::vector<int> missing(static_cast<std::size_t>(2 * m), 0);
    Graph g(2 * m);
    for (const Edge& e : pairs) {
        auto& mu = missing[static_cast<std::size_t>(e.u)];
        auto& mv = missing[static_cast<std::size_t>(e.v)];
        if (mu < max_missing && mv < max_missing && coin(rng)) {
            ++mu;
            ++mv;
        } else {
            g.add_edge(e);
        }
    }
    return g;
}

/// Uniformly random labelled tree on n vertices via a Prüfer sequence.
template <class Rng>
Graph random_tree(int n, Rng& rng) {
    Graph g(n);
    if (n <= 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (int& c : code) c = pick(rng);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) ++degree[static_cast<std::size_t>(c)];
    for (int c : code) {
        for (Vertex leaf = 0; leaf < n; ++leaf) {
            if (degree[static_cast<std::size_t>(leaf)] == 1) {
                g.add_edge(leaf, c);
                --degree[static_cast<std::size_t>(leaf)];
                --degree[static_cast<std::size_t>(c)];
                break;
            }
        }
    }
    Vertex a = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] != 1) continue;
        if (a < 0) {
            a = v;
        } else {
            g.add_edge(a, v);
            break;
        }
    }
    return g;
}

struct HalinInstance {
    Graph graph;
    HalinCertificate certificate;
};

/// Random Halin graph on at most max_n >= 4 vertices: a star whose leaves are
/// repeatedly expanded into 2..4 children in place along the leaf cycle, then
/// relabelled at random.
template <class Rng>
HalinInstance random_halin(int max_n, Rng& rng) {
    if (max_n < 4) throw Error("a Halin graph needs at least 4 vertices");
    std::uniform_int_distribution<int> star_leaves(3, std::min(max_n - 1, 6));
    const int k = star_leaves(rng);
    std::vector<Edge> tree;
    std::vector<Vertex> cycle;
    for (Vertex v = 1; v <= k; ++v) {
        tree.push_back({0, v});
        cycle.push_back(v);
    }
    int n = k + 1;
    std::bernoulli_distribution stop(0.15);
    while (n + 2 <= max_n && !stop(rng)) {
        std::uniform_int_distribution<std::size_t> pick(0, cycle.size() - 1);
        const std::size_t at = pick(rng);
        std::uniform_int_distribution<int> kids(2, std::min(4, max_n - n));
        const int c = kids(rng);
        const Vertex parent = cycle[at];
        std::vector<Vertex> children;
        for (int i = 0; i < c; ++i) {
            tree.push_back({parent, n});
            children.push_back(n++);
        }
        cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(at));
        cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(at), children.begin(), children.end());
    }
    std::vector<Vertex> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    auto L = [&](Vertex v) { return label[static_cast<std::size_t>(v)]; };
    HalinInstance out{Graph(n), {}};
    for (const Edge& e : tree) out.certificate.tree_edges.push_back({L(e.u), L(e.v)});
    for (Vertex v : cycle) out.certificate.leaf_cycle.push_back(L(v));
    out.graph = halin_graph_of(n, out.certificate);
    return out;
}

}  // namespace halin::gen
