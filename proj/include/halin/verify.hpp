#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "halin/connectivity.hpp"
#include "halin/cycles.hpp"
#include "halin/graph.hpp"

namespace halin {

/// Witness that a graph (or a spanning subgraph of it) is Halin: the edges of
/// a homeomorphically irreducible spanning tree plus the cyclic order of its leaves.
struct HalinCertificate {
    std::vector<Edge> tree_edges;
    std::vector<Vertex> leaf_cycle;

    std::vector<Edge> cycle_edges() const {
        std::vector<Edge> out;
        const std::size_t k = leaf_cycle.size();
        for (std::size_t i = 0; i < k; ++i) out.push_back({leaf_cycle[i], leaf_cycle[(i + 1) % k]});
        return out;
    }
};

/// The underlying tree of a certificate as a graph on n vertices.
inline Graph tree_graph(int n, const HalinCertificate& cert) {
    return Graph::from_edges(n, cert.tree_edges);
}

/// T ∪ C for a certificate over n vertices.
inline Graph halin_graph_of(int n, const HalinCertificate& cert) {
    Graph h = tree_graph(n, cert);
    for (const Edge& e : cert.cycle_edges()) h.add_edge(e);
    return h;
}

inline std::vector<Vertex> leaves_of(const Graph& tree) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < tree.order(); ++v)
        if (tree.degree(v) == 1) out.push_back(v);
    return out;
}

/// Homeomorphically irreducible tree: at least 4 vertices, no vertex of degree 2.
inline bool is_hit(const Graph& tree) {
    if (!is_tree(tree)) throw Error("input is not a tree");
    if (tree.order() < 4) return false;
    for (Vertex v = 0; v < tree.order(); ++v)
        if (tree.degree(v) == 2) return false;
    return true;
}

/// Whether some plane embedding of `tree` visits its leaves in the cyclic
/// order `order`: for every edge, the leaves on either side form a contiguous arc.
inline bool leaf_order_planar(const Graph& tree, const std::vector<Vertex>& order) {
    if (!is_tree(tree)) throw Error("input is not a tree");
    std::vector<Vertex> leaves = leaves_of(tree);
    {
        std::vector<Vertex> sorted(order);
        std::sort(sorted.begin(), sorted.end());
        if (sorted != leaves) throw Error("order is not a permutation of the tree's leaves");
    }
    const int n = tree.order();
    const std::size_t k = order.size();
    if (k <= 3) return true;

    // Root the tree; every vertex's subtree owns a contiguous range of
    // leaf ids in DFS order.
    std::vector<int> leaf_id(static_cast<std::size_t>(n), -1);
    std::vector<int> lo(static_cast<std::size_t>(n), 0);
    std::vector<int> hi(static_cast<std::size_t>(n), 0);
    int next_leaf = 0;
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        lo[static_cast<std::size_t>(v)] = next_leaf;
        if (tree.degree(v) == 1 && parent >= 0) leaf_id[static_cast<std::size_t>(v)] = next_leaf++;
        for (Vertex w : tree.neighbors(v))
            if (w != parent) dfs(w, v);
        hi[static_cast<std::size_t>(v)] = next_leaf;
    };
    Vertex root = 0;
    while (root < n && tree.degree(root) == 1) ++root;
    if (root == n) return true;  // a single edge
    dfs(root, -1);

    for (Vertex v = 0; v < n; ++v) {
        if (v == root) continue;
        auto inside = [&](Vertex leaf) {
            const int id = leaf_id[static_cast<std::size_t>(leaf)];
            return id >= lo[static_cast<std::size_t>(v)] && id < hi[static_cast<std::size_t>(v)];
        };
        int boundaries = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (inside(order[i]) != inside(order[(i + 1) % k])) ++boundaries;
        if (boundaries > 2) return false;
    }
    return true;
}

enum class VerifyMode {
    /// The certificate must live inside G and span it.
    subgraph,
    /// Additionally E(G) must be exactly the tree edges plus the cycle edges.
    full,
};

/// The clause of the Halin definition a certificate failed.
enum class Clause { none, spanning_tree, hit, cycle_edges, leaf_cover, planarity, exact_edges };

inline char clause_letter(Clause c) {
    switch (c) {
        case Clause::spanning_tree: return 'a';
        case Clause::hit: return 'b';
        case Clause::cycle_edges: return 'c';
        case Clause::leaf_cover: return 'd';
        case Clause::planarity: return 'e';
        case Clause::exact_edges: return 'f';
        case Clause::none: break;
    }
    return '-';
}

struct Verdict {
    bool ok = true;
    Clause clause = Clause::none;
    std::string message;

    explicit operator bool() const noexcept { return ok; }

    /// "HALIN" or "NOT-HALIN <letter>: <message>".
    std::string summary() const {
        if (ok) return "HALIN";
        return std::string("NOT-HALIN ") + clause_letter(clause) + ": " + message;
    }
};

/// Checks the certificate clause by clause and reports the first failure.
inline Verdict verify_halin(const Graph& g, const HalinCertificate& cert,
                            VerifyMode mode = VerifyMode::subgraph) {
    auto fail = [](Clause c, std::string msg) { return Verdict{false, c, std::move(msg)}; };
    const int n = g.order();

    // (a) the tree edges lie in G and form a spanning tree
    Graph tree(n);
    for (const Edge& e : cert.tree_edges) {
        if (!g.has_edge(e)) return fail(Clause::spanning_tree, "tree edge " + to_string(e) + " not in graph");
        if (!tree.add_edge(e)) return fail(Clause::spanning_tree, "repeated tree edge " + to_string(e));
    }
    if (!is_tree(tree)) return fail(Clause::spanning_tree, "tree edges do not form a spanning tree");

    // (b) homeomorphically irreducible
    if (!is_hit(tree)) {
        if (n < 4) return fail(Clause::hit, "fewer than 4 vertices");
        return fail(Clause::hit, "tree has a vertex of degree 2");
    }

    // (c) consecutive leaves are adjacent in G
    if (cert.leaf_cycle.size() < 3) return fail(Clause::cycle_edges, "leaf cycle has fewer than 3 vertices");
    for (const Edge& e : cert.cycle_edges())
        if (!g.has_edge(e)) return fail(Clause::cycle_edges, "cycle edge " + to_string(e) + " not in graph");

    // (d) the cycle lists every leaf exactly once
    std::vector<Vertex> leaves = leaves_of(tree);
    std::vector<Vertex> listed(cert.leaf_cycle);
    std::sort(listed.begin(), listed.end());
    if (listed != leaves) return fail(Clause::leaf_cover, "leaf cycle does not list exactly the tree leaves");

    // (e) the cyclic order is realised by a plane embedding of the tree
    if (!leaf_order_planar(tree, cert.leaf_cycle))
        return fail(Clause::planarity, "leaf order is not realisable by a plane embedding");

    // (f) nothing else
    if (mode == VerifyMode::full &&
        g.size() != cert.tree_edges.size() + cert.leaf_cycle.size())
        return fail(Clause::exact_edges, "graph has edges outside tree and leaf cycle");

    return {};
}

struct HalinPropertyReport {
    bool hamiltonian = false;
    bool hamiltonian_connected = false;
    bool almost_pancyclic = false;
    bool pancyclic = false;
    bool tree_has_degree3_vertex = false;
    std::set<int> cycle_lengths;
    /// Lengths in 3..n with no cycle.
    std::vector<int> missing_lengths;
};

/// Brute-force check of the classical Halin properties on the certified graph T ∪ C.
inline HalinPropertyReport check_halin_properties(const Graph& g, const HalinCertificate& cert,
                                                  int budget = kHamiltonianConnectedBudget) {
    if (Verdict v = verify_halin(g, cert); !v) throw Error("not a Halin certificate: " + v.summary());
    const int n = g.order();
    if (n > budget) throw BudgetExceeded("exceeds brute-force budget");
    const Graph h = halin_graph_of(n, cert);

    HalinPropertyReport report;
    report.cycle_lengths = cycle_spectrum(h, n);
    for (int len = 3; len <= n; ++len)
        if (!report.cycle_lengths.count(len)) report.missing_lengths.push_back(len);
    report.hamiltonian = report.cycle_lengths.count(n) > 0;
    report.hamiltonian_connected = hamiltonian_connected_brute(h, n);
    report.pancyclic = report.missing_lengths.empty();
    report.almost_pancyclic = report.pancyclic ||
                              (report.missing_lengths.size() == 1 && report.missing_lengths[0] % 2 == 0);
    const Graph tree = tree_graph(n, cert);
    for (Vertex v = 0; v < n; ++v)
        if (tree.degree(v) == 3) report.tree_has_degree3_vertex = true;
    return report;
}

}  // namespace halin
