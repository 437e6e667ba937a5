#pragma once

// Deliberately naive reference implementations. None of them reuse the
// library's algorithms: they enumerate permutations, labelled trees and
// rotation systems directly.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "halin/graph.hpp"

namespace oracle {

using halin::Edge;
using halin::Graph;
using halin::Vertex;

inline std::vector<Vertex> common_neighbors(const Graph& g, const std::vector<Vertex>& u,
                                            const std::vector<Vertex>& s) {
    std::vector<Vertex> out;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (std::find(s.begin(), s.end(), x) == s.end()) continue;
        bool all = true;
        for (Vertex y : u) all = all && g.has_edge(x, y);
        if (all) out.push_back(x);
    }
    return out;
}

/// Every a_i b_j with |i-j| <= 1 is an edge, listed straight from the definition.
inline bool is_ladder_in(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    if (a.size() != b.size()) return false;
    std::set<Vertex> seen(a.begin(), a.end());
    seen.insert(b.begin(), b.end());
    if (seen.size() != 2 * a.size()) return false;
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(i - j) <= 1 && !g.has_edge(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

/// Number of ordered placements of L_n into G (each unlabelled copy counted
/// with its symmetries), by trying every injective map.
inline long long count_ladder_embeddings(const Graph& g, int n) {
    std::vector<Vertex> pool(static_cast<std::size_t>(g.order()));
    std::iota(pool.begin(), pool.end(), 0);
    long long count = 0;
    std::vector<Vertex> chosen;
    std::vector<bool> used(pool.size(), false);
    std::function<void()> rec = [&] {
        if (static_cast<int>(chosen.size()) == 2 * n) {
            std::vector<Vertex> a(chosen.begin(), chosen.begin() + n), b(chosen.begin() + n, chosen.end());
            if (is_ladder_in(g, a, b)) ++count;
            return;
        }
        for (Vertex v : pool) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            chosen.push_back(v);
            rec();
            chosen.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec();
    return count;
}

/// Hamiltonian (a,b)-path existence by trying every ordering of the interior.
inline bool has_ham_path(const Graph& g, Vertex a, Vertex b) {
    const int n = g.order();
    if (n == 1) return a == b;
    if (a == b) return false;
    std::vector<Vertex> mid;
    for (Vertex v = 0; v < n; ++v)
        if (v != a && v != b) mid.push_back(v);
    do {
        Vertex prev = a;
        bool ok = true;
        for (Vertex v : mid) {
            ok = ok && g.has_edge(prev, v);
            prev = v;
        }
        if (ok && g.has_edge(prev, b)) return true;
    } while (std::next_permutation(mid.begin(), mid.end()));
    return false;
}

/// Lengths of all cycles, by depth-first enumeration of simple paths from
/// each start vertex through higher-numbered vertices only.
inline std::set<int> cycle_lengths(const Graph& g) {
    std::set<int> out;
    const int n = g.order();
    std::vector<bool> on(static_cast<std::size_t>(n), false);
    std::function<void(Vertex, Vertex, int)> dfs = [&](Vertex start, Vertex v, int len) {
        for (Vertex w : g.neighbors(v)) {
            if (w == start && len >= 3) out.insert(len);
            if (w <= start || on[static_cast<std::size_t>(w)]) continue;
            on[static_cast<std::size_t>(w)] = true;
            dfs(start, w, len + 1);
            on[static_cast<std::size_t>(w)] = false;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        on[static_cast<std::size_t>(s)] = true;
        dfs(s, s, 1);
        on[static_cast<std::size_t>(s)] = false;
    }
    return out;
}

/// Decodes a Prüfer sequence into the edges of a labelled tree on n vertices.
inline std::vector<Edge> prufer_tree(const std::vector<int>& code, int n) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) ++degree[static_cast<std::size_t>(c)];
    std::vector<Edge> edges;
    for (int c : code) {
        for (Vertex leaf = 0; leaf < n; ++leaf)
            if (degree[static_cast<std::size_t>(leaf)] == 1) {
                edges.push_back({leaf, c});
                --degree[static_cast<std::size_t>(leaf)];
                --degree[static_cast<std::size_t>(c)];
                break;
            }
    }
    std::vector<Vertex> last;
    for (Vertex v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) last.push_back(v);
    edges.push_back({last[0], last[1]});
    return edges;
}

/// Leaf sequences produced by every rotation system of the tree: choose a
/// cyclic order at each internal vertex, walk around the tree, record leaves.
inline void for_each_planar_leaf_order(const Graph& tree, const std::function<bool(const std::vector<Vertex>&)>& visit) {
    const int n = tree.order();
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
    std::vector<Vertex> internal;
    for (Vertex v = 0; v < n; ++v) {
        rot[static_cast<std::size_t>(v)] = tree.neighbors(v);
        if (tree.degree(v) > 1) internal.push_back(v);
    }
    if (internal.empty()) return;
    const Vertex root = internal.front();
    auto walk = [&] {
        std::vector<Vertex> leaves;
        std::function<void(Vertex, Vertex)> go = [&](Vertex v, Vertex from) {
            if (tree.degree(v) == 1) {
                leaves.push_back(v);
                return;
            }
            const auto& r = rot[static_cast<std::size_t>(v)];
            std::size_t start = 0;
            if (from >= 0) start = static_cast<std::size_t>(std::find(r.begin(), r.end(), from) - r.begin()) + 1;
            for (std::size_t k = 0; k < r.size(); ++k) {
                const Vertex w = r[(start + k) % r.size()];
                if (w != from) go(w, v);
            }
        };
        go(root, -1);
        return leaves;
    };
    // Fix the first neighbour at each vertex; permute the rest.
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == internal.size()) return visit(walk());
        auto& r = rot[static_cast<std::size_t>(internal[i])];
        std::sort(r.begin() + 1, r.end());
        do {
            if (rec(i + 1)) return true;
        } while (std::next_permutation(r.begin() + 1, r.end()));
        return false;
    };
    rec(0);
}

/// Does G have a spanning Halin subgraph? Every labelled tree on V(G) is
/// decoded from its Prüfer sequence; subtrees of G without degree-2
/// vertices are tried with every rotation system.
inline bool has_spanning_halin(const Graph& g) {
    const int n = g.order();
    if (n < 4) return false;
    std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
    for (;;) {
        const std::vector<Edge> edges = prufer_tree(code, n);
        bool inside = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return g.has_edge(e.u, e.v); });
        if (inside) {
            Graph tree(n);
            for (const Edge& e : edges) tree.add_edge(e.u, e.v);
            bool hit = true;
            for (Vertex v = 0; v < n; ++v) hit = hit && tree.degree(v) != 2;
            if (hit) {
                bool found = false;
                for_each_planar_leaf_order(tree, [&](const std::vector<Vertex>& leaves) {
                    bool ok = leaves.size() >= 3;
                    for (std::size_t i = 0; ok && i < leaves.size(); ++i)
                        ok = g.has_edge(leaves[i], leaves[(i + 1) % leaves.size()]);
                    found = ok;
                    return ok;
                });
                if (found) return true;
            }
        }
        std::size_t i = 0;
        while (i < code.size() && ++code[i] == n) code[i++] = 0;
        if (i == code.size()) return false;
    }
}

/// First violated absorbing condition (1, 2, 3) or 0, evaluated literally
/// with sets and nested loops.
inline int absorb_violation(const Graph& g, const std::vector<Vertex>& s, const std::vector<Vertex>& r) {
    const std::set<Vertex> S(s.begin(), s.end());
    const long long k = static_cast<long long>(r.size());
    if (k == 0) return 0;
    auto deg_s = [&](std::vector<Vertex> us) {
        long long c = 0;
        for (Vertex x : S) {
            bool all = true;
            for (Vertex u : us) all = all && g.has_edge(u, x);
            c += all;
        }
        return c;
    };
    for (Vertex w : r)
        if (deg_s({w}) < 3 * k) return 1;
    auto nbhd = [&](const std::set<Vertex>& from) {
        std::set<Vertex> out;
        for (Vertex v : from)
            for (Vertex x : S)
                if (g.has_edge(v, x)) out.insert(x);
        return out;
    };
    const std::set<Vertex> n1 = nbhd(std::set<Vertex>(r.begin(), r.end()));
    for (Vertex u : n1)
        for (Vertex v : n1)
            if (u < v && deg_s({u, v}) < 6 * k) return 2;
    const std::set<Vertex> n2 = nbhd(n1);
    for (Vertex u : n2)
        for (Vertex v : n2)
            for (Vertex w : n2)
                if (u < v && v < w && deg_s({u, v, w}) < 7 * k) return 3;
    return 0;
}

}  // namespace oracle
