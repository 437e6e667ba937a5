#pragma once

#include <queue>
#include <vector>

#include "halin/graph.hpp"

namespace halin {

/// Connectivity of G with the vertices flagged in `removed` deleted.
/// The empty graph and a single vertex count as connected.
inline bool is_connected_without(const Graph& g, const std::vector<bool>& removed) {
    const int n = g.order();
    Vertex start = -1;
    int alive = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (removed[static_cast<std::size_t>(v)]) continue;
        ++alive;
        if (start < 0) start = v;
    }
    if (alive <= 1) return true;
    std::vector<bool> seen(removed);
    std::queue<Vertex> queue;
    queue.push(start);
    seen[static_cast<std::size_t>(start)] = true;
    int reached = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(v)) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            ++reached;
            queue.push(w);
        }
    }
    return reached == alive;
}

inline bool is_connected(const Graph& g) {
    return is_connected_without(g, std::vector<bool>(static_cast<std::size_t>(g.order()), false));
}

/// Trees are connected with exactly n-1 edges.
inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == static_cast<std::size_t>(g.order() - 1) && is_connected(g);
}

/// k-connectivity for k <= 3: |V| > k and deleting any set of fewer than k
/// vertices leaves the graph connected. Cuts are enumerated exhaustively.
inline bool is_k_connected(const Graph& g, int k) {
    if (k < 1 || k > 3) throw Error("is_k_connected supports k in {1,2,3}");
    const int n = g.order();
    if (n <= k) return false;
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    if (!is_connected_without(g, removed)) return false;
    if (k >= 2) {
        for (Vertex a = 0; a < n; ++a) {
            removed[static_cast<std::size_t>(a)] = true;
            if (!is_connected_without(g, removed)) return false;
            if (k == 3) {
                for (Vertex b = a + 1; b < n; ++b) {
                    removed[static_cast<std::size_t>(b)] = true;
                    bool ok = is_connected_without(g, removed);
                    removed[static_cast<std::size_t>(b)] = false;
                    if (!ok) return false;
                }
            }
            removed[static_cast<std::size_t>(a)] = false;
        }
    }
    return true;
}

inline bool has_triangle(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbors(u)) {
            if (v <= u) continue;
            for (Vertex w : g.neighbors(v))
                if (w > v && g.has_edge(u, w)) return true;
        }
    return false;
}

/// Two-colouring of G, or empty if G is not bipartite. Each component's
/// lowest vertex gets colour 0.
inline std::vector<int> two_coloring(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::queue<Vertex> queue;
        queue.push(s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(v)) {
                int& cw = color[static_cast<std::size_t>(w)];
                if (cw < 0) {
                    cw = 1 - color[static_cast<std::size_t>(v)];
                    queue.push(w);
                } else if (cw == color[static_cast<std::size_t>(v)]) {
                    return {};
                }
            }
        }
    }
    return color;
}

/// BFS distances from `source`; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source,
                                      const std::vector<bool>* removed = nullptr) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<Vertex> queue;
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push(source);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(v)) {
            if (removed && (*removed)[static_cast<std::size_t>(w)]) continue;
            if (dist[static_cast<std::size_t>(w)] >= 0) continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            queue.push(w);
        }
    }
    return dist;
}

}  // namespace halin
