#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "halin/cycles.hpp"
#include "halin/graph.hpp"

namespace halin {

/// Largest order at which dirac_ham_path falls back to exhaustive search.
inline constexpr int kHamPathFallbackOrder = 12;

/// True iff `path` visits every vertex once, runs from a to b, and uses edges of G.
inline bool is_hamiltonian_path(const Graph& g, const std::vector<Vertex>& path, Vertex a, Vertex b) {
    if (static_cast<int>(path.size()) != g.order() || path.empty()) return false;
    if (path.front() != a || path.back() != b) return false;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!g.contains(path[i]) || seen[static_cast<std::size_t>(path[i])]) return false;
        seen[static_cast<std::size_t>(path[i])] = true;
        if (i > 0 && !g.has_edge(path[i - 1], path[i])) return false;
    }
    return true;
}

namespace detail {

/// Closes gaps in an arrangement c[0] = a, ..., c[n-1] = b by segment
/// reversals that keep both ends fixed. A gap (p, q) = (c[i], c[i+1]) is
/// closed by the lowest j with p ~ c[j] and q ~ c[j+1]. Returns false when
/// some gap admits no such j.
inline bool close_gaps(const Graph& g, std::vector<Vertex>& c) {
    const int n = static_cast<int>(c.size());
    for (int guard = 0; guard <= n * n; ++guard) {
        int i = 0;
        while (i + 1 < n && g.has_edge(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i + 1)])) ++i;
        if (i + 1 >= n) return true;
        const Vertex p = c[static_cast<std::size_t>(i)], q = c[static_cast<std::size_t>(i + 1)];
        int found = -1;
        for (int j = 0; j + 1 < n; ++j) {
            if (j == i) continue;
            if (g.has_edge(p, c[static_cast<std::size_t>(j)]) && g.has_edge(q, c[static_cast<std::size_t>(j + 1)])) {
                found = j;
                break;
            }
        }
        if (found < 0) return false;
        if (found > i)
            std::reverse(c.begin() + i + 1, c.begin() + found + 1);
        else
            std::reverse(c.begin() + found + 1, c.begin() + i + 1);
    }
    return false;
}

/// Greedy start: from a, repeatedly step to the lowest unvisited neighbour
/// (or the lowest unvisited vertex), ending at b.
inline std::vector<Vertex> greedy_arrangement(const Graph& g, Vertex a, Vertex b,
                                              const std::vector<Vertex>& preference) {
    const int n = g.order();
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
    std::vector<Vertex> c{a};
    while (static_cast<int>(c.size()) < n - 1) {
        Vertex next = -1;
        for (Vertex v : preference)
            if (!used[static_cast<std::size_t>(v)] && g.has_edge(c.back(), v)) {
                next = v;
                break;
            }
        if (next < 0)
            for (Vertex v : preference)
                if (!used[static_cast<std::size_t>(v)]) {
                    next = v;
                    break;
                }
        used[static_cast<std::size_t>(next)] = true;
        c.push_back(next);
    }
    c.push_back(b);
    return c;
}

}  // namespace detail

/// Rotation attempt without any degree precondition. The first attempt uses
/// index order; further attempts shuffle the preference order with `rng`.
template <class Rng>
std::optional<std::vector<Vertex>> try_ham_path_rotation(const Graph& g, Vertex a, Vertex b,
                                                         int attempts, Rng& rng) {
    const int n = g.order();
    if (!g.contains(a) || !g.contains(b)) throw Error("endpoint out of range");
    if (n == 1) return a == b ? std::optional(std::vector<Vertex>{a}) : std::nullopt;
    if (a == b) return std::nullopt;
    std::vector<Vertex> preference(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) preference[static_cast<std::size_t>(v)] = v;
    for (int t = 0; t < attempts; ++t) {
        if (t > 0) std::shuffle(preference.begin(), preference.end(), rng);
        std::vector<Vertex> c = detail::greedy_arrangement(g, a, b, preference);
        if (detail::close_gaps(g, c) && is_hamiltonian_path(g, c, a, b)) return c;
    }
    return std::nullopt;
}

inline bool dirac_condition(const Graph& g) {
    // δ >= n/2 + 1, compared in integers as 2δ >= n + 2.
    return 2 * g.min_degree() >= g.order() + 2;
}

/// A hamiltonian (a,b)-path. Under δ(G) >= n/2 + 1 the rotation step always
/// succeeds; otherwise graphs with at most 12 vertices are searched exhaustively.
inline std::vector<Vertex> dirac_ham_path(const Graph& g, Vertex a, Vertex b) {
    if (!g.contains(a) || !g.contains(b)) throw Error("endpoint out of range");
    if (a == b && g.order() > 1) throw Error("endpoints must differ");
    const int n = g.order();
    if (dirac_condition(g)) {
        std::minstd_rand rng(1);
        if (auto p = try_ham_path_rotation(g, a, b, 1, rng)) return *p;
        throw Error("internal: rotation failed under the degree condition");
    }
    if (n > kHamPathFallbackOrder)
        throw Error("no constructive guarantee: minimum degree below n/2 + 1 and graph too large for exhaustive search");
    if (auto p = hamiltonian_path_between(g, a, b)) return *p;
    throw Error("no hamiltonian path between " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace halin
