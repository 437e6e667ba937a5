#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "halin/graph.hpp"

namespace halin {

/// Largest order accepted by cycle_spectrum.
inline constexpr int kCycleSpectrumBudget = 16;
/// Largest order accepted by hamiltonian_connected_brute.
inline constexpr int kHamiltonianConnectedBudget = 14;
/// Largest order for which subset dynamic programming over paths is attempted.
inline constexpr int kSubsetPathBudget = 20;

namespace detail {

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << w;
    return adj;
}

/// reach[mask] = endpoints v such that some path from `start` visits exactly `mask` and ends at v.
inline std::vector<std::uint32_t> path_endpoints_from(const std::vector<std::uint32_t>& adj,
                                                      int n, Vertex start) {
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> reach(std::size_t{full} + 1, 0);
    const std::uint32_t s = std::uint32_t{1} << start;
    reach[s] = s;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        std::uint32_t ends = reach[mask];
        if (ends == 0) continue;
        while (ends) {
            const int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t next = adj[static_cast<std::size_t>(v)] & ~mask;
            while (next) {
                const int w = std::countr_zero(next);
                next &= next - 1;
                reach[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
    }
    return reach;
}

}  // namespace detail

/// All cycle lengths present in G, by exhaustive dynamic programming over vertex subsets.
inline std::set<int> cycle_spectrum(const Graph& g, int max_n = kCycleSpectrumBudget) {
    const int n = g.order();
    if (n > max_n || n > kSubsetPathBudget) throw BudgetExceeded("exceeds brute-force budget");
    std::set<int> lengths;
    if (n < 3) return lengths;
    const auto adj = detail::adjacency_masks(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    // reach[mask]: endpoints of paths covering mask that start at the lowest vertex of mask.
    std::vector<std::uint32_t> reach(std::size_t{full} + 1, 0);
    for (int v = 0; v < n; ++v) reach[std::uint32_t{1} << v] = std::uint32_t{1} << v;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = reach[mask];
        if (ends == 0) continue;
        const int s = std::countr_zero(mask);
        const int len = std::popcount(mask);
        if (len >= 3 && (ends & adj[static_cast<std::size_t>(s)])) lengths.insert(len);
        const std::uint32_t above = ~((std::uint32_t{2} << s) - 1);
        while (ends) {
            const int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t next = adj[static_cast<std::size_t>(v)] & ~mask & above;
            while (next) {
                const int w = std::countr_zero(next);
                next &= next - 1;
                reach[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
    }
    return lengths;
}

inline bool is_hamiltonian(const Graph& g) {
    if (g.order() < 3) return false;
    return cycle_spectrum(g, kSubsetPathBudget).count(g.order()) > 0;
}

/// A hamiltonian (a,b)-path found by subset dynamic programming, or nullopt.
inline std::optional<std::vector<Vertex>> hamiltonian_path_between(const Graph& g, Vertex a,
                                                                   Vertex b) {
    const int n = g.order();
    if (n > kSubsetPathBudget) throw BudgetExceeded("exceeds brute-force budget");
    if (!g.contains(a) || !g.contains(b)) throw Error("endpoint out of range");
    if (a == b) {
        if (n == 1) return std::vector<Vertex>{a};
        return std::nullopt;
    }
    const auto adj = detail::adjacency_masks(g);
    const auto reach = detail::path_endpoints_from(adj, n, a);
    std::uint32_t mask = (std::uint32_t{1} << n) - 1;
    if (!((reach[mask] >> b) & 1U)) return std::nullopt;
    std::vector<Vertex> path{b};
    Vertex cur = b;
    while (cur != a) {
        const std::uint32_t prev_mask = mask & ~(std::uint32_t{1} << cur);
        const std::uint32_t options = reach[prev_mask] & adj[static_cast<std::size_t>(cur)];
        const int prev = std::countr_zero(options);
        path.push_back(prev);
        mask = prev_mask;
        cur = prev;
    }
    return std::vector<Vertex>(path.rbegin(), path.rend());
}

/// True iff every pair of distinct vertices is joined by a hamiltonian path.
inline bool hamiltonian_connected_brute(const Graph& g, int max_n = kHamiltonianConnectedBudget) {
    const int n = g.order();
    if (n > max_n || n > kSubsetPathBudget) throw BudgetExceeded("exceeds brute-force budget");
    if (n <= 1) return true;
    const auto adj = detail::adjacency_masks(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (Vertex a = 0; a < n; ++a) {
        const auto reach = detail::path_endpoints_from(adj, n, a);
        if ((reach[full] | (std::uint32_t{1} << a)) != full) return false;
    }
    return true;
}

}  // namespace halin
