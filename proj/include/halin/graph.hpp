#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "halin/error.hpp"

namespace halin {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

inline VertexSet make_vertex_set(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge normalized() const { return u <= v ? Edge{u, v} : Edge{v, u}; }
    Edge reversed() const { return Edge{v, u}; }
    bool touches(Vertex x) const { return u == x || v == x; }
    bool shares_endpoint(const Edge& o) const { return touches(o.u) || touches(o.v); }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adjacency_(static_cast<std::size_t>(check_order(n))) {}

    static Graph from_edges(int n, std::span<const Edge> edges) {
        Graph g(n);
        for (const Edge& e : edges) g.add_edge(e.u, e.v);
        return g;
    }

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

    /// Adds uv. Returns false if the edge was already present.
    bool add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        auto& nu = adjacency_[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(nu.begin(), nu.end(), v);
        if (it != nu.end() && *it == v) return false;
        nu.insert(it, v);
        auto& nv = adjacency_[static_cast<std::size_t>(v)];
        nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
        ++edge_count_;
        return true;
    }

    bool add_edge(const Edge& e) { return add_edge(e.u, e.v); }

    bool remove_edge(Vertex u, Vertex v) {
        if (!has_edge(u, v)) return false;
        auto erase = [](std::vector<Vertex>& list, Vertex x) {
            list.erase(std::lower_bound(list.begin(), list.end(), x));
        };
        erase(adjacency_[static_cast<std::size_t>(u)], v);
        erase(adjacency_[static_cast<std::size_t>(v)], u);
        --edge_count_;
        return true;
    }

    bool has_edge(Vertex u, Vertex v) const noexcept {
        if (!contains(u) || !contains(v) || u == v) return false;
        const auto& nu = adjacency_[static_cast<std::size_t>(u)];
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    bool has_edge(const Edge& e) const noexcept { return has_edge(e.u, e.v); }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adjacency_[static_cast<std::size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    int min_degree() const noexcept {
        int d = order() == 0 ? 0 : order();
        for (const auto& nb : adjacency_) d = std::min(d, static_cast<int>(nb.size()));
        return d;
    }

    int max_degree() const noexcept {
        int d = 0;
        for (const auto& nb : adjacency_) d = std::max(d, static_cast<int>(nb.size()));
        return d;
    }

    /// All edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : adjacency_[static_cast<std::size_t>(u)])
                if (u < v) out.push_back({u, v});
        return out;
    }

    /// Subgraph induced on `vs`; vertex i of the result is vs[i].
    Graph induced(std::span<const Vertex> vs) const {
        std::vector<int> local(adjacency_.size(), -1);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            check_vertex(vs[i]);
            local[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
        }
        Graph out(static_cast<int>(vs.size()));
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (Vertex w : neighbors(vs[i]))
                if (int j = local[static_cast<std::size_t>(w)]; j > static_cast<int>(i))
                    out.add_edge(static_cast<Vertex>(i), j);
        return out;
    }

    /// Disjoint union; vertices of `other` are shifted by order().
    Graph disjoint_union(const Graph& other) const {
        Graph out(order() + other.order());
        for (const Edge& e : edges()) out.add_edge(e);
        for (const Edge& e : other.edges()) out.add_edge(e.u + order(), e.v + order());
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_ == b.adjacency_;
    }

private:
    static int check_order(int n) {
        if (n < 0) throw Error("negative vertex count");
        return n;
    }

    void check_vertex(Vertex v) const {
        if (!contains(v))
            throw Error("vertex " + std::to_string(v) + " out of range [0," +
                        std::to_string(order()) + ")");
    }

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Γ(v,S): neighbours of v inside S. S must be sorted.
inline VertexSet neighbors_in(const Graph& g, Vertex v, std::span<const Vertex> s) {
    VertexSet out;
    const auto& nb = g.neighbors(v);
    std::set_intersection(nb.begin(), nb.end(), s.begin(), s.end(), std::back_inserter(out));
    return out;
}

inline int degree_in(const Graph& g, Vertex v, std::span<const Vertex> s) {
    return static_cast<int>(neighbors_in(g, v, s).size());
}

/// Γ(U,S) = ⋂_{u∈U} Γ(u,S), the vertices of S adjacent to every vertex of U.
inline VertexSet common_neighbors(const Graph& g, std::span<const Vertex> u_set,
                                  std::span<const Vertex> s_set) {
    if (u_set.empty()) throw Error("undefined intersection: U is empty");
    VertexSet s = make_vertex_set({s_set.begin(), s_set.end()});
    VertexSet out;
    for (Vertex x : s) {
        bool all = std::all_of(u_set.begin(), u_set.end(),
                               [&](Vertex u) { return g.has_edge(u, x); });
        if (all) out.push_back(x);
    }
    return out;
}

/// N(U,S) = ⋃_{u∈U} Γ(u,S).
inline VertexSet neighborhood_union(const Graph& g, std::span<const Vertex> u_set,
                                    std::span<const Vertex> s_set) {
    VertexSet s = make_vertex_set({s_set.begin(), s_set.end()});
    VertexSet out;
    for (Vertex u : u_set) {
        VertexSet nu = neighbors_in(g, u, s);
        out.insert(out.end(), nu.begin(), nu.end());
    }
    return make_vertex_set(std::move(out));
}

/// δ(U,S) = min over u ∈ U of deg(u,S).
inline int min_degree_into(const Graph& g, std::span<const Vertex> u_set,
                           std::span<const Vertex> s_set) {
    if (u_set.empty()) throw Error("undefined intersection: U is empty");
    VertexSet s = make_vertex_set({s_set.begin(), s_set.end()});
    int best = static_cast<int>(s.size());
    for (Vertex u : u_set) best = std::min(best, degree_in(g, u, s));
    return best;
}

/// Lower bound |S| - k(|S| - δ(U,S)) on deg(U,S), clamped at zero, with k = |U|.
inline long long common_neighbor_lower_bound(const Graph& g, std::span<const Vertex> u_set,
                                             std::span<const Vertex> s_set) {
    const long long s = static_cast<long long>(make_vertex_set({s_set.begin(), s_set.end()}).size());
    const long long k = static_cast<long long>(u_set.size());
    const long long delta = min_degree_into(g, u_set, s_set);
    return std::max(0LL, s - k * (s - delta));
}

/// Row-major adjacency bitsets, for the inner loops that intersect many neighbourhoods.
class AdjacencyBits {
public:
    explicit AdjacencyBits(const Graph& g)
        : words_((static_cast<std::size_t>(g.order()) + 63) / 64),
          rows_(static_cast<std::size_t>(g.order()) * words_, 0) {
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v : g.neighbors(u)) set(mutable_row(u), v);
    }

    std::size_t words() const noexcept { return words_; }

    std::span<const std::uint64_t> row(Vertex v) const {
        return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    std::vector<std::uint64_t> mask(std::span<const Vertex> vs) const {
        std::vector<std::uint64_t> m(words_, 0);
        for (Vertex v : vs) set(m, v);
        return m;
    }

    static void set(std::span<std::uint64_t> bits, Vertex v) {
        bits[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (static_cast<unsigned>(v) % 64);
    }

    static bool test(std::span<const std::uint64_t> bits, Vertex v) {
        return (bits[static_cast<std::size_t>(v) / 64] >> (static_cast<unsigned>(v) % 64)) & 1U;
    }

private:
    std::span<std::uint64_t> mutable_row(Vertex v) {
        return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    std::size_t words_;
    std::vector<std::uint64_t> rows_;
};

}  // namespace halin
