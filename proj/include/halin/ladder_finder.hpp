#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "halin/cycles.hpp"
#include "halin/graph.hpp"
#include "halin/ham_path.hpp"
#include "halin/ladder.hpp"
#include "halin/matching.hpp"

namespace halin {

/// A vertex of H': one matching edge, or two identified matching edges.
/// Edges are oriented (U-end, V-end).
struct AuxNode {
    Edge first;
    std::optional<Edge> second;

    bool merged() const noexcept { return second.has_value(); }
    bool contains(const Edge& e) const { return first == e || (second && *second == e); }
};

/// H' on the edges of a perfect matching: (x,y) ~ (u,v) iff x ~ v and y ~ u
/// (x, u in U). A merged node is adjacent to another node only if both of
/// its constituents are.
struct AuxiliaryGraph {
    std::vector<AuxNode> nodes;
    Graph graph{0};

    /// Node holding matching edge e (oriented U-end first), or -1.
    int node_of(const Edge& e) const {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].contains(e)) return static_cast<int>(i);
        return -1;
    }
};

namespace detail {

inline bool crosswise(const Graph& g, const Edge& p, const Edge& q) {
    return g.has_edge(p.u, q.v) && g.has_edge(p.v, q.u);
}

inline Edge orient(const Edge& e, const std::vector<int>& side) {
    if (side.at(static_cast<std::size_t>(e.u)) == 0 && side.at(static_cast<std::size_t>(e.v)) == 1) return e;
    if (side.at(static_cast<std::size_t>(e.u)) == 1 && side.at(static_cast<std::size_t>(e.v)) == 0) return e.reversed();
    throw Error("edge " + to_string(e) + " does not cross the bipartition");
}

}  // namespace detail

/// Builds H'. Each entry of `identify` names two matching edges that become one node.
inline AuxiliaryGraph build_aux_graph(const Graph& g, const Bipartition& bp, const Matching& m,
                                      const std::vector<std::pair<Edge, Edge>>& identify = {}) {
    const std::vector<int> side = bp.sides(g.order());
    std::vector<Edge> edges;
    for (const Edge& e : m) edges.push_back(detail::orient(e, side));
    std::vector<bool> consumed(edges.size(), false);
    auto index_of = [&](const Edge& e) {
        const Edge o = detail::orient(e, side);
        auto it = std::find(edges.begin(), edges.end(), o);
        if (it == edges.end()) throw Error("identified edge " + to_string(e) + " is not a matching edge");
        return static_cast<std::size_t>(it - edges.begin());
    };

    AuxiliaryGraph aux;
    for (const auto& [e1, e2] : identify) {
        const std::size_t i = index_of(e1), j = index_of(e2);
        if (i == j || consumed[i] || consumed[j]) throw Error("identified edges must be distinct and unused");
        consumed[i] = consumed[j] = true;
        aux.nodes.push_back({edges[i], edges[j]});
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!consumed[i]) aux.nodes.push_back({edges[i], std::nullopt});

    const int k = static_cast<int>(aux.nodes.size());
    aux.graph = Graph(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const AuxNode& p = aux.nodes[static_cast<std::size_t>(i)];
            const AuxNode& q = aux.nodes[static_cast<std::size_t>(j)];
            bool adj = detail::crosswise(g, p.first, q.first);
            if (p.second) adj = adj && detail::crosswise(g, *p.second, q.first);
            if (q.second) adj = adj && detail::crosswise(g, p.first, *q.second);
            if (p.second && q.second) adj = adj && detail::crosswise(g, *p.second, *q.second);
            if (adj) aux.graph.add_edge(i, j);
        }
    return aux;
}

/// The ladders read off a path of H': rungs in path order with U-ends on the
/// A side. A merged node ends the current ladder with its first constituent
/// and starts the next with its second.
inline std::vector<Ladder> unfold_path(const AuxiliaryGraph& aux, const std::vector<Vertex>& path) {
    std::vector<Ladder> out;
    std::vector<Vertex> a, b;
    for (Vertex id : path) {
        const AuxNode& node = aux.nodes.at(static_cast<std::size_t>(id));
        a.push_back(node.first.u);
        b.push_back(node.first.v);
        if (node.second) {
            out.emplace_back(std::move(a), std::move(b));
            a = {node.second->u};
            b = {node.second->v};
        }
    }
    if (!a.empty()) out.emplace_back(std::move(a), std::move(b));
    return out;
}

/// Inverse of unfold_path: the H' node sequence visited by consecutive ladders.
inline std::vector<Vertex> fold_ladders(const AuxiliaryGraph& aux, const std::vector<Ladder>& ladders) {
    std::vector<Vertex> path;
    for (const Ladder& l : ladders)
        for (int i = 1; i <= l.length(); ++i) {
            const int id = aux.node_of({l.a(i), l.b(i)});
            if (id < 0) throw Error("rung " + to_string(Edge{l.a(i), l.b(i)}) + " is not a node of H'");
            if (path.empty() || path.back() != id) path.push_back(id);
        }
    return path;
}

/// What to build: spanning ladders of `base` from `first_rung` to
/// `last_rung`. Each forced pair (ab, cd) makes ab the last rung of one
/// ladder and cd the first rung of the next.
struct LadderRequest {
    Graph base{0};
    /// Natural 2-colouring if the base is bipartite, otherwise a random
    /// balanced split respecting the named edges, when left empty.
    std::optional<Bipartition> bipartition;
    Edge first_rung;
    Edge last_rung;
    std::vector<std::pair<Edge, Edge>> forced_interior;
    unsigned seed = 1;
    /// Rotation restarts before falling back to exhaustive search.
    int attempts = 32;
};

struct LadderSolution {
    std::vector<Ladder> ladders;
    AuxiliaryGraph aux;
    Matching matching;
    Bipartition bipartition;
    /// Hamiltonian path of H' from the first to the last rung.
    std::vector<Vertex> aux_path;
    /// Whether H' met δ >= |H'|/2 + 1.
    bool aux_dirac = false;
};

namespace detail {

inline Bipartition choose_bipartition(const LadderRequest& req, std::mt19937& rng) {
    if (req.bipartition) return *req.bipartition;
    const Graph& g = req.base;
    if (std::vector<int> color = two_coloring(g); !color.empty()) {
        Bipartition bp = Bipartition::from_coloring(color);
        if (bp.balanced()) return bp;
    }
    const int n = g.order();
    if (n % 2 != 0) throw Error("base graph has odd order");
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    auto place = [&](const Edge& e) {
        for (auto [v, s] : {std::pair{e.u, 0}, std::pair{e.v, 1}}) {
            int& cur = side.at(static_cast<std::size_t>(v));
            if (cur >= 0 && cur != s) throw Error("named edges force a vertex onto both sides");
            cur = s;
        }
    };
    place(req.first_rung);
    place(req.last_rung);
    for (const auto& [e1, e2] : req.forced_interior) {
        place(e1);
        place(e2);
    }
    std::vector<Vertex> free;
    int in_u = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (side[static_cast<std::size_t>(v)] < 0) free.push_back(v);
        else if (side[static_cast<std::size_t>(v)] == 0) ++in_u;
    }
    std::shuffle(free.begin(), free.end(), rng);
    for (Vertex v : free) side[static_cast<std::size_t>(v)] = (in_u < n / 2) ? (++in_u, 0) : 1;
    Bipartition bp = Bipartition::from_coloring(side);
    if (!bp.balanced()) throw Error("named edges leave no balanced bipartition");
    return bp;
}

}  // namespace detail

inline LadderSolution find_spanning_ladders_detailed(const LadderRequest& req) {
    const Graph& g = req.base;
    std::mt19937 rng(req.seed);
    LadderSolution sol;
    sol.bipartition = detail::choose_bipartition(req, rng);
    if (!sol.bipartition.balanced()) throw Error("bipartition is not balanced");
    const std::vector<int> side = sol.bipartition.sides(g.order());
    for (int s : side)
        if (s < 0) throw Error("bipartition does not cover the base graph");

    std::vector<Edge> named{req.first_rung, req.last_rung};
    for (const auto& [e1, e2] : req.forced_interior) {
        named.push_back(e1);
        named.push_back(e2);
    }
    for (const Edge& e : named)
        if (!g.has_edge(e)) throw Error("named rung " + to_string(e) + " not in base graph");
    const Edge first = detail::orient(req.first_rung, side);
    const Edge last = detail::orient(req.last_rung, side);

    std::vector<Edge> forced;
    for (const Edge& e : named) {
        const Edge o = detail::orient(e, side);
        if (std::find(forced.begin(), forced.end(), o) != forced.end()) {
            if (o == first && o == last && req.forced_interior.empty()) continue;
            throw Error("named rungs must be pairwise disjoint");
        }
        forced.push_back(o);
    }
    sol.matching = perfect_matching_with_forced(g, sol.bipartition, forced);

    std::vector<std::pair<Edge, Edge>> identify;
    for (const auto& [e1, e2] : req.forced_interior)
        identify.push_back({detail::orient(e1, side), detail::orient(e2, side)});
    sol.aux = build_aux_graph(g, sol.bipartition, sol.matching, identify);
    sol.aux_dirac = dirac_condition(sol.aux.graph);

    const int s = sol.aux.node_of(first);
    const int t = sol.aux.node_of(last);
    if (sol.aux.nodes.at(static_cast<std::size_t>(s)).merged() ||
        sol.aux.nodes.at(static_cast<std::size_t>(t)).merged())
        throw Error("first and last rungs cannot be identified rungs");

    std::optional<std::vector<Vertex>> path;
    if (s == t) {
        if (sol.aux.graph.order() == 1) path = std::vector<Vertex>{s};
    } else {
        path = try_ham_path_rotation(sol.aux.graph, s, t, req.attempts, rng);
        if (!path && sol.aux.graph.order() <= kSubsetPathBudget)
            path = hamiltonian_path_between(sol.aux.graph, s, t);
    }
    if (!path) throw Error("auxiliary graph has no hamiltonian path between the first and last rungs");
    sol.aux_path = *path;
    sol.ladders = unfold_path(sol.aux, sol.aux_path);

    std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
    for (const Ladder& l : sol.ladders) {
        if (!validate_ladder(g, l)) throw Error("internal: unfolded ladder does not validate");
        for (Vertex v : l.vertices()) {
            if (covered[static_cast<std::size_t>(v)]) throw Error("internal: ladders overlap");
            covered[static_cast<std::size_t>(v)] = true;
        }
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end())
        throw Error("internal: ladders do not span the base graph");
    return sol;
}

/// Vertex-disjoint ladders spanning the base, one more than the number of forced pairs.
inline std::vector<Ladder> find_spanning_ladders(const LadderRequest& req) {
    return find_spanning_ladders_detailed(req).ladders;
}

}  // namespace halin
