#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "halin/connectivity.hpp"
#include "halin/graph.hpp"

namespace halin {

/// A split of the vertices into classes U and V. Only U–V edges are used.
struct Bipartition {
    VertexSet U;
    VertexSet V;

    /// Sides of a 2-colouring: colour 0 goes to U.
    static Bipartition from_coloring(const std::vector<int>& color) {
        Bipartition b;
        for (std::size_t v = 0; v < color.size(); ++v)
            (color[v] == 0 ? b.U : b.V).push_back(static_cast<Vertex>(v));
        return b;
    }

    /// The natural bipartition of a bipartite graph; throws otherwise.
    static Bipartition natural(const Graph& g) {
        const std::vector<int> color = two_coloring(g);
        if (color.empty() && g.order() > 0) throw Error("graph is not bipartite");
        return from_coloring(color);
    }

    bool balanced() const noexcept { return U.size() == V.size(); }

    /// Side of each vertex: 0 for U, 1 for V, -1 for neither.
    std::vector<int> sides(int n) const {
        std::vector<int> out(static_cast<std::size_t>(n), -1);
        for (Vertex u : U) out.at(static_cast<std::size_t>(u)) = 0;
        for (Vertex v : V) {
            int& s = out.at(static_cast<std::size_t>(v));
            if (s == 0) throw Error("bipartition classes overlap");
            s = 1;
        }
        return out;
    }
};

/// No perfect matching: Z ⊆ U with |N(Z)| < |Z| in what remains after the
/// forced endpoints are removed.
class MatchingError : public Error {
public:
    MatchingError(const std::string& what, VertexSet z, VertexSet nz)
        : Error(what), z_(std::move(z)), nz_(std::move(nz)) {}

    const VertexSet& hall_set() const noexcept { return z_; }
    const VertexSet& hall_neighborhood() const noexcept { return nz_; }

private:
    VertexSet z_;
    VertexSet nz_;
};

/// Matching edges are oriented (u, v) with u ∈ U and v ∈ V.
using Matching = std::vector<Edge>;

/// A perfect matching of the U–V edges of G that contains every forced edge.
/// The forced endpoints are removed and the rest is matched by augmenting paths.
inline Matching perfect_matching_with_forced(const Graph& g, const Bipartition& bp,
                                             const std::vector<Edge>& forced) {
    if (!bp.balanced()) throw Error("bipartition is not balanced");
    const int n = g.order();
    const std::vector<int> side = bp.sides(n);
    std::vector<bool> taken(static_cast<std::size_t>(n), false);
    Matching out;
    for (Edge e : forced) {
        if (!g.has_edge(e)) throw Error("forced edge " + to_string(e) + " not in graph");
        if (side[static_cast<std::size_t>(e.u)] == 1) e = e.reversed();
        if (side[static_cast<std::size_t>(e.u)] != 0 || side[static_cast<std::size_t>(e.v)] != 1)
            throw Error("forced edge " + to_string(e) + " does not cross the bipartition");
        if (taken[static_cast<std::size_t>(e.u)] || taken[static_cast<std::size_t>(e.v)])
            throw Error("forced edges are not disjoint");
        taken[static_cast<std::size_t>(e.u)] = taken[static_cast<std::size_t>(e.v)] = true;
        out.push_back(e);
    }

    std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
    std::vector<int> visit(static_cast<std::size_t>(n), -1);
    auto free_nbrs = [&](Vertex u) {
        std::vector<Vertex> out_n;
        for (Vertex v : g.neighbors(u))
            if (side[static_cast<std::size_t>(v)] == 1 && !taken[static_cast<std::size_t>(v)]) out_n.push_back(v);
        return out_n;
    };
    // Kuhn's augmenting-path search, iterative over an explicit stack.
    auto augment = [&](Vertex root, int stamp) {
        struct Frame {
            Vertex u;
            std::vector<Vertex> nbrs;
            std::size_t next;
        };
        std::vector<Frame> stack;
        std::vector<Vertex> via;  // via[k]: V-vertex used to reach stack[k+1]
        stack.push_back({root, free_nbrs(root), 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next == f.nbrs.size()) {
                stack.pop_back();
                if (!via.empty()) via.pop_back();
                continue;
            }
            const Vertex v = f.nbrs[f.next++];
            if (visit[static_cast<std::size_t>(v)] == stamp) continue;
            visit[static_cast<std::size_t>(v)] = stamp;
            const Vertex w = mate[static_cast<std::size_t>(v)];
            if (w < 0) {
                // Flip the path root .. v.
                via.push_back(v);
                for (std::size_t k = 0; k < stack.size(); ++k) {
                    const Vertex uu = stack[k].u, vv = via[k];
                    mate[static_cast<std::size_t>(uu)] = vv;
                    mate[static_cast<std::size_t>(vv)] = uu;
                }
                return true;
            }
            via.push_back(v);
            stack.push_back({w, free_nbrs(w), 0});
        }
        return false;
    };

    int stamp = 0;
    for (Vertex u : bp.U) {
        if (taken[static_cast<std::size_t>(u)]) continue;
        if (augment(u, stamp++)) continue;
        // Hall violator: U-vertices reachable from u by alternating paths.
        VertexSet z{u}, nz;
        std::vector<Vertex> queue{u};
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        seen[static_cast<std::size_t>(u)] = true;
        while (!queue.empty()) {
            const Vertex x = queue.back();
            queue.pop_back();
            for (Vertex v : free_nbrs(x)) {
                if (seen[static_cast<std::size_t>(v)]) continue;
                seen[static_cast<std::size_t>(v)] = true;
                nz.push_back(v);
                const Vertex w = mate[static_cast<std::size_t>(v)];
                if (w >= 0 && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    z.push_back(w);
                    queue.push_back(w);
                }
            }
        }
        z = make_vertex_set(std::move(z));
        nz = make_vertex_set(std::move(nz));
        throw MatchingError("no perfect matching extends the forced edges: |N(Z)| = " +
                                std::to_string(nz.size()) + " < |Z| = " + std::to_string(z.size()),
                            std::move(z), std::move(nz));
    }
    for (Vertex u : bp.U)
        if (!taken[static_cast<std::size_t>(u)]) out.push_back({u, mate[static_cast<std::size_t>(u)]});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace halin
