#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "halin/graph.hpp"

namespace halin {

/// One rung a_i b_i of a ladder; `index` is 1-based.
struct Rung {
    int index = 0;
    Vertex a = 0;
    Vertex b = 0;

    Edge edge() const { return {a, b}; }
};

/// An n-ladder embedded in some host graph: the ordered A-side a_1..a_n and
/// B-side b_1..b_n, with a_i ~ b_j required whenever |i-j| <= 1.
///
/// Ladders never own their host; operations that need adjacency take the
/// graph explicitly. The empty ladder (n = 0) is allowed as a value.
class Ladder {
public:
    Ladder() = default;
    Ladder(std::vector<Vertex> a_side, std::vector<Vertex> b_side)
        : a_(std::move(a_side)), b_(std::move(b_side)) {
        if (a_.size() != b_.size()) throw Error("ladder sides have different lengths");
        std::vector<Vertex> all = vertices();
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw Error("ladder vertices are not distinct");
    }

    int length() const noexcept { return static_cast<int>(a_.size()); }
    bool empty() const noexcept { return a_.empty(); }
    int order() const noexcept { return 2 * length(); }

    const std::vector<Vertex>& a_side() const noexcept { return a_; }
    const std::vector<Vertex>& b_side() const noexcept { return b_; }

    /// 1-based accessors matching the a_i / b_i convention.
    Vertex a(int i) const { return a_.at(static_cast<std::size_t>(i - 1)); }
    Vertex b(int i) const { return b_.at(static_cast<std::size_t>(i - 1)); }

    Rung rung(int i) const { return {i, a(i), b(i)}; }
    Rung first_rung() const { return rung(1); }
    Rung last_rung() const { return rung(length()); }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out(a_);
        out.insert(out.end(), b_.begin(), b_.end());
        return out;
    }

    /// The edges a_i b_j with |i-j| <= 1.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int i = 1; i <= length(); ++i) {
            out.push_back({a(i), b(i)});
            if (i < length()) {
                out.push_back({a(i), b(i + 1)});
                out.push_back({b(i), a(i + 1)});
            }
        }
        return out;
    }

    /// Same ladder read from the last rung to the first.
    Ladder reversed() const {
        return Ladder(std::vector<Vertex>(a_.rbegin(), a_.rend()),
                      std::vector<Vertex>(b_.rbegin(), b_.rend()));
    }

    /// Same ladder with the A and B labels exchanged.
    Ladder swapped() const { return Ladder(b_, a_); }

    /// Rungs i..j (1-based, inclusive).
    Ladder slice(int i, int j) const {
        if (i < 1 || j > length() || i > j) throw Error("ladder slice out of range");
        return Ladder(std::vector<Vertex>(a_.begin() + (i - 1), a_.begin() + j),
                      std::vector<Vertex>(b_.begin() + (i - 1), b_.begin() + j));
    }

    friend bool operator==(const Ladder&, const Ladder&) = default;

private:
    std::vector<Vertex> a_;
    std::vector<Vertex> b_;
};

/// A ladder together with the graph that is exactly L_n.
struct LadderGraph {
    Graph host;
    Ladder ladder;
};

/// L_n on 2n vertices: a_i = i-1, b_i = n+i-1.
inline LadderGraph make_ladder(int n) {
    if (n < 1) throw Error("ladder length must be positive");
    std::vector<Vertex> a(static_cast<std::size_t>(n));
    std::vector<Vertex> b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i)] = i;
        b[static_cast<std::size_t>(i)] = n + i;
    }
    Ladder ladder(std::move(a), std::move(b));
    Graph host(2 * n);
    for (const Edge& e : ladder.edges()) host.add_edge(e);
    return {std::move(host), std::move(ladder)};
}

/// The two sides of a ladder. The first starts at a_1, the second at b_1,
/// and both alternate between A and B: position i holds a_i or b_i by parity.
/// When 2n = 0 (mod 4) they are the (a_1,b_n)- and (b_1,a_n)-paths, when
/// 2n = 2 (mod 4) the (a_1,a_n)- and (b_1,b_n)-paths.
inline std::pair<std::vector<Vertex>, std::vector<Vertex>> sides(const Ladder& l) {
    if (l.length() < 2) throw Error("sides undefined for degenerate ladder");
    std::vector<Vertex> from_a;
    std::vector<Vertex> from_b;
    for (int i = 1; i <= l.length(); ++i) {
        const bool odd = (i % 2) == 1;
        from_a.push_back(odd ? l.a(i) : l.b(i));
        from_b.push_back(odd ? l.b(i) : l.a(i));
    }
    return {std::move(from_a), std::move(from_b)};
}

/// Side membership that also covers n = 1: the rail through b_1 holds b_1 alone.
inline std::vector<Vertex> rail_from_a(const Ladder& l) {
    std::vector<Vertex> out;
    for (int i = 1; i <= l.length(); ++i) out.push_back(i % 2 ? l.a(i) : l.b(i));
    return out;
}

inline std::vector<Vertex> rail_from_b(const Ladder& l) {
    std::vector<Vertex> out;
    for (int i = 1; i <= l.length(); ++i) out.push_back(i % 2 ? l.b(i) : l.a(i));
    return out;
}

/// Rungs xy and gh are adjacent when x~g, y~h or x~h, y~g.
inline bool rungs_adjacent(const Graph& g, const Edge& r, const Edge& s) {
    if (r.shares_endpoint(s)) throw Error("rungs share an endpoint");
    return (g.has_edge(r.u, s.u) && g.has_edge(r.v, s.v)) ||
           (g.has_edge(r.u, s.v) && g.has_edge(r.v, s.u));
}

/// True iff a_i b_j is an edge of G for every |i-j| <= 1. Extra edges of G are allowed.
inline bool validate_ladder(const Graph& g, const std::vector<Vertex>& a_side,
                            const std::vector<Vertex>& b_side) {
    if (a_side.size() != b_side.size()) return false;
    std::vector<Vertex> all(a_side);
    all.insert(all.end(), b_side.begin(), b_side.end());
    for (Vertex v : all)
        if (!g.contains(v)) return false;
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    const std::size_t n = a_side.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.has_edge(a_side[i], b_side[i])) return false;
        if (i + 1 < n &&
            (!g.has_edge(a_side[i], b_side[i + 1]) || !g.has_edge(b_side[i], a_side[i + 1])))
            return false;
    }
    return true;
}

inline bool validate_ladder(const Graph& g, const Ladder& l) {
    return validate_ladder(g, l.a_side(), l.b_side());
}

/// Result of joining two ladders. `flipped` records that the second ladder's
/// sides were exchanged so that a_n ~ b'_1 and b_n ~ a'_1.
struct Concatenation {
    Ladder ladder;
    bool flipped = false;
};

/// LL': the last rung of L followed by the first rung of M, using whichever
/// crosswise matching G provides (unflipped preferred).
inline Concatenation concatenate(const Ladder& l, const Ladder& m, const Graph& g) {
    if (l.empty()) return {m, false};
    if (m.empty()) return {l, false};
    {
        std::vector<Vertex> lv = l.vertices();
        std::vector<Vertex> mv = m.vertices();
        std::sort(lv.begin(), lv.end());
        std::sort(mv.begin(), mv.end());
        std::vector<Vertex> shared;
        std::set_intersection(lv.begin(), lv.end(), mv.begin(), mv.end(),
                              std::back_inserter(shared));
        if (!shared.empty()) throw Error("cannot concatenate: ladders share vertices");
    }
    const Rung last = l.last_rung();
    const Rung first = m.first_rung();
    auto join = [&](const Ladder& second) {
        std::vector<Vertex> a(l.a_side());
        std::vector<Vertex> b(l.b_side());
        a.insert(a.end(), second.a_side().begin(), second.a_side().end());
        b.insert(b.end(), second.b_side().begin(), second.b_side().end());
        return Ladder(std::move(a), std::move(b));
    };
    if (g.has_edge(last.a, first.b) && g.has_edge(last.b, first.a)) return {join(m), false};
    if (g.has_edge(last.a, first.a) && g.has_edge(last.b, first.b))
        return {join(m.swapped()), true};
    throw Error("cannot concatenate: rungs " + to_string(last.edge()) + " and " +
                to_string(first.edge()) + " are not adjacent");
}

}  // namespace halin
