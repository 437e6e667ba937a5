#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "halin/graph.hpp"
#include "halin/ladder.hpp"

namespace halin {

/// F with V(F) partitioned as S ∪ R; R is the set to be swallowed.
struct AbsorbInstance {
    Graph F;
    VertexSet S;
    VertexSet R;

    int r() const noexcept { return static_cast<int>(R.size()); }
};

/// Partition check; throws if S and R do not partition V(F).
inline void check_partition(const AbsorbInstance& inst) {
    std::vector<int> seen(static_cast<std::size_t>(inst.F.order()), 0);
    for (const VertexSet* part : {&inst.S, &inst.R})
        for (Vertex v : *part) {
            if (!inst.F.contains(v)) throw Error("vertex " + std::to_string(v) + " not in F");
            if (++seen[static_cast<std::size_t>(v)] > 1)
                throw Error("vertex " + std::to_string(v) + " listed twice in S and R");
        }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw Error("S and R do not cover V(F)");
}

struct AbsorbCheck {
    /// 0 when every condition holds, otherwise 1, 2 or 3 for (i), (ii), (iii).
    int violated = 0;
    /// The vertices witnessing the violation.
    std::vector<Vertex> witness;
    std::string message;

    explicit operator bool() const noexcept { return violated == 0; }
};

/// (i) δ(R,S) >= 3|R|; (ii) deg(u,v,S) >= 6|R| for all u,v in N(R,S);
/// (iii) deg(u,v,w,S) >= 7|R| for all u,v,w in N(N(R,S),S). Evaluated exactly.
inline AbsorbCheck check_absorb_preconditions(const AbsorbInstance& inst) {
    check_partition(inst);
    const int r = inst.r();
    AbsorbCheck out;
    if (r == 0) return out;

    for (Vertex w : inst.R) {
        const int d = degree_in(inst.F, w, inst.S);
        if (d < 3 * r) {
            out.violated = 1;
            out.witness = {w};
            out.message = "(i) deg(" + std::to_string(w) + ",S) = " + std::to_string(d) + " < " +
                          std::to_string(3 * r);
            return out;
        }
    }

    const AdjacencyBits bits(inst.F);
    const std::vector<std::uint64_t> s_mask = bits.mask(inst.S);
    const std::size_t words = bits.words();
    std::vector<std::uint64_t> acc(words);
    auto common = [&](std::initializer_list<Vertex> vs) {
        std::copy(s_mask.begin(), s_mask.end(), acc.begin());
        for (Vertex v : vs) {
            auto row = bits.row(v);
            for (std::size_t i = 0; i < words; ++i) acc[i] &= row[i];
        }
        int c = 0;
        for (std::uint64_t x : acc) c += std::popcount(x);
        return c;
    };

    const VertexSet n1 = neighborhood_union(inst.F, inst.R, inst.S);
    for (std::size_t i = 0; i < n1.size(); ++i)
        for (std::size_t j = i + 1; j < n1.size(); ++j) {
            const int c = common({n1[i], n1[j]});
            if (c < 6 * r) {
                out.violated = 2;
                out.witness = {n1[i], n1[j]};
                out.message = "(ii) deg(" + std::to_string(n1[i]) + "," + std::to_string(n1[j]) +
                              ",S) = " + std::to_string(c) + " < " + std::to_string(6 * r);
                return out;
            }
        }

    const VertexSet n2 = neighborhood_union(inst.F, n1, inst.S);
    std::vector<std::uint64_t> pair(words);
    for (std::size_t i = 0; i < n2.size(); ++i)
        for (std::size_t j = i + 1; j < n2.size(); ++j) {
            auto ri = bits.row(n2[i]);
            auto rj = bits.row(n2[j]);
            for (std::size_t t = 0; t < words; ++t) pair[t] = s_mask[t] & ri[t] & rj[t];
            for (std::size_t k = j + 1; k < n2.size(); ++k) {
                auto rk = bits.row(n2[k]);
                int c = 0;
                for (std::size_t t = 0; t < words; ++t) c += std::popcount(pair[t] & rk[t]);
                if (c < 7 * r) {
                    out.violated = 3;
                    out.witness = {n2[i], n2[j], n2[k]};
                    out.message = "(iii) deg(" + std::to_string(n2[i]) + "," + std::to_string(n2[j]) +
                                  "," + std::to_string(n2[k]) + ",S) = " + std::to_string(c) + " < " +
                                  std::to_string(7 * r);
                    return out;
                }
            }
        }
    return out;
}

/// The helper vertices chosen for w_i. z and u join block i to block i+1 and
/// are absent for the last block.
struct AbsorbBlock {
    Vertex w = -1;
    Vertex x1 = -1, x2 = -1, x3 = -1;
    Vertex y12 = -1, y23 = -1;
    std::optional<Vertex> z;
    std::optional<Vertex> u;
};

struct AbsorbResult {
    Ladder ladder;
    std::vector<AbsorbBlock> blocks;

    /// Vertices of S used by the ladder.
    VertexSet helpers() const {
        std::vector<Vertex> out;
        for (const AbsorbBlock& b : blocks) {
            out.insert(out.end(), {b.x1, b.x2, b.x3, b.y12, b.y23});
            if (b.z) out.push_back(*b.z);
            if (b.u) out.push_back(*b.u);
        }
        return make_vertex_set(std::move(out));
    }
};

/// A ladder of order 8r-2 through R and 7r-2 vertices of S.
///
/// Block i has rungs (y12, x1), (w, x2), (y23, x3) and, except for the last
/// block, is followed by the rung (z, u) with z ~ x3 of block i and x1 of
/// block i+1, and u ~ z, y23 of block i and y12 of block i+1. Choices are
/// greedy, lowest index first: all x's, then y's, then z's, then u's.
inline AbsorbResult absorb_detailed(const AbsorbInstance& inst) {
    if (AbsorbCheck c = check_absorb_preconditions(inst); !c)
        throw Error("absorbing preconditions fail: " + c.message);
    const int r = inst.r();
    AbsorbResult out;
    if (r == 0) return out;

    const Graph& f = inst.F;
    std::vector<bool> used(static_cast<std::size_t>(f.order()), false);
    auto pick = [&](std::initializer_list<Vertex> common_to, const char* role) {
        for (Vertex s : inst.S) {
            if (used[static_cast<std::size_t>(s)]) continue;
            if (std::all_of(common_to.begin(), common_to.end(), [&](Vertex v) { return f.has_edge(v, s); })) {
                used[static_cast<std::size_t>(s)] = true;
                return s;
            }
        }
        throw Error(std::string("internal: no unchosen vertex available for ") + role);
    };

    out.blocks.resize(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        AbsorbBlock& b = out.blocks[static_cast<std::size_t>(i)];
        b.w = inst.R[static_cast<std::size_t>(i)];
        b.x1 = pick({b.w}, "x1");
        b.x2 = pick({b.w}, "x2");
        b.x3 = pick({b.w}, "x3");
    }
    for (AbsorbBlock& b : out.blocks) {
        b.y12 = pick({b.x1, b.x2}, "y12");
        b.y23 = pick({b.x2, b.x3}, "y23");
    }
    for (int i = 0; i + 1 < r; ++i) {
        AbsorbBlock& b = out.blocks[static_cast<std::size_t>(i)];
        b.z = pick({b.x3, out.blocks[static_cast<std::size_t>(i + 1)].x1}, "z");
    }
    for (int i = 0; i + 1 < r; ++i) {
        AbsorbBlock& b = out.blocks[static_cast<std::size_t>(i)];
        b.u = pick({*b.z, b.y23, out.blocks[static_cast<std::size_t>(i + 1)].y12}, "u");
    }

    std::vector<Vertex> a_side, b_side;
    for (const AbsorbBlock& b : out.blocks) {
        a_side.insert(a_side.end(), {b.y12, b.w, b.y23});
        b_side.insert(b_side.end(), {b.x1, b.x2, b.x3});
        if (b.z) {
            a_side.push_back(*b.z);
            b_side.push_back(*b.u);
        }
    }
    out.ladder = Ladder(std::move(a_side), std::move(b_side));

    if (out.helpers().size() != static_cast<std::size_t>(7 * r - 2))
        throw Error("internal: helper count is not 7r-2");
    if (out.ladder.order() != 8 * r - 2) throw Error("internal: ladder order is not 8r-2");
    if (!validate_ladder(f, out.ladder)) throw Error("internal: absorbed ladder does not validate");
    return out;
}

inline Ladder absorb(const AbsorbInstance& inst) { return absorb_detailed(inst).ladder; }

}  // namespace halin
