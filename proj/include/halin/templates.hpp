#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "halin/connectivity.hpp"
#include "halin/graph.hpp"
#include "halin/ladder.hpp"
#include "halin/verify.hpp"

namespace halin {

/// The five ladder-like Halin graphs H1..H5. Anchors T1..T5 reuse the same tag.
enum class TemplateKind { H1 = 1, H2 = 2, H3 = 3, H4 = 4, H5 = 5 };

inline int kind_index(TemplateKind k) { return static_cast<int>(k); }

inline std::string to_string(TemplateKind k) { return "H" + std::to_string(kind_index(k)); }

inline TemplateKind template_kind_from_index(int i) {
    if (i < 1 || i > 5) throw Error("template kind must be H1..H5");
    return static_cast<TemplateKind>(i);
}

inline bool has_pendent(TemplateKind k) { return kind_index(k) >= 3; }

/// Where z attaches: side 'a' or 'b', rung index 1..n.
struct RungAttach {
    char side = 'a';
    int index = 1;

    friend bool operator==(const RungAttach&, const RungAttach&) = default;
};

/// The marked vertices x, y, z, w, u (present as the kind requires).
struct Marks {
    Vertex x = -1;
    Vertex y = -1;
    std::optional<Vertex> z;
    std::optional<Vertex> w;
    std::optional<Vertex> u;
};

struct Template {
    TemplateKind kind = TemplateKind::H1;
    Graph host;
    Ladder core;
    Marks marks;
    std::optional<RungAttach> z_attach;
    /// H5 only: z deleted and xy added.
    bool pendent_dropped = false;
    HalinCertificate certificate;

    int n() const { return core.length(); }
};

/// T_i: head link a_1b_1, tail link a_nb_n, ends x and y, and the extra gadget
/// vertices. Vertex ids refer to whatever graph the anchor lives in.
struct Anchor {
    TemplateKind kind = TemplateKind::H1;
    Marks marks;
    Edge head_link;
    Edge tail_link;
    std::vector<Edge> edges;

    Vertex left_end() const { return marks.x; }
    Vertex right_end() const { return marks.y; }
    std::optional<Vertex> pendent() const { return has_pendent(kind) ? marks.z : std::nullopt; }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out{marks.x, marks.y, head_link.u, head_link.v, tail_link.u, tail_link.v};
        for (const auto& m : {marks.z, marks.w, marks.u})
            if (m) out.push_back(*m);
        return make_vertex_set(std::move(out));
    }

    /// The anchor as a standalone graph; vertex i is vertices()[i].
    Graph local_graph() const {
        const std::vector<Vertex> vs = vertices();
        auto local = [&](Vertex v) {
            return static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
        };
        Graph g(static_cast<int>(vs.size()));
        for (const Edge& e : edges) g.add_edge(local(e.u), local(e.v));
        return g;
    }
};

namespace detail {

/// Everything needed to lay a gadget around a ladder: the ladder whose first
/// rung is the head link, the marks, and where the pendent vertex attaches.
struct GadgetLayout {
    TemplateKind kind = TemplateKind::H1;
    Ladder ladder;
    Marks marks;
    std::optional<Vertex> z_neighbor;
    bool pendent_dropped = false;
    /// H1 only: use the side through a_1 as the spine of the underlying tree.
    bool spine_from_a = false;
};

inline bool on_rail(const std::vector<Vertex>& rail, Vertex v) {
    return std::find(rail.begin(), rail.end(), v) != rail.end();
}

/// The non-ladder edges of H_kind (without zz').
inline std::vector<Edge> gadget_edges(const GadgetLayout& g) {
    const Ladder& l = g.ladder;
    const int n = l.length();
    const Vertex a1 = l.a(1), b1 = l.b(1), an = l.a(n), bn = l.b(n);
    const Vertex x = g.marks.x, y = g.marks.y;
    std::vector<Edge> e;
    switch (g.kind) {
        case TemplateKind::H1:
            e = {{x, a1}, {x, b1}, {y, an}, {y, bn}, {x, y}};
            break;
        case TemplateKind::H2: {
            const Vertex z = *g.marks.z;
            e = {{z, a1}, {z, b1}, {x, z}, {x, b1}, {y, an}, {y, bn}, {x, y}};
            break;
        }
        case TemplateKind::H3: {
            const Vertex z = *g.marks.z;
            e = {{x, a1}, {x, b1}, {y, an}, {y, bn}, {x, z}, {y, z}};
            break;
        }
        case TemplateKind::H4: {
            const Vertex z = *g.marks.z, w = *g.marks.w;
            e = {{w, a1}, {w, b1}, {x, w}, {x, b1}, {y, an}, {y, bn}, {x, z}, {y, z}};
            break;
        }
        case TemplateKind::H5: {
            const Vertex w = *g.marks.w, u = *g.marks.u;
            // y meets the far end of the side through b_1: b_n when n is odd, a_n when even.
            const Vertex y_end = (n % 2 == 1) ? bn : an;
            e = {{w, a1}, {w, b1}, {x, w}, {x, b1}, {u, an}, {u, bn}, {y, u}, {y, y_end}};
            if (g.pendent_dropped) {
                e.push_back({x, y});
            } else {
                const Vertex z = *g.marks.z;
                e.push_back({x, z});
                e.push_back({y, z});
            }
            break;
        }
    }
    return e;
}

/// Underlying tree and leaf cycle for a gadget laid around a ladder. The tree
/// is the spine side with every rung hanging off it, plus the gadget vertices;
/// the leaves are the other side and the gadget's outer vertices.
inline HalinCertificate gadget_certificate(const GadgetLayout& g) {
    const Ladder& l = g.ladder;
    const int n = l.length();
    std::vector<Vertex> spine = rail_from_b(l);
    std::vector<Vertex> other = rail_from_a(l);
    bool swap = false;
    if (g.kind == TemplateKind::H1) swap = g.spine_from_a;
    if (g.kind == TemplateKind::H3 && g.z_neighbor) swap = on_rail(other, *g.z_neighbor);
    if (swap) std::swap(spine, other);

    HalinCertificate cert;
    for (int i = 1; i <= n; ++i) cert.tree_edges.push_back({l.a(i), l.b(i)});
    for (std::size_t i = 0; i + 1 < spine.size(); ++i) cert.tree_edges.push_back({spine[i], spine[i + 1]});

    const Vertex x = g.marks.x, y = g.marks.y;
    const Vertex first = spine.front(), last = spine.back();
    auto add_tree = [&](Vertex a, Vertex b) { cert.tree_edges.push_back({a, b}); };
    auto add_z = [&] {
        if (g.z_neighbor) add_tree(*g.marks.z, *g.z_neighbor);
    };
    std::vector<Vertex>& cyc = cert.leaf_cycle;
    switch (g.kind) {
        case TemplateKind::H1:
            add_tree(x, first);
            add_tree(y, last);
            cyc.push_back(x);
            cyc.insert(cyc.end(), other.begin(), other.end());
            cyc.push_back(y);
            break;
        case TemplateKind::H2:
            add_tree(x, first);
            add_tree(*g.marks.z, first);
            add_tree(y, last);
            cyc = {x, *g.marks.z};
            cyc.insert(cyc.end(), other.begin(), other.end());
            cyc.push_back(y);
            break;
        case TemplateKind::H3:
            add_tree(x, first);
            add_tree(y, last);
            add_z();
            cyc.push_back(x);
            cyc.insert(cyc.end(), other.begin(), other.end());
            cyc.push_back(y);
            cyc.push_back(*g.marks.z);
            break;
        case TemplateKind::H4:
            add_tree(x, first);
            add_tree(*g.marks.w, first);
            add_tree(y, last);
            add_z();
            cyc.push_back(*g.marks.w);
            cyc.insert(cyc.end(), other.begin(), other.end());
            cyc.push_back(y);
            cyc.push_back(*g.marks.z);
            cyc.push_back(x);
            break;
        case TemplateKind::H5:
            add_tree(x, first);
            add_tree(*g.marks.w, first);
            add_tree(y, last);
            add_tree(*g.marks.u, last);
            if (!g.pendent_dropped) add_z();
            cyc.push_back(*g.marks.w);
            cyc.insert(cyc.end(), other.begin(), other.end());
            cyc.push_back(*g.marks.u);
            cyc.push_back(y);
            if (!g.pendent_dropped) cyc.push_back(*g.marks.z);
            cyc.push_back(x);
            break;
    }
    return cert;
}

inline Vertex attach_vertex(const Ladder& l, const RungAttach& at) {
    return at.side == 'a' ? l.a(at.index) : l.b(at.index);
}

}  // namespace detail

/// Rejects attachments outside the ladder and, for H4/H5, attachments off the
/// side that has b_1 as an end.
inline void check_z_attach(TemplateKind kind, int n, const RungAttach& at) {
    if (at.side != 'a' && at.side != 'b') throw Error("z attachment side must be 'a' or 'b'");
    if (at.index < 1 || at.index > n) throw Error("z attachment index out of range");
    if (kind == TemplateKind::H4 || kind == TemplateKind::H5) {
        // The side through b_1 holds b_i for odd i and a_i for even i.
        const bool on_b_rail = (at.side == 'b') == (at.index % 2 == 1);
        if (!on_b_rail)
            throw Error(to_string(kind) + ": z must attach to the side of the ladder ending at b_1");
    }
}

/// Every z attachment the kind admits on L_n (empty for H1 and H2).
inline std::vector<RungAttach> admissible_attachments(TemplateKind kind, int n) {
    std::vector<RungAttach> out;
    if (!has_pendent(kind)) return out;
    for (int i = 1; i <= n; ++i)
        for (char side : {'a', 'b'}) {
            try {
                check_z_attach(kind, n, {side, i});
                out.push_back({side, i});
            } catch (const Error&) {
            }
        }
    return out;
}

/// H_kind built on L_n. Ladder vertices are a_i = i-1 and b_i = n+i-1, then
/// x, y, z, w, u in that order as the kind requires.
inline Template build_template(TemplateKind kind, int n,
                               std::optional<RungAttach> z_attach = std::nullopt,
                               bool drop_pendent = false) {
    if (n < 1) throw Error("template ladder length must be positive");
    if (drop_pendent && kind != TemplateKind::H5) throw Error("only H5 has a pendent-free variant");
    const bool wants_z = has_pendent(kind) && !drop_pendent;
    if (wants_z && !z_attach) throw Error(to_string(kind) + " requires a z attachment");
    if (!wants_z && z_attach) throw Error(to_string(kind) + " takes no z attachment");
    if (z_attach) check_z_attach(kind, n, *z_attach);

    LadderGraph base = make_ladder(n);
    Template t;
    t.kind = kind;
    t.core = base.ladder;
    t.z_attach = z_attach;
    t.pendent_dropped = drop_pendent;

    Vertex next = 2 * n;
    t.marks.x = next++;
    t.marks.y = next++;
    if (kind != TemplateKind::H1 && !drop_pendent) t.marks.z = next++;
    if (kind == TemplateKind::H4 || kind == TemplateKind::H5) t.marks.w = next++;
    if (kind == TemplateKind::H5) t.marks.u = next++;

    detail::GadgetLayout layout{kind, t.core, t.marks, std::nullopt, drop_pendent, false};
    if (z_attach) layout.z_neighbor = detail::attach_vertex(t.core, *z_attach);

    t.host = Graph(next);
    for (const Edge& e : t.core.edges()) t.host.add_edge(e);
    for (const Edge& e : detail::gadget_edges(layout)) t.host.add_edge(e);
    if (layout.z_neighbor) t.host.add_edge(*t.marks.z, *layout.z_neighbor);
    t.certificate = detail::gadget_certificate(layout);
    return t;
}

/// Underlying tree of a template; for H1 either side can be the spine.
inline HalinCertificate template_certificate(const Template& t, bool spine_from_a = false) {
    if (!spine_from_a || t.kind != TemplateKind::H1) return t.certificate;
    detail::GadgetLayout layout{t.kind, t.core, t.marks, std::nullopt, false, true};
    return detail::gadget_certificate(layout);
}

/// T_kind: the gadget edges among x, y, z, w, u and the head and tail links.
/// The attachment edge of z is not part of the anchor, so z stays triangle-free.
inline Anchor extract_anchor(const Template& t) {
    if (t.pendent_dropped) throw Error("the pendent-free H5 variant has no anchor");
    Anchor a;
    a.kind = t.kind;
    a.marks = t.marks;
    a.head_link = {t.core.a(1), t.core.b(1)};
    a.tail_link = {t.core.a(t.n()), t.core.b(t.n())};
    detail::GadgetLayout layout{t.kind, t.core, t.marks, std::nullopt, false, false};
    a.edges = detail::gadget_edges(layout);
    a.edges.push_back(a.head_link);
    if (t.n() > 1) a.edges.push_back(a.tail_link);
    return a;
}

/// Anchor with every vertex id v replaced by map[v].
inline Anchor relabel(const Anchor& a, const std::vector<Vertex>& map) {
    auto m = [&](Vertex v) { return map.at(static_cast<std::size_t>(v)); };
    auto mo = [&](std::optional<Vertex> v) { return v ? std::optional<Vertex>(m(*v)) : std::nullopt; };
    Anchor out;
    out.kind = a.kind;
    out.marks = {m(a.marks.x), m(a.marks.y), mo(a.marks.z), mo(a.marks.w), mo(a.marks.u)};
    out.head_link = {m(a.head_link.u), m(a.head_link.v)};
    out.tail_link = {m(a.tail_link.u), m(a.tail_link.v)};
    for (const Edge& e : a.edges) out.edges.push_back({m(e.u), m(e.v)});
    return out;
}

/// Vertices that may receive a merge edge: internal vertices of shortest
/// (x,y)-paths running through the ladder (the edge xy and the pendent vertex
/// are set aside) that have degree at least 3 in an underlying tree. For H1
/// this is every vertex except x and y.
inline VertexSet halin_constructible_vertices(const Template& t) {
    const Vertex x = t.marks.x, y = t.marks.y;
    Graph g = t.host;
    g.remove_edge(x, y);
    std::vector<bool> removed(static_cast<std::size_t>(g.order()), false);
    if (t.marks.z) removed[static_cast<std::size_t>(*t.marks.z)] = true;
    const auto dx = bfs_distances(g, x, &removed);
    const auto dy = bfs_distances(g, y, &removed);
    const int target = dx[static_cast<std::size_t>(y)];

    std::vector<int> tree_degree(static_cast<std::size_t>(g.order()), 0);
    auto count_tree = [&](const HalinCertificate& c) {
        std::vector<int> d(static_cast<std::size_t>(g.order()), 0);
        for (const Edge& e : c.tree_edges) {
            ++d[static_cast<std::size_t>(e.u)];
            ++d[static_cast<std::size_t>(e.v)];
        }
        for (std::size_t i = 0; i < d.size(); ++i) tree_degree[i] = std::max(tree_degree[i], d[i]);
    };
    count_tree(template_certificate(t, false));
    if (t.kind == TemplateKind::H1) count_tree(template_certificate(t, true));

    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (v == x || v == y || removed[static_cast<std::size_t>(v)]) continue;
        const int a = dx[static_cast<std::size_t>(v)], b = dy[static_cast<std::size_t>(v)];
        if (a < 0 || b < 0 || a + b != target) continue;
        if (tree_degree[static_cast<std::size_t>(v)] >= 3) out.push_back(v);
    }
    return out;
}

/// A spanning Halin subgraph produced by assembling or merging.
struct Assembly {
    /// Exactly the edges of the Halin graph, on the vertex set of the input.
    Graph halin;
    HalinCertificate certificate;
    /// Head link, the through-ladder, then the tail link.
    Ladder ladder;
};

/// abLcd ∪ T (∪ zz'): closes a spanning ladder of G - V(T) with an anchor.
///
/// Both crosswise joins at the head and tail are tried; the first
/// orientation whose construction certifies is returned.
inline Assembly assemble(const Anchor& anchor, const Ladder& through, const Graph& g,
                         std::optional<Edge> pendant_edge = std::nullopt) {
    const Edge head = anchor.head_link;
    const Edge tail = anchor.tail_link;
    if (head.shares_endpoint(tail)) throw Error("anchor head and tail links share vertices");
    for (const Edge& e : anchor.edges)
        if (!g.has_edge(e)) throw Error("anchor edge " + to_string(e) + " not in graph");
    if (!through.empty() && !validate_ladder(g, through)) throw Error("through-ladder is not a ladder of the graph");

    const std::vector<Vertex> tv = anchor.vertices();
    std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : tv) covered[static_cast<std::size_t>(v)] = true;
    for (Vertex v : through.vertices()) {
        if (covered[static_cast<std::size_t>(v)]) throw Error("through-ladder meets the anchor");
        covered[static_cast<std::size_t>(v)] = true;
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end())
        throw Error("anchor and ladder do not span the graph");

    std::optional<Vertex> z_neighbor;
    if (auto z = anchor.pendent()) {
        if (!pendant_edge) throw Error("anchor has a pendent vertex; a pendant edge zz' is required");
        if (!g.has_edge(*pendant_edge)) throw Error("pendant edge not in graph");
        if (pendant_edge->u == *z) z_neighbor = pendant_edge->v;
        else if (pendant_edge->v == *z) z_neighbor = pendant_edge->u;
        else throw Error("pendant edge does not touch the pendent vertex");
        if (std::find(tv.begin(), tv.end(), *z_neighbor) != tv.end() &&
            !head.touches(*z_neighbor) && !tail.touches(*z_neighbor))
            throw Error("z' not on the designated side");
    } else if (pendant_edge) {
        throw Error("anchor has no pendent vertex");
    }

    // Candidate rung sequences: head, through (either orientation), tail (either orientation).
    std::vector<Ladder> middles;
    if (through.empty()) {
        middles.emplace_back();
    } else {
        middles.push_back(through);
        middles.push_back(through.swapped());
    }
    bool head_joins = false, tail_joins = false, side_ok = !z_neighbor.has_value();
    for (const Ladder& mid : middles) {
        std::vector<Vertex> a{head.u}, b{head.v};
        a.insert(a.end(), mid.a_side().begin(), mid.a_side().end());
        b.insert(b.end(), mid.b_side().begin(), mid.b_side().end());
        if (!validate_ladder(g, a, b)) continue;
        head_joins = true;
        for (const Edge& t : {tail, tail.reversed()}) {
            std::vector<Vertex> fa(a), fb(b);
            fa.push_back(t.u);
            fb.push_back(t.v);
            if (!validate_ladder(g, fa, fb)) continue;
            tail_joins = true;
            Ladder full(fa, fb);
            if (z_neighbor && (anchor.kind == TemplateKind::H4 || anchor.kind == TemplateKind::H5) &&
                !detail::on_rail(rail_from_b(full), *z_neighbor))
                continue;
            side_ok = true;

            Graph h(g.order());
            for (const Edge& e : full.edges()) h.add_edge(e);
            for (const Edge& e : anchor.edges) h.add_edge(e);
            if (z_neighbor) h.add_edge(*anchor.marks.z, *z_neighbor);
            detail::GadgetLayout layout{anchor.kind, full, anchor.marks, z_neighbor, false, false};
            HalinCertificate cert = detail::gadget_certificate(layout);
            if (verify_halin(h, cert, VerifyMode::full)) return {std::move(h), std::move(cert), std::move(full)};
        }
    }
    if (!head_joins) throw Error("first rung is not adjacent to the head link");
    if (!tail_joins) throw Error("last rung is not adjacent to the tail link");
    if (!side_ok) throw Error("z' not on the designated side");
    throw Error("no orientation of the ladder closes the anchor into a Halin graph");
}

/// G1 ∪ G2 - {x1y1, x2y2} ∪ {x1x2, y1y2, u1u2} for G1, G2 ∈ {H1, H2}.
/// Vertices of G2 are shifted by |V(G1)|; u2 is given in G2's own ids.
inline Assembly merge(const Template& g1, const Template& g2, Vertex u1, Vertex u2) {
    for (const Template* t : {&g1, &g2})
        if (t->kind != TemplateKind::H1 && t->kind != TemplateKind::H2)
            throw Error("merge takes H1 or H2 templates");
    const VertexSet c1 = halin_constructible_vertices(g1);
    const VertexSet c2 = halin_constructible_vertices(g2);
    if (!std::binary_search(c1.begin(), c1.end(), u1))
        throw Error("u1 = " + std::to_string(u1) + " is not Halin constructible");
    if (!std::binary_search(c2.begin(), c2.end(), u2))
        throw Error("u2 = " + std::to_string(u2) + " is not Halin constructible");

    // Pick the underlying tree in which u has degree at least 3.
    auto cert_for = [](const Template& t, Vertex u) {
        HalinCertificate c = template_certificate(t, false);
        int deg = 0;
        for (const Edge& e : c.tree_edges) deg += e.touches(u) ? 1 : 0;
        if (deg < 3) c = template_certificate(t, true);
        return c;
    };
    const HalinCertificate h1 = cert_for(g1, u1);
    const HalinCertificate h2 = cert_for(g2, u2);
    const Vertex shift = g1.host.order();

    Assembly out;
    out.halin = g1.host.disjoint_union(g2.host);
    const Vertex x1 = g1.marks.x, y1 = g1.marks.y;
    const Vertex x2 = g2.marks.x + shift, y2 = g2.marks.y + shift;
    out.halin.remove_edge(x1, y1);
    out.halin.remove_edge(x2, y2);
    out.halin.add_edge(x1, x2);
    out.halin.add_edge(y1, y2);
    out.halin.add_edge(u1, u2 + shift);

    out.certificate.tree_edges = h1.tree_edges;
    for (const Edge& e : h2.tree_edges) out.certificate.tree_edges.push_back({e.u + shift, e.v + shift});
    out.certificate.tree_edges.push_back({u1, u2 + shift});
    // Each leaf cycle reads x ... y; splice them as x1 ... y1 y2 ... x2.
    out.certificate.leaf_cycle = h1.leaf_cycle;
    for (auto it = h2.leaf_cycle.rbegin(); it != h2.leaf_cycle.rend(); ++it)
        out.certificate.leaf_cycle.push_back(*it + shift);

    if (Verdict v = verify_halin(out.halin, out.certificate, VerifyMode::full); !v)
        throw Error("merge produced an invalid certificate: " + v.summary());
    return out;
}

}  // namespace halin
