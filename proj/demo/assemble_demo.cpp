// Closes a spanning ladder of a dense graph with a T3 anchor and prints the
// resulting spanning Halin subgraph.
#include <iostream>
#include <numeric>
#include <random>

#include "halin/halin.hpp"

int main() {
    using namespace halin;

    // T3 from H3 on L_2: a_1=0 a_2=1 b_1=2 b_2=3 x=4 y=5 z=6.
    const Template h3 = build_template(TemplateKind::H3, 2, RungAttach{'a', 1});
    const Anchor anchor = extract_anchor(h3);

    // Host on 13 vertices: complete, minus a random matching on the other six.
    Graph g = gen::complete(13);
    std::vector<Vertex> rest{7, 8, 9, 10, 11, 12};
    std::mt19937 rng(5);
    std::shuffle(rest.begin(), rest.end(), rng);
    g.remove_edge(rest[0], rest[1]);
    g.remove_edge(rest[2], rest[3]);
    std::sort(rest.begin(), rest.end());

    LadderRequest req;
    req.base = g.induced(rest);
    const std::vector<Edge> local_edges = req.base.edges();
    req.first_rung = local_edges.front();
    for (const Edge& e : local_edges)
        if (!e.shares_endpoint(req.first_rung)) req.last_rung = e;
    const Ladder local = find_spanning_ladders(req).front();
    std::vector<Vertex> a, b;
    for (Vertex v : local.a_side()) a.push_back(rest[static_cast<std::size_t>(v)]);
    for (Vertex v : local.b_side()) b.push_back(rest[static_cast<std::size_t>(v)]);
    const Ladder through(a, b);

    for (Vertex zp : through.vertices()) {
        try {
            const Assembly result = assemble(anchor, through, g, Edge{*anchor.pendent(), zp});
            std::cout << "# z' = " << zp << '\n'
                      << io::format_edge_list(result.halin) << io::format_certificate(result.certificate)
                      << verify_halin(g, result.certificate).summary() << '\n';
            return 0;
        } catch (const Error& e) {
            std::cout << "# z' = " << zp << " rejected: " << e.what() << '\n';
        }
    }
    return 1;
}
