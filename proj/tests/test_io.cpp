#include <random>

#include "catch_amalgamated.hpp"
#include "halin/halin.hpp"

using namespace halin;

namespace {

int parse_error_line(const std::string& text) {
    try {
        io::parse_document(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("edge lists round-trip") {
    std::mt19937 rng(23);
    for (int t = 0; t < 50; ++t) {
        const Graph g = gen::random_graph(1 + static_cast<int>(rng() % 20), 0.4, rng);
        CHECK(io::parse_edge_list(io::format_edge_list(g)) == g);
    }
}

TEST_CASE("comments and blank lines are ignored") {
    const Graph g = io::parse_edge_list("# triangle\n\n3 3\n0 1   # first\n1 2\n\n2 0\n");
    CHECK(g == gen::cycle(3));
}

TEST_CASE("ladders and certificates round-trip") {
    const LadderGraph l = make_ladder(5);
    const io::Document d = io::parse_document(io::format_edge_list(l.host) + io::format_ladder(l.ladder));
    REQUIRE(d.graph);
    REQUIRE(d.ladders.size() == 1);
    CHECK(d.ladders[0].a_side() == l.ladder.a_side());
    CHECK(d.ladders[0].b_side() == l.ladder.b_side());

    std::mt19937 rng(24);
    for (int t = 0; t < 30; ++t) {
        const gen::HalinInstance h = gen::random_halin(30, rng);
        const io::Document c = io::parse_document(io::format_edge_list(h.graph) + io::format_certificate(h.certificate));
        REQUIRE(c.certificate);
        REQUIRE(c.certificate->tree_edges == h.certificate.tree_edges);
        REQUIRE(c.certificate->leaf_cycle == h.certificate.leaf_cycle);
        REQUIRE(verify_halin(*c.graph, *c.certificate, VerifyMode::full));
    }
}

TEST_CASE("template descriptors round-trip") {
    for (const io::TemplateDescriptor& d :
         {io::TemplateDescriptor{TemplateKind::H1, 4, std::nullopt, false},
          io::TemplateDescriptor{TemplateKind::H3, 5, RungAttach{'a', 2}, false},
          io::TemplateDescriptor{TemplateKind::H5, 3, std::nullopt, true}}) {
        const std::string text = io::format_descriptor(d);
        const io::Document doc = io::parse_document(text);
        REQUIRE(doc.descriptor);
        CHECK(io::format_descriptor(*doc.descriptor) == text);
        CHECK(doc.descriptor->build().host.order() == d.build().host.order());
    }
    CHECK(io::format_descriptor({TemplateKind::H3, 5, RungAttach{'a', 2}, false}) == "template H3 n=5 z=a,2\n");
}

TEST_CASE("anchors round-trip") {
    const Anchor a = extract_anchor(build_template(TemplateKind::H4, 3, RungAttach{'b', 1}));
    const io::Document d = io::parse_document(io::format_anchor(a));
    REQUIRE(d.anchor);
    CHECK(d.anchor->kind == a.kind);
    CHECK(d.anchor->marks.x == a.marks.x);
    CHECK(d.anchor->marks.z == a.marks.z);
    CHECK(d.anchor->marks.w == a.marks.w);
    CHECK(d.anchor->head_link == a.head_link);
    CHECK(d.anchor->tail_link == a.tail_link);
    CHECK(make_vertex_set(d.anchor->vertices()) == make_vertex_set(a.vertices()));
    CHECK(d.anchor->edges.size() == a.edges.size());
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("3 2\n0 1\n") == 2);
    CHECK(parse_error_line("3 2\n0 1\n0 x\n") == 3);
    CHECK(parse_error_line("# c\n3 1\n0 3\n") == 3);
    CHECK(parse_error_line("3 2\n0 1\n1 0\n") == 3);
    CHECK(parse_error_line("3 1\n1 1\n") == 2);
    CHECK(parse_error_line("3\n") == 1);
    CHECK(parse_error_line("ladder 2\nA: 0 1\nB: 2\n") == 3);
    CHECK(parse_error_line("ladder 2\nA: 0 1\n") == 2);
    CHECK(parse_error_line("ladder 1\nA: 0\nB: 0\n") == 1);
    CHECK(parse_error_line("tree:\n0 1\n") == 2);
    CHECK(parse_error_line("tree:\n0 1 2\ncycle: 1 2\n") == 2);
    CHECK(parse_error_line("template H9 n=2\n") == 1);
    CHECK(parse_error_line("template H3\n") == 1);
    CHECK(parse_error_line("2 1\n0 1\n2 1\n0 1\n") == 3);
    CHECK_THROWS_AS(io::read_document("/nonexistent/file.el"), ParseError);
    CHECK_THROWS_AS(io::parse_edge_list("tree:\n0 1\ncycle: 0 1\n"), ParseError);
}
