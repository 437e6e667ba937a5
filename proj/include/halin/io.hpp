#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "halin/graph.hpp"
#include "halin/ladder.hpp"
#include "halin/templates.hpp"
#include "halin/verify.hpp"

namespace halin::io {

// Text formats. Everything after '#' on a line is a comment; blank lines are skipped.
//
//   edge list     "n m" followed by m lines "u v"
//   ladder        "ladder n", "A: a1 ... an", "B: b1 ... bn"
//   certificate   "tree:" followed by lines "u v", then "cycle: v1 ... vk"
//   template      "template H3 n=5 z=a,2" (H5 may add "drop-z")
//   anchor marks  "marks: x=.. y=.. [z=..] [w=..] [u=..] head=a,b tail=c,d kind=T3"
//
// Sections may follow one another in a single document.

struct TemplateDescriptor {
    TemplateKind kind = TemplateKind::H1;
    int n = 1;
    std::optional<RungAttach> z_attach;
    bool drop_pendent = false;

    Template build() const { return build_template(kind, n, z_attach, drop_pendent); }
};

struct Document {
    std::optional<Graph> graph;
    std::vector<Ladder> ladders;
    std::optional<HalinCertificate> certificate;
    std::optional<TemplateDescriptor> descriptor;
    std::optional<Anchor> anchor;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto hash = s.find('#');
    if (hash != std::string_view::npos) s = s.substr(0, hash);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool starts_with_word(std::string_view s, std::string_view word) {
    return s.substr(0, word.size()) == word;
}

inline int parse_int(std::string_view tok, int line) {
    int value = 0;
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc() || ptr != end) throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
    return value;
}

inline std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != ',') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::vector<int> parse_ints(std::string_view s, int line) {
    std::vector<int> out;
    for (auto tok : split(s)) out.push_back(parse_int(tok, line));
    return out;
}

struct Lines {
    std::vector<std::pair<int, std::string>> items;
    std::size_t pos = 0;

    explicit Lines(std::istream& in) {
        std::string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            std::string_view t = trim(raw);
            if (!t.empty()) items.emplace_back(number, std::string(t));
        }
    }
    bool done() const { return pos >= items.size(); }
    const std::string& peek() const { return items[pos].second; }
    int line() const { return done() ? (items.empty() ? 0 : items.back().first) : items[pos].first; }
};

inline std::optional<RungAttach> parse_attach(std::string_view v, int line) {
    auto parts = split(v);
    if (parts.size() != 2 || parts[0].size() != 1 || (parts[0][0] != 'a' && parts[0][0] != 'b'))
        throw ParseError("z attachment must look like a,2 or b,3", line);
    return RungAttach{parts[0][0], parse_int(parts[1], line)};
}

inline TemplateDescriptor parse_descriptor_line(std::string_view s, int line) {
    auto toks = split(s);
    // split() breaks "z=a,2" at the comma, so rejoin key=value pairs.
    TemplateDescriptor d;
    bool have_n = false;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        std::string_view t = toks[i];
        if (i == 1) {
            if (t.size() != 2 || t[0] != 'H' || t[1] < '1' || t[1] > '5')
                throw ParseError("unknown template kind '" + std::string(t) + "'", line);
            d.kind = template_kind_from_index(t[1] - '0');
        } else if (starts_with_word(t, "n=")) {
            d.n = parse_int(t.substr(2), line);
            have_n = true;
        } else if (starts_with_word(t, "z=")) {
            if (i + 1 >= toks.size()) throw ParseError("z attachment must look like a,2 or b,3", line);
            d.z_attach = parse_attach(std::string(t.substr(2)) + "," + std::string(toks[i + 1]), line);
            ++i;
        } else if (t == "drop-z") {
            d.drop_pendent = true;
        } else {
            throw ParseError("unknown template field '" + std::string(t) + "'", line);
        }
    }
    if (toks.size() < 2) throw ParseError("template line needs a kind", line);
    if (!have_n) throw ParseError("template line needs n=", line);
    return d;
}

inline Anchor parse_marks_line(std::string_view s, int line) {
    auto toks = split(s.substr(std::string_view("marks:").size()));
    Anchor a;
    bool have_x = false, have_y = false, have_head = false, have_tail = false;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        std::string_view t = toks[i];
        const auto eq = t.find('=');
        if (eq == std::string_view::npos) throw ParseError("marks entries look like key=value", line);
        const std::string_view key = t.substr(0, eq), val = t.substr(eq + 1);
        auto pair_value = [&] {
            if (i + 1 >= toks.size()) throw ParseError(std::string(key) + " needs two vertices", line);
            Edge e{parse_int(val, line), parse_int(toks[i + 1], line)};
            ++i;
            return e;
        };
        if (key == "x") { a.marks.x = parse_int(val, line); have_x = true; }
        else if (key == "y") { a.marks.y = parse_int(val, line); have_y = true; }
        else if (key == "z") a.marks.z = parse_int(val, line);
        else if (key == "w") a.marks.w = parse_int(val, line);
        else if (key == "u") a.marks.u = parse_int(val, line);
        else if (key == "head") { a.head_link = pair_value(); have_head = true; }
        else if (key == "tail") { a.tail_link = pair_value(); have_tail = true; }
        else if (key == "kind") {
            if (val.size() != 2 || val[0] != 'T') throw ParseError("anchor kind must be T1..T5", line);
            a.kind = template_kind_from_index(parse_int(val.substr(1), line));
        } else {
            throw ParseError("unknown mark '" + std::string(key) + "'", line);
        }
    }
    if (!have_x || !have_y || !have_head || !have_tail) throw ParseError("marks need x, y, head and tail", line);
    return a;
}

}  // namespace detail

inline Document parse_document(std::istream& in) {
    detail::Lines lines(in);
    Document doc;
    while (!lines.done()) {
        const int ln = lines.line();
        const std::string cur = lines.peek();
        ++lines.pos;
        if (detail::starts_with_word(cur, "ladder")) {
            const auto head = detail::split(std::string_view(cur).substr(6));
            if (head.size() != 1) throw ParseError("expected 'ladder n'", ln);
            const int n = detail::parse_int(head[0], ln);
            std::vector<int> sides[2];
            for (int s = 0; s < 2; ++s) {
                const char* tag = s == 0 ? "A:" : "B:";
                if (lines.done() || !detail::starts_with_word(lines.peek(), tag))
                    throw ParseError(std::string("expected '") + tag + "' line", lines.line());
                sides[s] = detail::parse_ints(std::string_view(lines.peek()).substr(2), lines.line());
                if (static_cast<int>(sides[s].size()) != n)
                    throw ParseError("ladder side has the wrong length", lines.line());
                ++lines.pos;
            }
            try {
                doc.ladders.emplace_back(sides[0], sides[1]);
            } catch (const Error& e) {
                throw ParseError(e.what(), ln);
            }
        } else if (cur == "tree:") {
            HalinCertificate cert;
            bool closed = false;
            while (!lines.done()) {
                const std::string& t = lines.peek();
                if (detail::starts_with_word(t, "cycle:")) {
                    for (int v : detail::parse_ints(std::string_view(t).substr(6), lines.line()))
                        cert.leaf_cycle.push_back(v);
                    ++lines.pos;
                    closed = true;
                    break;
                }
                const auto uv = detail::parse_ints(t, lines.line());
                if (uv.size() != 2) throw ParseError("tree edge must be 'u v'", lines.line());
                cert.tree_edges.push_back({uv[0], uv[1]});
                ++lines.pos;
            }
            if (!closed) throw ParseError("certificate has no 'cycle:' line", lines.line());
            doc.certificate = std::move(cert);
        } else if (detail::starts_with_word(cur, "template")) {
            doc.descriptor = detail::parse_descriptor_line(cur, ln);
        } else if (detail::starts_with_word(cur, "marks:")) {
            doc.anchor = detail::parse_marks_line(cur, ln);
        } else {
            if (doc.graph) throw ParseError("unexpected line '" + cur + "'", ln);
            const auto header = detail::parse_ints(cur, ln);
            if (header.size() != 2) throw ParseError("expected header 'n m'", ln);
            const int n = header[0], m = header[1];
            if (n < 0 || m < 0) throw ParseError("negative count in header", ln);
            Graph g(n);
            for (int i = 0; i < m; ++i) {
                if (lines.done()) throw ParseError("edge list ends after " + std::to_string(i) + " of " + std::to_string(m) + " edges", lines.line());
                const int el = lines.line();
                const auto uv = detail::parse_ints(lines.peek(), el);
                if (uv.size() != 2) throw ParseError("edge must be 'u v'", el);
                if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n) throw ParseError("vertex out of range", el);
                if (uv[0] == uv[1]) throw ParseError("self-loop", el);
                if (!g.add_edge(uv[0], uv[1])) throw ParseError("repeated edge", el);
                ++lines.pos;
            }
            doc.graph = std::move(g);
        }
    }
    if (doc.anchor) {
        if (!doc.graph) throw ParseError("marks given without an edge list", 0);
        doc.anchor->edges = doc.graph->edges();
    }
    return doc;
}

inline Document parse_document(const std::string& text) {
    std::istringstream in(text);
    return parse_document(in);
}

inline Document read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return parse_document(in);
}

inline Graph parse_edge_list(const std::string& text) {
    Document d = parse_document(text);
    if (!d.graph) throw ParseError("no edge list found", 0);
    return std::move(*d.graph);
}

inline std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

inline std::string format_ladder(const Ladder& l) {
    std::ostringstream out;
    out << "ladder " << l.length() << "\nA:";
    for (Vertex v : l.a_side()) out << ' ' << v;
    out << "\nB:";
    for (Vertex v : l.b_side()) out << ' ' << v;
    out << '\n';
    return out.str();
}

inline std::string format_certificate(const HalinCertificate& c) {
    std::ostringstream out;
    out << "tree:\n";
    for (const Edge& e : c.tree_edges) out << e.u << ' ' << e.v << '\n';
    out << "cycle:";
    for (Vertex v : c.leaf_cycle) out << ' ' << v;
    out << '\n';
    return out.str();
}

inline std::string format_descriptor(const TemplateDescriptor& d) {
    std::string s = "template " + to_string(d.kind) + " n=" + std::to_string(d.n);
    if (d.z_attach) s += std::string(" z=") + d.z_attach->side + "," + std::to_string(d.z_attach->index);
    if (d.drop_pendent) s += " drop-z";
    return s + '\n';
}

/// Marks line plus the anchor's edges as an edge list over the ambient ids.
inline std::string format_anchor(const Anchor& a) {
    std::ostringstream out;
    out << "marks: kind=T" << kind_index(a.kind) << " x=" << a.marks.x << " y=" << a.marks.y;
    if (a.marks.z) out << " z=" << *a.marks.z;
    if (a.marks.w) out << " w=" << *a.marks.w;
    if (a.marks.u) out << " u=" << *a.marks.u;
    out << " head=" << a.head_link.u << ',' << a.head_link.v << " tail=" << a.tail_link.u << ','
        << a.tail_link.v << '\n';
    Vertex top = 0;
    for (Vertex v : a.vertices()) top = std::max(top, v);
    out << format_edge_list(Graph::from_edges(top + 1, a.edges));
    return out.str();
}

}  // namespace halin::io
