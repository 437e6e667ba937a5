// One PASS/FAIL line per acceptance criterion. Exit status is non-zero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "halin/halin.hpp"
#include "oracles.hpp"

using namespace halin;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string ratio(int ok, int total) { return std::to_string(ok) + "/" + std::to_string(total); }

int expected_order(TemplateKind k, int n, bool dropped) {
    switch (k) {
        case TemplateKind::H1: return 2 * n + 2;
        case TemplateKind::H2:
        case TemplateKind::H3: return 2 * n + 3;
        case TemplateKind::H4: return 2 * n + 4;
        case TemplateKind::H5: return 2 * n + (dropped ? 4 : 5);
    }
    return -1;
}

Outcome template_sweep() {
    int built = 0, ok = 0;
    for (int k = 1; k <= 5; ++k) {
        const TemplateKind kind = template_kind_from_index(k);
        for (int n = 1; n <= 15; ++n) {
            std::vector<std::pair<std::optional<RungAttach>, bool>> variants;
            if (has_pendent(kind))
                for (const RungAttach& a : admissible_attachments(kind, n)) variants.push_back({a, false});
            else
                variants.push_back({std::nullopt, false});
            if (kind == TemplateKind::H5) variants.push_back({std::nullopt, true});
            for (const auto& [at, drop] : variants) {
                ++built;
                const Template t = build_template(kind, n, at, drop);
                if (t.host.order() == expected_order(kind, n, drop) &&
                    verify_halin(t.host, t.certificate, VerifyMode::full))
                    ++ok;
            }
        }
    }
    return {ok == built, ratio(ok, built) + " templates verified with the expected order"};
}

Outcome absorb_fidelity() {
    std::mt19937 rng(2024);
    int ok = 0, total = 0;
    auto run = [&](const AbsorbInstance& inst, int expected_order) {
        ++total;
        if (!check_absorb_preconditions(inst)) return false;
        const Ladder l = absorb(inst);
        const std::vector<Vertex> vs = l.vertices();
        bool good = l.order() == expected_order && l.order() == 8 * inst.r() - 2 && validate_ladder(inst.F, l) &&
                    oracle::is_ladder_in(inst.F, l.a_side(), l.b_side());
        for (Vertex w : inst.R) good = good && std::find(vs.begin(), vs.end(), w) != vs.end();
        if (good) ++ok;
        return good;
    };
    const bool r1 = run(fixture::complete_absorb_instance(11, 1), 6);
    const bool r2 = run(fixture::complete_absorb_instance(30, 2), 14);
    while (total < 200) {
        const int r = 1 + total % 6;
        const int lo = 20 * r + 20;
        const int s = lo + static_cast<int>(rng() % static_cast<unsigned>(200 - lo + 1));
        run(fixture::absorb_instance(r, s, 0.9, rng), 8 * r - 2);
    }
    return {ok == total && r1 && r2,
            ratio(ok, total) + " ladders of order 8r-2 covering R (r=1 order 6: " + (r1 ? "ok" : "bad") +
                ", r=2 order 14: " + (r2 ? "ok" : "bad") + ")"};
}

Outcome ladder_regime() {
    std::mt19937 rng(77);
    int single = 0, split = 0;
    const int runs = 100;
    for (int t = 0; t < runs; ++t) {
        const int m = 8 + static_cast<int>(rng() % 57);
        const Graph g = fixture::dense_bipartite(m, fixture::ladder_regime_degree(m), rng);
        const std::vector<Edge> named = fixture::disjoint_edges(g, 4, rng);
        LadderRequest req;
        req.base = g;
        req.first_rung = named[0];
        req.last_rung = named[1];
        req.seed = static_cast<unsigned>(t + 1);
        try {
            const auto ls = find_spanning_ladders(req);
            if (ls.size() == 1 && ls[0].order() == 2 * m && validate_ladder(g, ls[0]) &&
                ls[0].first_rung().edge().normalized() == named[0].normalized() &&
                ls[0].last_rung().edge().normalized() == named[1].normalized())
                ++single;
        } catch (const Error&) {
        }
        req.forced_interior = {{named[2], named[3]}};
        try {
            const auto ls = find_spanning_ladders(req);
            std::vector<Vertex> all;
            bool valid = ls.size() == 2;
            for (const Ladder& l : ls) {
                valid = valid && validate_ladder(g, l);
                for (Vertex v : l.vertices()) all.push_back(v);
            }
            if (valid && all.size() == static_cast<std::size_t>(2 * m) &&
                make_vertex_set(all).size() == all.size())
                ++split;
        } catch (const Error&) {
        }
    }
    return {single == runs && split == runs,
            ratio(single, runs) + " spanning ladders, " + ratio(split, runs) + " disjoint spanning pairs with a forced rung pair"};
}

Outcome classical_properties() {
    std::mt19937 rng(5);
    const int runs = 100;
    int ham = 0, hc = 0, almost = 0, smallest = 99, largest = 0;
    for (int t = 0; t < runs; ++t) {
        const gen::HalinInstance h = gen::random_halin(14, rng);
        smallest = std::min(smallest, h.graph.order());
        largest = std::max(largest, h.graph.order());
        const HalinPropertyReport p = check_halin_properties(h.graph, h.certificate);
        ham += p.hamiltonian;
        hc += p.hamiltonian_connected;
        almost += p.almost_pancyclic && p.missing_lengths.size() <= 1 &&
                  (p.missing_lengths.empty() || p.missing_lengths[0] % 2 == 0);
    }
    int wheels = 0;
    for (int k = 4; k <= 10; ++k) {
        HalinCertificate c;
        for (Vertex i = 1; i <= k; ++i) {
            c.tree_edges.push_back({0, i});
            c.leaf_cycle.push_back(i);
        }
        wheels += check_halin_properties(gen::wheel(k), c).pancyclic;
    }
    return {ham == runs && hc == runs && almost == runs && wheels == 7,
            "orders " + std::to_string(smallest) + ".." + std::to_string(largest) + ": hamiltonian " + ratio(ham, runs) + ", hamiltonian-connected " + ratio(hc, runs) +
                ", almost pancyclic " + ratio(almost, runs) + ", wheels W4..W10 pancyclic " + ratio(wheels, 7)};
}

Outcome sharpness() {
    SearchBudget budget;
    budget.threads = 4;
    int ok = 0;
    std::string list;
    for (int n : {4, 6, 8, 10}) {
        const bool none = sharpness_probe(n, budget);
        ok += none;
        list += " K_{" + std::to_string(n / 2) + "," + std::to_string(n / 2) + "}:" + (none ? "none" : "found");
    }
    return {ok == 4, "exhaustive search" + list};
}

Outcome dirac_probe() {
    ExperimentOptions opt;
    opt.n_min = 5;
    opt.n_max = 8;
    opt.samples_per_n = 200;
    opt.exhaustive_up_to = 6;
    opt.budget.seed = 11;
    opt.budget.threads = 4;
    const ExperimentReport rep = dirac_experiment(opt);
    bool exhaustive_ok = true;
    std::ostringstream detail;
    for (const ExperimentRow& r : rep.rows) {
        if (r.exhaustive && (r.succeeded != r.sampled || r.sampled == 0)) exhaustive_ok = false;
        if (r.sampled != r.succeeded + r.failed + r.timed_out) exhaustive_ok = false;
        detail << " n=" << r.n << (r.exhaustive ? " exhaustive " : " sampled ") << r.succeeded << '/' << r.sampled;
        if (r.timed_out) detail << " (" << r.timed_out << " timeouts)";
        detail << ';';
    }
    for (const ExperimentFailure& f : rep.failures)
        std::cout << "# witness n=" << f.n << " (" << to_string(f.status) << ")\n" << io::format_edge_list(f.graph);
    std::string d = detail.str();
    if (!d.empty()) d.pop_back();
    return {exhaustive_ok, "successes" + d + "; " + std::to_string(rep.failures.size()) + " witnesses"};
}

Outcome merges() {
    std::mt19937 rng(50);
    const int runs = 50;
    int ok = 0;
    for (int t = 0; t < runs; ++t) {
        auto make = [&] {
            return build_template(rng() % 2 ? TemplateKind::H1 : TemplateKind::H2, 1 + static_cast<int>(rng() % 10));
        };
        const Template g1 = make(), g2 = make();
        const VertexSet c1 = halin_constructible_vertices(g1), c2 = halin_constructible_vertices(g2);
        const Assembly m = merge(g1, g2, c1[rng() % c1.size()], c2[rng() % c2.size()]);
        ok += m.halin.order() == g1.host.order() + g2.host.order() &&
              static_cast<bool>(verify_halin(m.halin, m.certificate, VerifyMode::full));
    }
    return {ok == runs, ratio(ok, runs) + " merged graphs verified as Halin"};
}

Outcome oracle_equivalence() {
    std::mt19937 rng(8);
    const int runs = 100;
    int agree = 0, yes = 0;
    for (int t = 0; t < runs; ++t) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const double p = std::uniform_real_distribution<double>(0.5, 0.95)(rng);
        const Graph g = gen::random_graph(n, p, rng);
        const SearchResult r = find_spanning_halin(g);
        const bool expected = oracle::has_spanning_halin(g);
        agree += r.status != SearchStatus::timeout && r.found() == expected;
        yes += expected;
    }
    return {agree == runs, ratio(agree, runs) + " verdicts agree (" + std::to_string(yes) + " with a spanning Halin subgraph)"};
}

Outcome lower_bound() {
    std::mt19937 rng(9);
    const int runs = 500;
    int ok = 0;
    for (int t = 0; t < runs; ++t) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const Graph g = gen::random_graph(n, std::uniform_real_distribution<double>(0.2, 1.0)(rng), rng);
        std::vector<Vertex> u, s;
        for (Vertex v = 0; v < n; ++v) {
            if (rng() % 3 == 0) u.push_back(v);
            if (rng() % 3 != 0) s.push_back(v);
        }
        if (u.empty()) u.push_back(static_cast<Vertex>(rng() % n));
        const long long bound = common_neighbor_lower_bound(g, u, s);
        const std::size_t truth = oracle::common_neighbors(g, u, s).size();
        ok += common_neighbors(g, u, s).size() == truth && bound <= static_cast<long long>(truth);
    }
    return {ok == runs, ratio(ok, runs) + " triples satisfy the bound"};
}

}  // namespace

int main() {
    criterion(1, "template validity sweep", template_sweep);
    criterion(2, "absorbing construction", absorb_fidelity);
    criterion(3, "spanning ladders in the dense bipartite regime", ladder_regime);
    criterion(4, "classical Halin properties", classical_properties);
    criterion(5, "sharpness of the degree threshold", sharpness);
    criterion(6, "minimum-degree threshold probe", dirac_probe);
    criterion(7, "merge correctness", merges);
    criterion(8, "search agrees with the naive oracle", oracle_equivalence);
    criterion(9, "common-neighbour lower bound", lower_bound);
    return failures == 0 ? 0 : 1;
}
