#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "halin/generators.hpp"
#include "halin/graph.hpp"
#include "halin/search.hpp"

namespace halin {

/// Minimum degree that the threshold prescribes: ⌈(n+1)/2⌉.
inline int dirac_threshold(int n) { return (n + 2) / 2; }

/// Largest complement degree compatible with the threshold: ⌊(n-3)/2⌋.
inline int max_missing_degree(int n) { return n - 1 - dirac_threshold(n); }

struct ExperimentRow {
    int n = 0;
    int sampled = 0;
    int succeeded = 0;
    int failed = 0;
    int timed_out = 0;
    /// Whether every graph at this order was tried rather than a random sample.
    bool exhaustive = false;
};

struct ExperimentFailure {
    int n = 0;
    Graph graph{0};
    SearchStatus status = SearchStatus::none;
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;
    /// Graphs above the threshold without a spanning Halin subgraph, or that timed out.
    std::vector<ExperimentFailure> failures;
    /// Balanced complete bipartite probes below the threshold, when requested.
    std::vector<ExperimentRow> probes;
};

struct ExperimentOptions {
    int n_min = 4;
    int n_max = 8;
    int samples_per_n = 100;
    /// Orders up to this bound are enumerated exhaustively.
    int exhaustive_up_to = 6;
    /// Chance that an admissible non-edge is removed when sampling.
    double keep_missing = 0.7;
    bool sharpness_probes = false;
    SearchBudget budget;
};

/// Calls `visit` on every graph on n labelled vertices whose complement has
/// maximum degree at most `max_missing`.
inline void for_each_dense_graph(int n, int max_missing, const std::function<void(const Graph&)>& visit) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::vector<int> missing(static_cast<std::size_t>(n), 0);
    std::vector<Edge> removed;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == pairs.size()) {
            Graph g = gen::complete(n);
            for (const Edge& e : removed) g.remove_edge(e.u, e.v);
            visit(g);
            return;
        }
        rec(i + 1);
        const Edge e = pairs[i];
        int& mu = missing[static_cast<std::size_t>(e.u)];
        int& mv = missing[static_cast<std::size_t>(e.v)];
        if (mu < max_missing && mv < max_missing) {
            ++mu;
            ++mv;
            removed.push_back(e);
            rec(i + 1);
            removed.pop_back();
            --mu;
            --mv;
        }
    };
    rec(0);
}

/// Runs the exact search on graphs at or above the minimum-degree threshold
/// and tallies the outcomes. Failures are findings, not errors.
inline ExperimentReport dirac_experiment(const ExperimentOptions& opt) {
    ExperimentReport report;
    std::mt19937 rng(opt.budget.seed);
    auto tally = [&](ExperimentRow& row, const Graph& g) {
        ++row.sampled;
        const SearchResult r = find_spanning_halin(g, opt.budget);
        switch (r.status) {
            case SearchStatus::found: ++row.succeeded; break;
            case SearchStatus::none: ++row.failed; break;
            case SearchStatus::timeout: ++row.timed_out; break;
        }
        if (r.status != SearchStatus::found) report.failures.push_back({row.n, g, r.status});
    };
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        if (n < 4) continue;
        if (n > opt.budget.max_vertices) throw Error("order " + std::to_string(n) + " exceeds the search budget");
        ExperimentRow row;
        row.n = n;
        if (n <= opt.exhaustive_up_to) {
            row.exhaustive = true;
            for_each_dense_graph(n, max_missing_degree(n), [&](const Graph& g) { tally(row, g); });
        } else {
            for (int s = 0; s < opt.samples_per_n; ++s)
                tally(row, gen::random_dense_graph(n, max_missing_degree(n), opt.keep_missing, rng));
        }
        report.rows.push_back(row);

        if (opt.sharpness_probes && n % 2 == 0) {
            ExperimentRow probe;
            probe.n = n;
            probe.exhaustive = true;
            probe.sampled = 1;
            if (sharpness_probe(n, opt.budget)) ++probe.failed;
            else ++probe.succeeded;
            report.probes.push_back(probe);
        }
    }
    return report;
}

}  // namespace halin
