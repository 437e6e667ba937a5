#pragma once

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "halin/halin.hpp"

namespace halin::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2, kTimeout = 3 };

namespace detail {

inline Edge parse_edge_arg(const std::string& s) {
    const auto v = io::detail::parse_ints(s, 0);
    if (v.size() != 2) throw CLI::ValidationError("edge", "expected two vertex ids, got '" + s + "'");
    return {v[0], v[1]};
}

inline VertexSet parse_ids(const std::string& s) { return make_vertex_set(io::detail::parse_ints(s, 0)); }

/// Default node budget, overridable through HALIN_BUDGET.
inline long long default_budget() {
    if (const char* env = std::getenv("HALIN_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw Error(std::string("HALIN_BUDGET is not an integer: ") + env);
        }
    }
    return SearchBudget{}.max_nodes;
}

inline std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(s);
            return {n, n};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--n", "expected N or A..B, got '" + s + "'");
    }
}

inline io::Document load(const std::string& path) { return io::read_document(path); }

inline Graph require_graph(const io::Document& d, const std::string& path) {
    if (!d.graph) throw ParseError("no edge list in " + path, 0);
    return *d.graph;
}

}  // namespace detail

/// Runs one command line (without the program name). Output goes to `out`
/// in one piece once the command has finished; diagnostics go to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Halin graph and spanning-ladder toolkit", "halin"};
    app.require_subcommand(1);
    std::ostringstream buf;
    int code = kOk;

    unsigned seed = 1;

    auto* gen_ladder = app.add_subcommand("gen-ladder", "print L_n as an edge list and ladder certificate");
    int ladder_n = 0;
    gen_ladder->add_option("n", ladder_n, "number of rungs")->required()->check(CLI::PositiveNumber);

    auto* gen_template = app.add_subcommand("gen-template", "print H1..H5 with its certificate");
    std::string kind_name;
    int template_n = 0;
    std::string z_arg;
    bool drop_z = false;
    gen_template->add_option("kind", kind_name, "H1..H5")->required();
    gen_template->add_option("n", template_n, "ladder length")->required()->check(CLI::PositiveNumber);
    gen_template->add_option("--z", z_arg, "attachment of z as side,index, e.g. a,2");
    gen_template->add_flag("--drop-z", drop_z, "H5 only: delete z and add xy");

    auto* verify = app.add_subcommand("verify", "check a Halin certificate against a graph");
    std::string graph_path, cert_path, mode_name = "full";
    verify->add_option("--graph", graph_path, "edge-list file")->required();
    verify->add_option("--cert", cert_path, "certificate file (defaults to the graph file)");
    verify->add_option("--mode", mode_name, "full or subgraph")->check(CLI::IsMember({"full", "subgraph"}));

    auto* absorb_cmd = app.add_subcommand("absorb", "build a ladder through R using helpers from S = V - R");
    std::string r_ids;
    absorb_cmd->add_option("--graph", graph_path, "edge-list file")->required();
    absorb_cmd->add_option("--R", r_ids, "vertices to absorb")->required();

    auto* find_ladder = app.add_subcommand("find-ladder", "spanning ladders with prescribed end rungs");
    std::string first_arg, last_arg;
    std::vector<std::string> force_args;
    find_ladder->add_option("--graph", graph_path, "edge-list file")->required();
    find_ladder->add_option("--first", first_arg, "first rung 'u v'")->required();
    find_ladder->add_option("--last", last_arg, "last rung 'u v'")->required();
    find_ladder->add_option("--force", force_args, "identified rungs 'a b / c d'");
    find_ladder->add_option("--seed", seed, "random seed");

    auto* find_halin = app.add_subcommand("find-halin", "exact search for a spanning Halin subgraph");
    long long budget_nodes = -1;
    int max_vertices = SearchBudget{}.max_vertices;
    int threads = 1;
    bool no_prune = false;
    find_halin->add_option("--graph", graph_path, "edge-list file")->required();
    find_halin->add_option("--budget", budget_nodes, "backtracking node cap (default from HALIN_BUDGET)");
    find_halin->add_option("--max-vertices", max_vertices, "largest order searched")->check(CLI::Range(4, kSearchOrderCeiling));
    find_halin->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    find_halin->add_flag("--no-prune", no_prune, "skip the 3-connectivity and triangle checks");

    auto* experiment = app.add_subcommand("experiment", "search graphs at the minimum-degree threshold");
    std::string range_arg = "5..8";
    int samples = 100;
    bool probes = false;
    experiment->add_option("--n", range_arg, "order or range A..B");
    experiment->add_option("--samples", samples, "random samples per order")->check(CLI::NonNegativeNumber);
    experiment->add_option("--seed", seed, "random seed");
    experiment->add_option("--budget", budget_nodes, "backtracking node cap per search");
    experiment->add_option("--max-vertices", max_vertices, "largest order searched")->check(CLI::Range(4, kSearchOrderCeiling));
    experiment->add_flag("--probe-sharpness", probes, "also search K_{n/2,n/2} for even n");

    auto* properties = app.add_subcommand("properties", "brute-force hamiltonicity and cycle lengths of T ∪ C");
    properties->add_option("--graph", graph_path, "edge-list file")->required();
    properties->add_option("--cert", cert_path, "certificate file (defaults to the graph file)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        CLI::App* active = &app;
        for (CLI::App* sub : app.get_subcommands()) active = sub;
        err << active->help();
        return kUsage;
    }

    auto certificate_of = [&](const io::Document& g_doc) {
        const io::Document c_doc = cert_path.empty() ? g_doc : detail::load(cert_path);
        if (!c_doc.certificate) throw ParseError("no certificate found", 0);
        return *c_doc.certificate;
    };
    auto search_budget = [&] {
        SearchBudget b;
        b.max_nodes = budget_nodes >= 0 ? budget_nodes : detail::default_budget();
        b.max_vertices = max_vertices;
        b.threads = threads;
        b.prune = !no_prune;
        b.seed = seed;
        return b;
    };

    try {
        if (*gen_ladder) {
            const LadderGraph lg = make_ladder(ladder_n);
            buf << io::format_edge_list(lg.host) << io::format_ladder(lg.ladder);
        } else if (*gen_template) {
            io::TemplateDescriptor d;
            if (kind_name.size() != 2 || (kind_name[0] != 'H' && kind_name[0] != 'h') || kind_name[1] < '1' ||
                kind_name[1] > '5')
                throw CLI::ValidationError("kind", "expected H1..H5");
            d.kind = template_kind_from_index(kind_name[1] - '0');
            d.n = template_n;
            d.drop_pendent = drop_z;
            if (!z_arg.empty()) d.z_attach = io::detail::parse_attach(z_arg, 0);
            const Template t = d.build();
            buf << io::format_descriptor(d) << io::format_edge_list(t.host) << io::format_certificate(t.certificate);
        } else if (*verify) {
            const io::Document g_doc = detail::load(graph_path);
            const Graph g = detail::require_graph(g_doc, graph_path);
            const Verdict v = verify_halin(g, certificate_of(g_doc),
                                           mode_name == "full" ? VerifyMode::full : VerifyMode::subgraph);
            buf << v.summary() << '\n';
            code = v ? kOk : kFalse;
        } else if (*absorb_cmd) {
            const io::Document doc = detail::load(graph_path);
            AbsorbInstance inst;
            inst.F = detail::require_graph(doc, graph_path);
            inst.R = detail::parse_ids(r_ids);
            for (Vertex v = 0; v < inst.F.order(); ++v)
                if (!std::binary_search(inst.R.begin(), inst.R.end(), v)) inst.S.push_back(v);
            if (AbsorbCheck c = check_absorb_preconditions(inst); !c) {
                buf << "PRECONDITION-FAILED " << c.message << '\n';
                code = kFalse;
            } else {
                buf << io::format_ladder(absorb(inst));
            }
        } else if (*find_ladder) {
            const io::Document doc = detail::load(graph_path);
            LadderRequest req;
            req.base = detail::require_graph(doc, graph_path);
            req.first_rung = detail::parse_edge_arg(first_arg);
            req.last_rung = detail::parse_edge_arg(last_arg);
            req.seed = seed;
            for (const std::string& f : force_args) {
                const auto slash = f.find('/');
                if (slash == std::string::npos) throw CLI::ValidationError("--force", "expected 'a b / c d'");
                req.forced_interior.push_back(
                    {detail::parse_edge_arg(f.substr(0, slash)), detail::parse_edge_arg(f.substr(slash + 1))});
            }
            for (const Ladder& l : find_spanning_ladders(req)) buf << io::format_ladder(l);
        } else if (*find_halin) {
            const Graph g = detail::require_graph(detail::load(graph_path), graph_path);
            const SearchResult r = find_spanning_halin(g, search_budget());
            switch (r.status) {
                case SearchStatus::found:
                    buf << "FOUND\n" << io::format_certificate(*r.certificate);
                    break;
                case SearchStatus::none:
                    buf << "NONE\n";
                    code = kFalse;
                    break;
                case SearchStatus::timeout:
                    buf << "TIMEOUT after " << r.nodes << " nodes\n";
                    code = kTimeout;
                    break;
            }
        } else if (*experiment) {
            ExperimentOptions opt;
            std::tie(opt.n_min, opt.n_max) = detail::parse_range(range_arg);
            opt.samples_per_n = samples;
            opt.sharpness_probes = probes;
            opt.budget = search_budget();
            const ExperimentReport rep = dirac_experiment(opt);
            buf << std::setw(4) << "n" << std::setw(10) << "sampled" << std::setw(8) << "ok" << std::setw(8)
                << "fail" << std::setw(9) << "timeout" << "  mode\n";
            for (const ExperimentRow& r : rep.rows)
                buf << std::setw(4) << r.n << std::setw(10) << r.sampled << std::setw(8) << r.succeeded
                    << std::setw(8) << r.failed << std::setw(9) << r.timed_out << "  "
                    << (r.exhaustive ? "exhaustive" : "sampled") << '\n';
            for (const ExperimentRow& r : rep.rows)
                buf << r.n << ' ' << r.sampled << ' ' << r.succeeded << ' ' << r.failed << ' ' << r.timed_out << '\n';
            for (const ExperimentRow& p : rep.probes)
                buf << "probe K_{" << p.n / 2 << ',' << p.n / 2 << "}: "
                    << (p.failed ? "no spanning Halin subgraph" : "spanning Halin subgraph found") << '\n';
            for (const ExperimentFailure& f : rep.failures)
                buf << "# witness n=" << f.n << " (" << to_string(f.status) << ")\n" << io::format_edge_list(f.graph);
        } else if (*properties) {
            const io::Document g_doc = detail::load(graph_path);
            const Graph g = detail::require_graph(g_doc, graph_path);
            const HalinPropertyReport rep = check_halin_properties(g, certificate_of(g_doc));
            auto yes = [](bool b) { return b ? "yes" : "no"; };
            buf << "hamiltonian: " << yes(rep.hamiltonian) << '\n'
                << "hamiltonian-connected: " << yes(rep.hamiltonian_connected) << '\n'
                << "almost-pancyclic: " << yes(rep.almost_pancyclic) << '\n'
                << "pancyclic: " << yes(rep.pancyclic) << '\n'
                << "tree-has-degree-3-vertex: " << yes(rep.tree_has_degree3_vertex) << '\n'
                << "missing-lengths:";
            for (int len : rep.missing_lengths) buf << ' ' << len;
            buf << '\n';
            code = (rep.hamiltonian && rep.hamiltonian_connected && rep.almost_pancyclic) ? kOk : kFalse;
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kTimeout;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kFalse;
    }
    out << buf.str();
    return code;
}

}  // namespace halin::cli
