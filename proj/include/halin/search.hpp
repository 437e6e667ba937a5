#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "halin/connectivity.hpp"
#include "halin/generators.hpp"
#include "halin/graph.hpp"
#include "halin/verify.hpp"

namespace halin {

/// Hard ceiling on the order accepted by the exact search.
inline constexpr int kSearchOrderCeiling = 16;

struct SearchBudget {
    int max_vertices = 12;
    /// Backtracking nodes before the search gives up with a timeout.
    long long max_nodes = 200'000'000;
    unsigned seed = 1;
    /// Reject graphs that are not 3-connected or have no triangle up front.
    bool prune = true;
    int threads = 1;
};

enum class SearchStatus { found, none, timeout };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::none: return "none";
        case SearchStatus::timeout: return "timeout";
    }
    return "?";
}

struct SearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<HalinCertificate> certificate;
    long long nodes = 0;

    bool found() const noexcept { return status == SearchStatus::found; }
};

namespace detail {

/// Candidate internal-vertex sets, ordered by size then by bitmask.
inline std::vector<std::uint32_t> internal_set_candidates(const Graph& g) {
    const int n = g.order();
    const auto adj = adjacency_masks(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int k = std::popcount(mask);
        const std::uint32_t leaves = full & ~mask;
        if (n - k < k + 2) continue;
        // G[I] connected
        std::uint32_t seen = mask & (~mask + 1), frontier = seen;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
            next &= mask & ~seen;
            seen |= next;
            frontier = next;
        }
        if (seen != mask) continue;
        bool ok = true;
        for (std::uint32_t l = leaves; l && ok; l &= l - 1) {
            const auto a = adj[static_cast<std::size_t>(std::countr_zero(l))];
            ok = (a & mask) && std::popcount(a & leaves) >= 2;
        }
        for (std::uint32_t v = mask; v && ok; v &= v - 1) ok = std::popcount(adj[static_cast<std::size_t>(std::countr_zero(v))]) >= 3;
        if (ok) out.push_back(mask);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    return out;
}

/// Calls `visit(edges)` for every spanning tree of the graph on k vertices with
/// the given edge list; stops early when `visit` returns true.
inline bool for_each_spanning_tree(int k, const std::vector<std::pair<int, int>>& edges,
                                   const std::function<bool(const std::vector<int>&)>& visit) {
    if (k == 1) return visit({});
    std::vector<int> chosen;
    auto find = [](const std::vector<int>& p, int x) {
        while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)];
        return x;
    };
    std::function<bool(std::size_t, std::vector<int>)> rec = [&](std::size_t i, std::vector<int> comp) {
        if (static_cast<int>(chosen.size()) == k - 1) return visit(chosen);
        if (edges.size() - i < static_cast<std::size_t>(k - 1) - chosen.size()) return false;
        const auto [u, v] = edges[i];
        const int ru = find(comp, u), rv = find(comp, v);
        if (ru != rv) {
            std::vector<int> next(comp);
            next[static_cast<std::size_t>(ru)] = rv;
            chosen.push_back(static_cast<int>(i));
            if (rec(i + 1, std::move(next))) return true;
            chosen.pop_back();
        }
        return rec(i + 1, std::move(comp));
    };
    std::vector<int> roots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) roots[static_cast<std::size_t>(i)] = i;
    return rec(0, std::move(roots));
}

/// Backtracking over leaf cycles for one internal set and one tree on it.
class LeafCycleSearch {
public:
    LeafCycleSearch(const Graph& g, const std::vector<Vertex>& internal, const std::vector<Vertex>& leaves,
                    const std::vector<std::pair<int, int>>& tree, std::atomic<long long>& nodes,
                    long long max_nodes)
        : g_(g), internal_(internal), leaves_(leaves), tree_(tree), nodes_(nodes), max_nodes_(max_nodes) {
        const int k = static_cast<int>(internal.size());
        std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(k));
        need_.assign(static_cast<std::size_t>(k), 3);
        for (std::size_t e = 0; e < tree.size(); ++e) {
            adj[static_cast<std::size_t>(tree[e].first)].push_back({tree[e].second, static_cast<int>(e)});
            adj[static_cast<std::size_t>(tree[e].second)].push_back({tree[e].first, static_cast<int>(e)});
            --need_[static_cast<std::size_t>(tree[e].first)];
            --need_[static_cast<std::size_t>(tree[e].second)];
        }
        for (int& d : need_) d = std::max(d, 0);
        // Edge set of the tree path between every pair of internal vertices.
        path_.assign(static_cast<std::size_t>(k * k), 0);
        for (int s = 0; s < k; ++s) {
            std::vector<int> stack{s};
            std::vector<std::uint32_t> mask(static_cast<std::size_t>(k), 0);
            std::vector<bool> seen(static_cast<std::size_t>(k), false);
            seen[static_cast<std::size_t>(s)] = true;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (auto [w, e] : adj[static_cast<std::size_t>(v)]) {
                    if (seen[static_cast<std::size_t>(w)]) continue;
                    seen[static_cast<std::size_t>(w)] = true;
                    mask[static_cast<std::size_t>(w)] = mask[static_cast<std::size_t>(v)] | (std::uint32_t{1} << e);
                    stack.push_back(w);
                }
            }
            for (int t = 0; t < k; ++t) path_[static_cast<std::size_t>(s * k + t)] = mask[static_cast<std::size_t>(t)];
        }
        all_edges_ = tree.empty() ? 0 : ((std::uint32_t{1} << tree.size()) - 1);
        for (Vertex l : leaves) {
            std::vector<int> opts;
            for (int i = 0; i < k; ++i)
                if (g.has_edge(l, internal[static_cast<std::size_t>(i)])) opts.push_back(i);
            parents_.push_back(std::move(opts));
        }
        assigned_.assign(static_cast<std::size_t>(k), 0);
        placed_.assign(leaves.size(), false);
    }

    /// Some certificate, nullopt when exhausted; throws BudgetExceeded on the node cap.
    std::optional<HalinCertificate> run() {
        const std::size_t first = 0;
        placed_[first] = true;
        order_.push_back(first);
        for (int p : parents_[first]) {
            parent_of_.assign(leaves_.size(), -1);
            parent_of_[first] = p;
            ++assigned_[static_cast<std::size_t>(p)];
            if (dfs(first, p, 0, 0)) return certificate();
            --assigned_[static_cast<std::size_t>(p)];
        }
        return std::nullopt;
    }

private:
    int deficit() const {
        int d = 0;
        for (std::size_t i = 0; i < need_.size(); ++i) d += std::max(0, need_[i] - assigned_[i]);
        return d;
    }

    bool dfs(std::size_t last, int last_parent, std::uint32_t once, std::uint32_t twice) {
        if (nodes_.fetch_add(1, std::memory_order_relaxed) >= max_nodes_) throw BudgetExceeded("search node budget exhausted");
        const int k = static_cast<int>(internal_.size());
        const std::size_t remaining = leaves_.size() - order_.size();
        if (remaining == 0) {
            const std::size_t first = order_.front();
            if (!g_.has_edge(leaves_[last], leaves_[first])) return false;
            const std::uint32_t p = path_[static_cast<std::size_t>(last_parent * k + parent_of_[first])];
            if (p & twice) return false;
            const std::uint32_t o = once ^ p, t = twice | (once & p);
            return o == 0 && t == all_edges_ && deficit() == 0;
        }
        if (deficit() > static_cast<int>(remaining)) return false;
        for (Vertex w : g_.neighbors(leaves_[last])) {
            auto it = std::lower_bound(leaves_.begin(), leaves_.end(), w);
            if (it == leaves_.end() || *it != w) continue;
            const std::size_t li = static_cast<std::size_t>(it - leaves_.begin());
            if (placed_[li]) continue;
            placed_[li] = true;
            order_.push_back(li);
            for (int p : parents_[li]) {
                const std::uint32_t path = path_[static_cast<std::size_t>(last_parent * k + p)];
                if (path & twice) continue;
                parent_of_[li] = p;
                ++assigned_[static_cast<std::size_t>(p)];
                if (dfs(li, p, once ^ path, twice | (once & path))) return true;
                --assigned_[static_cast<std::size_t>(p)];
            }
            order_.pop_back();
            placed_[li] = false;
        }
        return false;
    }

    HalinCertificate certificate() const {
        HalinCertificate c;
        for (auto [a, b] : tree_)
            c.tree_edges.push_back({internal_[static_cast<std::size_t>(a)], internal_[static_cast<std::size_t>(b)]});
        for (std::size_t i : order_) {
            c.tree_edges.push_back({leaves_[i], internal_[static_cast<std::size_t>(parent_of_[i])]});
            c.leaf_cycle.push_back(leaves_[i]);
        }
        return c;
    }

    const Graph& g_;
    const std::vector<Vertex>& internal_;
    const std::vector<Vertex>& leaves_;
    const std::vector<std::pair<int, int>>& tree_;
    std::atomic<long long>& nodes_;
    long long max_nodes_;
    std::vector<int> need_;
    std::vector<std::uint32_t> path_;
    std::uint32_t all_edges_ = 0;
    std::vector<std::vector<int>> parents_;
    std::vector<int> assigned_;
    std::vector<bool> placed_;
    std::vector<std::size_t> order_;
    std::vector<int> parent_of_;
};

/// Searches every underlying tree whose internal vertices are exactly `mask`.
inline std::optional<HalinCertificate> search_internal_set(const Graph& g, std::uint32_t mask,
                                                           std::atomic<long long>& nodes,
                                                           long long max_nodes) {
    std::vector<Vertex> internal, leaves;
    for (Vertex v = 0; v < g.order(); ++v) ((mask >> v) & 1U ? internal : leaves).push_back(v);
    const int k = static_cast<int>(internal.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(internal[static_cast<std::size_t>(i)], internal[static_cast<std::size_t>(j)]))
                edges.push_back({i, j});
    std::optional<HalinCertificate> found;
    for_each_spanning_tree(k, edges, [&](const std::vector<int>& chosen) {
        std::vector<std::pair<int, int>> tree;
        for (int e : chosen) tree.push_back(edges[static_cast<std::size_t>(e)]);
        LeafCycleSearch s(g, internal, leaves, tree, nodes, max_nodes);
        found = s.run();
        return found.has_value();
    });
    return found;
}

}  // namespace detail

/// Exact decision: does G contain a spanning Halin subgraph?
///
/// Internal-vertex sets are tried by increasing size; for each, every
/// spanning tree of G[I] is extended by attaching leaves while building the
/// leaf cycle. A leaf order is planar iff the tree walk between consecutive
/// leaves crosses every internal edge exactly twice in total, which is
/// enforced incrementally. The result does not depend on `threads` unless
/// the node budget runs out.
inline SearchResult find_spanning_halin(const Graph& g, const SearchBudget& budget = {}) {
    const int n = g.order();
    if (budget.max_vertices > kSearchOrderCeiling) throw Error("max_vertices may not exceed 16");
    if (n > budget.max_vertices) throw BudgetExceeded("exceeds brute-force budget");
    SearchResult out;
    if (n < 4) return out;
    if (budget.prune && (!has_triangle(g) || !is_k_connected(g, 3))) return out;

    const std::vector<std::uint32_t> sets = detail::internal_set_candidates(g);
    std::atomic<long long> nodes{0};
    std::atomic<bool> timed_out{false};
    std::vector<std::optional<HalinCertificate>> results(sets.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{SIZE_MAX};

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= sets.size() || i > best.load() || timed_out.load()) return;
            try {
                results[i] = detail::search_internal_set(g, sets[i], nodes, budget.max_nodes);
            } catch (const BudgetExceeded&) {
                timed_out = true;
                return;
            }
            if (results[i]) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    const int threads = std::max(1, budget.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    out.nodes = nodes.load();

    if (best.load() != SIZE_MAX) {
        out.status = SearchStatus::found;
        out.certificate = results[best.load()];
        if (Verdict v = verify_halin(g, *out.certificate, VerifyMode::subgraph); !v)
            throw Error("internal: search produced an invalid certificate: " + v.summary());
        return out;
    }
    out.status = timed_out ? SearchStatus::timeout : SearchStatus::none;
    return out;
}

/// True iff K_{n/2,n/2} has no spanning Halin subgraph. The search runs
/// without the up-front pruning so that the answer comes from exhaustion.
inline bool sharpness_probe(int n, SearchBudget budget = {}) {
    if (n < 4 || n % 2 != 0) throw Error("sharpness probe needs an even n >= 4");
    budget.prune = false;
    budget.max_vertices = std::max(budget.max_vertices, n);
    const SearchResult r = find_spanning_halin(gen::complete_bipartite(n / 2, n / 2), budget);
    if (r.status == SearchStatus::timeout) throw BudgetExceeded("sharpness probe ran out of budget");
    return r.status == SearchStatus::none;
}

}  // namespace halin
