#include "ccsg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ccsg/cc_algorithm.hpp"
#include "ccsg/cycle_analysis.hpp"
#include "ccsg/rng.hpp"

namespace ccsg {

DisagreementReport count_disagreements(const SignedGraph& g, const Clustering& c) {
    if (c.vertex_count() != g.vertex_count())
        throw PartitionMismatchError("clustering covers " + std::to_string(c.vertex_count()) +
                                     " vertices, graph has " + std::to_string(g.vertex_count()));
    DisagreementReport report;
    for (const Edge& e : g.edges()) {
        bool together = c.cluster_of(e.u) == c.cluster_of(e.v);
        if (together && e.sign < 0)
            report.negative_inside.emplace_back(e.u, e.v);
        else if (!together && e.sign > 0)
            report.positive_across.emplace_back(e.u, e.v);
    }
    report.total = static_cast<int>(report.negative_inside.size() + report.positive_across.size());
    return report;
}

namespace {

struct PartitionSearch {
    const SignedGraph* graph;
    int n;
    std::vector<int> labels;
    std::vector<int> best_labels;
    int best_cost = std::numeric_limits<int>::max();

    // Restricted growth strings in lexicographic order; pruning on the
    // partial cost keeps the first-found optimum, which is therefore the
    // lexicographically least one.
    void search(int v, int next_label, int cost) {
        if (cost >= best_cost) return;
        if (v == n) {
            best_cost = cost;
            best_labels = labels;
            return;
        }
        for (int label = 0; label <= next_label; ++label) {
            int delta = 0;
            for (const auto& [w, s] : graph->neighbors(v)) {
                if (w >= v) continue;
                bool together = labels[w] == label;
                if (together && s < 0) ++delta;
                if (!together && s > 0) ++delta;
            }
            labels[v] = label;
            search(v + 1, label == next_label ? next_label + 1 : next_label, cost + delta);
        }
    }
};

bool has_weakly_negative_cycle_after_removal(const SignedGraph& g,
                                             const std::vector<char>& removed) {
    // Davis: weakly-negative-cycle-free iff no surviving negative edge joins
    // two vertices of the same surviving-positive component.
    const int n = g.vertex_count();
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const auto& edges = g.edges();
    for (int id = 0; id < static_cast<int>(edges.size()); ++id)
        if (!removed[id] && edges[id].sign > 0)
            parent[find(edges[id].u)] = find(edges[id].v);
    for (int id = 0; id < static_cast<int>(edges.size()); ++id)
        if (!removed[id] && edges[id].sign < 0 && find(edges[id].u) == find(edges[id].v))
            return true;
    return false;
}

}  // namespace

OptimumCertificate brute_force_optimum(const SignedGraph& g, int vertex_limit) {
    const int n = g.vertex_count();
    if (n > vertex_limit)
        throw TooLargeError("brute-force optimum limited to n <= " + std::to_string(vertex_limit) +
                            ", got n = " + std::to_string(n));

    OptimumCertificate cert;
    if (n == 0) {
        cert.clustering = Clustering(0, {});
        return cert;
    }

    PartitionSearch search;
    search.graph = &g;
    search.n = n;
    search.labels.assign(n, 0);
    search.search(0, 0, 0);

    cert.disagreements = search.best_cost;
    cert.clustering = Clustering(n, search.best_labels);
    // Removing the optimum's disagreement edges leaves that clustering
    // perfect, hence (Davis) no weakly negative cycle survives.
    DisagreementReport report = count_disagreements(g, cert.clustering);
    cert.deletion_set = report.negative_inside;
    cert.deletion_set.insert(cert.deletion_set.end(), report.positive_across.begin(),
                             report.positive_across.end());
    std::sort(cert.deletion_set.begin(), cert.deletion_set.end());
    return cert;
}

std::vector<std::pair<int, int>> min_deletion_set(const SignedGraph& g, int edge_limit) {
    const int m = g.edge_count();
    if (m > edge_limit)
        throw TooLargeError("deletion-set search limited to |E| <= " + std::to_string(edge_limit) +
                            ", got |E| = " + std::to_string(m));

    std::vector<char> removed(m, 0);
    std::vector<int> subset;
    // Increasing subset size, subsets in lexicographic order: the first hit
    // is a minimum deletion set.
    auto combos = [&](auto&& self, int k, int start) -> bool {
        if (k == 0) return !has_weakly_negative_cycle_after_removal(g, removed);
        for (int id = start; id <= m - k; ++id) {
            removed[id] = 1;
            subset.push_back(id);
            if (self(self, k - 1, id + 1)) return true;
            subset.pop_back();
            removed[id] = 0;
        }
        return false;
    };
    for (int k = 0; k <= m; ++k) {
        if (combos(combos, k, 0)) {
            std::vector<std::pair<int, int>> result;
            for (int id : subset) result.emplace_back(g.edges()[id].u, g.edges()[id].v);
            return result;
        }
    }
    return {};  // unreachable: removing all edges always works
}

ApproximationReport approximation_report(const SignedGraph& g, int vertex_limit) {
    ApproximationReport report;
    CcResult sol = run_cc(g);
    report.sol = count_disagreements(g, sol.clustering);
    report.opt = brute_force_optimum(g, vertex_limit).disagreements;
    report.clusterable = is_clusterable(g).clusterable;
    report.triangle_condition = triangle_condition_check(g).holds;
    report.forbidden_free = forbidden_subgraph_scan(g, ForbiddenPattern::all()).empty();
    report.subclass = report.triangle_condition && report.forbidden_free;
    if (report.opt > 0) {
        report.ratio = static_cast<double>(report.sol.total) / report.opt;
    } else if (report.sol.total == 0) {
        report.ratio = 1.0;
    } else {
        report.ratio = std::numeric_limits<double>::quiet_NaN();
        report.zero_guarantee_breach = true;
    }
    return report;
}

namespace {

SignedGraph random_signed_graph(int n, double p_edge, double p_neg, Rng& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p_edge))
                edges.push_back({u, v, rng.bernoulli(p_neg) ? -1 : +1});
    return SignedGraph(n, edges);
}

}  // namespace

GeneratedInstance generate_subclass_instance(int n, double p_edge, double p_neg,
                                             std::uint64_t seed, int max_attempts) {
    if (p_edge <= 0.0 || p_edge > 1.0 || p_neg < 0.0 || p_neg > 1.0)
        throw Error("generator probabilities out of range");
    Rng rng(seed);
    auto patterns = ForbiddenPattern::all();
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        SignedGraph candidate = random_signed_graph(n, p_edge, p_neg, rng);
        if (!triangle_condition_check(candidate).holds) continue;
        if (!forbidden_subgraph_scan(candidate, patterns).empty()) continue;
        return GeneratedInstance{std::move(candidate), attempt};
    }
    throw GenerationExhaustedError("no subclass instance found in " +
                                   std::to_string(max_attempts) + " attempts (n=" +
                                   std::to_string(n) + ")");
}

SignedGraph generate_clusterable_instance(const std::vector<int>& cluster_sizes, double p_edge,
                                          std::uint64_t seed) {
    int n = 0;
    for (int size : cluster_sizes) {
        if (size < 1) throw Error("cluster sizes must be >= 1");
        n += size;
    }
    std::vector<int> planted(n);
    int next = 0;
    for (int c = 0; c < static_cast<int>(cluster_sizes.size()); ++c)
        for (int i = 0; i < cluster_sizes[c]; ++i) planted[next++] = c;

    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p_edge))
                edges.push_back({u, v, planted[u] == planted[v] ? +1 : -1});
    return SignedGraph(n, edges);
}

SignedGraph generate_random_instance(int n, double p_edge, double p_neg, std::uint64_t seed) {
    Rng rng(seed);
    return random_signed_graph(n, p_edge, p_neg, rng);
}

}  // namespace ccsg
