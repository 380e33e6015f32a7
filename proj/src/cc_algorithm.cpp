#include "ccsg/cc_algorithm.hpp"

#include <algorithm>

#include "ccsg/cycle_analysis.hpp"
#include "ccsg/matching.hpp"
#include "ccsg/oracle.hpp"

namespace ccsg {

namespace {

std::string join_vertices(const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

void require_phase(const PipelineState& state, int expected, const char* step) {
    if (state.phase != expected)
        throw Error(std::string(step) + " expects phase " + std::to_string(expected) +
                    ", pipeline is at phase " + std::to_string(state.phase));
}

void remove_from_remaining(PipelineState& state, const std::vector<int>& vertices) {
    std::vector<char> drop(state.graph.vertex_count(), 0);
    for (int v : vertices) drop[v] = 1;
    std::erase_if(state.remaining, [&](int v) { return drop[v]; });
}

/// Positive/negative edge counts between every pair of current clusters.
struct PairDegrees {
    std::vector<std::vector<int>> positive;
    std::vector<std::vector<int>> negative;
};

PairDegrees cluster_pair_degrees(const PipelineState& state) {
    const int k = static_cast<int>(state.clusters.size());
    std::vector<int> cluster_of(state.graph.vertex_count(), -1);
    for (int c = 0; c < k; ++c)
        for (int v : state.clusters[c].vertices) cluster_of[v] = c;

    PairDegrees d;
    d.positive.assign(k, std::vector<int>(k, 0));
    d.negative.assign(k, std::vector<int>(k, 0));
    for (const Edge& e : state.graph.edges()) {
        int cu = cluster_of[e.u];
        int cv = cluster_of[e.v];
        if (cu < 0 || cv < 0 || cu == cv) continue;
        auto& matrix = e.sign > 0 ? d.positive : d.negative;
        ++matrix[cu][cv];
        ++matrix[cv][cu];
    }
    return d;
}

void merge_clusters(PipelineState& state, int i, int j, ClusterOrigin origin) {
    auto& into = state.clusters[i].vertices;
    const auto& from = state.clusters[j].vertices;
    into.insert(into.end(), from.begin(), from.end());
    std::sort(into.begin(), into.end());
    state.clusters[i].origin = origin;
    state.clusters.erase(state.clusters.begin() + j);
}

int current_disagreements(const PipelineState& state) {
    std::vector<std::vector<int>> cluster_sets;
    for (const auto& c : state.clusters) cluster_sets.push_back(c.vertices);
    return count_disagreements(state.graph,
                               Clustering::from_clusters(state.graph.vertex_count(), cluster_sets))
        .total;
}

void post_merge_pass(PipelineState& state) {
    // Mirrors the closing observation on the worked example: clusters with no
    // edges between them can be coalesced freely, step-1 clusters included.
    int before = current_disagreements(state);
    while (true) {
        PairDegrees d = cluster_pair_degrees(state);
        const int k = static_cast<int>(state.clusters.size());
        bool merged = false;
        for (int i = 0; i < k && !merged; ++i) {
            for (int j = i + 1; j < k && !merged; ++j) {
                if (d.positive[i][j] == 0 && d.negative[i][j] == 0) {
                    state.trace.push_back("post-merge: clusters " + std::to_string(i) + " and " +
                                          std::to_string(j) + " (no edges between)");
                    merge_clusters(state, i, j, ClusterOrigin::merged);
                    merged = true;
                }
            }
        }
        if (!merged) break;
    }
    int after = current_disagreements(state);
    if (after != before)
        throw Error("post-merge pass changed the disagreement count from " +
                    std::to_string(before) + " to " + std::to_string(after));
}

}  // namespace

const char* to_string(ClusterOrigin origin) {
    switch (origin) {
        case ClusterOrigin::step1: return "step1";
        case ClusterOrigin::step2: return "step2";
        case ClusterOrigin::step3: return "step3";
        case ClusterOrigin::step4: return "step4";
        case ClusterOrigin::merged: return "merged";
    }
    return "?";
}

PipelineState make_pipeline(const SignedGraph& g) {
    PipelineState state;
    state.graph = g;
    state.remaining.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) state.remaining[v] = v;
    return state;
}

void step1_peel(PipelineState& state) {
    require_phase(state, 0, "step1_peel");
    for (int v = 0; v < state.graph.vertex_count(); ++v) {
        VertexDegrees d = state.graph.degrees(v);
        if (d.positive > 0) continue;
        state.trace.push_back("step1: vertex " + std::to_string(v) + " -> cluster " +
                              std::to_string(state.clusters.size()) +
                              (d.underlying == 0 ? " (isolated)" : " (all incident edges negative)"));
        state.clusters.push_back({{v}, ClusterOrigin::step1});
    }
    std::vector<int> peeled;
    for (const auto& c : state.clusters) peeled.push_back(c.vertices[0]);
    remove_from_remaining(state, peeled);
    state.phase = 1;
}

void step2_triangle_chains(PipelineState& state) {
    require_phase(state, 1, "step2_triangle_chains");
    auto induced = state.graph.induced_subgraph(state.remaining);
    for (const auto& chain : triangle_chain_components(induced.graph)) {
        std::vector<int> vertices;
        for (int v : chain) vertices.push_back(induced.to_original[v]);
        std::sort(vertices.begin(), vertices.end());
        state.trace.push_back("step2: triangle chain " + join_vertices(vertices) + " -> cluster " +
                              std::to_string(state.clusters.size()));
        state.clusters.push_back({vertices, ClusterOrigin::step2});
        remove_from_remaining(state, vertices);
    }
    state.phase = 2;
}

void step3_matching(PipelineState& state) {
    require_phase(state, 2, "step3_matching");
    auto induced = state.graph.induced_subgraph(state.remaining);
    std::vector<std::pair<int, int>> positive_edges;
    for (const Edge& e : induced.graph.edges())
        if (e.sign > 0) positive_edges.emplace_back(e.u, e.v);

    auto matching = lexicographically_smallest_maximum_matching(induced.graph.vertex_count(),
                                                                positive_edges);
    for (const auto& [u, v] : matching) {
        std::vector<int> pair{induced.to_original[u], induced.to_original[v]};
        std::sort(pair.begin(), pair.end());
        state.trace.push_back("step3: matched " + join_vertices(pair) + " -> cluster " +
                              std::to_string(state.clusters.size()));
        state.clusters.push_back({pair, ClusterOrigin::step3});
        remove_from_remaining(state, pair);
    }
    state.phase = 3;
}

void step4_singletons(PipelineState& state) {
    require_phase(state, 3, "step4_singletons");
    for (int v : state.remaining) {
        state.trace.push_back("step4: vertex " + std::to_string(v) + " -> cluster " +
                              std::to_string(state.clusters.size()));
        state.clusters.push_back({{v}, ClusterOrigin::step4});
    }
    state.remaining.clear();
    state.phase = 4;
}

bool step5_merge_once(PipelineState& state) {
    if (state.phase != 4 && state.phase != 5)
        throw Error("step5_merge_once expects phase 4 or 5, pipeline is at phase " +
                    std::to_string(state.phase));
    state.phase = 5;

    PairDegrees d = cluster_pair_degrees(state);
    const int k = static_cast<int>(state.clusters.size());
    int best_i = -1, best_j = -1, best_positive = 0;
    for (int i = 0; i < k; ++i) {
        if (state.clusters[i].origin == ClusterOrigin::step1) continue;
        for (int j = i + 1; j < k; ++j) {
            if (state.clusters[j].origin == ClusterOrigin::step1) continue;
            if (d.negative[i][j] != 0 || d.positive[i][j] < 1) continue;
            if (d.positive[i][j] > best_positive) {
                best_positive = d.positive[i][j];
                best_i = i;
                best_j = j;
            }
        }
    }
    if (best_i < 0) return false;
    state.trace.push_back("step5: merge clusters " + std::to_string(best_i) + " and " +
                          std::to_string(best_j) + " (D+=" + std::to_string(best_positive) +
                          ", D-=0)");
    merge_clusters(state, best_i, best_j, ClusterOrigin::merged);
    return true;
}

CcResult run_cc(const SignedGraph& g, const CcOptions& options) {
    PipelineState state = make_pipeline(g);
    step1_peel(state);
    step2_triangle_chains(state);
    step3_matching(state);
    step4_singletons(state);

    int merges = 0;
    while (step5_merge_once(state)) {
        ++merges;
        if (merges > g.vertex_count())
            throw Error("merge loop exceeded the vertex count; merging is not reducing clusters");
    }
    state.trace.push_back("step6: fixpoint after " + std::to_string(merges) + " merge(s)");

    if (options.post_merge) post_merge_pass(state);

    std::vector<std::vector<int>> cluster_sets;
    for (const auto& c : state.clusters) cluster_sets.push_back(c.vertices);

    CcResult result;
    result.clustering = Clustering::from_clusters(g.vertex_count(), cluster_sets);
    result.clusters = std::move(state.clusters);
    result.trace = std::move(state.trace);
    result.merge_rounds = merges;
    return result;
}

}  // namespace ccsg
