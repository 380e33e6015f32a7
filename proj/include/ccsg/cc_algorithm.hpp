#pragma once

#include <string>
#include <vector>

#include "ccsg/signed_graph.hpp"

namespace ccsg {

enum class ClusterOrigin { step1, step2, step3, step4, merged };

const char* to_string(ClusterOrigin origin);

struct TracedCluster {
    std::vector<int> vertices;  // sorted
    ClusterOrigin origin = ClusterOrigin::step4;
};

/// State threaded through the pipeline. `remaining` holds the vertices the
/// peeling steps have not clustered yet; clusters stay pairwise disjoint
/// throughout and cover V once step 4 has run. `phase` is the last completed
/// step and guards the step order.
struct PipelineState {
    SignedGraph graph;
    std::vector<int> remaining;
    std::vector<TracedCluster> clusters;
    std::vector<std::string> trace;
    int phase = 0;
};

PipelineState make_pipeline(const SignedGraph& g);

/// Isolated vertices and vertices whose incident edges are all negative each
/// get their own cluster. Evaluated once, against the original graph.
void step1_peel(PipelineState& state);

/// Each chain of strongly positive triangles in the remaining induced graph
/// becomes one cluster.
void step2_triangle_chains(PipelineState& state);

/// Exact maximum matching over the remaining positive edges; each matched
/// pair becomes a two-vertex cluster. Ties between maximum matchings are
/// broken toward the lexicographically smallest edge set.
void step3_matching(PipelineState& state);

/// Every still-unclustered vertex becomes a singleton cluster.
void step4_singletons(PipelineState& state);

/// One merge round: among pairs of non-step1 clusters with zero negative
/// degree and positive degree >= 1 (measured in the original graph), merge
/// the pair with the largest positive degree, ties broken by smallest
/// (min id, max id). Returns false when no pair is eligible.
bool step5_merge_once(PipelineState& state);

struct CcOptions {
    /// After the merge loop, repeatedly coalesce cluster pairs with no edges
    /// between them. Never changes the disagreement count; off by default to
    /// keep the canonical pipeline.
    bool post_merge = false;
};

struct CcResult {
    Clustering clustering;
    std::vector<TracedCluster> clusters;
    std::vector<std::string> trace;
    int merge_rounds = 0;
};

/// Steps 1-4, then merge rounds to fixpoint. Deterministic for fixed input.
CcResult run_cc(const SignedGraph& g, const CcOptions& options = {});

}  // namespace ccsg
