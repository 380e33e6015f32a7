#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ccsg/signed_graph.hpp"

namespace ccsg {

inline constexpr int kDefaultOracleVertexLimit = 12;   // Bell(12) ~ 4.2M partitions
inline constexpr int kDefaultDeletionEdgeLimit = 20;
inline constexpr int kDefaultGenerationBudget = 10000;

struct DisagreementReport {
    int total = 0;
    std::vector<std::pair<int, int>> negative_inside;
    std::vector<std::pair<int, int>> positive_across;
};

/// Negative edges inside clusters plus positive edges between clusters,
/// with the offending edges listed.
DisagreementReport count_disagreements(const SignedGraph& g, const Clustering& c);

struct OptimumCertificate {
    int disagreements = 0;
    Clustering clustering;                          // lexicographically least optimum
    std::vector<std::pair<int, int>> deletion_set;  // removing it leaves no weakly negative cycle
};

/// Exhaustive optimum over all set partitions, enumerated as restricted
/// growth strings with branch-and-bound on the partial disagreement count.
OptimumCertificate brute_force_optimum(const SignedGraph& g,
                                       int vertex_limit = kDefaultOracleVertexLimit);

/// Minimum-cardinality edge set whose removal leaves no weakly negative
/// cycle, by increasing-size subset search. Independent of the partition
/// enumeration; the two agree by the deletion-set equivalence.
std::vector<std::pair<int, int>> min_deletion_set(const SignedGraph& g,
                                                  int edge_limit = kDefaultDeletionEdgeLimit);

struct ApproximationReport {
    DisagreementReport sol;
    int opt = 0;
    double ratio = 1.0;
    bool clusterable = false;
    bool triangle_condition = false;
    bool forbidden_free = false;
    bool subclass = false;  // triangle_condition && forbidden_free
    /// A clusterable input on which the pipeline left disagreements. Must
    /// never happen; reported as a failure rather than an infinite ratio.
    bool zero_guarantee_breach = false;
};

ApproximationReport approximation_report(const SignedGraph& g,
                                         int vertex_limit = kDefaultOracleVertexLimit);

struct GeneratedInstance {
    SignedGraph graph;
    int attempts = 1;
};

/// Rejection-samples random signed graphs until one passes the triangle
/// condition with no forbidden-pattern hit. Deterministic for a fixed seed.
GeneratedInstance generate_subclass_instance(int n, double p_edge, double p_neg,
                                             std::uint64_t seed,
                                             int max_attempts = kDefaultGenerationBudget);

/// Plants a ground-truth partition: intra-cluster candidate edges drawn
/// positive, inter-cluster ones negative, each kept with probability p_edge.
/// Clusterable by construction.
SignedGraph generate_clusterable_instance(const std::vector<int>& cluster_sizes, double p_edge,
                                          std::uint64_t seed);

SignedGraph generate_random_instance(int n, double p_edge, double p_neg, std::uint64_t seed);

}  // namespace ccsg
