#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ccsg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfLoopError : Error { using Error::Error; };
struct DuplicateEdgeError : Error { using Error::Error; };
struct VertexOutOfRangeError : Error { using Error::Error; };
struct OverlappingSetsError : Error { using Error::Error; };
struct PartitionMismatchError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct EnumerationTruncatedError : Error { using Error::Error; };
struct GenerationExhaustedError : Error { using Error::Error; };

/// Undirected signed edge. Stored with endpoints normalized so u < v.
struct Edge {
    int u = 0;
    int v = 0;
    int sign = +1;  // +1 or -1
};

bool operator==(const Edge& a, const Edge& b);

struct VertexDegrees {
    int underlying = 0;
    int positive = 0;
    int negative = 0;
};

struct SetPairDegrees {
    int positive = 0;
    int negative = 0;
};

/// Immutable simple undirected graph with +/- edge signs. Vertices are the
/// dense ids 0..n-1; the edge list is kept sorted by (u, v) so two graphs
/// built from permuted edge input compare equal.
class SignedGraph {
public:
    explicit SignedGraph(int n = 0);
    SignedGraph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Index into edges() for {u,v} in either endpoint order, -1 when absent.
    int edge_id(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }
    int sign(int u, int v) const;  // the edge must exist

    /// Neighbors of v as (neighbor, sign), sorted by neighbor id.
    const std::vector<std::pair<int, int>>& neighbors(int v) const;

    VertexDegrees degrees(int v) const;

    /// Positive/negative edge counts between two disjoint vertex sets.
    SetPairDegrees set_pair_degrees(const std::vector<int>& a,
                                    const std::vector<int>& b) const;

    /// Same vertex set, only edges of the requested sign (+1 or -1).
    SignedGraph sign_subgraph(int sign) const;

    struct Induced;  // defined after the class; holds a SignedGraph by value
    Induced induced_subgraph(std::vector<int> s) const;

    /// Connected components of the positive subgraph: a partition of V,
    /// each component sorted, components ordered by smallest member.
    std::vector<std::vector<int>> positive_components() const;

    bool operator==(const SignedGraph& other) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::unordered_map<std::uint64_t, int> edge_index_;
};

struct SignedGraph::Induced {
    SignedGraph graph;
    std::vector<int> to_original;  // new id -> original id, ascending
};

/// A partition of 0..n-1 into non-empty clusters. Cluster ids are normalized
/// to 0..k-1 in order of first appearance, so equal partitions compare equal
/// regardless of the labels they were built from.
class Clustering {
public:
    Clustering() = default;
    Clustering(int n, const std::vector<int>& assignment);
    static Clustering from_clusters(int n, const std::vector<std::vector<int>>& clusters);

    int vertex_count() const { return static_cast<int>(assignment_.size()); }
    int cluster_count() const { return static_cast<int>(clusters_.size()); }
    int cluster_of(int v) const;
    const std::vector<int>& assignment() const { return assignment_; }
    const std::vector<std::vector<int>>& clusters() const { return clusters_; }

    bool operator==(const Clustering& other) const { return assignment_ == other.assignment_; }

private:
    std::vector<int> assignment_;
    std::vector<std::vector<int>> clusters_;
};

}  // namespace ccsg
