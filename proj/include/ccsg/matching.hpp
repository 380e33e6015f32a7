#pragma once

#include <utility>
#include <vector>

namespace ccsg {

/// Maximum cardinality matching on general graphs via Edmonds' blossom
/// contraction (Tarjan's presentation, O(V^3)). Deterministic for a fixed
/// vertex numbering. Vertices can be deactivated and the matching re-solved,
/// which lets callers probe residual graphs from a warm start instead of
/// recomputing from scratch.
class BlossomMatching {
public:
    explicit BlossomMatching(int n);

    void add_edge(int u, int v);

    /// Removes v from the graph, freeing its partner if matched.
    void deactivate(int v);

    /// Augments the current matching until maximum; returns its size.
    int solve();

    int matching_size() const;
    const std::vector<int>& mate() const { return mate_; }

private:
    bool augment_from(int root);
    int find_common_base(int a, int b);
    void mark_blossom_path(int v, int common_base, int child);

    int n_;
    bool adjacency_sorted_ = false;
    std::vector<std::vector<int>> adj_;
    std::vector<char> active_;
    std::vector<int> mate_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<char> visited_;
    std::vector<char> in_blossom_;
    std::vector<char> base_seen_;
    std::vector<int> queue_;
};

int maximum_matching_size(int n, const std::vector<std::pair<int, int>>& edges);

/// Among all maximum-cardinality matchings, returns the one whose sorted edge
/// list is lexicographically smallest. Edges come back normalized (u < v) and
/// sorted. Greedy over the sorted edge list with an exact feasibility check
/// per edge, warm-starting the solver on the shrinking residual graph.
std::vector<std::pair<int, int>> lexicographically_smallest_maximum_matching(
    int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace ccsg
