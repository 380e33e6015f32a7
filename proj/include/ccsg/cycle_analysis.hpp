#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ccsg/signed_graph.hpp"

namespace ccsg {

/// Simple cycle in a signed graph. The vertex sequence is canonicalized to
/// the lexicographically smallest rotation/reflection, so equal cycles
/// compare equal however they were discovered.
struct Cycle {
    std::vector<int> vertices;
    std::vector<int> edge_ids;  // sorted ids into the host graph's edge list
    int negative_count = 0;

    int length() const { return static_cast<int>(vertices.size()); }
    bool weakly_negative() const { return negative_count == 1; }
    bool strongly_positive() const { return negative_count == 0; }
    bool shares_edge_with(const Cycle& other) const;
};

bool operator==(const Cycle& a, const Cycle& b);
bool operator<(const Cycle& a, const Cycle& b);

/// Validates that the sequence is a simple closed walk of g and canonicalizes.
Cycle make_cycle(const SignedGraph& g, const std::vector<int>& vertex_sequence);

/// All vertex triples whose three mutual edges exist and are positive,
/// each triple ascending, list sorted.
std::vector<std::array<int, 3>> strongly_positive_triangles(const SignedGraph& g);

/// Vertex sets of the connected components of the triangle adjacency graph:
/// strongly positive triangles are adjacent when they share at least one
/// vertex (which subsumes sharing an edge).
std::vector<std::vector<int>> triangle_chain_components(const SignedGraph& g);

/// Every simple cycle of length <= max_length with exactly one negative edge,
/// found as the all-positive paths closing each negative edge. Sorted
/// canonically; lengths below 3 yield nothing.
std::vector<Cycle> enumerate_weakly_negative_cycles(const SignedGraph& g, int max_length);

struct PackingResult {
    int size = 0;
    std::vector<Cycle> witness;  // pairwise edge-disjoint, lexicographically least
};

/// Exact maximum edge-disjoint set of weakly negative cycles, by exhaustive
/// branch-and-bound over the enumerated cycle list. max_length 0 means the
/// vertex count (complete enumeration). Practical up to ~25 enumerated
/// cycles. Throws EnumerationTruncatedError when max_length < n unless
/// allow_truncated is set.
PackingResult max_edge_disjoint_wnc_packing(const SignedGraph& g, int max_length = 0,
                                            bool allow_truncated = false);

struct ClusterabilityResult {
    bool clusterable = false;
    std::optional<Clustering> certificate;  // zero-disagreement clustering when clusterable
    std::optional<Cycle> witness;           // a weakly negative cycle otherwise
};

/// Davis criterion: clusterable iff no negative edge joins two vertices of
/// the same positive component (equivalently, no weakly negative cycle).
ClusterabilityResult is_clusterable(const SignedGraph& g);

struct TriangleConditionResult {
    bool holds = true;
    std::vector<Cycle> violations;  // induced SP/WN cycles of length >= 4
};

/// Checks that all induced strongly positive and weakly negative cycles are
/// triangles, i.e. no chordless cycle of length >= 4 has zero or one
/// negative edge.
TriangleConditionResult triangle_condition_check(const SignedGraph& g);

struct ConditionTheoremResult {
    bool holds = true;
    std::optional<std::array<Cycle, 3>> witness;
};

/// Condition for the packing lower bound to be tight: no three weakly
/// negative cycles, pairwise adjacent, whose edge sets have empty common
/// intersection. Same truncation contract as the packing.
ConditionTheoremResult condition_theorem_check(const SignedGraph& g, int max_length = 0,
                                               bool allow_truncated = false);

/// Small signed pattern matched by non-induced signed subgraph embedding:
/// an injective vertex map under which every pattern edge is present in the
/// host with equal sign. Pattern C is a sign-parameterized family, hence the
/// variant list.
struct ForbiddenPattern {
    char id = '?';
    std::vector<SignedGraph> variants;

    /// Weakly negative triangle v1v2v3 (negative v1v2) plus v4 joined to v1
    /// and v2 by positive edges.
    static ForbiddenPattern pattern_a();
    /// Weakly negative triangle v1v2v3 (negative v1v2), v4 positively
    /// adjacent to v1 and v3, v5 positively adjacent to v2 and v3.
    static ForbiddenPattern pattern_b();
    /// Positive edge xy plus three vertices each forming a weakly negative
    /// triangle with xy.
    static ForbiddenPattern pattern_c();
    static std::vector<ForbiddenPattern> all();
};

struct PatternHit {
    char pattern_id = '?';
    std::vector<int> vertices;  // sorted image of one embedding
};

bool operator==(const PatternHit& a, const PatternHit& b);

/// All embeddings of each pattern into g, deduplicated by image vertex set,
/// sorted by (pattern, image). Empty result means g avoids every pattern.
std::vector<PatternHit> forbidden_subgraph_scan(const SignedGraph& g,
                                                const std::vector<ForbiddenPattern>& patterns);

}  // namespace ccsg
