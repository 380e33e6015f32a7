#pragma once

#include <vector>

#include "ccsg/signed_graph.hpp"

namespace ccsg::testfx {

/// K4 with a positive star at vertex 0 and a negative triangle on {1,2,3}:
/// three weakly negative triangles, pairwise adjacent, no common edge.
inline SignedGraph g3() {
    return SignedGraph(4, {{0, 1, +1}, {0, 2, +1}, {0, 3, +1},
                           {1, 2, -1}, {1, 3, -1}, {2, 3, -1}});
}

/// Negative edge {0,1} closed by three positive 2-paths through 2, 3, 4:
/// every weakly negative cycle contains the common edge {0,1}.
inline SignedGraph g4() {
    return SignedGraph(5, {{0, 1, -1}, {0, 2, +1}, {1, 2, +1}, {0, 3, +1},
                           {1, 3, +1}, {0, 4, +1}, {1, 4, +1}});
}

/// Two vertex-disjoint weakly negative triangles.
inline SignedGraph g5() {
    return SignedGraph(6, {{0, 1, +1}, {0, 2, +1}, {1, 2, -1},
                           {3, 4, +1}, {3, 5, +1}, {4, 5, -1}});
}

/// Positive edge {0,1} plus apexes 2..4, each closing a weakly negative
/// triangle over it (host for forbidden pattern C).
inline SignedGraph g6() {
    return SignedGraph(5, {{0, 1, +1}, {0, 2, +1}, {1, 2, -1}, {0, 3, +1},
                           {1, 3, -1}, {0, 4, +1}, {1, 4, -1}});
}

/// Two all-positive triangles {0,1,2} and {2,3,4} chained on vertex 2.
inline SignedGraph g7() {
    return SignedGraph(5, {{0, 1, +1}, {0, 2, +1}, {1, 2, +1},
                           {2, 3, +1}, {2, 4, +1}, {3, 4, +1}});
}

inline SignedGraph single_wnt() {
    return SignedGraph(3, {{0, 1, +1}, {0, 2, +1}, {1, 2, -1}});
}

/// The worked-example graph, reconstructed from its stated facts
/// (0-based ids; the example's v1..v8 shift down by one):
///   - every edge at v8 is negative and v8 is the only such vertex;
///   - v1v3v7 is the unique strongly positive triangle;
///   - after peeling, the only positive edge among {v2,v4,v5,v6} is v4v5;
///   - pair degrees of the step-4 clustering match the quoted values;
///   - no edges run between {v8}, {v4,v5} and {v2}.
inline SignedGraph example1() {
    return SignedGraph(8, {
        {0, 2, +1},  // v1 v3
        {0, 6, +1},  // v1 v7
        {2, 6, +1},  // v3 v7
        {3, 4, +1},  // v4 v5
        {5, 6, +1},  // v6 v7
        {1, 2, +1},  // v2 v3
        {0, 7, -1},  // v1 v8
        {5, 7, -1},  // v6 v8
        {0, 1, -1},  // v1 v2
        {1, 5, -1},  // v2 v6
        {2, 3, -1},  // v3 v4
        {3, 5, -1},  // v4 v6
    });
}

/// Strip of k weakly negative triangles (i, i+1, i+2) on k+2 vertices with a
/// positive spine and negative chords: the triangles are the only weakly
/// negative cycles and exactly the consecutive ones share an edge.
inline SignedGraph triangle_strip(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k + 2; ++i) edges.push_back({i, i + 1, +1});
    for (int i = 0; i + 2 < k + 2; ++i) edges.push_back({i, i + 2, -1});
    return SignedGraph(k + 2, edges);
}

inline SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b) {
    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges())
        edges.push_back({e.u + a.vertex_count(), e.v + a.vertex_count(), e.sign});
    return SignedGraph(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace ccsg::testfx
