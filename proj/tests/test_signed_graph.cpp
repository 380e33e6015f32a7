#include <doctest.h>

#include <algorithm>

#include "ccsg/rng.hpp"
#include "ccsg/signed_graph.hpp"
#include "support/fixtures.hpp"

using namespace ccsg;

namespace {

SignedGraph random_graph(Rng& rng, int n, double p_edge, double p_neg) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p_edge)) edges.push_back({u, v, rng.bernoulli(p_neg) ? -1 : +1});
    return SignedGraph(n, edges);
}

}  // namespace

TEST_CASE("graph construction canonicalizes and validates") {
    SignedGraph g(3, {{1, 2, -1}, {0, 1, +1}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge{0, 1, +1});
    CHECK(g.edges()[1] == Edge{1, 2, -1});
    CHECK(g.sign(2, 1) == -1);

    SignedGraph permuted(3, {{0, 1, +1}, {2, 1, -1}});
    CHECK(g == permuted);

    CHECK_THROWS_AS(SignedGraph(2, {{0, 0, +1}}), SelfLoopError);
    CHECK_THROWS_AS(SignedGraph(4, {{0, 1, +1}, {1, 0, -1}}), DuplicateEdgeError);
    CHECK_THROWS_AS(SignedGraph(2, {{0, 5, +1}}), VertexOutOfRangeError);
}

TEST_CASE("sign subgraphs keep the vertex set and split the edges") {
    SignedGraph triangle(3, {{0, 1, +1}, {0, 2, +1}, {1, 2, -1}});
    SignedGraph positive = triangle.sign_subgraph(+1);
    CHECK(positive.vertex_count() == 3);
    CHECK(positive.edge_count() == 2);
    CHECK(positive.has_edge(0, 1));
    CHECK(positive.has_edge(0, 2));

    SignedGraph all_positive(3, {{0, 1, +1}, {0, 2, +1}, {1, 2, +1}});
    CHECK(all_positive.sign_subgraph(-1).edge_count() == 0);
    CHECK(all_positive.sign_subgraph(-1).vertex_count() == 3);

    // positive subgraph of G3 is the star at vertex 0
    SignedGraph star = testfx::g3().sign_subgraph(+1);
    CHECK(star.edge_count() == 3);
    for (int v = 1; v < 4; ++v) CHECK(star.has_edge(0, v));
}

TEST_CASE("degrees") {
    SignedGraph triangle(3, {{0, 1, +1}, {0, 2, +1}, {1, 2, -1}});
    VertexDegrees d0 = triangle.degrees(0);
    CHECK(d0.underlying == 2);
    CHECK(d0.positive == 2);
    CHECK(d0.negative == 0);

    SignedGraph lonely(1);
    VertexDegrees iso = lonely.degrees(0);
    CHECK(iso.underlying == 0);
    CHECK(iso.positive == 0);
    CHECK(iso.negative == 0);

    VertexDegrees g3_zero = testfx::g3().degrees(0);
    CHECK(g3_zero.underlying == 3);
    CHECK(g3_zero.positive == 3);
    CHECK(g3_zero.negative == 0);

    CHECK_THROWS_AS(triangle.degrees(3), VertexOutOfRangeError);
}

TEST_CASE("set pair degrees") {
    SignedGraph triangle(3, {{0, 1, +1}, {0, 2, +1}, {1, 2, -1}});
    SetPairDegrees d = triangle.set_pair_degrees({0}, {1, 2});
    CHECK(d.positive == 2);
    CHECK(d.negative == 0);

    SetPairDegrees empty = triangle.set_pair_degrees({0}, {});
    CHECK(empty.positive == 0);
    CHECK(empty.negative == 0);

    SetPairDegrees crossing = testfx::g3().set_pair_degrees({0, 1}, {2, 3});
    CHECK(crossing.positive == 2);
    CHECK(crossing.negative == 2);

    CHECK_THROWS_AS(triangle.set_pair_degrees({0, 1}, {1, 2}), OverlappingSetsError);
}

TEST_CASE("induced subgraphs") {
    SignedGraph::Induced sub = testfx::g3().induced_subgraph({0, 1, 2});
    CHECK(sub.graph == SignedGraph(3, {{0, 1, +1}, {0, 2, +1}, {1, 2, -1}}));
    CHECK(sub.to_original == std::vector<int>{0, 1, 2});

    CHECK(testfx::g3().induced_subgraph({}).graph.vertex_count() == 0);

    SignedGraph::Induced full = testfx::g3().induced_subgraph({0, 1, 2, 3});
    CHECK(full.graph == testfx::g3());

    CHECK_THROWS_AS(testfx::g3().induced_subgraph({0, 9}), VertexOutOfRangeError);
}

TEST_CASE("positive components") {
    SignedGraph path(3, {{0, 1, +1}, {1, 2, -1}});
    CHECK(path.positive_components() ==
          std::vector<std::vector<int>>{{0, 1}, {2}});

    SignedGraph edgeless(3);
    CHECK(edgeless.positive_components() ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});

    CHECK(testfx::g3().positive_components() == std::vector<std::vector<int>>{{0, 1, 2, 3}});
}

TEST_CASE("clustering normalization and validation") {
    Clustering c(4, {7, 7, 3, 7});
    CHECK(c.cluster_count() == 2);
    CHECK(c.cluster_of(0) == 0);
    CHECK(c.cluster_of(2) == 1);
    CHECK(c.clusters() == std::vector<std::vector<int>>{{0, 1, 3}, {2}});

    CHECK(Clustering::from_clusters(3, {{2}, {0, 1}}) == Clustering(3, {1, 1, 0}));
    CHECK_THROWS_AS(Clustering::from_clusters(3, {{0, 1}}), PartitionMismatchError);
    CHECK_THROWS_AS(Clustering::from_clusters(2, {{0, 1}, {1}}), PartitionMismatchError);
    CHECK_THROWS_AS(Clustering(3, {0, 0}), PartitionMismatchError);
}

TEST_CASE("randomized structural invariants") {
    Rng rng(20240811);
    for (int round = 0; round < 60; ++round) {
        int n = rng.uniform_int(1, 10);
        SignedGraph g = random_graph(rng, n, rng.uniform(), rng.uniform());

        // underlying degree splits into signed degrees
        for (int v = 0; v < n; ++v) {
            VertexDegrees d = g.degrees(v);
            CHECK(d.underlying == d.positive + d.negative);
        }

        // sign subgraphs partition the edge set
        CHECK(g.sign_subgraph(+1).edge_count() + g.sign_subgraph(-1).edge_count() ==
              g.edge_count());

        // set pair degrees are symmetric
        std::vector<int> a, b;
        for (int v = 0; v < n; ++v) {
            double coin = rng.uniform();
            if (coin < 0.3) a.push_back(v);
            else if (coin < 0.6) b.push_back(v);
        }
        SetPairDegrees ab = g.set_pair_degrees(a, b);
        SetPairDegrees ba = g.set_pair_degrees(b, a);
        CHECK(ab.positive == ba.positive);
        CHECK(ab.negative == ba.negative);

        // inducing on the full vertex set is the identity
        std::vector<int> everything(n);
        for (int v = 0; v < n; ++v) everything[v] = v;
        CHECK(g.induced_subgraph(everything).graph == g);

        // dropping any negative edge leaves the positive components alone
        auto components = g.positive_components();
        for (const Edge& e : g.edges()) {
            if (e.sign > 0) continue;
            std::vector<Edge> fewer;
            for (const Edge& other : g.edges())
                if (!(other.u == e.u && other.v == e.v)) fewer.push_back(other);
            CHECK(SignedGraph(n, fewer).positive_components() == components);
        }
    }
}
