#include "ccsg/signed_graph.hpp"

#include <algorithm>

namespace ccsg {

namespace {

std::uint64_t pair_key(int u, int v) {
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.sign == b.sign;
}

SignedGraph::SignedGraph(int n) : n_(n), adj_(n) {
    if (n < 0) throw VertexOutOfRangeError("vertex count must be non-negative, got " + std::to_string(n));
}

SignedGraph::SignedGraph(int n, const std::vector<Edge>& edges) : SignedGraph(n) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u == e.v)
            throw SelfLoopError("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw VertexOutOfRangeError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} has an endpoint outside 0.." + std::to_string(n_ - 1));
        if (e.sign != +1 && e.sign != -1)
            throw Error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        "} has sign " + std::to_string(e.sign) + ", expected +1 or -1");
        Edge norm{std::min(e.u, e.v), std::max(e.u, e.v), e.sign};
        if (edge_index_.count(pair_key(norm.u, norm.v)))
            throw DuplicateEdgeError("duplicate edge {" + std::to_string(norm.u) + "," +
                                     std::to_string(norm.v) + "}");
        edge_index_.emplace(pair_key(norm.u, norm.v), 0);
        edges_.push_back(norm);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
        const Edge& e = edges_[id];
        edge_index_[pair_key(e.u, e.v)] = id;
        adj_[e.u].emplace_back(e.v, e.sign);
        adj_[e.v].emplace_back(e.u, e.sign);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

void SignedGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw VertexOutOfRangeError("vertex " + std::to_string(v) + " outside 0.." +
                                    std::to_string(n_ - 1));
}

int SignedGraph::edge_id(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto it = edge_index_.find(pair_key(std::min(u, v), std::max(u, v)));
    return it == edge_index_.end() ? -1 : it->second;
}

int SignedGraph::sign(int u, int v) const {
    int id = edge_id(u, v);
    if (id < 0)
        throw Error("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    return edges_[id].sign;
}

const std::vector<std::pair<int, int>>& SignedGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

VertexDegrees SignedGraph::degrees(int v) const {
    check_vertex(v);
    VertexDegrees d;
    for (const auto& [w, s] : adj_[v]) {
        (void)w;
        ++d.underlying;
        if (s > 0) ++d.positive; else ++d.negative;
    }
    return d;
}

SetPairDegrees SignedGraph::set_pair_degrees(const std::vector<int>& a,
                                             const std::vector<int>& b) const {
    std::vector<char> side(n_, 0);
    for (int v : a) {
        check_vertex(v);
        side[v] = 1;
    }
    for (int v : b) {
        check_vertex(v);
        if (side[v] == 1)
            throw OverlappingSetsError("vertex " + std::to_string(v) + " is in both sets");
        side[v] = 2;
    }
    SetPairDegrees d;
    for (const Edge& e : edges_) {
        if (side[e.u] + side[e.v] == 3) {
            if (e.sign > 0) ++d.positive; else ++d.negative;
        }
    }
    return d;
}

SignedGraph SignedGraph::sign_subgraph(int sign) const {
    if (sign != +1 && sign != -1)
        throw Error("sign_subgraph expects +1 or -1, got " + std::to_string(sign));
    std::vector<Edge> kept;
    for (const Edge& e : edges_)
        if (e.sign == sign) kept.push_back(e);
    return SignedGraph(n_, kept);
}

SignedGraph::Induced SignedGraph::induced_subgraph(std::vector<int> s) const {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<int> to_new(n_, -1);
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        check_vertex(s[i]);
        to_new[s[i]] = i;
    }
    std::vector<Edge> kept;
    for (const Edge& e : edges_)
        if (to_new[e.u] >= 0 && to_new[e.v] >= 0)
            kept.push_back(Edge{to_new[e.u], to_new[e.v], e.sign});
    return Induced{SignedGraph(static_cast<int>(s.size()), kept), std::move(s)};
}

std::vector<std::vector<int>> SignedGraph::positive_components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<int>> components;
    std::vector<int> stack;
    for (int start = 0; start < n_; ++start) {
        if (comp[start] >= 0) continue;
        int id = static_cast<int>(components.size());
        components.emplace_back();
        comp[start] = id;
        stack.assign(1, start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            components[id].push_back(v);
            for (const auto& [w, s] : adj_[v]) {
                if (s > 0 && comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(components[id].begin(), components[id].end());
    }
    return components;
}

bool SignedGraph::operator==(const SignedGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
}

Clustering::Clustering(int n, const std::vector<int>& assignment) {
    if (static_cast<int>(assignment.size()) != n)
        throw PartitionMismatchError("assignment covers " + std::to_string(assignment.size()) +
                                     " vertices, expected " + std::to_string(n));
    assignment_.assign(n, -1);
    std::unordered_map<int, int> relabel;
    for (int v = 0; v < n; ++v) {
        auto [it, fresh] = relabel.emplace(assignment[v], static_cast<int>(clusters_.size()));
        if (fresh) clusters_.emplace_back();
        assignment_[v] = it->second;
        clusters_[it->second].push_back(v);
    }
}

Clustering Clustering::from_clusters(int n, const std::vector<std::vector<int>>& clusters) {
    std::vector<int> assignment(n, -1);
    for (int c = 0; c < static_cast<int>(clusters.size()); ++c) {
        for (int v : clusters[c]) {
            if (v < 0 || v >= n)
                throw VertexOutOfRangeError("vertex " + std::to_string(v) + " outside 0.." +
                                            std::to_string(n - 1));
            if (assignment[v] >= 0)
                throw PartitionMismatchError("vertex " + std::to_string(v) +
                                             " appears in more than one cluster");
            assignment[v] = c;
        }
    }
    for (int v = 0; v < n; ++v)
        if (assignment[v] < 0)
            throw PartitionMismatchError("vertex " + std::to_string(v) + " is unassigned");
    return Clustering(n, assignment);
}

int Clustering::cluster_of(int v) const {
    if (v < 0 || v >= vertex_count())
        throw VertexOutOfRangeError("vertex " + std::to_string(v) + " outside 0.." +
                                    std::to_string(vertex_count() - 1));
    return assignment_[v];
}

}  // namespace ccsg
