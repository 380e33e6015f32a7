#include "ccsg/cycle_analysis.hpp"

#include <algorithm>
#include <set>

namespace ccsg {

namespace {

std::vector<int> canonical_cycle_order(const std::vector<int>& seq) {
    // Vertices are distinct, so the minimum element pins the rotation and
    // only the two directions remain to compare.
    auto rotate_min_first = [](std::vector<int> s) {
        auto it = std::min_element(s.begin(), s.end());
        std::rotate(s.begin(), it, s.end());
        return s;
    };
    std::vector<int> forward = rotate_min_first(seq);
    std::vector<int> backward(seq.rbegin(), seq.rend());
    backward = rotate_min_first(backward);
    return std::min(forward, backward);
}

int effective_max_length(const SignedGraph& g, int max_length, bool allow_truncated,
                         const char* op) {
    int n = g.vertex_count();
    int effective = max_length == 0 ? n : max_length;
    if (effective < n && !allow_truncated)
        throw EnumerationTruncatedError(std::string(op) + ": max_length " +
                                        std::to_string(effective) + " < n " + std::to_string(n) +
                                        " may miss weakly negative cycles");
    return effective;
}

bool edge_sets_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

bool Cycle::shares_edge_with(const Cycle& other) const {
    return edge_sets_intersect(edge_ids, other.edge_ids);
}

bool operator==(const Cycle& a, const Cycle& b) {
    return a.vertices == b.vertices;
}

bool operator<(const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
}

Cycle make_cycle(const SignedGraph& g, const std::vector<int>& vertex_sequence) {
    const int len = static_cast<int>(vertex_sequence.size());
    if (len < 3) throw Error("a cycle needs at least 3 vertices");
    std::set<int> distinct(vertex_sequence.begin(), vertex_sequence.end());
    if (static_cast<int>(distinct.size()) != len)
        throw Error("cycle vertex sequence repeats a vertex");

    Cycle c;
    c.vertices = canonical_cycle_order(vertex_sequence);
    for (int i = 0; i < len; ++i) {
        int u = c.vertices[i];
        int v = c.vertices[(i + 1) % len];
        int id = g.edge_id(u, v);
        if (id < 0)
            throw Error("cycle edge {" + std::to_string(u) + "," + std::to_string(v) +
                        "} is not in the graph");
        c.edge_ids.push_back(id);
        if (g.edges()[id].sign < 0) ++c.negative_count;
    }
    std::sort(c.edge_ids.begin(), c.edge_ids.end());
    return c;
}

std::vector<std::array<int, 3>> strongly_positive_triangles(const SignedGraph& g) {
    std::vector<std::array<int, 3>> triangles;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (const auto& [v, suv] : g.neighbors(u)) {
            if (v <= u || suv < 0) continue;
            for (const auto& [w, svw] : g.neighbors(v)) {
                if (w <= v || svw < 0) continue;
                int id = g.edge_id(u, w);
                if (id >= 0 && g.edges()[id].sign > 0)
                    triangles.push_back({u, v, w});
            }
        }
    }
    std::sort(triangles.begin(), triangles.end());
    return triangles;
}

std::vector<std::vector<int>> triangle_chain_components(const SignedGraph& g) {
    auto triangles = strongly_positive_triangles(g);
    const int t = static_cast<int>(triangles.size());
    std::vector<int> parent(t);
    for (int i = 0; i < t; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    // Triangles sharing a vertex belong to the same chain.
    std::vector<std::vector<int>> at_vertex(g.vertex_count());
    for (int i = 0; i < t; ++i)
        for (int v : triangles[i]) at_vertex[v].push_back(i);
    for (const auto& list : at_vertex)
        for (std::size_t k = 1; k < list.size(); ++k)
            parent[find(list[k])] = find(list[0]);

    std::vector<std::set<int>> grouped(t);
    for (int i = 0; i < t; ++i)
        grouped[find(i)].insert(triangles[i].begin(), triangles[i].end());

    std::vector<std::vector<int>> components;
    for (int i = 0; i < t; ++i)
        if (!grouped[i].empty())
            components.emplace_back(grouped[i].begin(), grouped[i].end());
    std::sort(components.begin(), components.end());
    return components;
}

std::vector<Cycle> enumerate_weakly_negative_cycles(const SignedGraph& g, int max_length) {
    std::vector<Cycle> cycles;
    if (max_length < 3) return cycles;
    const int n = g.vertex_count();
    const int max_path_vertices = std::min(max_length, n);

    // A weakly negative cycle is exactly one negative edge {u,v} closed by a
    // simple all-positive u-v path; DFS finds each such path once.
    std::vector<char> on_path(n, 0);
    std::vector<int> path;
    for (const Edge& neg : g.edges()) {
        if (neg.sign > 0) continue;
        const int source = neg.u;
        const int target = neg.v;
        path.assign(1, source);
        on_path[source] = 1;

        auto dfs = [&](auto&& self, int x) -> void {
            for (const auto& [w, s] : g.neighbors(x)) {
                if (s < 0) continue;
                if (w == target) {
                    std::vector<int> around = path;
                    around.push_back(target);
                    cycles.push_back(make_cycle(g, around));
                    continue;
                }
                if (on_path[w] || static_cast<int>(path.size()) >= max_path_vertices - 1) continue;
                on_path[w] = 1;
                path.push_back(w);
                self(self, w);
                path.pop_back();
                on_path[w] = 0;
            }
        };
        dfs(dfs, source);
        on_path[source] = 0;
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

namespace {

struct PackingSearch {
    const std::vector<Cycle>* cycles;
    std::vector<char> edge_used;
    int best = 0;

    bool fits(const Cycle& c) const {
        for (int id : c.edge_ids)
            if (edge_used[id]) return false;
        return true;
    }
    void mark(const Cycle& c, char value) {
        for (int id : c.edge_ids) edge_used[id] = value;
    }

    void find_best(int i, int count) {
        best = std::max(best, count);
        const int total = static_cast<int>(cycles->size());
        if (i == total || count + (total - i) <= best) return;
        if (fits((*cycles)[i])) {
            mark((*cycles)[i], 1);
            find_best(i + 1, count + 1);
            mark((*cycles)[i], 0);
        }
        find_best(i + 1, count);
    }

    // Include-first DFS: the first packing of the target size is the
    // lexicographically least over cycle indices.
    bool find_witness(int i, int count, std::vector<int>& chosen) {
        if (count == best) return true;
        const int total = static_cast<int>(cycles->size());
        if (i == total || count + (total - i) < best) return false;
        if (fits((*cycles)[i])) {
            mark((*cycles)[i], 1);
            chosen.push_back(i);
            if (find_witness(i + 1, count + 1, chosen)) return true;
            chosen.pop_back();
            mark((*cycles)[i], 0);
        }
        return find_witness(i + 1, count, chosen);
    }
};

}  // namespace

PackingResult max_edge_disjoint_wnc_packing(const SignedGraph& g, int max_length,
                                            bool allow_truncated) {
    int effective = effective_max_length(g, max_length, allow_truncated, "packing");
    auto cycles = enumerate_weakly_negative_cycles(g, effective);

    PackingSearch search;
    search.cycles = &cycles;
    search.edge_used.assign(g.edge_count(), 0);
    search.find_best(0, 0);

    std::vector<int> chosen;
    std::fill(search.edge_used.begin(), search.edge_used.end(), 0);
    search.find_witness(0, 0, chosen);

    PackingResult result;
    result.size = search.best;
    for (int i : chosen) result.witness.push_back(cycles[i]);
    return result;
}

ClusterabilityResult is_clusterable(const SignedGraph& g) {
    auto components = g.positive_components();
    std::vector<int> comp_of(g.vertex_count(), -1);
    for (int c = 0; c < static_cast<int>(components.size()); ++c)
        for (int v : components[c]) comp_of[v] = c;

    for (const Edge& e : g.edges()) {
        if (e.sign > 0 || comp_of[e.u] != comp_of[e.v]) continue;
        // Negative edge inside a positive component: close it with a shortest
        // positive path to exhibit a weakly negative cycle.
        std::vector<int> pred(g.vertex_count(), -1);
        std::vector<int> queue{e.u};
        pred[e.u] = e.u;
        for (std::size_t head = 0; head < queue.size() && pred[e.v] < 0; ++head) {
            int x = queue[head];
            for (const auto& [w, s] : g.neighbors(x)) {
                if (s < 0 || pred[w] >= 0) continue;
                pred[w] = x;
                queue.push_back(w);
            }
        }
        std::vector<int> walk;
        for (int x = e.v; x != e.u; x = pred[x]) walk.push_back(x);
        walk.push_back(e.u);
        std::reverse(walk.begin(), walk.end());
        ClusterabilityResult result;
        result.clusterable = false;
        result.witness = make_cycle(g, walk);
        return result;
    }

    ClusterabilityResult result;
    result.clusterable = true;
    result.certificate = Clustering::from_clusters(g.vertex_count(), components);
    return result;
}

TriangleConditionResult triangle_condition_check(const SignedGraph& g) {
    TriangleConditionResult result;
    const int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<int> path;

    // Chordless-cycle DFS, anchored at the cycle's minimum vertex. Path
    // invariant: each appended vertex is adjacent to the path tip only. Once
    // the path has two or more vertices, a candidate adjacent to the anchor
    // closes the cycle and is never extended, since any longer cycle through
    // it would carry that edge as a chord.
    auto extend = [&](auto&& self) -> void {
        const int anchor = path.front();
        const int tip = path.back();
        for (const auto& [w, s] : g.neighbors(tip)) {
            (void)s;
            if (w <= anchor || on_path[w]) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(w, path[i])) { chord = true; break; }
            if (chord) continue;
            if (path.size() >= 2 && g.has_edge(w, anchor)) {
                if (path.size() >= 3 && path[1] < w) {
                    std::vector<int> around = path;
                    around.push_back(w);
                    Cycle c = make_cycle(g, around);
                    if (c.negative_count <= 1) result.violations.push_back(c);
                }
                continue;
            }
            on_path[w] = 1;
            path.push_back(w);
            self(self);
            path.pop_back();
            on_path[w] = 0;
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        extend(extend);
        on_path[s] = 0;
    }
    std::sort(result.violations.begin(), result.violations.end());
    result.holds = result.violations.empty();
    return result;
}

ConditionTheoremResult condition_theorem_check(const SignedGraph& g, int max_length,
                                               bool allow_truncated) {
    int effective = effective_max_length(g, max_length, allow_truncated, "condition check");
    auto cycles = enumerate_weakly_negative_cycles(g, effective);
    const int c = static_cast<int>(cycles.size());

    std::vector<std::vector<char>> adjacent(c, std::vector<char>(c, 0));
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j)
            adjacent[i][j] = adjacent[j][i] = cycles[i].shares_edge_with(cycles[j]);

    ConditionTheoremResult result;
    for (int i = 0; i < c; ++i) {
        for (int j = i + 1; j < c; ++j) {
            if (!adjacent[i][j]) continue;
            auto common_ij = intersect_sorted(cycles[i].edge_ids, cycles[j].edge_ids);
            for (int k = j + 1; k < c; ++k) {
                if (!adjacent[i][k] || !adjacent[j][k]) continue;
                if (intersect_sorted(common_ij, cycles[k].edge_ids).empty()) {
                    result.holds = false;
                    result.witness = {cycles[i], cycles[j], cycles[k]};
                    return result;
                }
            }
        }
    }
    return result;
}

ForbiddenPattern ForbiddenPattern::pattern_a() {
    ForbiddenPattern p;
    p.id = 'A';
    p.variants.push_back(SignedGraph(4, {{0, 1, -1}, {0, 2, +1}, {1, 2, +1}, {0, 3, +1}, {1, 3, +1}}));
    return p;
}

ForbiddenPattern ForbiddenPattern::pattern_b() {
    ForbiddenPattern p;
    p.id = 'B';
    p.variants.push_back(SignedGraph(
        5, {{0, 1, -1}, {0, 2, +1}, {1, 2, +1}, {3, 0, +1}, {3, 2, +1}, {4, 1, +1}, {4, 2, +1}}));
    return p;
}

ForbiddenPattern ForbiddenPattern::pattern_c() {
    // x=0, y=1, apexes 2..4. One variant per count of apexes whose negative
    // side faces x; apex permutations are handled by the embedding search.
    ForbiddenPattern p;
    p.id = 'C';
    for (int negatives_on_x = 0; negatives_on_x <= 3; ++negatives_on_x) {
        std::vector<Edge> edges{{0, 1, +1}};
        for (int i = 0; i < 3; ++i) {
            int apex = 2 + i;
            int sx = i < negatives_on_x ? -1 : +1;
            edges.push_back({0, apex, sx});
            edges.push_back({1, apex, -sx});
        }
        p.variants.push_back(SignedGraph(5, edges));
    }
    return p;
}

std::vector<ForbiddenPattern> ForbiddenPattern::all() {
    return {pattern_a(), pattern_b(), pattern_c()};
}

bool operator==(const PatternHit& a, const PatternHit& b) {
    return a.pattern_id == b.pattern_id && a.vertices == b.vertices;
}

namespace {

void embed(const SignedGraph& pattern, const SignedGraph& host, std::vector<int>& image,
           std::vector<char>& taken, std::set<std::vector<int>>& found) {
    const int k = static_cast<int>(image.size());
    if (k == pattern.vertex_count()) {
        std::vector<int> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        found.insert(std::move(sorted));
        return;
    }
    for (int candidate = 0; candidate < host.vertex_count(); ++candidate) {
        if (taken[candidate]) continue;
        bool ok = true;
        for (const auto& [pw, psign] : pattern.neighbors(k)) {
            if (pw >= k) continue;
            int id = host.edge_id(candidate, image[pw]);
            if (id < 0 || host.edges()[id].sign != psign) { ok = false; break; }
        }
        if (!ok) continue;
        taken[candidate] = 1;
        image.push_back(candidate);
        embed(pattern, host, image, taken, found);
        image.pop_back();
        taken[candidate] = 0;
    }
}

}  // namespace

std::vector<PatternHit> forbidden_subgraph_scan(const SignedGraph& g,
                                                const std::vector<ForbiddenPattern>& patterns) {
    std::vector<PatternHit> hits;
    for (const ForbiddenPattern& pattern : patterns) {
        std::set<std::vector<int>> found;
        for (const SignedGraph& variant : pattern.variants) {
            if (variant.vertex_count() > g.vertex_count()) continue;
            std::vector<int> image;
            std::vector<char> taken(g.vertex_count(), 0);
            embed(variant, g, image, taken, found);
        }
        for (const auto& image : found) hits.push_back(PatternHit{pattern.id, image});
    }
    return hits;
}

}  // namespace ccsg
