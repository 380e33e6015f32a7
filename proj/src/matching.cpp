#include "ccsg/matching.hpp"

#include <algorithm>

namespace ccsg {

BlossomMatching::BlossomMatching(int n)
    : n_(n),
      adj_(n),
      active_(n, 1),
      mate_(n, -1),
      parent_(n, -1),
      base_(n, 0),
      visited_(n, 0),
      in_blossom_(n, 0),
      base_seen_(n, 0) {}

void BlossomMatching::add_edge(int u, int v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    adjacency_sorted_ = false;
}

void BlossomMatching::deactivate(int v) {
    active_[v] = 0;
    if (mate_[v] != -1) {
        mate_[mate_[v]] = -1;
        mate_[v] = -1;
    }
}

int BlossomMatching::matching_size() const {
    int size = 0;
    for (int v = 0; v < n_; ++v)
        if (mate_[v] > v) ++size;
    return size;
}

int BlossomMatching::solve() {
    if (!adjacency_sorted_) {
        for (auto& list : adj_) std::sort(list.begin(), list.end());
        adjacency_sorted_ = true;
    }
    for (int v = 0; v < n_; ++v)
        if (active_[v] && mate_[v] == -1) augment_from(v);
    return matching_size();
}

// Walk both alternating paths up to their roots; the first base seen from
// both sides is the blossom's common base.
int BlossomMatching::find_common_base(int a, int b) {
    std::fill(base_seen_.begin(), base_seen_.end(), 0);
    int cur = a;
    while (true) {
        cur = base_[cur];
        base_seen_[cur] = 1;
        if (mate_[cur] == -1) break;
        cur = parent_[mate_[cur]];
    }
    cur = b;
    while (true) {
        cur = base_[cur];
        if (base_seen_[cur]) return cur;
        cur = parent_[mate_[cur]];
    }
}

void BlossomMatching::mark_blossom_path(int v, int common_base, int child) {
    while (base_[v] != common_base) {
        in_blossom_[base_[v]] = 1;
        in_blossom_[base_[mate_[v]]] = 1;
        parent_[v] = child;
        child = mate_[v];
        v = parent_[mate_[v]];
    }
}

bool BlossomMatching::augment_from(int root) {
    std::fill(visited_.begin(), visited_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;

    visited_[root] = 1;
    queue_.assign(1, root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        int v = queue_[head];
        for (int to : adj_[v]) {
            if (!active_[to]) continue;
            if (base_[v] == base_[to] || mate_[v] == to) continue;
            if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                // Even vertex reached along a non-matching edge: contract the
                // odd cycle through the common base.
                int common = find_common_base(v, to);
                std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                mark_blossom_path(v, common, to);
                mark_blossom_path(to, common, v);
                for (int i = 0; i < n_; ++i) {
                    if (in_blossom_[base_[i]]) {
                        base_[i] = common;
                        if (!visited_[i]) {
                            visited_[i] = 1;
                            queue_.push_back(i);
                        }
                    }
                }
            } else if (parent_[to] == -1) {
                parent_[to] = v;
                if (mate_[to] == -1) {
                    // Exposed vertex: flip the alternating path back to root.
                    int u = to;
                    while (u != -1) {
                        int pv = parent_[u];
                        int next = mate_[pv];
                        mate_[u] = pv;
                        mate_[pv] = u;
                        u = next;
                    }
                    return true;
                }
                visited_[mate_[to]] = 1;
                queue_.push_back(mate_[to]);
            }
        }
    }
    return false;
}

int maximum_matching_size(int n, const std::vector<std::pair<int, int>>& edges) {
    BlossomMatching solver(n);
    for (const auto& [u, v] : edges) solver.add_edge(u, v);
    return solver.solve();
}

std::vector<std::pair<int, int>> lexicographically_smallest_maximum_matching(
    int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<int, int>> sorted;
    sorted.reserve(edges.size());
    for (const auto& [u, v] : edges) sorted.push_back(std::minmax(u, v));
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    BlossomMatching residual(n);
    for (const auto& [u, v] : sorted) residual.add_edge(u, v);
    int remaining_target = residual.solve();

    // Invariant: chosen plus a maximum matching of the residual graph is a
    // maximum matching of the input. An edge is kept exactly when forcing it
    // still allows the residual to reach the remaining target.
    std::vector<std::pair<int, int>> chosen;
    std::vector<char> used(n, 0);
    for (const auto& [u, v] : sorted) {
        if (remaining_target == 0) break;
        if (used[u] || used[v]) continue;
        BlossomMatching trial = residual;
        trial.deactivate(u);
        trial.deactivate(v);
        if (trial.solve() == remaining_target - 1) {
            chosen.emplace_back(u, v);
            used[u] = used[v] = 1;
            residual = std::move(trial);
            --remaining_target;
        }
    }
    return chosen;
}

}  // namespace ccsg
