#include "defco/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace defco {

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int SimpleGraph::edge_count() const {
    std::size_t darts = 0;
    for (const auto& nbrs : adj_) darts += nbrs.size();
    return static_cast<int>(darts / 2);
}

bool SimpleGraph::adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int SimpleGraph::add_vertex() {
    adj_.emplace_back();
    return vertex_count() - 1;
}

void SimpleGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    if (adjacent(u, v)) throw std::invalid_argument("add_edge: duplicate edge");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

void SimpleGraph::remove_edge(int u, int v) {
    auto drop = [this](int a, int b) {
        auto it = std::lower_bound(adj_[a].begin(), adj_[a].end(), b);
        if (it == adj_[a].end() || *it != b)
            throw std::invalid_argument("remove_edge: no such edge");
        adj_[a].erase(it);
    };
    drop(u, v);
    drop(v, u);
}

std::vector<int> SimpleGraph::detach_vertex(int v) {
    std::vector<int> nbrs = adj_[v];
    for (int w : nbrs) {
        auto it = std::lower_bound(adj_[w].begin(), adj_[w].end(), v);
        adj_[w].erase(it);
    }
    adj_[v].clear();
    return nbrs;
}

bool SimpleGraph::connected() const {
    int n = vertex_count();
    if (n <= 1) return true;
    auto dist = distances_from(0);
    for (int v = 0; v < n; ++v)
        if (dist[v] < 0) return false;
    return true;
}

std::vector<int> SimpleGraph::distances_from(int s, int cap) const {
    std::vector<int> dist(vertex_count(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (cap >= 0 && dist[u] >= cap) continue;
        for (int w : adj_[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::optional<int> SimpleGraph::girth() const {
    // Shortest cycle through each BFS root; the minimum over all roots is
    // exact for unweighted graphs.
    int n = vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (best > 0 && 2 * dist[u] + 1 >= best) break;
            for (int w : adj_[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

}  // namespace defco
