#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace defco {

/// Plain adjacency-list graph with dense vertex ids 0..n-1.
///
/// An id with an empty neighbor list may stand for a vertex that a reduction
/// removed, so nothing here assumes every id carries edges. Neighbor lists
/// are kept sorted.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj_(n) {}

    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    int add_vertex();
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Drops every edge at v and returns the former neighbor list.
    std::vector<int> detach_vertex(int v);

    bool connected() const;

    /// Length of a shortest cycle; nullopt when the graph is a forest.
    std::optional<int> girth() const;

    /// BFS distances from s; -1 for unreachable. If cap >= 0, vertices
    /// farther than cap are left at -1.
    std::vector<int> distances_from(int s, int cap = -1) const;

private:
    std::vector<std::vector<int>> adj_;
};

}  // namespace defco
