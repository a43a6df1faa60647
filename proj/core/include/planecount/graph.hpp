#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace planecount {

/// Simple undirected graph with dense 0-based vertex ids.
///
/// Adjacency lists are kept sorted. Loops and parallel edges are rejected
/// at insertion time, so any Graph instance is a simple graph. Instances
/// are meant to be fully built and then treated as immutable values; all
/// query methods are const and thread-safe on a const object.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    /// Inserts edge {u,v}. Throws std::invalid_argument on a loop,
    /// a duplicate edge, or an out-of-range endpoint.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;

    /// Edge list with endpoints normalized u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edge_list() const;

    /// Minimum degree over all vertices; 0 for the empty graph.
    int min_degree() const;

    /// BFS connectivity; graphs with at most one vertex count as connected.
    bool is_connected() const;

    /// Copy with vertex v removed; vertices above v shift down by one.
    Graph without_vertex(int v) const;

    /// Induced subgraph on `verts` (need not be sorted); vertex i of the
    /// result corresponds to verts[i].
    Graph induced(const std::vector<int>& verts) const;

    /// Adjacency rows as bitmasks. Requires vertex_count() <= 64.
    std::vector<std::uint64_t> adjacency_rows() const;

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

}  // namespace planecount
