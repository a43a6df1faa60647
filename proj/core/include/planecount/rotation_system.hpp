#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "planecount/graph.hpp"

namespace planecount {

struct InvalidRotationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A dart is a directed half of an undirected edge. Edge k owns darts
/// 2k (stored tail -> stored head) and 2k+1 (the reverse), so
/// reverse(d) == d ^ 1 and reverse is a fixed-point-free involution.
using DartId = int;

struct Dart {
    int edge_id;
    int tail;
    int head;
};

/// Combinatorial embedding: every vertex carries a cyclic order of its
/// outgoing darts. Together with the dart involution this determines the
/// faces and hence the genus of the embedded graph.
///
/// Construction validates that the encoded graph is simple (no loops, no
/// repeated neighbor at a vertex) and that the lists are mutually
/// consistent (u lists v exactly when v lists u).
class RotationSystem {
public:
    /// Builds from per-vertex neighbor lists given in rotation order.
    /// Throws InvalidRotationError on loops, repeated neighbors, or
    /// dangling darts.
    static RotationSystem from_neighbor_lists(const std::vector<std::vector<int>>& nbrs);

    /// Rotation with each vertex's neighbors in ascending order.
    static RotationSystem sorted_rotation(const Graph& g);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int dart_count() const { return 2 * edge_count(); }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }

    DartId reverse(DartId d) const { return d ^ 1; }
    int edge_of(DartId d) const { return d >> 1; }
    int tail(DartId d) const { return (d & 1) ? edges_[d >> 1].second : edges_[d >> 1].first; }
    int head(DartId d) const { return (d & 1) ? edges_[d >> 1].first : edges_[d >> 1].second; }
    Dart dart(DartId d) const { return {edge_of(d), tail(d), head(d)}; }
    std::pair<int, int> edge_endpoints(int e) const { return edges_[e]; }

    /// Outgoing darts of v in rotation order.
    std::span<const DartId> rotation(int v) const { return rot_[v]; }

    /// Successor of d in the cyclic order at its tail.
    DartId rotation_successor(DartId d) const {
        const auto& r = rot_[tail(d)];
        std::size_t i = static_cast<std::size_t>(pos_[d]) + 1;
        return r[i == r.size() ? 0 : i];
    }

    /// Face-tracing permutation: next(d) = rotation successor of
    /// reverse(d) at head(d). Tracing with the predecessor instead would
    /// yield the mirror embedding; all face statistics coincide, but one
    /// convention is fixed so traces are deterministic.
    DartId next_in_face(DartId d) const { return rotation_successor(reverse(d)); }

    /// Neighbors of v in rotation order (heads of rotation(v)).
    std::vector<int> neighbor_list(int v) const;
    std::vector<std::vector<int>> neighbor_lists() const;

    Graph underlying_graph() const;

private:
    friend class EmbeddingEnumerator;
    RotationSystem() = default;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<DartId>> rot_;
    std::vector<int> pos_;  // dart -> index within rot_[tail(dart)]
};

/// Connectivity of the underlying graph (isolated-free walk over darts
/// plus isolated-vertex check). Single-vertex and empty systems count as
/// connected.
bool is_connected(const RotationSystem& rot);

}  // namespace planecount
