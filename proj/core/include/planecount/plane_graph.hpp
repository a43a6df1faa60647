#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "planecount/graph.hpp"
#include "planecount/rotation_system.hpp"

namespace planecount {

struct NotConnectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotGenusZeroError : std::runtime_error {
    int genus;
    explicit NotGenusZeroError(int g)
        : std::runtime_error("embedding has Euler genus " + std::to_string(g)), genus(g) {}
};

/// Orbits of the face-tracing permutation. Face lengths count dart
/// traversals, so a bridge contributes twice to the length of the single
/// face it borders, and the lengths sum to 2e.
struct FaceSet {
    std::vector<std::vector<DartId>> faces;
    std::vector<int> lengths;

    int face_count() const { return static_cast<int>(faces.size()); }
    int total_darts() const;
};

/// Traces all face orbits of next(d) = rotation successor of reverse(d)
/// at head(d). Every dart lies in exactly one returned cycle.
FaceSet trace_faces(const RotationSystem& rot);

/// Euler genus summed over components: n - e + f = 2c - 2g.
int euler_genus(const RotationSystem& rot);

/// The symbol bundle used by all face/edge counting bounds.
struct GraphCounts {
    long long n = 0;   // vertices
    long long e = 0;   // edges
    long long f = 0;   // faces
    long long n3 = 0;  // vertices of degree exactly 3
    long long f3 = 0;  // triangular faces (boundary length 3 on 3 distinct vertices)
    long long e3 = 0;  // distinct edges lying on at least one triangular face
};

/// A connected, genus-0 embedded simple graph. Faces are traced once at
/// construction and cached; the object is immutable afterwards.
class PlaneGraph {
public:
    /// Throws NotConnectedError or NotGenusZeroError.
    explicit PlaneGraph(RotationSystem rot);

    const RotationSystem& rotation() const { return rot_; }
    const FaceSet& faces() const { return faces_; }
    const Graph& graph() const { return graph_; }

    /// Vertices along face i, in trace order (tails of its darts).
    std::vector<int> face_vertices(int i) const;

private:
    RotationSystem rot_;
    FaceSet faces_;
    Graph graph_;
};

/// Validates connectivity and genus and wraps the rotation system.
PlaneGraph build_plane_graph(RotationSystem rot);

GraphCounts counts(const PlaneGraph& g);

int min_degree(const PlaneGraph& g);

}  // namespace planecount
