#include "planecount/plane_graph.hpp"

#include <algorithm>
#include <numeric>

namespace planecount {

int FaceSet::total_darts() const {
    return std::accumulate(lengths.begin(), lengths.end(), 0);
}

FaceSet trace_faces(const RotationSystem& rot) {
    FaceSet fs;
    const int darts = rot.dart_count();
    std::vector<char> visited(static_cast<std::size_t>(darts), 0);
    for (DartId start = 0; start < darts; ++start) {
        if (visited[start])
            continue;
        std::vector<DartId> face;
        DartId d = start;
        do {
            visited[d] = 1;
            face.push_back(d);
            d = rot.next_in_face(d);
        } while (d != start);
        fs.lengths.push_back(static_cast<int>(face.size()));
        fs.faces.push_back(std::move(face));
    }
    return fs;
}

namespace {

int component_count(const RotationSystem& rot) {
    const int n = rot.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int components = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        ++components;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (DartId d : rot.rotation(v)) {
                int w = rot.head(d);
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

}  // namespace

int euler_genus(const RotationSystem& rot) {
    const int n = rot.vertex_count();
    const int e = rot.edge_count();
    const int f = trace_faces(rot).face_count();
    const int c = n == 0 ? 0 : component_count(rot);
    // n - e + f = 2c - 2g for an orientable embedding with c components.
    return (2 * c - n + e - f) / 2;
}

PlaneGraph::PlaneGraph(RotationSystem rot) : rot_(std::move(rot)) {
    if (!is_connected(rot_))
        throw NotConnectedError("plane graph: rotation system is not connected");
    faces_ = trace_faces(rot_);
    const int n = rot_.vertex_count();
    const int e = rot_.edge_count();
    // dart orbits miss the one face of the edgeless single-vertex map
    const int f = faces_.face_count() + (n == 1 ? 1 : 0);
    if (n > 0) {
        const int two_genus = 2 - n + e - f;
        if (two_genus != 0)
            throw NotGenusZeroError(two_genus / 2);
    }
    graph_ = rot_.underlying_graph();
}

std::vector<int> PlaneGraph::face_vertices(int i) const {
    std::vector<int> out;
    out.reserve(faces_.faces[i].size());
    for (DartId d : faces_.faces[i])
        out.push_back(rot_.tail(d));
    return out;
}

PlaneGraph build_plane_graph(RotationSystem rot) {
    return PlaneGraph(std::move(rot));
}

GraphCounts counts(const PlaneGraph& g) {
    const RotationSystem& rot = g.rotation();
    GraphCounts c;
    c.n = rot.vertex_count();
    c.e = rot.edge_count();
    c.f = g.faces().face_count();
    for (int v = 0; v < rot.vertex_count(); ++v)
        if (rot.degree(v) == 3)
            ++c.n3;
    // A boundary of length 3 is a 3-cycle unless vertices repeat, which
    // in a simple graph can only happen for n <= 2 degeneracies.
    std::vector<char> on_triangle(static_cast<std::size_t>(rot.edge_count()), 0);
    for (int i = 0; i < g.faces().face_count(); ++i) {
        if (g.faces().lengths[i] != 3)
            continue;
        std::vector<int> vs = g.face_vertices(i);
        if (vs[0] == vs[1] || vs[1] == vs[2] || vs[0] == vs[2])
            continue;
        ++c.f3;
        for (DartId d : g.faces().faces[i])
            on_triangle[rot.edge_of(d)] = 1;
    }
    c.e3 = std::count(on_triangle.begin(), on_triangle.end(), 1);
    return c;
}

int min_degree(const PlaneGraph& g) {
    return g.graph().min_degree();
}

}  // namespace planecount
