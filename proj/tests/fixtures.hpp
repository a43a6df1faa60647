#pragma once

#include <vector>

#include "planecount/graph.hpp"
#include "planecount/rotation_system.hpp"

// Named graphs and embeddings used across the test suites.
namespace fixtures {

using planecount::Graph;
using planecount::RotationSystem;

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

/// Hub 0 dominating the cycle 1..spokes.
inline Graph wheel_graph(int spokes) {
    Graph g(spokes + 1);
    for (int i = 1; i <= spokes; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i == spokes ? 1 : i + 1);
    }
    return g;
}

/// Triangles 0-1-2 and 3-4-5 joined by the matching i -- i+3.
inline Graph prism_graph() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 3);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    return g;
}

/// Square 0-1-2-3 over square 4-5-6-7 with vertical edges i -- i+4.
inline Graph cube_graph() {
    Graph g(8);
    for (int i = 0; i < 4; ++i) {
        g.add_edge(i, (i + 1) % 4);
        g.add_edge(i + 4, (i + 1) % 4 + 4);
        g.add_edge(i, i + 4);
    }
    return g;
}

/// Outer pentagon 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

/// Mycielskian of C5: outer cycle 0..4, shadows 5..9 (5+i joined to the
/// cycle neighbors of i), hub 10 joined to every shadow. Triangle-free
/// with chromatic number 4.
inline Graph grotzsch_graph() {
    Graph g(11);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 4) % 5);
        g.add_edge(10, 5 + i);
    }
    return g;
}

/// Two diamonds (K4 minus an edge) sharing apex 0, far tips 3 and 6
/// joined: 7 vertices, 11 edges, chromatic number 4.
inline Graph moser_spindle() {
    Graph g(7);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(0, 4);
    g.add_edge(0, 5);
    g.add_edge(4, 5);
    g.add_edge(4, 6);
    g.add_edge(5, 6);
    g.add_edge(3, 6);
    return g;
}

// Rotation systems read off planar drawings (counterclockwise neighbor
// order at each vertex).

inline RotationSystem triangle_rotation() {
    return RotationSystem::from_neighbor_lists({{1, 2}, {0, 2}, {0, 1}});
}

/// K4 drawn with vertex 0 in the center of triangle 1-2-3.
inline RotationSystem k4_rotation() {
    return RotationSystem::from_neighbor_lists({
        {3, 1, 2},
        {2, 0, 3},
        {3, 0, 1},
        {1, 0, 2},
    });
}

/// Cube drawn as a square annulus: outer 0-1-2-3, inner 4-5-6-7.
inline RotationSystem cube_rotation() {
    return RotationSystem::from_neighbor_lists({
        {1, 4, 3},
        {2, 5, 0},
        {3, 6, 1},
        {0, 7, 2},
        {5, 7, 0},
        {6, 4, 1},
        {2, 7, 5},
        {6, 3, 4},
    });
}

/// Prism drawn as a triangular annulus: outer 0-1-2, inner 3-4-5.
inline RotationSystem prism_rotation() {
    return RotationSystem::from_neighbor_lists({
        {1, 3, 2},
        {2, 4, 0},
        {0, 5, 1},
        {4, 5, 0},
        {5, 3, 1},
        {2, 3, 4},
    });
}

}  // namespace fixtures
