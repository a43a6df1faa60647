#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "planecount/graph.hpp"

namespace planecount {

/// Abstract-graph hypotheses checked by the face-counting and coloring
/// arguments. Everything here is embedding-independent.
struct StructureReport {
    int min_degree = 0;
    bool connected = false;
    bool has_adjacent_triangles = false;
    long long triangle_count = 0;
    /// One witness per cycle length found in the scanned window;
    /// ascending by length.
    std::vector<std::pair<int, std::vector<int>>> forbidden_cycles_found;
};

/// An edge lying on two or more triangles, when one exists.
struct AdjacentTrianglesWitness {
    bool exists = false;
    int u = -1;
    int v = -1;
};

/// True iff some edge {u,v} lies in two 3-cycles, i.e. u and v have at
/// least two common neighbors. This checks all 3-cycles of the graph,
/// facial or not.
AdjacentTrianglesWitness adjacent_triangles_exist(const Graph& g);

/// Number of 3-cycles (unordered vertex triples inducing a triangle).
long long count_triangles(const Graph& g);

struct CycleWitness {
    bool exists = false;
    std::vector<int> cycle;  // k distinct vertices, consecutive ones adjacent, last adjacent to first
};

/// True iff a simple cycle of length exactly k exists. Found by DFS over
/// simple paths rooted at each vertex, exploring only ids >= the root and
/// pruning paths longer than k. Lengths outside [3, n] yield false.
CycleWitness has_cycle_of_length(const Graph& g, int k);

/// Scans the window [lo, hi] of cycle lengths (lo >= 3 required) and
/// fills the full report. A single DFS sweep serves all lengths; it stops
/// early once every length in the window has a witness.
StructureReport forbidden_cycle_scan(const Graph& g, int lo, int hi);

/// Cycles through `pivot` only, used when the rest of the graph is
/// already known to be clean: true iff some simple cycle through pivot
/// has length in [lo, hi].
bool has_cycle_through_vertex(const Graph& g, int pivot, int lo, int hi);

}  // namespace planecount
