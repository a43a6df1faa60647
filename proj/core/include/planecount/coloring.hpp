#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planecount/graph.hpp"

namespace planecount {

struct PartialAssignmentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TraceIncompleteError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SearchBudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultSearchBudget = 10'000'000;

/// Vertex -> color assignment over the palette {0, ..., k-1}.
struct Coloring {
    std::vector<int> assignment;
    int k = 0;

    int colors_used() const;
};

/// True iff the assignment is total, in range, and no edge is
/// monochromatic. Throws PartialAssignmentError when the assignment does
/// not cover V(g) or uses out-of-palette values.
bool verify_coloring(const Graph& g, const Coloring& c);

/// Remainder when peeling gets stuck: the vertices of the 3-core left
/// standing (original ids) and the induced subgraph on them, relabeled so
/// that subgraph vertex i is vertices[i].
struct StuckCore {
    std::vector<int> vertices;
    Graph subgraph;
};

struct PeelTrace {
    std::vector<int> removal_order;
    std::optional<StuckCore> stuck_at;

    bool complete() const { return !stuck_at.has_value(); }
};

/// Repeatedly removes the least-id vertex of current degree <= 2. If the
/// graph empties, removal_order is a 2-degeneracy ordering; otherwise
/// stuck_at holds the remaining subgraph (every vertex of degree >= 3).
PeelTrace peel_order(const Graph& g);

/// Colors vertices in reverse removal order with the least color of
/// {0,1,2} unused by already-colored neighbors. Each vertex sees at most
/// two of those, so a color is always free. Throws TraceIncompleteError
/// if the trace did not empty the graph.
Coloring greedy_color_from_peel(const Graph& g, const PeelTrace& trace);

enum class ColorSearchStatus { Colored, Infeasible, BudgetExceeded };

struct ColorSearchResult {
    ColorSearchStatus status = ColorSearchStatus::Infeasible;
    std::optional<Coloring> coloring;
    long long nodes_explored = 0;
};

/// Complete backtracking k-coloring search with most-constrained-vertex
/// ordering and forward checking. Infeasible is a definitive answer, not
/// an error. The node budget caps the number of color assignments tried;
/// exhausting it yields BudgetExceeded, never a wrong answer.
ColorSearchResult exact_k_color(const Graph& g, int k,
                                long long budget = kDefaultSearchBudget);

/// 3-coloring of g minus one vertex, written over the original vertex
/// ids; the removed vertex is assigned -1.
struct DeletionColoring {
    int removed_vertex = -1;
    Coloring rest;
};

struct CriticalityCertificate {
    bool is_critical = false;
    std::optional<std::string> failure_reason;
    std::vector<DeletionColoring> deletion_colorings;
};

/// Certifies 4-criticality: g is not 3-colorable but every vertex-deleted
/// subgraph is. Vertex deletions suffice for the induced-subgraph
/// definition because every proper induced subgraph sits inside some
/// g - v, and chromatic number is monotone under taking subgraphs; the
/// certificate carries one 3-coloring per deletion. Throws
/// SearchBudgetExceededError if any search exhausts its budget.
CriticalityCertificate is_4_critical(const Graph& g,
                                     long long budget = kDefaultSearchBudget);

}  // namespace planecount
