#pragma once

#include <string>
#include <vector>

#include "planecount/coloring.hpp"
#include "planecount/enumerate.hpp"

namespace planecount {

/// Result of one exhaustive desk-scale verification sweep. A violation
/// is a would-be counterexample and carries a reproduction payload
/// (graph6, plus the rotation for embedding-level checks).
struct TheoremSuiteReport {
    int theorem = 0;
    int max_n = 0;
    long long graphs_enumerated = 0;
    long long qualifying_graphs = 0;
    long long instances_checked = 0;
    long long violations = 0;
    long long budget_exhaustions = 0;
    std::vector<std::string> violation_payloads;

    bool clean() const { return violations == 0 && budget_exhaustions == 0; }
};

/// Triangular-face density sweep: all connected graphs with n <= max_n,
/// all genus-0 rotation systems of those with min degree >= 3 and no edge
/// in two triangles; every instance must satisfy 3*f3 < 2*f.
TheoremSuiteReport verify_theorem4(int max_n,
                                   long long embedding_budget = kDefaultEmbeddingBudget);

/// Constructive-coloring sweep: every connected planar graph with
/// n <= max_n and no cycle of length 4..11 must peel to empty and accept
/// the greedy 3-coloring.
TheoremSuiteReport verify_theorem2(int max_n);

/// Exact-coloring sweep: every connected planar graph with n <= max_n and
/// no cycle of length 4..8 must be 3-colorable; budget exhaustions are
/// reported separately from violations.
TheoremSuiteReport verify_theorem6(int max_n, long long budget = kDefaultSearchBudget);

/// Dispatch on theorem id 2, 4, or 6.
TheoremSuiteReport verify_theorem(int theorem, int max_n,
                                  long long budget = kDefaultSearchBudget);

}  // namespace planecount
