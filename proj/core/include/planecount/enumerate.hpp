#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "planecount/graph.hpp"
#include "planecount/rotation_system.hpp"

namespace planecount {

struct CapExceededError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultEmbeddingBudget = 100'000'000;
inline constexpr int kGenerationCap = 10;

/// Selection predicate for generated graphs. Cycle windows prune during
/// generation (a forbidden cycle never disappears when vertices are
/// added); min_degree and planarity are checked on finished graphs only,
/// since neither survives vertex deletion.
struct CorpusFilter {
    int max_n = 8;
    std::optional<int> min_degree;
    std::optional<std::pair<int, int>> forbid_cycles;  // inclusive length window to exclude
    bool require_connected = true;
    bool require_planar = false;
};

/// Exactly one representative per isomorphism class of simple graphs
/// with 1..max_n vertices satisfying the filter, canonically labeled and
/// ordered by (n, canonical graph6 string). Dedup is by minimum adjacency
/// bit-string over all vertex permutations. Throws CapExceededError when
/// max_n exceeds the generation cap of 10.
std::vector<Graph> enumerate_small_graphs(const CorpusFilter& filter);

/// Permutation realizing the minimum adjacency bit-string: labeling[j] is
/// the original vertex placed at position j. Branch-and-bound over
/// partial permutations; requires n <= 12.
std::vector<int> canonical_labeling(const Graph& g);

/// Copy of g with vertex labeling[j] renamed to j.
Graph relabel(const Graph& g, const std::vector<int>& labeling);

/// graph6 line of the canonically labeled copy; equal strings iff
/// isomorphic graphs (for n <= 12).
std::string canonical_graph6(const Graph& g);

/// Visits every rotation system of g, one representative per choice of
/// cyclic neighbor order at each vertex (each vertex's cycle is anchored
/// at its least neighbor, giving prod (deg(v)-1)! systems in total). With
/// genus_zero_only, only genus-0 systems are materialized and visited.
/// The visitor returns false to stop early. Throws BudgetExceededError if
/// the enumeration space exceeds `budget`.
void enumerate_embeddings(const Graph& g, bool genus_zero_only,
                          const std::function<bool(const RotationSystem&)>& visit,
                          long long budget = kDefaultEmbeddingBudget);

/// Convenience collector for the above.
std::vector<RotationSystem> enumerate_embeddings(const Graph& g, bool genus_zero_only,
                                                 long long budget = kDefaultEmbeddingBudget);

/// Planarity by embedding search: true iff some rotation system of g has
/// Euler genus 0. Dense graphs are rejected by the e <= 3n-6 count first.
bool has_genus_zero_embedding(const Graph& g, long long budget = kDefaultEmbeddingBudget);

}  // namespace planecount
