#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planecount/bounds.hpp"
#include "planecount/coloring.hpp"
#include "planecount/enumerate.hpp"
#include "planecount/plane_graph.hpp"
#include "planecount/structure.hpp"

namespace planecount {

enum class ColoringOutcome { Peeled, Exact, Infeasible, Budget };

std::string to_string(ColoringOutcome outcome);

struct BoundCheck {
    std::string name;
    bool holds = false;
    Rational slack;
};

/// One analysis record per graph/embedding pair. Abstract-graph fields
/// (structure scan, coloring) are shared across the embeddings of one
/// input graph; counts and verdicts are per embedding.
struct VerdictRecord {
    std::string graph_id;
    std::string graph6;
    /// Neighbor lists in rotation order; absent for abstract records.
    std::optional<std::vector<std::vector<int>>> rotation;
    StructureReport structure;
    ColoringOutcome coloring_outcome = ColoringOutcome::Infeasible;
    std::optional<Coloring> coloring;
    bool has_embedding = false;
    GraphCounts counts;
    std::vector<int> face_lengths;
    std::optional<Theorem4Verdict> theorem4;
    std::vector<BoundCheck> bounds_checked;
    std::optional<std::string> error;
};

struct AnalysisOptions {
    /// Cycle window reported by the structure scan.
    int scan_lo = 4;
    int scan_hi = 11;
    long long color_budget = kDefaultSearchBudget;
    long long embedding_budget = kDefaultEmbeddingBudget;
};

/// Abstract-graph side of a record: structure scan plus a coloring
/// attempt (peel first, exact 3-coloring as fallback).
VerdictRecord analyze_graph(const Graph& g, const std::string& graph_id,
                            const AnalysisOptions& opts = {});

/// Embedding side: counts, the triangular-face verdict, and the
/// applicable face bound. `base` supplies the shared abstract fields.
VerdictRecord analyze_plane_graph(const PlaneGraph& pg, const VerdictRecord& base,
                                  const std::string& graph_id);

/// All records for one abstract graph: one per genus-0 embedding.
std::vector<VerdictRecord> analyze_all_embeddings(const Graph& g, const std::string& graph_id,
                                                  const AnalysisOptions& opts = {});

}  // namespace planecount
