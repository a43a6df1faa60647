#include "planecount/analysis.hpp"

#include <algorithm>

#include "planecount/graph6.hpp"

namespace planecount {

std::string to_string(ColoringOutcome outcome) {
    switch (outcome) {
        case ColoringOutcome::Peeled: return "peeled";
        case ColoringOutcome::Exact: return "exact";
        case ColoringOutcome::Infeasible: return "infeasible";
        case ColoringOutcome::Budget: return "budget";
    }
    return "unknown";
}

VerdictRecord analyze_graph(const Graph& g, const std::string& graph_id,
                            const AnalysisOptions& opts) {
    VerdictRecord rec;
    rec.graph_id = graph_id;
    rec.graph6 = write_graph6(g);
    rec.structure = forbidden_cycle_scan(g, opts.scan_lo, opts.scan_hi);

    PeelTrace trace = peel_order(g);
    if (trace.complete()) {
        Coloring c = greedy_color_from_peel(g, trace);
        verify_coloring(g, c);
        rec.coloring_outcome = ColoringOutcome::Peeled;
        rec.coloring = std::move(c);
    } else {
        ColorSearchResult res = exact_k_color(g, 3, opts.color_budget);
        switch (res.status) {
            case ColorSearchStatus::Colored:
                verify_coloring(g, *res.coloring);
                rec.coloring_outcome = ColoringOutcome::Exact;
                rec.coloring = std::move(res.coloring);
                break;
            case ColorSearchStatus::Infeasible:
                rec.coloring_outcome = ColoringOutcome::Infeasible;
                break;
            case ColorSearchStatus::BudgetExceeded:
                rec.coloring_outcome = ColoringOutcome::Budget;
                break;
        }
    }
    return rec;
}

VerdictRecord analyze_plane_graph(const PlaneGraph& pg, const VerdictRecord& base,
                                  const std::string& graph_id) {
    VerdictRecord rec = base;
    rec.graph_id = graph_id;
    rec.rotation = pg.rotation().neighbor_lists();
    rec.has_embedding = true;
    rec.counts = counts(pg);
    rec.face_lengths = pg.faces().lengths;
    std::sort(rec.face_lengths.begin(), rec.face_lengths.end());
    rec.theorem4 = theorem4_verdict(pg);

    const GraphCounts& c = rec.counts;
    rec.bounds_checked.push_back(
        {"triangle_faces_lt_two_thirds", rec.theorem4->conclusion_holds, rec.theorem4->slack});

    // When every non-triangular face is long enough, the generalized face
    // bound f < 6e/(m+6) applies; record it with its exact slack.
    int m = 0;
    for (int i = 0; i < pg.faces().face_count(); ++i) {
        int len = pg.faces().lengths[i];
        bool triangular = false;
        if (len == 3) {
            auto vs = pg.face_vertices(i);
            triangular = vs[0] != vs[1] && vs[1] != vs[2] && vs[0] != vs[2];
        }
        if (!triangular)
            m = m == 0 ? len : std::min(m, len);
    }
    if (m >= 7 && rec.theorem4->hypotheses_hold) {
        FaceCountBound fb = face_count_bound(m, c.e, c.f3);
        Rational slack = fb.strict_upper - Rational(c.f);
        rec.bounds_checked.push_back(
            {"face_bound_m" + std::to_string(m), Rational(c.f) < fb.strict_upper, slack});
    }
    return rec;
}

std::vector<VerdictRecord> analyze_all_embeddings(const Graph& g, const std::string& graph_id,
                                                  const AnalysisOptions& opts) {
    VerdictRecord base = analyze_graph(g, graph_id, opts);
    std::vector<VerdictRecord> out;
    int index = 0;
    enumerate_embeddings(
        g, /*genus_zero_only=*/true,
        [&](const RotationSystem& rs) {
            PlaneGraph pg(rs);
            out.push_back(analyze_plane_graph(pg, base, graph_id + "/e" + std::to_string(index)));
            ++index;
            return true;
        },
        opts.embedding_budget);
    if (out.empty()) {
        // no genus-0 embedding: keep the abstract record so the graph
        // still shows up in reports
        out.push_back(std::move(base));
    }
    return out;
}

}  // namespace planecount
