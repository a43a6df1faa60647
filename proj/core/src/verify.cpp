#include "planecount/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "planecount/bounds.hpp"
#include "planecount/graph6.hpp"
#include "planecount/plane_graph.hpp"
#include "planecount/structure.hpp"

namespace planecount {

namespace {

std::string rotation_payload(const RotationSystem& rs) {
    std::ostringstream os;
    for (int v = 0; v < rs.vertex_count(); ++v) {
        if (v)
            os << ';';
        bool first = true;
        for (int u : rs.neighbor_list(v)) {
            if (!first)
                os << ',';
            os << u;
            first = false;
        }
    }
    return os.str();
}

}  // namespace

TheoremSuiteReport verify_theorem4(int max_n, long long embedding_budget) {
    TheoremSuiteReport report;
    report.theorem = 4;
    report.max_n = max_n;

    CorpusFilter all_connected;
    all_connected.max_n = max_n;
    for (const Graph& g : enumerate_small_graphs(all_connected)) {
        ++report.graphs_enumerated;
        if (g.min_degree() < 3 || adjacent_triangles_exist(g).exists)
            continue;
        ++report.qualifying_graphs;
        const int n = g.vertex_count();
        if (n >= 3 && g.edge_count() > 3 * n - 6)
            continue;  // cannot embed in genus 0; zero instances
        enumerate_embeddings(
            g, /*genus_zero_only=*/true,
            [&](const RotationSystem& rs) {
                ++report.instances_checked;
                Theorem4Verdict v = theorem4_verdict(PlaneGraph(rs));
                if (!v.hypotheses_hold || !v.conclusion_holds) {
                    ++report.violations;
                    report.violation_payloads.push_back(write_graph6(g) + " rotation=" +
                                                        rotation_payload(rs));
                }
                return true;
            },
            embedding_budget);
    }
    return report;
}

TheoremSuiteReport verify_theorem2(int max_n) {
    TheoremSuiteReport report;
    report.theorem = 2;
    report.max_n = max_n;

    CorpusFilter filter;
    filter.max_n = max_n;
    filter.forbid_cycles = {{4, 11}};
    filter.require_planar = true;
    for (const Graph& g : enumerate_small_graphs(filter)) {
        ++report.graphs_enumerated;
        ++report.qualifying_graphs;
        ++report.instances_checked;
        PeelTrace trace = peel_order(g);
        if (!trace.complete()) {
            ++report.violations;
            report.violation_payloads.push_back(write_graph6(g) + " (peel stuck)");
            continue;
        }
        Coloring c = greedy_color_from_peel(g, trace);
        if (!verify_coloring(g, c)) {
            ++report.violations;
            report.violation_payloads.push_back(write_graph6(g) + " (improper coloring)");
        }
    }
    return report;
}

TheoremSuiteReport verify_theorem6(int max_n, long long budget) {
    TheoremSuiteReport report;
    report.theorem = 6;
    report.max_n = max_n;

    CorpusFilter filter;
    filter.max_n = max_n;
    filter.forbid_cycles = {{4, 8}};
    filter.require_planar = true;
    for (const Graph& g : enumerate_small_graphs(filter)) {
        ++report.graphs_enumerated;
        ++report.qualifying_graphs;
        ++report.instances_checked;
        ColorSearchResult res = exact_k_color(g, 3, budget);
        switch (res.status) {
            case ColorSearchStatus::Colored:
                if (!verify_coloring(g, *res.coloring)) {
                    ++report.violations;
                    report.violation_payloads.push_back(write_graph6(g) +
                                                        " (solver returned improper coloring)");
                }
                break;
            case ColorSearchStatus::Infeasible:
                ++report.violations;
                report.violation_payloads.push_back(write_graph6(g) + " (not 3-colorable)");
                break;
            case ColorSearchStatus::BudgetExceeded:
                ++report.budget_exhaustions;
                report.violation_payloads.push_back(write_graph6(g) + " (budget exceeded)");
                break;
        }
    }
    return report;
}

TheoremSuiteReport verify_theorem(int theorem, int max_n, long long budget) {
    switch (theorem) {
        case 2: return verify_theorem2(max_n);
        case 4: return verify_theorem4(max_n);
        case 6: return verify_theorem6(max_n, budget);
        default:
            throw std::invalid_argument("verify_theorem: theorem must be 2, 4, or 6");
    }
}

}  // namespace planecount
