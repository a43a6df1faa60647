#include "planecount/coloring.hpp"

#include <algorithm>
#include <bit>

namespace planecount {

int Coloring::colors_used() const {
    int used = 0;
    for (int c : assignment)
        used = std::max(used, c + 1);
    return used;
}

bool verify_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.vertex_count())
        throw PartialAssignmentError("coloring does not cover all vertices");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.assignment[v] < 0 || c.assignment[v] >= c.k)
            throw PartialAssignmentError("color out of palette at vertex " + std::to_string(v));
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && c.assignment[u] == c.assignment[v])
                return false;
    return true;
}

PeelTrace peel_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);

    PeelTrace trace;
    trace.removal_order.reserve(static_cast<std::size_t>(n));
    int remaining = n;
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (alive[v] && deg[v] <= 2) {
                pick = v;
                break;
            }
        }
        if (pick == -1)
            break;
        alive[pick] = 0;
        --remaining;
        trace.removal_order.push_back(pick);
        for (int w : g.neighbors(pick))
            if (alive[w])
                --deg[w];
    }
    if (remaining > 0) {
        StuckCore core;
        for (int v = 0; v < n; ++v)
            if (alive[v])
                core.vertices.push_back(v);
        core.subgraph = g.induced(core.vertices);
        trace.stuck_at = std::move(core);
    }
    return trace;
}

Coloring greedy_color_from_peel(const Graph& g, const PeelTrace& trace) {
    if (!trace.complete())
        throw TraceIncompleteError("peel trace left a 3-core; greedy extension needs an "
                                   "emptied graph");
    Coloring c;
    c.k = 3;
    c.assignment.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (auto it = trace.removal_order.rbegin(); it != trace.removal_order.rend(); ++it) {
        int v = *it;
        bool used[3] = {false, false, false};
        for (int w : g.neighbors(v))
            if (c.assignment[w] >= 0)
                used[c.assignment[w]] = true;
        int color = 0;
        while (color < 3 && used[color])
            ++color;
        // at most two neighbors are colored when v returns, so color < 3
        c.assignment[v] = color;
    }
    return c;
}

namespace {

struct ColorSearch {
    const Graph& g;
    int k;
    long long budget;
    long long nodes = 0;
    std::vector<std::uint32_t> domain;
    std::vector<int> color;
    bool exceeded = false;

    ColorSearch(const Graph& graph, int palette, long long node_budget)
        : g(graph), k(palette), budget(node_budget) {
        std::uint32_t full = (std::uint32_t{1} << k) - 1;  // k <= 30 enforced by caller
        domain.assign(static_cast<std::size_t>(g.vertex_count()), full);
        color.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    }

    int select_vertex() const {
        int best = -1;
        int best_count = k + 1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (color[v] >= 0)
                continue;
            int count = std::popcount(domain[v]);
            if (count < best_count) {
                best = v;
                best_count = count;
            }
        }
        return best;
    }

    bool solve() {
        int v = select_vertex();
        if (v == -1)
            return true;
        std::uint32_t options = domain[v];
        while (options != 0) {
            int c = std::countr_zero(options);
            options &= options - 1;
            if (++nodes > budget) {
                exceeded = true;
                return false;
            }
            color[v] = c;
            std::vector<int> trimmed;
            bool wipeout = false;
            for (int w : g.neighbors(v)) {
                if (color[w] >= 0)
                    continue;
                std::uint32_t bit = std::uint32_t{1} << c;
                if (domain[w] & bit) {
                    domain[w] &= ~bit;
                    trimmed.push_back(w);
                    if (domain[w] == 0)
                        wipeout = true;
                }
            }
            if (!wipeout && solve())
                return true;
            for (int w : trimmed)
                domain[w] |= std::uint32_t{1} << c;
            color[v] = -1;
            if (exceeded)
                return false;
        }
        return false;
    }
};

}  // namespace

ColorSearchResult exact_k_color(const Graph& g, int k, long long budget) {
    if (k < 1)
        throw std::invalid_argument("exact_k_color: k must be >= 1");
    if (k > 30)
        throw std::invalid_argument("exact_k_color: palette wider than 30 unsupported");
    ColorSearch search(g, k, budget);
    ColorSearchResult result;
    bool solved = search.solve();
    result.nodes_explored = search.nodes;
    if (solved) {
        result.status = ColorSearchStatus::Colored;
        result.coloring = Coloring{search.color, k};
    } else if (search.exceeded) {
        result.status = ColorSearchStatus::BudgetExceeded;
    } else {
        result.status = ColorSearchStatus::Infeasible;
    }
    return result;
}

CriticalityCertificate is_4_critical(const Graph& g, long long budget) {
    CriticalityCertificate cert;
    if (g.vertex_count() < 4) {
        cert.failure_reason = "fewer than 4 vertices";
        return cert;
    }
    ColorSearchResult whole = exact_k_color(g, 3, budget);
    if (whole.status == ColorSearchStatus::BudgetExceeded)
        throw SearchBudgetExceededError("is_4_critical: budget exhausted on full graph");
    if (whole.status == ColorSearchStatus::Colored) {
        cert.failure_reason = "graph is 3-colorable";
        return cert;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        Graph rest = g.without_vertex(v);
        ColorSearchResult sub = exact_k_color(rest, 3, budget);
        if (sub.status == ColorSearchStatus::BudgetExceeded)
            throw SearchBudgetExceededError("is_4_critical: budget exhausted deleting vertex " +
                                            std::to_string(v));
        if (sub.status == ColorSearchStatus::Infeasible) {
            cert.failure_reason = "deleting vertex " + std::to_string(v) +
                                  " leaves a non-3-colorable graph";
            cert.deletion_colorings.clear();
            return cert;
        }
        // re-expand to original ids, -1 at the deleted vertex
        DeletionColoring dc;
        dc.removed_vertex = v;
        dc.rest.k = 3;
        dc.rest.assignment.assign(static_cast<std::size_t>(g.vertex_count()), -1);
        for (int u = 0; u < rest.vertex_count(); ++u)
            dc.rest.assignment[u < v ? u : u + 1] = sub.coloring->assignment[u];
        cert.deletion_colorings.push_back(std::move(dc));
    }
    cert.is_critical = true;
    return cert;
}

}  // namespace planecount
