#include "planecount/structure.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace planecount {

namespace {

int common_neighbor_count(const Graph& g, int u, int v) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++count;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

/// DFS over simple paths from `root` using only vertices >= root (so each
/// cycle is explored from its minimum vertex). Reports every closing
/// length in [lo, hi] to `record`; returns true if `record` asks to stop.
bool cycle_dfs(const Graph& g, int root, int lo, int hi,
               std::vector<int>& path, std::vector<char>& on_path,
               const std::function<bool(const std::vector<int>&)>& record);

bool cycle_dfs_step(const Graph& g, int root, int lo, int hi,
                    std::vector<int>& path, std::vector<char>& on_path,
                    const std::function<bool(const std::vector<int>&)>& record) {
    int v = path.back();
    for (int w : g.neighbors(v)) {
        if (w == root) {
            int len = static_cast<int>(path.size());
            if (len >= 3 && len >= lo && len <= hi) {
                if (record(path))
                    return true;
            }
            continue;
        }
        if (w < root || on_path[w])
            continue;
        if (static_cast<int>(path.size()) >= hi)
            continue;  // extending cannot close within the window
        path.push_back(w);
        on_path[w] = 1;
        bool stop = cycle_dfs_step(g, root, lo, hi, path, on_path, record);
        on_path[w] = 0;
        path.pop_back();
        if (stop)
            return true;
    }
    return false;
}

bool cycle_dfs(const Graph& g, int root, int lo, int hi,
               std::vector<int>& path, std::vector<char>& on_path,
               const std::function<bool(const std::vector<int>&)>& record) {
    path.clear();
    path.push_back(root);
    on_path[root] = 1;
    bool stop = cycle_dfs_step(g, root, lo, hi, path, on_path, record);
    on_path[root] = 0;
    return stop;
}

}  // namespace

AdjacentTrianglesWitness adjacent_triangles_exist(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v < u)
                continue;
            if (common_neighbor_count(g, u, v) >= 2)
                return {true, u, v};
        }
    }
    return {};
}

long long count_triangles(const Graph& g) {
    long long total = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v < u)
                continue;
            // count common neighbors above v so each triangle counts once
            for (int w : g.neighbors(u)) {
                if (w > v && g.has_edge(v, w))
                    ++total;
            }
        }
    }
    return total;
}

CycleWitness has_cycle_of_length(const Graph& g, int k) {
    if (k < 3 || k > g.vertex_count())
        return {};
    CycleWitness out;
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int root = 0; root < g.vertex_count() && !out.exists; ++root) {
        cycle_dfs(g, root, k, k, path, on_path, [&](const std::vector<int>& cycle) {
            if (static_cast<int>(cycle.size()) == k) {
                out.exists = true;
                out.cycle = cycle;
                return true;
            }
            return false;
        });
    }
    return out;
}

StructureReport forbidden_cycle_scan(const Graph& g, int lo, int hi) {
    if (lo > hi)
        throw std::invalid_argument("forbidden_cycle_scan: lo > hi");
    lo = std::max(lo, 3);
    hi = std::min(hi, g.vertex_count());

    StructureReport report;
    report.min_degree = g.min_degree();
    report.connected = g.is_connected();
    report.has_adjacent_triangles = adjacent_triangles_exist(g).exists;
    report.triangle_count = count_triangles(g);
    if (lo > hi)
        return report;

    std::vector<std::optional<std::vector<int>>> witness(static_cast<std::size_t>(hi + 1));
    int remaining = hi - lo + 1;
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int root = 0; root < g.vertex_count() && remaining > 0; ++root) {
        cycle_dfs(g, root, lo, hi, path, on_path, [&](const std::vector<int>& cycle) {
            int len = static_cast<int>(cycle.size());
            if (!witness[len]) {
                witness[len] = cycle;
                --remaining;
            }
            return remaining == 0;
        });
    }
    for (int len = lo; len <= hi; ++len)
        if (witness[len])
            report.forbidden_cycles_found.emplace_back(len, std::move(*witness[len]));
    return report;
}

bool has_cycle_through_vertex(const Graph& g, int pivot, int lo, int hi) {
    lo = std::max(lo, 3);
    hi = std::min(hi, g.vertex_count());
    if (lo > hi)
        return false;
    // Same DFS, but rooted at the pivot without the id restriction: paths
    // may pass through any vertex, and only cycles closing at the pivot
    // are reported.
    std::vector<int> path{pivot};
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    on_path[pivot] = 1;
    bool found = false;
    auto dfs = [&](auto&& self, int v) -> bool {
        for (int w : g.neighbors(v)) {
            if (w == pivot) {
                int len = static_cast<int>(path.size());
                if (len >= 3 && len >= lo) {
                    found = true;
                    return true;
                }
                continue;
            }
            if (on_path[w] || static_cast<int>(path.size()) >= hi)
                continue;
            path.push_back(w);
            on_path[w] = 1;
            bool stop = self(self, w);
            on_path[w] = 0;
            path.pop_back();
            if (stop)
                return true;
        }
        return false;
    };
    dfs(dfs, pivot);
    return found;
}

}  // namespace planecount
