#include "planecount/rotation_system.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace planecount {

RotationSystem RotationSystem::from_neighbor_lists(const std::vector<std::vector<int>>& nbrs) {
    RotationSystem rs;
    rs.n_ = static_cast<int>(nbrs.size());

    // Validate simplicity, then assign edge ids in first-seen order.
    for (int v = 0; v < rs.n_; ++v) {
        std::vector<int> sorted = nbrs[v];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidRotationError("rotation: repeated neighbor at vertex " +
                                       std::to_string(v));
        for (int u : nbrs[v]) {
            if (u < 0 || u >= rs.n_)
                throw InvalidRotationError("rotation: neighbor " + std::to_string(u) +
                                           " out of range at vertex " + std::to_string(v));
            if (u == v)
                throw InvalidRotationError("rotation: loop at vertex " + std::to_string(v));
        }
    }
    std::map<std::pair<int, int>, int> edge_ids;
    for (int v = 0; v < rs.n_; ++v) {
        for (int u : nbrs[v]) {
            auto key = std::minmax(u, v);
            std::pair<int, int> e{key.first, key.second};
            if (edge_ids.find(e) == edge_ids.end()) {
                edge_ids.emplace(e, static_cast<int>(rs.edges_.size()));
                rs.edges_.push_back(e);
            }
        }
    }

    // Each undirected edge must be listed by both endpoints.
    std::vector<int> seen(rs.edges_.size(), 0);
    rs.rot_.assign(static_cast<std::size_t>(rs.n_), {});
    rs.pos_.assign(2 * rs.edges_.size(), -1);
    for (int v = 0; v < rs.n_; ++v) {
        rs.rot_[v].reserve(nbrs[v].size());
        for (int u : nbrs[v]) {
            auto key = std::minmax(u, v);
            int e = edge_ids.at({key.first, key.second});
            ++seen[e];
            DartId d = 2 * e + (rs.edges_[e].first == v ? 0 : 1);
            rs.pos_[d] = static_cast<int>(rs.rot_[v].size());
            rs.rot_[v].push_back(d);
        }
    }
    for (std::size_t e = 0; e < rs.edges_.size(); ++e)
        if (seen[e] != 2)
            throw InvalidRotationError("rotation: dangling dart on edge {" +
                                       std::to_string(rs.edges_[e].first) + "," +
                                       std::to_string(rs.edges_[e].second) + "}");
    return rs;
}

RotationSystem RotationSystem::sorted_rotation(const Graph& g) {
    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        nbrs[v] = g.neighbors(v);
    return from_neighbor_lists(nbrs);
}

std::vector<int> RotationSystem::neighbor_list(int v) const {
    std::vector<int> out;
    out.reserve(rot_[v].size());
    for (DartId d : rot_[v])
        out.push_back(head(d));
    return out;
}

std::vector<std::vector<int>> RotationSystem::neighbor_lists() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
        out[v] = neighbor_list(v);
    return out;
}

Graph RotationSystem::underlying_graph() const {
    Graph g(n_);
    for (const auto& [u, v] : edges_)
        g.add_edge(u, v);
    return g;
}

bool is_connected(const RotationSystem& rot) {
    const int n = rot.vertex_count();
    if (n <= 1)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (DartId d : rot.rotation(v)) {
            int w = rot.head(d);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

}  // namespace planecount
