#include "planecount/graph.hpp"

#include <algorithm>
#include <string>

namespace planecount {

Graph::Graph(int n) {
    if (n < 0)
        throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        throw std::invalid_argument("Graph: duplicate edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v)
                edges.emplace_back(u, v);
    return edges;
}

int Graph::min_degree() const {
    if (vertex_count() == 0)
        return 0;
    int d = degree(0);
    for (int v = 1; v < vertex_count(); ++v)
        d = std::min(d, degree(v));
    return d;
}

bool Graph::is_connected() const {
    const int n = vertex_count();
    if (n <= 1)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

Graph Graph::without_vertex(int v) const {
    check_vertex(v);
    Graph out(vertex_count() - 1);
    for (int u = 0; u < vertex_count(); ++u) {
        if (u == v)
            continue;
        for (int w : adj_[u]) {
            if (w == v || w < u)
                continue;
            int a = u < v ? u : u - 1;
            int b = w < v ? w : w - 1;
            out.add_edge(a, b);
        }
    }
    return out;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph out(static_cast<int>(verts.size()));
    std::vector<int> index(static_cast<std::size_t>(vertex_count()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        check_vertex(verts[i]);
        if (index[verts[i]] != -1)
            throw std::invalid_argument("Graph::induced: repeated vertex");
        index[verts[i]] = static_cast<int>(i);
    }
    for (int u : verts)
        for (int w : adj_[u])
            if (index[w] != -1 && index[u] < index[w])
                out.add_edge(index[u], index[w]);
    return out;
}

std::vector<std::uint64_t> Graph::adjacency_rows() const {
    const int n = vertex_count();
    if (n > 64)
        throw std::invalid_argument("Graph::adjacency_rows: more than 64 vertices");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v : adj_[u])
            rows[u] |= std::uint64_t{1} << v;
    return rows;
}

}  // namespace planecount
