#include "planecount/enumerate.hpp"

#include <algorithm>
#include <map>

#include "planecount/graph6.hpp"
#include "planecount/structure.hpp"

namespace planecount {

namespace {

using uint128 = unsigned __int128;

/// Minimum-bit-string search. Bits are the adjacency upper triangle in
/// graph6 column order, packed into a 128-bit integer (n <= 12 gives at
/// most 66 bits), so prefix comparison is integer arithmetic.
struct CanonicalSearch {
    int n;
    std::vector<std::uint64_t> rows;
    int total_bits;
    uint128 best;
    std::vector<int> best_perm;
    std::vector<int> perm;
    std::vector<char> used;

    explicit CanonicalSearch(const Graph& g)
        : n(g.vertex_count()), rows(g.adjacency_rows()),
          total_bits(n * (n - 1) / 2) {
        // seed: worse than any real string of total_bits bits
        best = uint128{1} << total_bits;
        best_perm.assign(n, 0);
        perm.assign(n, -1);
        used.assign(n, 0);
    }

    void run() {
        dfs(0, 0, 0);
    }

    void dfs(int j, uint128 prefix, int prefix_bits) {
        if (j == n) {
            if (prefix < best) {
                best = prefix;
                best_perm = perm;
            }
            return;
        }
        // candidate columns, ascending, so the leftmost branch is greedy-min
        std::vector<std::pair<std::uint64_t, int>> cands;
        cands.reserve(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u) {
            if (used[u])
                continue;
            std::uint64_t col = 0;
            for (int i = 0; i < j; ++i)
                col = (col << 1) | ((rows[perm[i]] >> u) & 1);
            cands.emplace_back(col, u);
        }
        std::sort(cands.begin(), cands.end());
        for (const auto& [col, u] : cands) {
            uint128 next = (prefix << j) | col;
            int next_bits = prefix_bits + j;
            // compare against the best string's prefix of the same length
            if (best >> (total_bits - next_bits) < next)
                break;  // larger already; so is every extension and every later candidate
            perm[j] = u;
            used[u] = 1;
            dfs(j + 1, next, next_bits);
            used[u] = 0;
        }
    }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 12)
        throw CapExceededError("canonical_labeling: n > 12 not supported");
    if (n == 0)
        return {};
    CanonicalSearch search(g);
    search.run();
    return search.best_perm;
}

Graph relabel(const Graph& g, const std::vector<int>& labeling) {
    const int n = g.vertex_count();
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < n; ++j)
        position[labeling[j]] = j;
    Graph out(n);
    for (const auto& [u, v] : g.edge_list())
        out.add_edge(position[u], position[v]);
    return out;
}

std::string canonical_graph6(const Graph& g) {
    return write_graph6(relabel(g, canonical_labeling(g)));
}

std::vector<Graph> enumerate_small_graphs(const CorpusFilter& filter) {
    if (filter.max_n < 1)
        throw CapExceededError("enumerate_small_graphs: max_n must be >= 1");
    if (filter.max_n > kGenerationCap)
        throw CapExceededError("enumerate_small_graphs: max_n exceeds generation cap " +
                               std::to_string(kGenerationCap));
    int cycle_lo = 0, cycle_hi = -1;
    if (filter.forbid_cycles) {
        cycle_lo = filter.forbid_cycles->first;
        cycle_hi = filter.forbid_cycles->second;
        if (cycle_lo < 3 || cycle_lo > cycle_hi)
            throw std::invalid_argument("enumerate_small_graphs: bad cycle window");
    }

    auto passes_final = [&](const Graph& g) {
        if (filter.min_degree && g.min_degree() < *filter.min_degree)
            return false;
        if (filter.require_planar && !has_genus_zero_embedding(g))
            return false;
        return true;
    };

    std::vector<Graph> out;
    // level k holds one canonically labeled representative per class,
    // keyed and ordered by canonical graph6 string
    std::map<std::string, Graph> level;
    Graph single(1);
    level.emplace(canonical_graph6(single), single);
    if (passes_final(single))
        out.push_back(single);

    for (int k = 1; k < filter.max_n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [key, parent] : level) {
            const unsigned subsets = 1u << k;
            unsigned start = filter.require_connected ? 1 : 0;
            for (unsigned s = start; s < subsets; ++s) {
                Graph h(k + 1);
                for (const auto& [u, v] : parent.edge_list())
                    h.add_edge(u, v);
                for (int v = 0; v < k; ++v)
                    if (s & (1u << v))
                        h.add_edge(v, k);
                // every cycle not present in the parent passes through
                // the new vertex, so one pivot check keeps the level clean
                if (filter.forbid_cycles &&
                    has_cycle_through_vertex(h, k, cycle_lo, cycle_hi))
                    continue;
                Graph canon_graph = relabel(h, canonical_labeling(h));
                std::string canon = write_graph6(canon_graph);
                if (next.find(canon) == next.end())
                    next.emplace(std::move(canon), std::move(canon_graph));
            }
        }
        level = std::move(next);
        for (const auto& [key, g] : level)
            if (passes_final(g))
                out.push_back(g);
    }
    return out;
}

namespace {

/// Certifies non-planarity when a K5 or K3,3 subgraph is present (a
/// subdivision-free witness; absence proves nothing). Used as a fast
/// reject before exhausting a rotation space.
bool contains_k5_or_k33_subgraph(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 32)
        return false;
    std::vector<std::uint64_t> rows = g.adjacency_rows();

    // K5: five vertices of degree >= 4, pairwise adjacent
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 4)
            cand.push_back(v);
    const int c = static_cast<int>(cand.size());
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b) {
            if (!(rows[cand[a]] >> cand[b] & 1))
                continue;
            for (int d = b + 1; d < c; ++d) {
                if (!(rows[cand[a]] >> cand[d] & 1) || !(rows[cand[b]] >> cand[d] & 1))
                    continue;
                for (int e = d + 1; e < c; ++e) {
                    if (!(rows[cand[a]] >> cand[e] & 1) || !(rows[cand[b]] >> cand[e] & 1) ||
                        !(rows[cand[d]] >> cand[e] & 1))
                        continue;
                    for (int f = e + 1; f < c; ++f)
                        if ((rows[cand[a]] >> cand[f] & 1) && (rows[cand[b]] >> cand[f] & 1) &&
                            (rows[cand[d]] >> cand[f] & 1) && (rows[cand[e]] >> cand[f] & 1))
                            return true;
                }
            }
        }

    // K3,3: disjoint triples {a,b,c}, {x,y,z} with all nine edges
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int cc = b + 1; cc < n; ++cc) {
                std::uint64_t common = rows[a] & rows[b] & rows[cc];
                int count = 0;
                for (int v = 0; v < n; ++v)
                    if (common >> v & 1)
                        ++count;
                if (count >= 3)
                    return true;
            }
    return false;
}

/// Shared engine for rotation-system enumeration: per-vertex neighbor
/// orders with the least neighbor pinned first, advanced like an odometer
/// through the remaining (deg-1)! arrangements each.
struct EmbeddingSpace {
    const Graph& g;
    int n;
    int e;
    std::vector<std::vector<int>> order;       // current neighbor order per vertex
    std::vector<std::vector<int>> dart_ids;    // dart id of (v -> order[v][i])
    std::vector<int> eid_flat;                 // edge id lookup, n*n
    std::vector<int> succ;                     // succ[d]: next dart ccw at tail(d)
    std::vector<char> visited;
    int components;

    explicit EmbeddingSpace(const Graph& graph)
        : g(graph), n(graph.vertex_count()), e(graph.edge_count()) {
        eid_flat.assign(static_cast<std::size_t>(n) * std::max(n, 1), -1);
        auto edges = g.edge_list();
        for (int i = 0; i < e; ++i) {
            auto [u, v] = edges[i];
            eid_flat[static_cast<std::size_t>(u) * n + v] = i;
            eid_flat[static_cast<std::size_t>(v) * n + u] = i;
        }
        order.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            order[v] = g.neighbors(v);  // sorted: least neighbor is the anchor
        succ.assign(static_cast<std::size_t>(2 * e), -1);
        visited.assign(static_cast<std::size_t>(2 * e), 0);
        components = count_components();
    }

    int count_components() const {
        if (n == 0)
            return 0;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack;
        int c = 0;
        for (int s = 0; s < n; ++s) {
            if (seen[s])
                continue;
            ++c;
            seen[s] = 1;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : g.neighbors(v))
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
        }
        return c;
    }

    int dart_of(int v, int u) const {
        int id = eid_flat[static_cast<std::size_t>(v) * n + u];
        return 2 * id + (v < u ? 0 : 1);
    }

    long long space_size_capped(long long cap) const {
        long long product = 1;
        for (int v = 0; v < n; ++v) {
            int d = g.degree(v);
            for (int i = 2; i < d; ++i) {
                product *= i;
                if (product > cap)
                    return cap + 1;
            }
        }
        return product;
    }

    int current_genus() {
        for (int v = 0; v < n; ++v) {
            const auto& ord = order[v];
            const int d = static_cast<int>(ord.size());
            for (int i = 0; i < d; ++i)
                succ[dart_of(v, ord[i])] = dart_of(v, ord[(i + 1) % d]);
        }
        std::fill(visited.begin(), visited.end(), 0);
        int faces = 0;
        for (int start = 0; start < 2 * e; ++start) {
            if (visited[start])
                continue;
            ++faces;
            int d = start;
            do {
                visited[d] = 1;
                d = succ[d ^ 1];
            } while (d != start);
        }
        int isolated = 0;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 0)
                ++isolated;
        return (2 * components - n + e - (faces + isolated)) / 2;
    }

    /// Advances to the next arrangement; false when the odometer wraps.
    bool advance() {
        for (int v = 0; v < n; ++v) {
            auto& ord = order[v];
            if (ord.size() < 3)
                continue;
            if (std::next_permutation(ord.begin() + 1, ord.end()))
                return true;
            // wrapped back to ascending; carry to the next vertex
        }
        return false;
    }

    RotationSystem materialize() const {
        return RotationSystem::from_neighbor_lists(order);
    }
};

}  // namespace

void enumerate_embeddings(const Graph& g, bool genus_zero_only,
                          const std::function<bool(const RotationSystem&)>& visit,
                          long long budget) {
    const int n = g.vertex_count();
    const int e = g.edge_count();
    if (genus_zero_only && n >= 3 && g.is_connected() && e > 3 * n - 6)
        return;  // Euler bound: no genus-0 embedding exists
    if (genus_zero_only && contains_k5_or_k33_subgraph(g))
        return;

    EmbeddingSpace space(g);
    if (space.space_size_capped(budget) > budget)
        throw BudgetExceededError("enumerate_embeddings: rotation space exceeds budget");

    do {
        if (!genus_zero_only || space.current_genus() == 0) {
            if (!visit(space.materialize()))
                return;
        }
    } while (space.advance());
}

std::vector<RotationSystem> enumerate_embeddings(const Graph& g, bool genus_zero_only,
                                                 long long budget) {
    std::vector<RotationSystem> out;
    enumerate_embeddings(
        g, genus_zero_only,
        [&](const RotationSystem& rs) {
            out.push_back(rs);
            return true;
        },
        budget);
    return out;
}

bool has_genus_zero_embedding(const Graph& g, long long budget) {
    bool found = false;
    enumerate_embeddings(
        g, true,
        [&](const RotationSystem&) {
            found = true;
            return false;
        },
        budget);
    return found;
}

}  // namespace planecount
