#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "planecount/enumerate.hpp"
#include "planecount/graph6.hpp"
#include "planecount/plane_graph.hpp"
#include "planecount/structure.hpp"

using namespace planecount;

namespace {

std::map<int, int> classes_by_order(const std::vector<Graph>& graphs) {
    std::map<int, int> count;
    for (const Graph& g : graphs)
        ++count[g.vertex_count()];
    return count;
}

}  // namespace

TEST_CASE("canonical form is labeling-invariant") {
    Graph p3a(3);
    p3a.add_edge(0, 1);
    p3a.add_edge(1, 2);
    Graph p3b(3);
    p3b.add_edge(0, 1);
    p3b.add_edge(0, 2);
    Graph p3c(3);
    p3c.add_edge(0, 2);
    p3c.add_edge(1, 2);
    CHECK(canonical_graph6(p3a) == canonical_graph6(p3b));
    CHECK(canonical_graph6(p3b) == canonical_graph6(p3c));
    // minimum bit-string: 011000 -> 'W'
    CHECK(canonical_graph6(p3a) == "BW");
    CHECK(canonical_graph6(fixtures::complete_graph(3)) == "Bw");
}

TEST_CASE("canonical form separates non-isomorphic graphs of equal size") {
    // the two trees on 4 vertices: path and star
    CHECK(canonical_graph6(fixtures::path_graph(4)) !=
          canonical_graph6(fixtures::star_graph(3)));
    // C6 vs prism-minus-perfect-matching... use C6 vs two triangles
    Graph two_triangles(6);
    for (auto [u, v] : fixtures::cycle_graph(3).edge_list()) {
        two_triangles.add_edge(u, v);
        two_triangles.add_edge(u + 3, v + 3);
    }
    CHECK(canonical_graph6(fixtures::cycle_graph(6)) != canonical_graph6(two_triangles));
}

TEST_CASE("canonical form agrees with permutation-oracle isomorphism") {
    std::vector<Graph> pool = {fixtures::path_graph(5),   fixtures::cycle_graph(5),
                               fixtures::star_graph(4),   fixtures::wheel_graph(4),
                               fixtures::complete_graph(5), fixtures::prism_graph(),
                               fixtures::cycle_graph(6),  fixtures::moser_spindle()};
    for (const Graph& a : pool) {
        for (const Graph& b : pool) {
            bool iso = oracles::brute_force_isomorphic(a, b);
            bool same = canonical_graph6(a) == canonical_graph6(b);
            CHECK(iso == same);
        }
    }
}

TEST_CASE("enumeration matches the published connected-graph counts") {
    // 1, 1, 2, 6, 21, 112, 853 connected graphs on 1..7 vertices
    CorpusFilter f;
    f.max_n = 7;
    auto counts = classes_by_order(enumerate_small_graphs(f));
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 1);
    CHECK(counts[3] == 2);
    CHECK(counts[4] == 6);
    CHECK(counts[5] == 21);
    CHECK(counts[6] == 112);
    CHECK(counts[7] == 853);
}

TEST_CASE("enumeration matches the published all-graph counts") {
    // 1, 2, 4, 11, 34, 156 graphs (connected or not) on 1..6 vertices
    CorpusFilter f;
    f.max_n = 6;
    f.require_connected = false;
    auto counts = classes_by_order(enumerate_small_graphs(f));
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 2);
    CHECK(counts[3] == 4);
    CHECK(counts[4] == 11);
    CHECK(counts[5] == 34);
    CHECK(counts[6] == 156);
}

TEST_CASE("enumeration against a fully independent labeled-graph oracle") {
    // all 2^10 labeled graphs on 5 vertices, deduplicated by
    // permutation-oracle isomorphism, no canonical forms involved
    std::vector<Graph> reps;
    for (unsigned mask = 0; mask < 1024; ++mask) {
        Graph g(5);
        int bit = 0;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v, ++bit)
                if (mask & (1u << bit))
                    g.add_edge(u, v);
        if (!g.is_connected())
            continue;
        bool fresh = true;
        for (const Graph& r : reps)
            if (oracles::brute_force_isomorphic(r, g)) {
                fresh = false;
                break;
            }
        if (fresh)
            reps.push_back(g);
    }
    CorpusFilter f;
    f.max_n = 5;
    auto counts = classes_by_order(enumerate_small_graphs(f));
    CHECK(counts[5] == static_cast<int>(reps.size()));  // both must say 21
    CHECK(reps.size() == 21);
}

TEST_CASE("tree counts via the cycle filter") {
    // forbidding every cycle length leaves exactly the trees:
    // 1, 1, 1, 2, 3, 6, 11 on 1..7 vertices
    CorpusFilter f;
    f.max_n = 7;
    f.forbid_cycles = {{3, 7}};
    auto counts = classes_by_order(enumerate_small_graphs(f));
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 1);
    CHECK(counts[3] == 1);
    CHECK(counts[4] == 2);
    CHECK(counts[5] == 3);
    CHECK(counts[6] == 6);
    CHECK(counts[7] == 11);
    for (const Graph& g : enumerate_small_graphs(f))
        CHECK(g.edge_count() == g.vertex_count() - 1);
}

TEST_CASE("cycle filter output never contains a forbidden cycle") {
    CorpusFilter f;
    f.max_n = 8;
    f.forbid_cycles = {{4, 11}};
    auto graphs = enumerate_small_graphs(f);
    CHECK(graphs.size() > 10);
    for (const Graph& g : graphs) {
        auto lengths = oracles::brute_force_cycle_lengths(g);
        for (int len : lengths)
            CHECK((len < 4 || len > 11));
    }
}

TEST_CASE("min-degree-3 classes up to n = 5 are exactly K4, K5, K5-e, W4") {
    CorpusFilter f;
    f.max_n = 5;
    f.min_degree = 3;
    auto graphs = enumerate_small_graphs(f);
    REQUIRE(graphs.size() == 4);

    Graph k5_minus_e = fixtures::complete_graph(5);
    // rebuild without one edge
    Graph k5e(5);
    for (auto [u, v] : k5_minus_e.edge_list())
        if (!(u == 0 && v == 1))
            k5e.add_edge(u, v);

    std::set<std::string> expected = {
        canonical_graph6(fixtures::complete_graph(4)),
        canonical_graph6(fixtures::complete_graph(5)),
        canonical_graph6(k5e),
        canonical_graph6(fixtures::wheel_graph(4)),
    };
    std::set<std::string> got;
    for (const Graph& g : graphs)
        got.insert(canonical_graph6(g));
    CHECK(got == expected);
}

TEST_CASE("generation cap is enforced") {
    CorpusFilter f;
    f.max_n = 11;
    CHECK_THROWS_AS(enumerate_small_graphs(f), CapExceededError);
    f.max_n = 0;
    CHECK_THROWS_AS(enumerate_small_graphs(f), CapExceededError);
}

TEST_CASE("no two emitted graphs are isomorphic (spot check)") {
    CorpusFilter f;
    f.max_n = 5;
    auto graphs = enumerate_small_graphs(f);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            CHECK_FALSE(oracles::brute_force_isomorphic(graphs[i], graphs[j]));
}

TEST_CASE("embedding enumeration on degree-2 graphs is a single class") {
    auto embeddings = enumerate_embeddings(fixtures::cycle_graph(3), false);
    CHECK(embeddings.size() == 1);
    CHECK(euler_genus(embeddings[0]) == 0);
}

TEST_CASE("K4 has 16 rotation systems, 2 of genus zero, all-triangle faces") {
    Graph k4 = fixtures::complete_graph(4);
    auto all = enumerate_embeddings(k4, false);
    CHECK(all.size() == 16);
    auto planar = enumerate_embeddings(k4, true);
    // unique plane embedding up to reflection, both chiralities counted
    CHECK(planar.size() == 2);
    for (const RotationSystem& rs : planar) {
        PlaneGraph pg(rs);
        CHECK(pg.faces().face_count() == 4);
        for (int len : pg.faces().lengths)
            CHECK(len == 3);
    }
}

TEST_CASE("cube has 2 genus-zero rotation systems out of 2^8") {
    Graph q3 = fixtures::cube_graph();
    auto planar = enumerate_embeddings(q3, true);
    CHECK(planar.size() == 2);
    for (const RotationSystem& rs : planar)
        CHECK(trace_faces(rs).face_count() == 6);
}

TEST_CASE("K5 yields an empty genus-zero stream") {
    CHECK(enumerate_embeddings(fixtures::complete_graph(5), true).empty());
    CHECK_FALSE(has_genus_zero_embedding(fixtures::complete_graph(5)));
}

TEST_CASE("petersen graph: not planar, orientable genus 1") {
    Graph pete = fixtures::petersen_graph();
    CHECK_FALSE(has_genus_zero_embedding(pete));
    int min_genus = 1000;
    enumerate_embeddings(pete, false, [&](const RotationSystem& rs) {
        min_genus = std::min(min_genus, euler_genus(rs));
        return true;
    });
    CHECK(min_genus == 1);
}

TEST_CASE("every genus-zero embedding builds a plane graph with 2e face-length sum") {
    CorpusFilter f;
    f.max_n = 5;
    for (const Graph& g : enumerate_small_graphs(f)) {
        enumerate_embeddings(g, true, [&](const RotationSystem& rs) {
            PlaneGraph pg(rs);
            CHECK(pg.faces().total_darts() == 2 * g.edge_count());
            return true;
        });
    }
}

TEST_CASE("embedding budget is enforced") {
    // K8 minus nothing: product of (deg-1)! is (6!)^8, way past any budget
    CHECK_THROWS_AS(enumerate_embeddings(fixtures::complete_graph(8), false,
                                         [](const RotationSystem&) { return true; }, 1000),
                    BudgetExceededError);
}

TEST_CASE("planarity filter in generation") {
    CorpusFilter f;
    f.max_n = 5;
    f.require_planar = true;
    auto planar_counts = classes_by_order(enumerate_small_graphs(f));
    // K5 is the single non-planar connected graph with at most 5 vertices
    CHECK(planar_counts[5] == 20);
    CHECK(planar_counts[4] == 6);
}
