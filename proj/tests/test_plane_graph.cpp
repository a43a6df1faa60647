#include <algorithm>
#include <set>

#include "doctest.h"

#include "fixtures.hpp"
#include "planecount/plane_graph.hpp"

using namespace planecount;

namespace {

std::multiset<int> face_lengths(const FaceSet& fs) {
    return {fs.lengths.begin(), fs.lengths.end()};
}

}  // namespace

TEST_CASE("dart involution and incidence") {
    RotationSystem rs = fixtures::triangle_rotation();
    CHECK(rs.dart_count() == 6);
    for (DartId d = 0; d < rs.dart_count(); ++d) {
        CHECK(rs.reverse(rs.reverse(d)) == d);
        CHECK(rs.reverse(d) != d);
        CHECK(rs.head(d) == rs.tail(rs.reverse(d)));
    }
}

TEST_CASE("rotation system validation") {
    CHECK_THROWS_AS(RotationSystem::from_neighbor_lists({{0}}), InvalidRotationError);
    CHECK_THROWS_AS(RotationSystem::from_neighbor_lists({{1, 1}, {0, 0}}), InvalidRotationError);
    // dangling dart: 0 lists 1 but 1 does not list 0
    CHECK_THROWS_AS(RotationSystem::from_neighbor_lists({{1}, {}}), InvalidRotationError);
    CHECK_THROWS_AS(RotationSystem::from_neighbor_lists({{2}, {}}), InvalidRotationError);
}

TEST_CASE("face tracing: single edge is one face of length 2") {
    RotationSystem rs = RotationSystem::from_neighbor_lists({{1}, {0}});
    FaceSet fs = trace_faces(rs);
    CHECK(fs.face_count() == 1);
    CHECK(fs.lengths == std::vector<int>{2});
}

TEST_CASE("face tracing: triangle has two faces of length 3") {
    FaceSet fs = trace_faces(fixtures::triangle_rotation());
    CHECK(fs.face_count() == 2);
    CHECK(face_lengths(fs) == std::multiset<int>{3, 3});
}

TEST_CASE("face tracing: prism annulus drawing has faces 3,3,4,4,4") {
    FaceSet fs = trace_faces(fixtures::prism_rotation());
    CHECK(fs.face_count() == 5);
    CHECK(face_lengths(fs) == std::multiset<int>{3, 3, 4, 4, 4});
    CHECK(fs.total_darts() == 18);
}

TEST_CASE("face tracing partitions all darts exactly once") {
    for (const RotationSystem& rs :
         {fixtures::triangle_rotation(), fixtures::k4_rotation(), fixtures::cube_rotation(),
          fixtures::prism_rotation(),
          RotationSystem::sorted_rotation(fixtures::petersen_graph())}) {
        FaceSet fs = trace_faces(rs);
        std::vector<char> seen(static_cast<std::size_t>(rs.dart_count()), 0);
        for (const auto& face : fs.faces) {
            for (DartId d : face) {
                CHECK_FALSE(seen[d]);
                seen[d] = 1;
            }
        }
        CHECK(std::count(seen.begin(), seen.end(), 1) == rs.dart_count());
        CHECK(fs.total_darts() == rs.dart_count());
    }
}

TEST_CASE("build_plane_graph accepts the convex cube drawing") {
    PlaneGraph pg = build_plane_graph(fixtures::cube_rotation());
    CHECK(pg.faces().face_count() == 6);
    CHECK(face_lengths(pg.faces()) == std::multiset<int>{4, 4, 4, 4, 4, 4});
}

TEST_CASE("build_plane_graph rejects K5 under any rotation") {
    Graph k5 = fixtures::complete_graph(5);
    RotationSystem rs = RotationSystem::sorted_rotation(k5);
    CHECK(euler_genus(rs) >= 1);
    CHECK_THROWS_AS(build_plane_graph(rs), NotGenusZeroError);
    try {
        build_plane_graph(RotationSystem::sorted_rotation(k5));
    } catch (const NotGenusZeroError& e) {
        CHECK(e.genus >= 1);
    }
}

TEST_CASE("build_plane_graph rejects disconnected input") {
    // two disjoint edges
    RotationSystem rs = RotationSystem::from_neighbor_lists({{1}, {0}, {3}, {2}});
    CHECK_THROWS_AS(build_plane_graph(rs), NotConnectedError);
    CHECK(euler_genus(rs) == 0);
}

TEST_CASE("counts on the classic solids") {
    GraphCounts cube = counts(build_plane_graph(fixtures::cube_rotation()));
    CHECK(cube.n == 8);
    CHECK(cube.e == 12);
    CHECK(cube.f == 6);
    CHECK(cube.n3 == 8);
    CHECK(cube.f3 == 0);
    CHECK(cube.e3 == 0);

    GraphCounts k4 = counts(build_plane_graph(fixtures::k4_rotation()));
    CHECK(k4.n == 4);
    CHECK(k4.e == 6);
    CHECK(k4.f == 4);
    CHECK(k4.n3 == 4);
    CHECK(k4.f3 == 4);
    CHECK(k4.e3 == 6);

    GraphCounts prism = counts(build_plane_graph(fixtures::prism_rotation()));
    CHECK(prism.n == 6);
    CHECK(prism.e == 9);
    CHECK(prism.f == 5);
    CHECK(prism.n3 == 6);
    CHECK(prism.f3 == 2);
    CHECK(prism.e3 == 6);
}

TEST_CASE("min degree and euler genus helpers") {
    CHECK(min_degree(build_plane_graph(fixtures::cube_rotation())) == 3);
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK(p3.min_degree() == 1);
    CHECK(euler_genus(RotationSystem::sorted_rotation(p3)) == 0);
}

TEST_CASE("single vertex and single edge embed with genus 0") {
    CHECK_NOTHROW(build_plane_graph(RotationSystem::from_neighbor_lists({{}})));
    PlaneGraph k2 = build_plane_graph(RotationSystem::from_neighbor_lists({{1}, {0}}));
    GraphCounts c = counts(k2);
    CHECK(c.f == 1);
    CHECK(c.e == 1);
}

TEST_CASE("is_connected on rotation systems") {
    CHECK(is_connected(fixtures::triangle_rotation()));
    CHECK(is_connected(RotationSystem::from_neighbor_lists({{}})));
    CHECK_FALSE(is_connected(RotationSystem::from_neighbor_lists({{1}, {0}, {3}, {2}})));
    CHECK_FALSE(is_connected(RotationSystem::from_neighbor_lists({{1}, {0}, {}})));
}

TEST_CASE("triangular faces are edge-disjoint when no two triangles share an edge") {
    // e3 = 3*f3 then, except for C3 itself, whose two faces share one
    // triangle boundary (possible only because n < 4)
    GraphCounts c3 = counts(build_plane_graph(fixtures::triangle_rotation()));
    CHECK(c3.f3 == 2);
    CHECK(c3.e3 == 3);

    for (const RotationSystem& rs : {fixtures::prism_rotation(), fixtures::cube_rotation()}) {
        GraphCounts c = counts(build_plane_graph(rs));
        CHECK(c.e3 == 3 * c.f3);
    }
}

TEST_CASE("euler relation n - e + f = 2 on connected plane graphs") {
    for (const RotationSystem& rs :
         {fixtures::triangle_rotation(), fixtures::k4_rotation(), fixtures::cube_rotation(),
          fixtures::prism_rotation()}) {
        GraphCounts c = counts(build_plane_graph(rs));
        CHECK(c.n - c.e + c.f == 2);
        long long degree_sum = 0;
        for (int v = 0; v < rs.vertex_count(); ++v)
            degree_sum += rs.degree(v);
        CHECK(degree_sum == 2 * c.e);
    }
}
