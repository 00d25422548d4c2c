#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "crossring/errors.hpp"
#include "crossring/planar_map.hpp"

using namespace crossring;

TEST_CASE("face tracer on a triangle") {
  std::vector<int> sigma = {5, 2, 1, 4, 3, 0};
  std::vector<int> alpha = {1, 0, 3, 2, 5, 4};
  std::vector<int> face_of;
  CHECK(trace_faces(sigma, alpha, face_of) == 2);
  CHECK(face_of[0] == face_of[2]);
  CHECK(face_of[0] == face_of[4]);
  CHECK(face_of[1] == face_of[3]);
  CHECK(face_of[1] == face_of[5]);
  CHECK(face_of[0] != face_of[1]);
}

TEST_CASE("planarization counts for reference drawings") {
  PlanarMap pm = planarize(canonical_drawing(3, 7));
  CHECK(pm.num_nodes() == 28);
  CHECK(pm.num_segments() == 56);
  CHECK(pm.num_faces == 30);
  CHECK(pm.euler_characteristic() == 2);
  CHECK(pm.crossings.size() == 7);
  for (auto c : pm.crossing_chirality) CHECK(c == -1);

  PlanarMap pm2 = planarize(canonical_drawing(4, 8));
  CHECK(pm2.num_nodes() == 48);
  CHECK(pm2.num_segments() == 96);
  CHECK(pm2.num_faces == 50);
  CHECK(pm2.euler_characteristic() == 2);
}

TEST_CASE("crossing node lookup") {
  PlanarMap pm = planarize(canonical_drawing(3, 7));
  int node = pm.node_of_crossing(blue_edge(1, 1), red_edge(0, 2));
  REQUIRE(node >= 21);
  CHECK(pm.is_crossing_node(node));
  CHECK(pm.crossing_at(node) ==
        CrossingId{blue_edge(1, 1), red_edge(0, 2)});
  CHECK(pm.node_of_crossing(red_edge(0, 2), blue_edge(1, 1)) == node);
  CHECK(pm.node_of_crossing(blue_edge(1, 1), red_edge(1, 2)) == -1);
  CHECK_FALSE(pm.is_crossing_node(5));
  CHECK_THROWS_AS(pm.crossing_at(5), PreconditionError);
}

TEST_CASE("removing an uncrossed edge merges two faces") {
  Drawing d = canonical_drawing(3, 7);
  PlanarMap pm = planarize(d, blue_edge(0, 1));
  CHECK(pm.num_nodes() == 28);
  CHECK(pm.num_segments() == 55);
  CHECK(pm.num_faces == 29);
  CHECK(pm.euler_characteristic() == 2);
  CHECK(pm.seg_count(d.graph.edge_index(blue_edge(0, 1))) == 0);
  CHECK(pm.node_darts[d.graph.vertex_index({0, 0})].size() == 3);
  CHECK(pm.node_darts[d.graph.vertex_index({0, 1})].size() == 3);
  CHECK_THROWS_AS(pm.germ_dart(blue_edge(0, 1), VertexId{0, 0}),
                  PreconditionError);
}

TEST_CASE("removing a crossed edge drops its crossing nodes") {
  Drawing d = canonical_drawing(3, 7);
  PlanarMap pm = planarize(d, red_edge(0, 2));
  CHECK(pm.num_nodes() == 27);
  CHECK(pm.num_segments() == 53);
  CHECK(pm.num_faces == 28);
  CHECK(pm.euler_characteristic() == 2);
  CHECK(pm.seg_count(d.graph.edge_index(blue_edge(1, 1))) == 1);
  CHECK(pm.node_of_crossing(blue_edge(1, 1), red_edge(0, 2)) == -1);
}

TEST_CASE("map structure invariants") {
  Drawing d = canonical_drawing(5, 9);
  PlanarMap pm = planarize(d);
  std::vector<int> seen(pm.num_darts(), 0);
  for (int dart = 0; dart < pm.num_darts(); ++dart) {
    REQUIRE(pm.sigma[dart] >= 0);
    REQUIRE(pm.sigma[dart] < pm.num_darts());
    ++seen[pm.sigma[dart]];
    CHECK(pm.face_of[pm.phi(dart)] == pm.face_of[dart]);
    CHECK(pm.dart_origin[pm.sigma[dart]] == pm.dart_origin[dart]);
    CHECK(pm.face_of[dart] >= 0);
    CHECK(pm.face_of[dart] < pm.num_faces);
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  for (int node = 0; node < pm.num_nodes(); ++node)
    CHECK(pm.node_darts[node].size() == 4);
  for (int seg = 0; seg < pm.num_segments(); ++seg) {
    auto [a, b] = pm.seg_nodes(seg);
    CHECK(pm.dart_origin[2 * seg] == a);
    CHECK(pm.dart_origin[2 * seg + 1] == b);
  }
}

TEST_CASE("germ darts point out of their endpoint") {
  Drawing d = canonical_drawing(3, 7);
  PlanarMap pm = planarize(d);
  int at_tail = pm.germ_dart(blue_edge(1, 1), VertexId{1, 0});
  CHECK(pm.dart_origin[at_tail] == d.graph.vertex_index({1, 0}));
  CHECK(at_tail % 2 == 0);
  int at_head = pm.germ_dart(blue_edge(1, 1), VertexId{1, 1});
  CHECK(pm.dart_origin[at_head] == d.graph.vertex_index({1, 1}));
  CHECK(at_head % 2 == 1);
  CHECK_THROWS_AS(pm.germ_dart(blue_edge(1, 1), VertexId{1, 3}),
                  PreconditionError);
}

TEST_CASE("planarize rejects inconsistent data") {
  Drawing d = canonical_drawing(3, 7);
  d.crossings[d.graph.edge_index(blue_edge(0, 1))].push_back(
      {red_edge(3, 1), 1});
  CHECK_THROWS_AS(planarize(d), ValidationError);

  Drawing d2 = canonical_drawing(3, 7);
  d2.rotations[0][0] = blue_edge(2, 3);
  CHECK_THROWS_AS(planarize(d2), ValidationError);

  Drawing d3 = canonical_drawing(3, 7);
  d3.crossings[d3.graph.edge_index(blue_edge(1, 1))][0].chirality = 1;
  CHECK_THROWS_AS(planarize(d3), ValidationError);
}
