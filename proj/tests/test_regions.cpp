#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "crossring/errors.hpp"
#include "crossring/regions.hpp"

using namespace crossring;

TEST_CASE("reference drawing complement splits in two") {
  for (auto [m, n] : {std::pair{3, 7}, {4, 6}, {5, 9}}) {
    Drawing d = canonical_drawing(m, n);
    PlanarMap pm = planarize(d);
    for (int j = 0; j < n; ++j) {
      RegionPartition part = complement_components(pm, j);
      REQUIRE(part.num_components == 2);
      CHECK(region_count_oracle(pm, j) == 2);
      int omega = omega_component(pm, part);
      auto counts = part.face_counts();
      CHECK(counts[omega] == pm.num_faces - (m - 1));
      CHECK(counts[1 - omega] == m - 1);
    }
  }
}

TEST_CASE("vertices and germs land in the expected side") {
  Drawing d = canonical_drawing(5, 8);
  PlanarMap pm = planarize(d);
  for (int j = 0; j < 8; ++j) {
    RegionPartition part = complement_components(pm, j);
    int omega = omega_component(pm, part);
    for (int i = 0; i < 5; ++i) {
      for (int k = 0; k < 8; ++k) {
        if (k == j) {
          CHECK_THROWS_AS(locate_vertex(pm, part, VertexId{i, k}),
                          PreconditionError);
        } else {
          CHECK(locate_vertex(pm, part, VertexId{i, k}) == omega);
        }
      }
      int jp = add(cyc(j, 8), 1).v;
      int fwd = germ_component(pm, part, blue_edge(i, jp), VertexId{i, j});
      int bwd = germ_component(pm, part, blue_edge(i, j), VertexId{i, j});
      if (i == 0 || i == 4) {
        CHECK(fwd == omega);
      } else {
        CHECK(fwd != omega);
      }
      CHECK(bwd == omega);
    }
    CHECK_THROWS_AS(germ_component(pm, part, red_edge(j, 0), VertexId{0, j}),
                    PreconditionError);
  }
}

TEST_CASE("no separation in the reference drawing") {
  Drawing d = canonical_drawing(3, 7);
  PlanarMap pm = planarize(d);
  for (int j = 0; j < 7; ++j) {
    RegionPartition part = complement_components(pm, j);
    for (int k = 0; k < 7; ++k) {
      if (k == j) continue;
      for (int l = k + 1; l < 7; ++l) {
        if (l == j) continue;
        CHECK_FALSE(separates(pm, part, k, l));
      }
    }
    CHECK_THROWS_AS(separates(pm, part, j, (j + 1) % 7), PreconditionError);
    CHECK_THROWS_AS(separates(pm, part, (j + 1) % 7, (j + 1) % 7),
                    PreconditionError);
  }
}

TEST_CASE("partition covers exactly the off-curve elements") {
  Drawing d = canonical_drawing(4, 6);
  PlanarMap pm = planarize(d);
  RegionPartition part = complement_components(pm, 2);
  for (int f = 0; f < pm.num_faces; ++f) CHECK(part.of_face[f] >= 0);
  int on_segments = 0, on_nodes = 0;
  for (int s = 0; s < pm.num_segments(); ++s)
    if (part.of_segment[s] < 0) ++on_segments;
  for (int u = 0; u < pm.num_nodes(); ++u)
    if (part.of_node[u] < 0) ++on_nodes;
  // R(2): three plain rungs plus a closing edge with two crossings
  CHECK(on_segments == 6);
  // four vertices on the cycle plus those two crossing nodes
  CHECK(on_nodes == 6);
}

TEST_CASE("region oracle matches the partition on bigger drawings") {
  for (auto [m, n] : {std::pair{6, 11}, {3, 12}}) {
    Drawing d = canonical_drawing(m, n);
    PlanarMap pm = planarize(d);
    for (int j = 0; j < n; ++j) {
      RegionPartition part = complement_components(pm, j);
      CHECK(part.num_components == region_count_oracle(pm, j));
    }
  }
}
