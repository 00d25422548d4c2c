#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "crossring/errors.hpp"
#include "crossring/perturb.hpp"
#include "crossring/regions.hpp"
#include "crossring/robustness.hpp"
#include "fixtures.hpp"

using namespace crossring;

namespace {

// Walls reproducing e's current corridor: each partner keeps the crossing at
// the reduced position where it already sits.
std::vector<std::pair<EdgeId, int>> identity_walls(const Drawing& d, EdgeId e) {
  std::vector<std::pair<EdgeId, int>> walls;
  for (const CrossEntry& entry : d.crossings[d.graph.edge_index(e)]) {
    int pos = 0;
    for (const CrossEntry& back :
         d.crossings[d.graph.edge_index(entry.other)]) {
      if (back.other == e) break;
      ++pos;
    }
    walls.push_back({entry.other, pos});
  }
  return walls;
}

}  // namespace

TEST_CASE("rerouting along the existing corridor is the identity") {
  Drawing d = canonical_drawing(3, 7);
  for (EdgeId e : {blue_edge(1, 1), red_edge(0, 2), blue_edge(0, 1),
                   red_edge(4, 0), blue_edge(2, 5)}) {
    Drawing re = reroute_with_walls(d, e, identity_walls(d, e));
    CHECK(re.to_json() == d.to_json());
  }
  Drawing big = canonical_drawing(6, 9);
  for (EdgeId e : {red_edge(2, 5), blue_edge(3, 4)}) {
    Drawing re = reroute_with_walls(big, e, identity_walls(big, e));
    CHECK(re.to_json() == big.to_json());
  }
}

TEST_CASE("bad wall lists are rejected") {
  Drawing d = canonical_drawing(3, 7);
  EdgeId e = blue_edge(1, 1);
  CHECK_THROWS_AS(reroute_with_walls(d, e, {{blue_edge(1, 2), 0}}),
                  PreconditionError);
  CHECK_THROWS_AS(reroute_with_walls(d, e, {{e, 0}}), PreconditionError);
  CHECK_THROWS_AS(
      reroute_with_walls(d, e, {{red_edge(3, 0), 0}, {red_edge(3, 0), 0}}),
      PreconditionError);
  CHECK_THROWS_AS(reroute_with_walls(d, e, {{red_edge(0, 2), 5}}),
                  PreconditionError);
  // a wall across the sphere cannot border the corridor of bl(1,1)
  CHECK_THROWS_AS(reroute_with_walls(d, e, {{red_edge(3, 1), 0}}),
                  PreconditionError);
  // dropping the only wall strands the route in the wrong face
  CHECK_THROWS_AS(reroute_with_walls(d, e, {}), PreconditionError);
}

TEST_CASE("world tour crosses everything") {
  CHECK_THROWS_AS(fixtures::world_tour(3, 7), PreconditionError);
  for (auto [m, n] : {std::pair{4, 6}, {5, 8}, {6, 9}}) {
    Drawing d = fixtures::world_tour(m, n);
    CHECK(d.validate().empty());
    CHECK((int)d.crossings[d.graph.edge_index(red_edge(0, m - 1))].size() ==
          m + 2 * n - 3);
    CHECK(d.pair_crossings(d.graph.red_cycle(0), d.graph.red_cycle(0)) == 1);
    for (int k = 1; k < n; ++k)
      CHECK(d.pair_crossings(d.graph.red_cycle(0), d.graph.red_cycle(k)) == 2);
    CHECK(d.red_cycle_crossings(0) == m + 2 * n - 3);

    PlanarMap pm = planarize(d);
    RegionPartition part = complement_components(pm, 0);
    CHECK(part.num_components == 3);
    CHECK(region_count_oracle(pm, 0) == 3);
    CHECK_THROWS_AS(omega_component(pm, part), PreconditionError);

    RobustReport r = analyze(d, pm);
    CHECK_FALSE(r.b[0].has_value());
    CHECK_FALSE(r.a[0].has_value());
    CHECK_FALSE(r.relaxed);
    CHECK_FALSE(r.robust);
    CHECK(r.b[1] == 2);
    CHECK(r.b[2] == 1);
  }
}

TEST_CASE("world tour heavy cycle diagnosis past the threshold") {
  Drawing d = fixtures::world_tour(4, 26);
  RobustReport r = analyze(d);
  ThresholdResult t = threshold_diagnose(d, r);
  CHECK(t.kind == ThresholdDiagnosis::HeavyRedCycle);
  CHECK(t.heavy_j == 0);
  CHECK(r.red_crossings[0] == 53);
}

TEST_CASE("enclosing loop separates cross cycles") {
  Drawing d = fixtures::enclosing_loop();
  CHECK(d.validate().empty());
  CHECK(d.pair_crossings(d.graph.red_cycle(0), d.graph.red_cycle(0)) == 1);
  CHECK(d.pair_crossings(d.graph.red_cycle(0), d.graph.red_cycle(1)) == 2);
  CHECK(d.pair_crossings(d.graph.red_cycle(0), d.graph.red_cycle(2)) == 0);
  CHECK(d.pair_crossings(d.graph.red_cycle(0), d.graph.red_cycle(3)) == 0);
  CHECK(d.pair_crossings(d.graph.red_cycle(0), d.graph.red_cycle(4)) == 2);
  CHECK(d.pair_crossings(d.graph.red_cycle(0), d.graph.red_cycle(5)) == 2);

  PlanarMap pm = planarize(d);
  RegionPartition part = complement_components(pm, 0);
  CHECK(part.num_components == 3);
  CHECK(region_count_oracle(pm, 0) == 3);
  CHECK(separates(pm, part, 2, 3));
  CHECK_FALSE(separates(pm, part, 2, 4));
  CHECK_FALSE(separates(pm, part, 2, 5));
  CHECK_FALSE(separates(pm, part, 3, 4));
  CHECK_FALSE(separates(pm, part, 3, 5));
  CHECK_FALSE(separates(pm, part, 4, 5));

  RobustReport r = analyze(d, pm);
  CHECK_FALSE(r.red_nonseparating);
  CHECK_FALSE(r.robust);
}

TEST_CASE("random perturbations stay valid and are seed deterministic") {
  Drawing d = canonical_drawing(3, 7);
  std::set<std::string> digests;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Drawing p = perturb(d, seed);
    CHECK(p.validate().empty());
    digests.insert(drawing_digest(p));
    Drawing again = perturb(d, seed);
    CHECK(again.to_json() == p.to_json());
  }
  CHECK(digests.size() > 5);
}

TEST_CASE("chained perturbations stay valid") {
  Drawing d = canonical_drawing(4, 8);
  for (std::uint64_t seed = 100; seed < 108; ++seed) {
    d = perturb(d, seed);
    CHECK(d.validate().empty());
  }
  CHECK(d.total_crossings() >= 0);
}
