#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <utility>
#include <vector>

#include "crossring/errors.hpp"
#include "crossring/solver.hpp"

using namespace crossring;

TEST_CASE("small graph builders make valid graphs") {
  SmallGraph g = product_cycles(3, 3);
  CHECK(g.num_vertices == 9);
  CHECK(g.edges.size() == 18);
  g.require_valid();

  cylinder_grid(3, 5).require_valid();
  complete_graph(5).require_valid();
  complete_bipartite(3, 3).require_valid();

  SmallGraph dup{2, {{0, 1}, {1, 0}}};
  CHECK_THROWS_AS(dup.require_valid(), PreconditionError);
  SmallGraph loop{2, {{1, 1}}};
  CHECK_THROWS_AS(loop.require_valid(), PreconditionError);
  SmallGraph split{4, {{0, 1}, {2, 3}}};
  CHECK_THROWS_AS(split.require_valid(), PreconditionError);
  CHECK_THROWS_AS(product_cycles(2, 5), PreconditionError);
}

TEST_CASE("planar graphs solve to zero crossings") {
  for (SmallGraph g : {cylinder_grid(2, 4), cylinder_grid(3, 5),
                       complete_graph(4)}) {
    SolveResult r = exact_crossing_search(g, 0);
    REQUIRE(r.crossing_number.has_value());
    CHECK(*r.crossing_number == 0);
    CHECK(r.witness.pairs.empty());
    CHECK(verify_witness(g, r.witness));
  }
}

TEST_CASE("classic crossing numbers come out exact") {
  SolveResult k5 = exact_crossing_search(complete_graph(5), 3);
  CHECK(*k5.crossing_number == 1);
  CHECK(verify_witness(complete_graph(5), k5.witness));

  SolveResult k33 = exact_crossing_search(complete_bipartite(3, 3), 3);
  CHECK(*k33.crossing_number == 1);

  SolveResult k6 = exact_crossing_search(complete_graph(6), 4);
  CHECK(*k6.crossing_number == 3);
  CHECK(k6.witness.pairs.size() == 3);
  CHECK(verify_witness(complete_graph(6), k6.witness));
}

TEST_CASE("the product of two triangles needs three crossings") {
  SmallGraph g = product_cycles(3, 3);
  std::vector<std::vector<int>> autos = product_cycle_automorphisms(3, 3);
  CHECK(autos.size() == 72);

  SolveResult pruned = exact_crossing_search(g, 3, autos);
  REQUIRE(pruned.crossing_number.has_value());
  CHECK(*pruned.crossing_number == 3);
  CHECK(verify_witness(g, pruned.witness));

  SolveResult flat = exact_crossing_search(g, 3);
  CHECK(*flat.crossing_number == 3);
  CHECK(pruned.nodes < flat.nodes);

  SolveResult short_leash = exact_crossing_search(g, 2, autos);
  CHECK_FALSE(short_leash.crossing_number.has_value());
  CHECK(short_leash.nodes > 0);
}

TEST_CASE("deleting an edge never raises the answer") {
  SmallGraph base = product_cycles(3, 3);
  for (size_t drop : {size_t{0}, size_t{7}, size_t{17}}) {
    SmallGraph g = base;
    g.edges.erase(g.edges.begin() + drop);
    g.require_valid();
    std::optional<int> cr = exact_crossing_number(g, 3);
    REQUIRE(cr.has_value());
    CHECK(*cr <= 3);
  }
}

TEST_CASE("the search respects its node budget") {
  CHECK_THROWS_AS(exact_crossing_search(product_cycles(3, 3), 3, {}, 10),
                  BudgetError);
}

TEST_CASE("witness revalidation rejects corruption") {
  SmallGraph g = complete_graph(6);
  SolveResult r = exact_crossing_search(g, 4);
  REQUIRE(verify_witness(g, r.witness));

  CrossingWitness wrong_k = r.witness;
  wrong_k.k += 1;
  CHECK_FALSE(verify_witness(g, wrong_k));

  CrossingWitness unsorted = r.witness;
  std::swap(unsorted.pairs[0], unsorted.pairs[1]);
  CHECK_FALSE(verify_witness(g, unsorted));

  CrossingWitness adjacent = r.witness;
  adjacent.pairs[0] = {0, 1};  // both edges leave vertex 0
  CHECK_FALSE(verify_witness(g, adjacent));

  // Twisting the rotation at a crossing vertex takes the map off the sphere.
  CrossingWitness twisted = r.witness;
  std::swap(twisted.rotations[g.num_vertices][1],
            twisted.rotations[g.num_vertices][2]);
  CHECK_FALSE(verify_witness(g, twisted));

  CrossingWitness doubled = r.witness;
  doubled.rotations[g.num_vertices][0] = doubled.rotations[g.num_vertices][1];
  CHECK_FALSE(verify_witness(g, doubled));
}

TEST_CASE("automorphism plumbing rejects non-automorphisms") {
  SmallGraph g = product_cycles(3, 3);
  std::vector<int> bogus(9);
  for (int i = 0; i < 9; ++i) bogus[i] = i;
  std::swap(bogus[0], bogus[4]);  // not an automorphism of the product
  CHECK_THROWS_AS(exact_crossing_search(g, 1, {bogus}), PreconditionError);
}

TEST_CASE("bound landscape picks the strongest regime") {
  BoundResult b = hks_lower_bound(3, 24);
  CHECK(b.regime == "improved_hks");
  CHECK(b.value == Rational(24));
  CHECK_FALSE(b.integer_floor_applies);
  CHECK(b.ceiling() == 24);

  CHECK(hks_lower_bound(3, 23).regime == "half_bound");
  CHECK(hks_lower_bound(3, 23).value == Rational(23, 2));
  CHECK(hks_lower_bound(3, 23).ceiling() == 12);
  CHECK(hks_lower_bound(3, 23).integer_floor_applies);

  CHECK(hks_lower_bound(3, 28).regime == "improved_hks");
  CHECK(hks_lower_bound(3, 29).regime == "exact_hks");
  CHECK(hks_lower_bound(3, 29).value == Rational(29));

  BoundResult sq = hks_lower_bound(8, 8);
  CHECK(sq.regime == "five_sevenths");
  CHECK(sq.value == Rational(320, 7));
  CHECK(sq.ceiling() == 46);
  CHECK(sq.integer_floor_applies);

  CHECK(hks_lower_bound(8, 9).regime == "half_bound");
  CHECK(hks_lower_bound(8, 9).value == Rational(27));

  BoundResult wide = hks_lower_bound(8, 20);
  CHECK(wide.regime == "half_bound");
  CHECK(wide.value == Rational(60));

  CHECK(hks_lower_bound(10, 11).regime == "five_sevenths");
  CHECK(hks_lower_bound(10, 11).value == Rational(550, 7));
  CHECK(hks_lower_bound(10, 11).ceiling() == 79);

  CHECK(hks_lower_bound(5, 7).value == Rational(21, 2));

  CHECK_THROWS_AS(hks_lower_bound(2, 10), PreconditionError);
  CHECK_THROWS_AS(hks_lower_bound(5, 4), PreconditionError);
}

TEST_CASE("exact answers stay above the closed-form bound") {
  std::optional<int> cr =
      exact_crossing_number(product_cycles(3, 3), 3,
                            product_cycle_automorphisms(3, 3));
  REQUIRE(cr.has_value());
  CHECK(*cr >= hks_lower_bound(3, 3).ceiling());
}

TEST_CASE("the next product value is reachable when asked for") {
  if (!std::getenv("CROSSRING_SLOW_TESTS")) return;
  SmallGraph g = product_cycles(3, 4);
  SolveResult r =
      exact_crossing_search(g, 4, product_cycle_automorphisms(3, 4),
                            20000000ull);
  REQUIRE(r.crossing_number.has_value());
  CHECK(*r.crossing_number == 4);
  CHECK(verify_witness(g, r.witness));
}
