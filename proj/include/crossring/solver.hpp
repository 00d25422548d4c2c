#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossring/rational.hpp"

namespace crossring {

// Simple connected graph, vertices 0..num_vertices-1, for the exact search.
struct SmallGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  void require_valid() const;  // in range, simple, connected
};

// Product of an m-cycle and an n-cycle, m, n >= 3.
SmallGraph product_cycles(int m, int n);
// rings concentric len-cycles joined ring to ring in a path; planar.
SmallGraph cylinder_grid(int rings, int len);
SmallGraph complete_graph(int n);
SmallGraph complete_bipartite(int a, int b);

// Automorphisms of product_cycles(m, n) as vertex permutations: rotations
// and reflections in both coordinates, plus the swap when m == n.
std::vector<std::vector<int>> product_cycle_automorphisms(int m, int n);

// Witness that k crossings suffice: the crossing pairs as edge index pairs
// (ascending), the order of the crossings along every edge (indices into
// pairs), and a rotation system of the planarized graph.
struct CrossingWitness {
  int k = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> order;      // per edge
  std::vector<std::vector<int>> rotations;  // per planarized vertex: segment ids
};

// Planarized graph: original vertices first, then one vertex per pair;
// segments numbered chain by chain in edge order.
struct Planarization {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> segments;
};

Planarization planarize(const SmallGraph& g,
                        const std::vector<std::pair<int, int>>& pairs,
                        const std::vector<std::vector<int>>& order);

// Independent revalidation: the pairs must be distinct and non-adjacent, the
// orders consistent, and the rotation system must close up into faces with
// V - E + F = 2 on the sphere.
bool verify_witness(const SmallGraph& g, const CrossingWitness& w);

struct SolveResult {
  std::optional<int> crossing_number;
  CrossingWitness witness;  // meaningful when crossing_number is set
  std::uint64_t nodes = 0;  // planarity tests run
};

// Least k <= k_max such that k crossings on unordered non-adjacent edge
// pairs, with some order of the crossings along each edge, planarize g.
// Searches k increasing, subsets lexicographically with the first pair
// restricted to automorphism orbit minima. Every hit is revalidated through
// verify_witness before it is returned. BudgetError past max_nodes.
SolveResult exact_crossing_search(
    const SmallGraph& g, int k_max,
    const std::vector<std::vector<int>>& automorphisms = {},
    std::uint64_t max_nodes = 50000000);

std::optional<int> exact_crossing_number(
    const SmallGraph& g, int k_max,
    const std::vector<std::vector<int>>& automorphisms = {},
    std::uint64_t max_nodes = 50000000);

struct BoundResult {
  Rational value;
  bool integer_floor_applies = false;  // value fractional, so the effective
                                       // integer bound is the ceiling
  std::string regime;  // exact_hks | improved_hks | five_sevenths | half_bound
  std::int64_t ceiling() const { return value.ceil(); }
};

// Closed-form lower bound landscape for the crossing number of the product
// of an m-cycle and an n-cycle, n >= m >= 3 (PreconditionError otherwise).
// Picks the strongest known regime: the full guarantee (m-2)n past the
// closed-form threshold, (5/7)mn on the near-square band for m >= 8, and
// (m-2)n/2 everywhere else.
BoundResult hks_lower_bound(int m, int n);

}  // namespace crossring
