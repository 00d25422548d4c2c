#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "crossring/product_graph.hpp"

namespace crossring {

// One crossing along an edge: the partner edge and the shared sign. The sign
// belongs to the unordered pair taken in canonical edge order (e < f): +1
// when f traverses e from e's left side to e's right side, both edges read
// tail to head. Both partner lists carry the same value.
struct CrossEntry {
  EdgeId other;
  std::int8_t chirality = 1;
  friend bool operator==(const CrossEntry&, const CrossEntry&) = default;
};

// Combinatorial drawing of the product graph on the sphere: a
// counterclockwise rotation at every vertex plus, per edge, the ordered list
// of crossings met walking from tail to head. Validity means structural
// consistency plus a spherical planarization.
struct Drawing {
  ProductGraph graph;
  std::vector<std::array<EdgeId, 4>> rotations;
  std::vector<std::vector<CrossEntry>> crossings;

  int total_crossings() const;

  bool crosses(EdgeId e, EdgeId f) const;

  // Crossing points with one edge in H and the other in K (both in H when
  // the two sets coincide). Each crossing point counts once.
  int pair_crossings(const std::vector<EdgeId>& H,
                     const std::vector<EdgeId>& K) const;

  bool red_cycles_cross(int j, int k) const;

  // Crossing points involving at least one edge of the cross cycle R(j).
  int red_cycle_crossings(int j) const;

  // Table sizes, rotations being permutations of the incident edges, no self
  // or adjacent crossings, partner lists that agree entry for entry, each
  // pair crossing at most once.
  std::vector<std::string> structural_issues() const;

  // structural_issues() plus the sphere check on the planarized map.
  std::vector<std::string> validate() const;
  void require_valid() const;

  std::string to_json() const;
  static Drawing from_json(const std::string& text);
};

// Reference drawing: the m rings nested concentrically, each cross cycle
// running along one ray and closing through the adjacent sector, crossing
// the m-2 intermediate ring arcs there. Exactly (m-2)*n crossings.
Drawing canonical_drawing(int m, int n);

// FNV-1a 64 over the serialized drawing, 16 lowercase hex digits.
std::string drawing_digest(const Drawing& d);

}  // namespace crossring
