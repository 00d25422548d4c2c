#pragma once

#include <vector>

#include "crossring/planar_map.hpp"

namespace crossring {

// Partition of the complement of the cross cycle R(j) in a planarized
// drawing. On-curve elements (segments of R(j)'s edges, vertices v(*, j),
// crossing nodes involving an R(j) edge) get component -1; every face and
// every off-curve segment and node gets the id of its complement component.
// Ids run in first-appearance order scanning faces, then segments, then
// nodes.
struct RegionPartition {
  int j = 0;
  int num_components = 0;
  std::vector<int> of_face;
  std::vector<int> of_segment;
  std::vector<int> of_node;

  std::vector<int> face_counts() const;  // faces per component
};

RegionPartition complement_components(const PlanarMap& pm, int j);

// Independent region count: trace the faces of the sub-map induced by the
// darts of R(j) alone.
int region_count_oracle(const PlanarMap& pm, int j);

// The component of R(j)'s complement shared by every other cross cycle.
// Scans for the first cross cycle disjoint from R(j) (PreconditionError when
// none exists) and checks the rest reach its component (FalsificationError
// otherwise).
int omega_component(const PlanarMap& pm, const RegionPartition& part);

// Component holding vertex v; v must lie off the curve.
int locate_vertex(const PlanarMap& pm, const RegionPartition& part,
                  VertexId v);

// Component of the end of edge e at its endpoint v, read off the first or
// last segment of e. The segment must lie off the curve.
int germ_component(const PlanarMap& pm, const RegionPartition& part, EdgeId e,
                   VertexId v);

// Whether R(part.j) separates R(k) from R(l): no complement component
// touches both.
bool separates(const PlanarMap& pm, const RegionPartition& part, int k, int l);

}  // namespace crossring
