#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "crossring/drawing.hpp"

namespace crossring {

// A crossing point, identified by its unordered edge pair in canonical order.
struct CrossingId {
  EdgeId first;
  EdgeId second;
  auto operator<=>(const CrossingId&) const = default;
};

CrossingId make_crossing_id(EdgeId e, EdgeId f);

// Counts orbits of d -> sigma[alpha[d]] and labels each dart with its orbit
// id in face_of. sigma[d] is the next dart counterclockwise around the
// origin of d; alpha[d] is the opposite dart. Works for any rotation system.
int trace_faces(const std::vector<int>& sigma, const std::vector<int>& alpha,
                std::vector<int>& face_of);

// The drawing's incidence structure as a polygonal map. Crossings become
// degree-4 nodes splitting their two edges into segments; each segment
// carries a forward dart 2s (running with the edge direction) and a backward
// dart 2s+1. face_of[d] is the face on the right of dart d. Node ids: the
// m*n graph vertices first (by vertex index), then the crossings in sorted
// order.
struct PlanarMap {
  ProductGraph graph;
  std::optional<EdgeId> skipped;

  std::vector<CrossingId> crossings;
  std::vector<std::int8_t> crossing_chirality;
  std::vector<std::vector<int>> node_path;  // per edge: tail, crossings, head
  std::vector<int> seg_offset;              // per edge, plus one sentinel
  std::vector<int> seg_edge;                // per segment: owning edge index
  std::vector<std::vector<int>> node_darts; // per node: outgoing darts, CCW
  std::vector<int> dart_origin;
  std::vector<int> sigma;
  std::vector<int> alpha_of;
  std::vector<int> face_of;
  int num_faces = 0;

  int num_nodes() const { return graph.num_vertices() + (int)crossings.size(); }
  int num_segments() const { return (int)seg_edge.size(); }
  int num_darts() const { return 2 * num_segments(); }
  int euler_characteristic() const {
    return num_nodes() - num_segments() + num_faces;
  }

  int node_of_vertex(VertexId v) const { return graph.vertex_index(v); }
  bool is_crossing_node(int node) const { return node >= graph.num_vertices(); }
  CrossingId crossing_at(int node) const;
  int node_of_crossing(EdgeId e, EdgeId f) const;  // -1 when absent

  int seg_count(int edge_idx) const {
    return seg_offset[edge_idx + 1] - seg_offset[edge_idx];
  }
  int segment(int edge_idx, int t) const { return seg_offset[edge_idx] + t; }
  std::pair<int, int> seg_nodes(int seg) const;

  int alpha(int d) const { return d ^ 1; }
  int phi(int d) const { return sigma[d ^ 1]; }

  // Dart of edge e pointing out of its endpoint v: forward dart of the first
  // segment at the tail, backward dart of the last segment at the head.
  int germ_dart(EdgeId e, VertexId v) const;

  // Distinct faces incident to a node, in first-seen order around it.
  std::vector<int> faces_at_node(int node) const;
};

// Builds the map from a drawing. skip removes one edge entirely: its
// rotation slots and its entries in the partner lists. Throws
// ValidationError when the data cannot be paired up unambiguously.
PlanarMap planarize(const Drawing& d, std::optional<EdgeId> skip = {});

}  // namespace crossring
