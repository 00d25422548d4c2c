#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "crossring/zring.hpp"

namespace crossring {

enum class Color : std::uint8_t { Blue = 0, Red = 1 };

// Vertex v(i, j): ring i in [0, m), position j in [0, n).
struct VertexId {
  int i = 0;
  int j = 0;
  auto operator<=>(const VertexId&) const = default;
};

// Blue edge bl(i, j) runs along ring i:     v(i, j-1) -> v(i, j).
// Red edge r(j, i) runs across the rings:   v(i, j)   -> v(i+1, j).
// Stored as (color, a, b): blue has a = i, b = j; red has a = j, b = i.
// The derived ordering (blue before red, then a, then b) is the canonical
// edge order used for crossing-pair normalization and serialization.
struct EdgeId {
  Color color = Color::Blue;
  int a = 0;
  int b = 0;
  auto operator<=>(const EdgeId&) const = default;
};

EdgeId blue_edge(int i, int j);
EdgeId red_edge(int j, int i);

std::string to_string(VertexId v);  // "v:i:j"
std::string to_string(EdgeId e);    // "B:i:j" or "R:j:i"
VertexId parse_vertex(const std::string& s);
EdgeId parse_edge(const std::string& s);

// The 4-regular product of an m-cycle and an n-cycle. Ring i is the blue
// cycle B(i) = {bl(i, 0), ..., bl(i, n-1)}; rung column j is the red cycle
// R(j) = {r(j, 0), ..., r(j, m-1)}.
struct ProductGraph {
  int m = 3;
  int n = 3;

  ProductGraph() = default;
  ProductGraph(int m_, int n_);

  int num_vertices() const { return m * n; }
  int num_edges() const { return 2 * m * n; }

  int vertex_index(VertexId v) const;
  VertexId vertex_at(int idx) const;
  int edge_index(EdgeId e) const;
  EdgeId edge_at(int idx) const;

  VertexId tail(EdgeId e) const;
  VertexId head(EdgeId e) const;
  bool adjacent(EdgeId e, EdgeId f) const;

  std::vector<EdgeId> blue_cycle(int i) const;
  std::vector<EdgeId> red_cycle(int j) const;

  // Open path along ring i from v(i, j) forward to v(i, k):
  // [bl(i, j+1), ..., bl(i, k)]. Empty when j == k.
  std::vector<EdgeId> open_blue_path(int i, int j, int k) const;

  // Interior vertices of open_blue_path(i, j, k), endpoints excluded.
  std::vector<VertexId> open_blue_path_interior(int i, int j, int k) const;

  // Order: bl(i, j), bl(i, j+1), r(j, i-1), r(j, i).
  std::array<EdgeId, 4> incident_edges(VertexId v) const;

  void check_vertex(VertexId v) const;
  void check_edge(EdgeId e) const;
};

}  // namespace crossring
