#include "crossring/drawing.hpp"

namespace crossring {

Drawing canonical_drawing(int m, int n) {
  Drawing d;
  d.graph = ProductGraph(m, n);
  d.rotations.resize(d.graph.num_vertices());
  d.crossings.resize(d.graph.num_edges());

  for (int j = 0; j < n; ++j) {
    int jp = add(cyc(j, n), 1).v;
    for (int i = 0; i < m; ++i) {
      std::array<EdgeId, 4> rot;
      if (i == 0)
        rot = {red_edge(j, 0), red_edge(j, m - 1), blue_edge(0, jp),
               blue_edge(0, j)};
      else if (i == m - 1)
        rot = {blue_edge(m - 1, jp), red_edge(j, m - 1), red_edge(j, m - 2),
               blue_edge(m - 1, j)};
      else
        rot = {red_edge(j, i), blue_edge(i, jp), red_edge(j, i - 1),
               blue_edge(i, j)};
      d.rotations[d.graph.vertex_index({i, j})] = rot;
    }
    // the closing edge dives from the outer ring to the inner one through
    // the sector ahead of column j, crossing every intermediate ring arc
    EdgeId closing = red_edge(j, m - 1);
    auto& closing_list = d.crossings[d.graph.edge_index(closing)];
    for (int i = m - 2; i >= 1; --i) {
      EdgeId arc = blue_edge(i, jp);
      closing_list.push_back({arc, -1});
      d.crossings[d.graph.edge_index(arc)].push_back({closing, -1});
    }
  }
  return d;
}

}  // namespace crossring
