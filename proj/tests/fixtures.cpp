#include "fixtures.hpp"

#include "crossring/errors.hpp"
#include "crossring/perturb.hpp"

namespace crossring::fixtures {

Drawing world_tour(int m, int n) {
  if (m < 4)
    throw PreconditionError(
        "world tour needs m >= 4: for a triangle cross cycle every door out "
        "of the closing edge's corridor touches the closing edge itself");
  Drawing d = canonical_drawing(m, n);
  // Dive from the tail corner down to the band between rings 2 and 3, sweep
  // once around that band, drop past the last closing edge, cross the home
  // cycle's own radial at ray 0, and dive back to the head corner.
  std::vector<std::pair<EdgeId, int>> walls;
  for (int b = m - 2; b >= 3; --b) walls.push_back({blue_edge(b, 1), 0});
  for (int k = 1; k < n; ++k) {
    walls.push_back({red_edge(k, 2), 0});
    walls.push_back({red_edge(k, m - 1), m - 4});
  }
  walls.push_back({blue_edge(2, 0), 1});
  walls.push_back({red_edge(0, 1), 0});
  walls.push_back({blue_edge(1, 1), 0});
  return reroute_with_walls(d, red_edge(0, m - 1), walls);
}

Drawing enclosing_loop() {
  Drawing d = canonical_drawing(4, 6);
  std::vector<std::pair<EdgeId, int>> walls = {
      {red_edge(1, 2), 0},  {red_edge(1, 3), 0},  {blue_edge(3, 2), 0},
      {blue_edge(3, 3), 0}, {blue_edge(2, 3), 1}, {blue_edge(1, 3), 1},
      {blue_edge(0, 3), 0}, {blue_edge(0, 4), 0}, {red_edge(4, 0), 0},
      {red_edge(4, 3), 2},  {red_edge(5, 0), 0},  {red_edge(5, 3), 2},
      {blue_edge(1, 0), 1}, {red_edge(0, 1), 0},  {blue_edge(1, 1), 0}};
  return reroute_with_walls(d, red_edge(0, 3), walls);
}

}  // namespace crossring::fixtures
