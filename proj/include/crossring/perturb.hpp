#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "crossring/drawing.hpp"

namespace crossring {

// Redraws edge e through an explicit corridor. Each wall names a segment of
// the reduced map (the drawing with e removed): the partner edge and the
// segment's index along it. The corridor must start at the corner face
// holding e's old tail germ, cross the walls in the listed order, and end at
// the corner face of e's head germ; PreconditionError otherwise. Rotations
// are unchanged; e's crossing list becomes exactly the wall list.
Drawing reroute_with_walls(const Drawing& d, EdgeId e,
                           const std::vector<std::pair<EdgeId, int>>& walls);

// Randomly redraws one edge: picks an edge uniformly, removes it, and walks
// a random route between its two corner faces through the reduced face
// structure, never revisiting a face (the start face may double as the final
// face) and never crossing the same or an adjacent edge. The segments
// crossed become the edge's new crossing list. Retries with fresh random
// choices up to 64 times; BudgetError when all attempts dead-end.
// Deterministic in the seed.
Drawing perturb(const Drawing& d, std::uint64_t seed);

}  // namespace crossring
