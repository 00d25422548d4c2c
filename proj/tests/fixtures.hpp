#pragma once

#include "crossring/drawing.hpp"

namespace crossring::fixtures {

// Reference drawing with the closing edge of R(0) rerouted once around the
// band between rings 2 and 3: R(0) crosses itself once and meets every other
// cross cycle twice, so it has no disjoint partner and carries m+2n-3
// crossings in total. Requires m >= 4.
Drawing world_tour(int m, int n);

// canonical(4,6) with the closing edge of R(0) redrawn across the far side
// of the sphere: R(0) becomes a self-crossing loop with one lobe passing
// between R(2) and R(3), so R(0) separates R(2) from R(3) while R(1), R(4)
// and R(5) cross R(0) and straddle both large components.
Drawing enclosing_loop();

}  // namespace crossring::fixtures
