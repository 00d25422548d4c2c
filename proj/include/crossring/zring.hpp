#pragma once

#include "crossring/errors.hpp"

namespace crossring {

// Index into the cyclic group Z_k, with v always normalized into [0, k).
// Binary operations demand equal moduli and throw PreconditionError otherwise.
struct CycIndex {
  int v = 0;
  int k = 1;
};

// Builds an index with v taken mod k (negative inputs wrap). k must be >= 1.
CycIndex cyc(int v, int k);

CycIndex add(CycIndex i, int d);
CycIndex sub(CycIndex i, int d);

// Steps from `from` to `to` walking in the increasing direction, in [0, k).
int fwd_dist(CycIndex from, CycIndex to);

// Circular order: i precedes j iff the forward distance from i to j is at
// most floor(k/2). Total, reflexive; both directions hold exactly when the
// distance is 0 or k/2 (even k).
bool circ_leq(CycIndex i, CycIndex j);
bool circ_lt(CycIndex i, CycIndex j);

bool operator==(CycIndex a, CycIndex b);
bool operator!=(CycIndex a, CycIndex b);

}  // namespace crossring
