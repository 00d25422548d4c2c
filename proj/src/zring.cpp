#include "crossring/zring.hpp"

#include <string>

namespace crossring {

namespace {

void require_same_modulus(CycIndex a, CycIndex b) {
  if (a.k != b.k)
    throw PreconditionError("cyclic indices with different moduli: " +
                            std::to_string(a.k) + " vs " + std::to_string(b.k));
}

}  // namespace

CycIndex cyc(int v, int k) {
  if (k < 1) throw PreconditionError("cyclic modulus must be positive");
  int r = v % k;
  if (r < 0) r += k;
  return CycIndex{r, k};
}

CycIndex add(CycIndex i, int d) { return cyc(i.v + d % i.k, i.k); }

CycIndex sub(CycIndex i, int d) { return cyc(i.v - d % i.k, i.k); }

int fwd_dist(CycIndex from, CycIndex to) {
  require_same_modulus(from, to);
  int r = (to.v - from.v) % from.k;
  if (r < 0) r += from.k;
  return r;
}

bool circ_leq(CycIndex i, CycIndex j) { return fwd_dist(i, j) <= i.k / 2; }

bool circ_lt(CycIndex i, CycIndex j) { return i.v != j.v && circ_leq(i, j); }

bool operator==(CycIndex a, CycIndex b) {
  require_same_modulus(a, b);
  return a.v == b.v;
}

bool operator!=(CycIndex a, CycIndex b) { return !(a == b); }

}  // namespace crossring
