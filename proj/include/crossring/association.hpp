#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crossring/drawing.hpp"
#include "crossring/planar_map.hpp"
#include "crossring/regions.hpp"
#include "crossring/robustness.hpp"

namespace crossring {

// Crossing point named by its unordered edge pair. Valid drawings cross each
// pair at most once, so the pair pins the point. Canonical order e < f.
struct CrossingPair {
  EdgeId e;
  EdgeId f;
  auto operator<=>(const CrossingPair&) const = default;
};

CrossingPair make_crossing(EdgeId a, EdgeId b);
std::string to_string(const CrossingPair& c);  // "B:1:1 x R:0:2"

// Five-way split of the rings relative to one cross cycle R(j), read off the
// two germs of ring i at v(i, j) against the shared complement component of
// R(j), then refined by crossings near v(i, j) along the ring.
enum class VClass : std::uint8_t { Cplus, Cminus, Tplus, Tminus, Tzero };

std::string to_string(VClass c);

struct ClassPartition {
  int j = 0;
  std::vector<VClass> class_of;  // ring i -> class, size m

  std::vector<int> members(VClass c) const;
  int count(VClass c) const;
};

// Back reach of each ring vertex: bbar[i] is the least b >= 1 that puts
// v(i, j) inside the shared component of R(j-b)'s complement. S lists the
// attained values (all within the back gap b(j) on robust drawings), and T
// buckets the Tzero rings by attained value.
struct BetaData {
  int j = 0;
  std::vector<int> bbar;              // size m, values in [1, b(j)]
  std::vector<int> S;                 // ascending
  std::map<int, std::vector<int>> T;  // beta -> rings, ascending
};

enum class CrossTag : std::uint8_t {
  FirstOut,    // first crossing with the home cycle walking ring i from v(i, j)
  LastIn,      // last crossing with the home cycle walking ring i from v(i, j)
  RedRed,      // crossing between the back cycle R(j-beta) and R(j)
  BackLast,    // last crossing with the back cycle walking from v(i, j+a)
  FrontFirst,  // first crossing with the front cycle walking from v(i, j-beta)
  PathPair,    // crossing between tracked paths of two distinct rings
};

std::string to_string(CrossTag t);

struct TaggedCrossing {
  CrossingPair cross;
  CrossTag tag = CrossTag::FirstOut;
  int ring = -1;   // ring behind the rule; -1 for RedRed
  int ring2 = -1;  // second ring for PathPair
  friend bool operator==(const TaggedCrossing&, const TaggedCrossing&) = default;
};

// Crossings claimed for cycle j: Y from the classified rings, X(beta) from
// the back-cycle machinery, claimed = their union. On robust drawings the
// union is disjoint, so |claimed| = |Y| + sum |X(beta)|.
struct AssociationSet {
  int j = 0;
  std::vector<TaggedCrossing> Y;
  std::map<int, std::vector<TaggedCrossing>> X;
  std::vector<CrossingPair> claimed;  // sorted, deduplicated
};

struct Association {
  int m = 0;
  int n = 0;
  RobustReport report;
  std::vector<ClassPartition> classes;  // indexed by j
  std::vector<BetaData> beta;
  std::vector<AssociationSet> sets;
};

// First/last crossing between ring i and cross cycle k met walking ring i
// once around starting at v(i, s) in the increasing direction, taking the
// crossings on each edge in tail-to-head order. Empty when B(i) and R(k)
// never cross.
std::optional<CrossingPair> first_ring_crossing(const Drawing& d, int i, int k,
                                                int s);
std::optional<CrossingPair> last_ring_crossing(const Drawing& d, int i, int k,
                                               int s);

// Shared per-drawing tables: one planarization plus, for every cross cycle,
// its complement partition and the component every other cross cycle meets.
struct RedComplementTables {
  PlanarMap pm;
  std::vector<RegionPartition> parts;  // indexed by j
  std::vector<int> omega;              // indexed by j

  static RedComplementTables of(const Drawing& d);
};

// Per-drawing association engine. Construction planarizes once and demands a
// robust drawing (PreconditionError otherwise). Operations throw
// FalsificationError when a crossing whose existence the analysis guarantees
// is missing, when the back-reach search misbehaves, or when one crossing
// would be claimed twice for the same cycle.
class Associator {
 public:
  explicit Associator(const Drawing& d);

  const Drawing& drawing() const { return d_; }
  const RobustReport& report() const { return rep_; }
  const RedComplementTables& tables() const { return tab_; }

  ClassPartition classify(int j) const;
  BetaData beta_data(int j) const;
  std::vector<TaggedCrossing> y_set(int j) const;
  // beta must be attained (member of beta_data(j).S).
  std::vector<TaggedCrossing> x_set(int beta, int j) const;
  AssociationSet associated(int j) const;

  // Violations of the guaranteed path crossings for the classified rings of
  // cycle j, one message per offense; empty means all guarantees hold.
  std::vector<std::string> guarantee_check(int j) const;
  // Violations of the cyclic-order constraint tying together T buckets that
  // share a ring across two distinct cross cycles.
  std::vector<std::string> interleaving_check() const;

 private:
  bool path_crosses(int cycle, int i, int from, int to) const;
  int wrap(int v) const;

  Drawing d_;
  RobustReport rep_;
  RedComplementTables tab_;
};

Association associate_all(const Drawing& d);

// One-shot wrappers; each call rebuilds the shared tables.
ClassPartition classify(const Drawing& d, int j);
BetaData beta_data(const Drawing& d, int j);
std::vector<TaggedCrossing> y_set(const Drawing& d, int j);
std::vector<TaggedCrossing> x_set(const Drawing& d, int beta, int j);
AssociationSet associated(const Drawing& d, int j);

std::string association_json(const Association& a);

}  // namespace crossring
