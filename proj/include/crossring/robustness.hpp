#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crossring/drawing.hpp"
#include "crossring/planar_map.hpp"

namespace crossring {

// Symmetric disjointness table over the n cross cycles.
struct RedDisjointness {
  int n = 0;
  std::vector<bool> table;

  bool disjoint(int j, int k) const;

  static RedDisjointness of(const Drawing& d);
  // Build from an explicit list of crossing cycle pairs.
  static RedDisjointness stipulated(
      int n, const std::vector<std::pair<int, int>>& crossing_pairs);
};

// Backward gap: least b >= 1 with R(j-b) disjoint from R(j). Empty when
// every other cross cycle meets R(j).
std::optional<int> b_of(const RedDisjointness& dis, int j);

// Forward gap: least a >= 1 such that R(j+a) is disjoint from every one of
// R(j-b), ..., R(j) and is not itself one of those cycles, where b is the
// backward gap. Empty when b is, or when no such a exists.
std::optional<int> a_of(const RedDisjointness& dis, int j);

struct RobustReport {
  int m = 0;
  int n = 0;
  std::vector<std::optional<int>> b;
  std::vector<std::optional<int>> a;
  std::optional<int> max_gap;          // max over all a and b, when all exist
  std::vector<int> red_crossings;      // crossing points touching R(j)
  bool relaxed = false;                // gaps exist and 2*(a+b) < n everywhere
  bool red_nonseparating = false;      // no cross cycle separates two others
  bool robust = false;                 // relaxed and red_nonseparating
};

RobustReport analyze(const Drawing& d);
RobustReport analyze(const Drawing& d, const PlanarMap& pm);

enum class ThresholdDiagnosis { Robust, HeavyRedCycle };

struct ThresholdResult {
  ThresholdDiagnosis kind;
  int heavy_j = -1;  // set for HeavyRedCycle
};

// For n past the guarantee threshold 2n >= (m+3)^2 + 2, every drawing is
// robust or has a cross cycle carrying at least m crossings. Diagnoses which
// branch holds; PreconditionError below the threshold, FalsificationError if
// neither branch does.
ThresholdResult threshold_diagnose(const Drawing& d, const RobustReport& r);

bool meets_guarantee_threshold(int m, int n);

// Above the guarantee threshold, a drawing where no cross cycle carries m or
// more crossings must have every gap defined with 2*b(j) <= m+1 and
// 4*a(j) <= (m+1)*(m+3)+4. Returns one message per violated bound; empty
// when the bounds hold or the report is out of scope (threshold unmet or a
// heavy cycle present).
std::vector<std::string> gap_bound_check(const RobustReport& r);

}  // namespace crossring
