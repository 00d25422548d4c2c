#include "crossring/robustness.hpp"

#include <algorithm>
#include <set>

#include "crossring/errors.hpp"
#include "crossring/regions.hpp"

namespace crossring {

bool RedDisjointness::disjoint(int j, int k) const {
  if (j < 0 || j >= n || k < 0 || k >= n)
    throw PreconditionError("cross cycle index out of range");
  return table[j * n + k];
}

RedDisjointness RedDisjointness::of(const Drawing& d) {
  RedDisjointness dis;
  dis.n = d.graph.n;
  dis.table.assign(dis.n * dis.n, true);
  for (int idx = 0; idx < d.graph.num_edges(); ++idx) {
    EdgeId e = d.graph.edge_at(idx);
    if (e.color != Color::Red) continue;
    for (const CrossEntry& entry : d.crossings[idx]) {
      if (entry.other.color != Color::Red) continue;
      dis.table[e.a * dis.n + entry.other.a] = false;
      dis.table[entry.other.a * dis.n + e.a] = false;
    }
  }
  return dis;
}

RedDisjointness RedDisjointness::stipulated(
    int n, const std::vector<std::pair<int, int>>& crossing_pairs) {
  if (n < 1) throw PreconditionError("need at least one cross cycle");
  RedDisjointness dis;
  dis.n = n;
  dis.table.assign(n * n, true);
  for (auto [j, k] : crossing_pairs) {
    if (j < 0 || j >= n || k < 0 || k >= n)
      throw PreconditionError("cross cycle index out of range");
    dis.table[j * n + k] = false;
    dis.table[k * n + j] = false;
  }
  return dis;
}

std::optional<int> b_of(const RedDisjointness& dis, int j) {
  for (int b = 1; b < dis.n; ++b)
    if (dis.disjoint(sub(cyc(j, dis.n), b).v, j)) return b;
  return std::nullopt;
}

std::optional<int> a_of(const RedDisjointness& dis, int j) {
  auto b = b_of(dis, j);
  if (!b) return std::nullopt;
  std::set<int> window;
  for (int c = 0; c <= *b; ++c) window.insert(sub(cyc(j, dis.n), c).v);
  for (int a = 1; a < dis.n; ++a) {
    int cand = add(cyc(j, dis.n), a).v;
    if (window.count(cand)) continue;
    bool ok = true;
    for (int w : window)
      if (!dis.disjoint(w, cand)) {
        ok = false;
        break;
      }
    if (ok) return a;
  }
  return std::nullopt;
}

RobustReport analyze(const Drawing& d) { return analyze(d, planarize(d)); }

RobustReport analyze(const Drawing& d, const PlanarMap& pm) {
  RobustReport r;
  r.m = d.graph.m;
  r.n = d.graph.n;
  RedDisjointness dis = RedDisjointness::of(d);

  bool all_gaps = true;
  int widest = 0;
  for (int j = 0; j < r.n; ++j) {
    r.b.push_back(b_of(dis, j));
    r.a.push_back(a_of(dis, j));
    r.red_crossings.push_back(d.red_cycle_crossings(j));
    if (!r.b.back() || !r.a.back())
      all_gaps = false;
    else
      widest = std::max({widest, *r.b.back(), *r.a.back()});
  }
  if (all_gaps) r.max_gap = widest;

  r.relaxed = all_gaps;
  for (int j = 0; j < r.n && r.relaxed; ++j)
    if (2 * (*r.a[j] + *r.b[j]) >= r.n) r.relaxed = false;

  r.red_nonseparating = true;
  for (int j = 0; j < r.n && r.red_nonseparating; ++j) {
    RegionPartition part = complement_components(pm, j);
    for (int k = 0; k < r.n && r.red_nonseparating; ++k) {
      if (k == j) continue;
      for (int l = k + 1; l < r.n && r.red_nonseparating; ++l) {
        if (l == j) continue;
        if (separates(pm, part, k, l)) r.red_nonseparating = false;
      }
    }
  }

  r.robust = r.relaxed && r.red_nonseparating;
  return r;
}

bool meets_guarantee_threshold(int m, int n) {
  return 2 * n >= (m + 3) * (m + 3) + 2;
}

std::vector<std::string> gap_bound_check(const RobustReport& r) {
  std::vector<std::string> out;
  if (!meets_guarantee_threshold(r.m, r.n)) return out;
  for (int j = 0; j < r.n; ++j)
    if (r.red_crossings[j] >= r.m) return out;
  for (int j = 0; j < r.n; ++j) {
    std::string at = "cycle " + std::to_string(j);
    if (!r.b[j]) {
      out.push_back("no heavy cycle above the threshold, yet the back gap "
                    "of " + at + " is undefined");
      continue;
    }
    if (2 * *r.b[j] > r.m + 1)
      out.push_back("back gap " + std::to_string(*r.b[j]) + " of " + at +
                    " exceeds (m+1)/2 without a heavy cycle");
    if (!r.a[j]) {
      out.push_back("no heavy cycle above the threshold, yet the forward "
                    "gap of " + at + " is undefined");
      continue;
    }
    if (4 * *r.a[j] > (r.m + 1) * (r.m + 3) + 4)
      out.push_back("forward gap " + std::to_string(*r.a[j]) + " of " + at +
                    " exceeds (m+1)(m+3)/4 + 1 without a heavy cycle");
  }
  return out;
}

ThresholdResult threshold_diagnose(const Drawing& d, const RobustReport& r) {
  if (!meets_guarantee_threshold(r.m, r.n))
    throw PreconditionError("guarantee threshold 2n >= (m+3)^2 + 2 not met");
  if (r.robust) return {ThresholdDiagnosis::Robust, -1};
  for (int j = 0; j < r.n; ++j)
    if (r.red_crossings[j] >= r.m)
      return {ThresholdDiagnosis::HeavyRedCycle, j};
  (void)d;
  throw FalsificationError(
      "drawing above the guarantee threshold is neither robust nor carries a "
      "heavy cross cycle");
}

}  // namespace crossring
