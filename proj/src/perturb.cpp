#include "crossring/perturb.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "crossring/errors.hpp"
#include "crossring/planar_map.hpp"

namespace crossring {

namespace {

// Uniform in [0, k), unbiased, identical on every platform (unlike
// std::uniform_int_distribution).
std::uint64_t below(std::mt19937_64& rng, std::uint64_t k) {
  std::uint64_t spill = (0 - k) % k;  // 2^64 mod k
  std::uint64_t x = rng();
  if (spill)
    while (x >= 0 - spill) x = rng();
  return x % k;
}

struct RouteStep {
  int seg;
  bool from_left;  // route crosses from the left side of the wall's edge
};

// Dart whose origin marks the corner the removed edge used to occupy at v:
// the germ right after e in the rotation. The corner face is its right face.
int corner_dart(const Drawing& d, const PlanarMap& pm, EdgeId e, VertexId v) {
  const auto& rot = d.rotations[d.graph.vertex_index(v)];
  int p = -1;
  for (int t = 0; t < 4; ++t)
    if (rot[t] == e) p = t;
  if (p < 0)
    throw PreconditionError("edge " + to_string(e) + " missing from rotation");
  return pm.germ_dart(rot[(p + 1) % 4], v);
}

int corner_face(const Drawing& d, const PlanarMap& pm, EdgeId e, VertexId v) {
  return pm.face_of[corner_dart(d, pm, e, v)];
}

// A closed route leaves the merged corridor face and later re-enters it, so
// the new curve occupies that face twice: once from the tail corner to the
// first wall and once from the last wall to the head corner. Those two
// passages stay disjoint exactly when their endpoints do not interleave
// around the face boundary.
bool closed_route_realizable(const Drawing& d, const PlanarMap& pm, EdgeId e,
                             int corridor,
                             const std::vector<RouteStep>& steps) {
  if (steps.empty()) return true;
  int first = -1;
  for (int dd = 0; dd < 2 * pm.num_segments() && first < 0; ++dd)
    if (pm.face_of[dd] == corridor) first = dd;
  std::vector<int> orbit;
  for (int dd = first;;) {
    orbit.push_back(dd);
    dd = pm.phi(dd);
    if (dd == first) break;
  }
  auto pos_of = [&](int dart) {
    for (int t = 0; t < (int)orbit.size(); ++t)
      if (orbit[t] == dart) return t;
    throw PreconditionError("dart not on the corridor face boundary");
  };
  auto wall_dart = [&](int seg) {
    return pm.face_of[2 * seg] == corridor ? 2 * seg : 2 * seg + 1;
  };
  // Even slots mark corners (a corner sits at its marker dart's origin),
  // odd slots mark crossing points in the middle of a boundary dart.
  long pT = 2L * pos_of(corner_dart(d, pm, e, d.graph.tail(e)));
  long p1 = 2L * pos_of(wall_dart(steps.front().seg)) + 1;
  long pK = 2L * pos_of(wall_dart(steps.back().seg)) + 1;
  long pH = 2L * pos_of(corner_dart(d, pm, e, d.graph.head(e)));
  auto inside = [](long x, long a, long b) {
    return a < b ? (a < x && x < b) : (x > a || x < b);
  };
  return inside(pK, pT, p1) == inside(pH, pT, p1);
}

Drawing apply_route(const Drawing& d, EdgeId e, const PlanarMap& pm,
                    const std::vector<RouteStep>& steps) {
  int e_idx = d.graph.edge_index(e);
  Drawing out = d;
  for (auto& list : out.crossings)
    list.erase(std::remove_if(list.begin(), list.end(),
                              [&](const CrossEntry& c) { return c.other == e; }),
               list.end());
  out.crossings[e_idx].clear();
  for (const RouteStep& st : steps) {
    int f_idx = pm.seg_edge[st.seg];
    EdgeId f = d.graph.edge_at(f_idx);
    int t = st.seg - pm.seg_offset[f_idx];
    std::int8_t chir = e < f ? (st.from_left ? -1 : 1) : (st.from_left ? 1 : -1);
    out.crossings[e_idx].push_back({f, chir});
    auto& partner = out.crossings[f_idx];
    partner.insert(partner.begin() + t, CrossEntry{e, chir});
  }
  return out;
}

}  // namespace

Drawing reroute_with_walls(const Drawing& d, EdgeId e,
                           const std::vector<std::pair<EdgeId, int>>& walls) {
  d.graph.check_edge(e);
  std::set<EdgeId> used;
  for (const auto& [f, t] : walls) {
    d.graph.check_edge(f);
    if (f == e || d.graph.adjacent(e, f))
      throw PreconditionError("wall " + to_string(f) +
                              " is or touches the rerouted edge");
    if (!used.insert(f).second)
      throw PreconditionError("wall edge repeated: " + to_string(f));
  }

  PlanarMap pm = planarize(d, e);
  int start = corner_face(d, pm, e, d.graph.tail(e));
  int goal = corner_face(d, pm, e, d.graph.head(e));
  int cur = start;
  std::vector<bool> face_used(pm.num_faces, false);
  face_used[start] = true;
  std::vector<RouteStep> steps;
  for (const auto& [f, t] : walls) {
    int f_idx = d.graph.edge_index(f);
    if (t < 0 || t >= pm.seg_count(f_idx))
      throw PreconditionError("wall segment index out of range on " +
                              to_string(f));
    int seg = pm.segment(f_idx, t);
    int left = pm.face_of[2 * seg + 1], right = pm.face_of[2 * seg];
    if (left == right)
      throw PreconditionError("wall segment on " + to_string(f) +
                              " has the same face on both sides");
    if (cur != left && cur != right)
      throw PreconditionError("wall " + to_string(f) +
                              " does not border the route's current face");
    int next = (cur == left) ? right : left;
    bool final_return =
        start == goal && next == goal && steps.size() + 1 == walls.size();
    if (face_used[next] && !final_return)
      throw PreconditionError("route revisits a face at wall " + to_string(f));
    steps.push_back({seg, cur == left});
    face_used[next] = true;
    cur = next;
  }
  if (cur != goal)
    throw PreconditionError("route ends away from the head corner face");
  if (start == goal && !closed_route_realizable(d, pm, e, start, steps))
    throw PreconditionError(
        "closed route re-enters the corridor face so that the redrawn edge "
        "would cross itself");
  return apply_route(d, e, pm, steps);
}

Drawing perturb(const Drawing& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    EdgeId e = d.graph.edge_at((int)below(rng, d.graph.num_edges()));
    PlanarMap pm = planarize(d, e);

    std::vector<std::vector<int>> by_face(pm.num_faces);
    for (int seg = 0; seg < pm.num_segments(); ++seg) {
      by_face[pm.face_of[2 * seg]].push_back(seg);
      if (pm.face_of[2 * seg + 1] != pm.face_of[2 * seg])
        by_face[pm.face_of[2 * seg + 1]].push_back(seg);
    }
    std::vector<bool> banned(d.graph.num_edges(), false);
    banned[d.graph.edge_index(e)] = true;
    for (int idx = 0; idx < d.graph.num_edges(); ++idx)
      if (d.graph.adjacent(e, d.graph.edge_at(idx))) banned[idx] = true;

    int start = corner_face(d, pm, e, d.graph.tail(e));
    int goal = corner_face(d, pm, e, d.graph.head(e));
    // an uncrossed edge leaves one merged corridor face, so the route may
    // close up on its start face; otherwise every face is visited once
    bool closed = start == goal;
    std::vector<bool> face_used(pm.num_faces, false);
    face_used[start] = true;
    int cur = start;
    std::vector<RouteStep> steps;
    bool done = false;
    while (!done) {
      std::vector<int> cand;
      for (int seg : by_face[cur]) {
        if (banned[pm.seg_edge[seg]]) continue;
        int left = pm.face_of[2 * seg], right = pm.face_of[2 * seg + 1];
        if (left == right) continue;
        int other = (cur == left) ? right : left;
        bool admissible =
            closed ? (other == goal || !face_used[other]) : !face_used[other];
        if (admissible) cand.push_back(seg);
      }
      if (cur == goal && !closed) {
        done = true;  // open routes end on first arrival at the head corner
        break;
      }
      if (cand.empty()) break;  // dead end
      int seg = cand[below(rng, cand.size())];
      int left = pm.face_of[2 * seg + 1];
      int other = (cur == left) ? pm.face_of[2 * seg] : left;
      steps.push_back({seg, cur == left});
      banned[pm.seg_edge[seg]] = true;
      face_used[other] = true;
      cur = other;
      if (closed && cur == goal) done = true;
    }
    if (done && cur == goal) {
      if (closed && !closed_route_realizable(d, pm, e, start, steps))
        continue;  // the two corridor passages would interleave
      Drawing out = apply_route(d, e, pm, steps);
      out.require_valid();
      return out;
    }
  }
  throw BudgetError("no reroute found after 64 attempts");
}

}  // namespace crossring
