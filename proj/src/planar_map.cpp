#include "crossring/planar_map.hpp"

#include <algorithm>
#include <map>

#include "crossring/errors.hpp"

namespace crossring {

CrossingId make_crossing_id(EdgeId e, EdgeId f) {
  if (e == f) throw PreconditionError("crossing id needs two distinct edges");
  if (f < e) std::swap(e, f);
  return CrossingId{e, f};
}

int trace_faces(const std::vector<int>& sigma, const std::vector<int>& alpha,
                std::vector<int>& face_of) {
  face_of.assign(sigma.size(), -1);
  int faces = 0;
  for (int d = 0; d < (int)sigma.size(); ++d) {
    if (face_of[d] != -1) continue;
    for (int cur = d; face_of[cur] == -1; cur = sigma[alpha[cur]])
      face_of[cur] = faces;
    ++faces;
  }
  return faces;
}

CrossingId PlanarMap::crossing_at(int node) const {
  if (!is_crossing_node(node) || node >= num_nodes())
    throw PreconditionError("not a crossing node");
  return crossings[node - graph.num_vertices()];
}

int PlanarMap::node_of_crossing(EdgeId e, EdgeId f) const {
  CrossingId cid = make_crossing_id(e, f);
  auto it = std::lower_bound(crossings.begin(), crossings.end(), cid);
  if (it == crossings.end() || *it != cid) return -1;
  return graph.num_vertices() + (int)(it - crossings.begin());
}

std::pair<int, int> PlanarMap::seg_nodes(int seg) const {
  int edge_idx = seg_edge[seg];
  int t = seg - seg_offset[edge_idx];
  return {node_path[edge_idx][t], node_path[edge_idx][t + 1]};
}

int PlanarMap::germ_dart(EdgeId e, VertexId v) const {
  int idx = graph.edge_index(e);
  if (seg_count(idx) == 0)
    throw PreconditionError("edge " + to_string(e) + " is not in the map");
  if (graph.tail(e) == v) return 2 * segment(idx, 0);
  if (graph.head(e) == v) return 2 * segment(idx, seg_count(idx) - 1) + 1;
  throw PreconditionError("edge " + to_string(e) + " is not incident to " +
                          to_string(v));
}

std::vector<int> PlanarMap::faces_at_node(int node) const {
  std::vector<int> out;
  for (int d : node_darts[node]) {
    int f = face_of[d];
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

PlanarMap planarize(const Drawing& d, std::optional<EdgeId> skip) {
  const ProductGraph& g = d.graph;
  if ((int)d.rotations.size() != g.num_vertices() ||
      (int)d.crossings.size() != g.num_edges())
    throw ValidationError("drawing tables have wrong sizes");
  if (skip) g.check_edge(*skip);
  auto is_skipped = [&](EdgeId e) { return skip && *skip == e; };

  PlanarMap pm;
  pm.graph = g;
  pm.skipped = skip;

  // collect crossing pairs; demand a unique, mutually agreed crossing per pair
  struct PairInfo {
    int on_first = 0;
    int on_second = 0;
    std::int8_t chir = 0;
  };
  std::map<CrossingId, PairInfo> pairs;
  for (int idx = 0; idx < g.num_edges(); ++idx) {
    EdgeId e = g.edge_at(idx);
    if (is_skipped(e)) continue;
    for (const CrossEntry& entry : d.crossings[idx]) {
      if (is_skipped(entry.other)) continue;
      try {
        g.check_edge(entry.other);
      } catch (const PreconditionError&) {
        throw ValidationError("edge " + to_string(e) +
                              " lists out-of-range partner");
      }
      if (entry.other == e)
        throw ValidationError("edge " + to_string(e) + " crosses itself");
      if (g.adjacent(e, entry.other))
        throw ValidationError("adjacent edges " + to_string(e) + " and " +
                              to_string(entry.other) + " cross");
      if (entry.chirality != 1 && entry.chirality != -1)
        throw ValidationError("bad chirality on " + to_string(e));
      CrossingId cid = make_crossing_id(e, entry.other);
      PairInfo& info = pairs[cid];
      (e < entry.other ? info.on_first : info.on_second) += 1;
      if (info.chir == 0)
        info.chir = entry.chirality;
      else if (info.chir != entry.chirality)
        throw ValidationError("conflicting chirality for " + to_string(e) +
                              "/" + to_string(entry.other));
    }
  }
  for (const auto& [cid, info] : pairs) {
    if (info.on_first != 1 || info.on_second != 1)
      throw ValidationError("pair " + to_string(cid.first) + "/" +
                            to_string(cid.second) +
                            " is not listed exactly once on each edge");
    pm.crossings.push_back(cid);
    pm.crossing_chirality.push_back(info.chir);
  }

  auto crossing_node = [&](EdgeId e, EdgeId f) {
    int node = pm.node_of_crossing(e, f);
    return node;  // always present here
  };

  // node paths and segments
  pm.node_path.resize(g.num_edges());
  pm.seg_offset.assign(g.num_edges() + 1, 0);
  for (int idx = 0; idx < g.num_edges(); ++idx) {
    EdgeId e = g.edge_at(idx);
    pm.seg_offset[idx] = (int)pm.seg_edge.size();
    if (is_skipped(e)) continue;
    auto& path = pm.node_path[idx];
    path.push_back(g.vertex_index(g.tail(e)));
    for (const CrossEntry& entry : d.crossings[idx]) {
      if (is_skipped(entry.other)) continue;
      path.push_back(crossing_node(e, entry.other));
    }
    path.push_back(g.vertex_index(g.head(e)));
    for (size_t t = 0; t + 1 < path.size(); ++t) pm.seg_edge.push_back(idx);
  }
  pm.seg_offset[g.num_edges()] = (int)pm.seg_edge.size();

  int darts = 2 * (int)pm.seg_edge.size();
  pm.dart_origin.assign(darts, -1);
  pm.sigma.assign(darts, -1);
  for (int idx = 0; idx < g.num_edges(); ++idx) {
    const auto& path = pm.node_path[idx];
    for (int t = 0; t + 1 < (int)path.size(); ++t) {
      int seg = pm.segment(idx, t);
      pm.dart_origin[2 * seg] = path[t];
      pm.dart_origin[2 * seg + 1] = path[t + 1];
    }
  }

  // counterclockwise germ lists: graph vertices from the rotations,
  // crossing nodes from the chirality convention
  pm.node_darts.assign(pm.num_nodes(), {});
  for (int vidx = 0; vidx < g.num_vertices(); ++vidx) {
    VertexId v = g.vertex_at(vidx);
    auto expect = g.incident_edges(v);
    auto got = d.rotations[vidx];
    std::sort(expect.begin(), expect.end());
    {
      auto sorted = got;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != expect)
        throw ValidationError("rotation at " + to_string(v) +
                              " is not a permutation of the incident edges");
    }
    for (EdgeId e : got) {
      if (is_skipped(e)) continue;
      pm.node_darts[vidx].push_back(pm.germ_dart(e, v));
    }
  }
  for (int c = 0; c < (int)pm.crossings.size(); ++c) {
    int node = g.num_vertices() + c;
    EdgeId e = pm.crossings[c].first, f = pm.crossings[c].second;
    auto in_out = [&](EdgeId x) {
      int idx = g.edge_index(x);
      const auto& path = pm.node_path[idx];
      int t = -1;
      for (int u = 1; u + 1 < (int)path.size(); ++u)
        if (path[u] == node) t = u;
      int seg_in = pm.segment(idx, t - 1), seg_out = pm.segment(idx, t);
      return std::pair<int, int>{2 * seg_in + 1, 2 * seg_out};
    };
    auto [e_in, e_out] = in_out(e);
    auto [f_in, f_out] = in_out(f);
    if (pm.crossing_chirality[c] > 0)
      pm.node_darts[node] = {f_out, e_out, f_in, e_in};
    else
      pm.node_darts[node] = {f_in, e_out, f_out, e_in};
  }

  for (int node = 0; node < pm.num_nodes(); ++node) {
    const auto& list = pm.node_darts[node];
    for (size_t t = 0; t < list.size(); ++t) {
      pm.sigma[list[t]] = list[(t + 1) % list.size()];
      if (pm.dart_origin[list[t]] != node)
        throw ValidationError("internal germ inconsistency");
    }
  }

  pm.alpha_of.resize(darts);
  for (int dart = 0; dart < darts; ++dart) pm.alpha_of[dart] = dart ^ 1;
  pm.num_faces = trace_faces(pm.sigma, pm.alpha_of, pm.face_of);
  return pm;
}

}  // namespace crossring
