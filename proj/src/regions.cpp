#include "crossring/regions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "crossring/errors.hpp"

namespace crossring {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool red_in_cycle(EdgeId e, int j) { return e.color == Color::Red && e.a == j; }

bool node_on_curve(const PlanarMap& pm, int node, int j) {
  if (!pm.is_crossing_node(node)) return pm.graph.vertex_at(node).j == j;
  CrossingId cid = pm.crossing_at(node);
  return red_in_cycle(cid.first, j) || red_in_cycle(cid.second, j);
}

void check_cycle_index(const PlanarMap& pm, int j) {
  if (j < 0 || j >= pm.graph.n)
    throw PreconditionError("cross cycle index out of range");
}

std::set<int> cycle_components(const PlanarMap& pm, const RegionPartition& part,
                               int k) {
  std::set<int> comps;
  for (EdgeId e : pm.graph.red_cycle(k)) {
    int idx = pm.graph.edge_index(e);
    for (int t = 0; t < pm.seg_count(idx); ++t) {
      int c = part.of_segment[pm.segment(idx, t)];
      if (c >= 0) comps.insert(c);
    }
  }
  return comps;
}

}  // namespace

std::vector<int> RegionPartition::face_counts() const {
  std::vector<int> counts(num_components, 0);
  for (int c : of_face) ++counts[c];
  return counts;
}

RegionPartition complement_components(const PlanarMap& pm, int j) {
  check_cycle_index(pm, j);
  int F = pm.num_faces, S = pm.num_segments(), N = pm.num_nodes();
  Dsu dsu(F + S + N);

  std::vector<bool> seg_off(S), node_off(N);
  for (int s = 0; s < S; ++s)
    seg_off[s] = !red_in_cycle(pm.graph.edge_at(pm.seg_edge[s]), j);
  for (int u = 0; u < N; ++u) node_off[u] = !node_on_curve(pm, u, j);

  for (int s = 0; s < S; ++s) {
    if (!seg_off[s]) continue;
    dsu.unite(F + s, pm.face_of[2 * s]);
    dsu.unite(F + s, pm.face_of[2 * s + 1]);
  }
  for (int u = 0; u < N; ++u) {
    if (!node_off[u]) continue;
    for (int dart : pm.node_darts[u]) dsu.unite(F + S + u, pm.face_of[dart]);
  }

  RegionPartition part;
  part.j = j;
  part.of_face.assign(F, -1);
  part.of_segment.assign(S, -1);
  part.of_node.assign(N, -1);
  std::map<int, int> roots;
  auto comp_id = [&](int elem) {
    int root = dsu.find(elem);
    auto [it, fresh] = roots.try_emplace(root, (int)roots.size());
    (void)fresh;
    return it->second;
  };
  for (int f = 0; f < F; ++f) part.of_face[f] = comp_id(f);
  for (int s = 0; s < S; ++s)
    if (seg_off[s]) part.of_segment[s] = comp_id(F + s);
  for (int u = 0; u < N; ++u)
    if (node_off[u]) part.of_node[u] = comp_id(F + S + u);
  part.num_components = (int)roots.size();
  return part;
}

int region_count_oracle(const PlanarMap& pm, int j) {
  check_cycle_index(pm, j);
  std::map<int, int> local;  // global dart -> induced dart
  std::vector<int> global;
  for (EdgeId e : pm.graph.red_cycle(j)) {
    int idx = pm.graph.edge_index(e);
    for (int t = 0; t < pm.seg_count(idx); ++t) {
      int seg = pm.segment(idx, t);
      for (int dart : {2 * seg, 2 * seg + 1}) {
        local[dart] = (int)global.size();
        global.push_back(dart);
      }
    }
  }
  std::vector<int> sigma(global.size(), -1), alpha(global.size(), -1);
  for (size_t q = 0; q < global.size(); ++q)
    alpha[q] = local.at(global[q] ^ 1);
  for (int node = 0; node < pm.num_nodes(); ++node) {
    std::vector<int> kept;
    for (int dart : pm.node_darts[node]) {
      auto it = local.find(dart);
      if (it != local.end()) kept.push_back(it->second);
    }
    for (size_t t = 0; t < kept.size(); ++t)
      sigma[kept[t]] = kept[(t + 1) % kept.size()];
  }
  std::vector<int> face_of;
  return trace_faces(sigma, alpha, face_of);
}

int omega_component(const PlanarMap& pm, const RegionPartition& part) {
  int j = part.j, n = pm.graph.n;
  std::vector<bool> meets_j(n, false);
  for (const CrossingId& cid : pm.crossings) {
    if (cid.first.color != Color::Red || cid.second.color != Color::Red)
      continue;
    if (cid.first.a == j) meets_j[cid.second.a] = true;
    if (cid.second.a == j) meets_j[cid.first.a] = true;
  }
  int partner = -1;
  for (int k = 0; k < n && partner < 0; ++k)
    if (k != j && !meets_j[k]) partner = k;
  if (partner < 0)
    throw PreconditionError("cross cycle " + std::to_string(j) +
                            " has no disjoint partner");
  std::set<int> comps = cycle_components(pm, part, partner);
  if (comps.size() != 1)
    throw FalsificationError("disjoint partner cycle spans several components");
  int omega = *comps.begin();
  for (int l = 0; l < n; ++l) {
    if (l == j) continue;
    if (!cycle_components(pm, part, l).count(omega))
      throw FalsificationError(
          "cross cycle " + std::to_string(l) +
          " misses the common complement component of cycle " +
          std::to_string(j));
  }
  return omega;
}

int locate_vertex(const PlanarMap& pm, const RegionPartition& part,
                  VertexId v) {
  int c = part.of_node[pm.node_of_vertex(v)];
  if (c < 0)
    throw PreconditionError("vertex " + to_string(v) + " lies on cycle " +
                            std::to_string(part.j));
  return c;
}

int germ_component(const PlanarMap& pm, const RegionPartition& part, EdgeId e,
                   VertexId v) {
  int dart = pm.germ_dart(e, v);
  int c = part.of_segment[dart / 2];
  if (c < 0)
    throw PreconditionError("edge " + to_string(e) + " lies on cycle " +
                            std::to_string(part.j));
  return c;
}

bool separates(const PlanarMap& pm, const RegionPartition& part, int k,
               int l) {
  check_cycle_index(pm, k);
  check_cycle_index(pm, l);
  if (k == part.j || l == part.j || k == l)
    throw PreconditionError("separation needs three distinct cycles");
  std::set<int> ck = cycle_components(pm, part, k);
  std::set<int> cl = cycle_components(pm, part, l);
  std::vector<int> common;
  std::set_intersection(ck.begin(), ck.end(), cl.begin(), cl.end(),
                        std::back_inserter(common));
  return common.empty();
}

}  // namespace crossring
