#include "crossring/drawing.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "crossring/errors.hpp"
#include "crossring/planar_map.hpp"

namespace crossring {

int Drawing::total_crossings() const {
  int count = 0;
  for (int idx = 0; idx < graph.num_edges(); ++idx) {
    EdgeId e = graph.edge_at(idx);
    for (const CrossEntry& entry : crossings[idx])
      if (e < entry.other) ++count;
  }
  return count;
}

bool Drawing::crosses(EdgeId e, EdgeId f) const {
  for (const CrossEntry& entry : crossings[graph.edge_index(e)])
    if (entry.other == f) return true;
  return false;
}

int Drawing::pair_crossings(const std::vector<EdgeId>& H,
                            const std::vector<EdgeId>& K) const {
  std::set<EdgeId> hs(H.begin(), H.end()), ks(K.begin(), K.end());
  int count = 0;
  for (int idx = 0; idx < graph.num_edges(); ++idx) {
    EdgeId e = graph.edge_at(idx);
    for (const CrossEntry& entry : crossings[idx]) {
      if (!(e < entry.other)) continue;
      bool ef = hs.count(e) && ks.count(entry.other);
      bool fe = hs.count(entry.other) && ks.count(e);
      if (ef || fe) ++count;
    }
  }
  return count;
}

bool Drawing::red_cycles_cross(int j, int k) const {
  return pair_crossings(graph.red_cycle(j), graph.red_cycle(k)) > 0;
}

int Drawing::red_cycle_crossings(int j) const {
  std::set<EdgeId> rs;
  for (EdgeId e : graph.red_cycle(j)) rs.insert(e);
  int count = 0;
  for (int idx = 0; idx < graph.num_edges(); ++idx) {
    EdgeId e = graph.edge_at(idx);
    for (const CrossEntry& entry : crossings[idx]) {
      if (!(e < entry.other)) continue;
      if (rs.count(e) || rs.count(entry.other)) ++count;
    }
  }
  return count;
}

std::vector<std::string> Drawing::structural_issues() const {
  std::vector<std::string> issues;
  if ((int)rotations.size() != graph.num_vertices()) {
    issues.push_back("rotation table has " + std::to_string(rotations.size()) +
                     " entries, expected " +
                     std::to_string(graph.num_vertices()));
    return issues;
  }
  if ((int)crossings.size() != graph.num_edges()) {
    issues.push_back("crossing table has " + std::to_string(crossings.size()) +
                     " entries, expected " + std::to_string(graph.num_edges()));
    return issues;
  }

  for (int idx = 0; idx < graph.num_vertices(); ++idx) {
    VertexId v = graph.vertex_at(idx);
    auto expect = graph.incident_edges(v);
    auto got = rotations[idx];
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    if (expect != got)
      issues.push_back("rotation at " + to_string(v) +
                       " is not a permutation of the incident edges");
  }

  struct PairInfo {
    int on_first = 0;
    int on_second = 0;
    std::set<int> chirs;
  };
  std::map<std::pair<EdgeId, EdgeId>, PairInfo> pairs;

  for (int idx = 0; idx < graph.num_edges(); ++idx) {
    EdgeId e = graph.edge_at(idx);
    for (const CrossEntry& entry : crossings[idx]) {
      try {
        graph.check_edge(entry.other);
      } catch (const PreconditionError&) {
        issues.push_back("edge " + to_string(e) +
                         " lists out-of-range partner " +
                         to_string(entry.other));
        continue;
      }
      if (entry.other == e) {
        issues.push_back("edge " + to_string(e) + " lists itself");
        continue;
      }
      if (graph.adjacent(e, entry.other)) {
        issues.push_back("adjacent edges " + to_string(e) + " and " +
                         to_string(entry.other) + " cross");
        continue;
      }
      if (entry.chirality != 1 && entry.chirality != -1) {
        issues.push_back("crossing of " + to_string(e) + " and " +
                         to_string(entry.other) + " has chirality " +
                         std::to_string(entry.chirality));
        continue;
      }
      auto key = e < entry.other ? std::make_pair(e, entry.other)
                                 : std::make_pair(entry.other, e);
      PairInfo& info = pairs[key];
      (e < entry.other ? info.on_first : info.on_second) += 1;
      info.chirs.insert(entry.chirality);
    }
  }

  for (const auto& [key, info] : pairs) {
    std::string name = to_string(key.first) + "/" + to_string(key.second);
    if (info.on_first != info.on_second) {
      issues.push_back("pair " + name + " is listed " +
                       std::to_string(info.on_first) + " vs " +
                       std::to_string(info.on_second) + " times");
      continue;
    }
    if (info.chirs.size() > 1)
      issues.push_back("pair " + name + " has conflicting chirality");
    if (info.on_first > 1)
      issues.push_back("pair " + name + " crosses " +
                       std::to_string(info.on_first) + " times");
  }
  return issues;
}

std::vector<std::string> Drawing::validate() const {
  std::vector<std::string> issues = structural_issues();
  if (!issues.empty()) return issues;
  PlanarMap pm = planarize(*this);
  int chi = pm.euler_characteristic();
  if (chi != 2)
    issues.push_back("planarized map has Euler characteristic " +
                     std::to_string(chi) + ", expected 2");
  return issues;
}

void Drawing::require_valid() const {
  auto issues = validate();
  if (issues.empty()) return;
  std::string msg = "invalid drawing:";
  for (const auto& s : issues) msg += "\n  " + s;
  throw ValidationError(msg);
}

}  // namespace crossring
