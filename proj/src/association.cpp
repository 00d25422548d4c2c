#include "crossring/association.hpp"

#include <algorithm>
#include <iterator>
#include <json.hpp>
#include <set>

#include "crossring/errors.hpp"
#include "crossring/zring.hpp"

namespace crossring {

namespace {

using ordered_json = nlohmann::ordered_json;

bool in_red_cycle(EdgeId e, int j) {
  return e.color == Color::Red && e.a == j;
}

std::string ring_label(int i) { return "ring " + std::to_string(i); }
std::string cycle_label(int j) { return "cycle " + std::to_string(j); }

}  // namespace

CrossingPair make_crossing(EdgeId a, EdgeId b) {
  if (a == b) throw PreconditionError("crossing needs two distinct edges");
  return a < b ? CrossingPair{a, b} : CrossingPair{b, a};
}

std::string to_string(const CrossingPair& c) {
  return to_string(c.e) + " x " + to_string(c.f);
}

std::string to_string(VClass c) {
  switch (c) {
    case VClass::Cplus: return "Cplus";
    case VClass::Cminus: return "Cminus";
    case VClass::Tplus: return "Tplus";
    case VClass::Tminus: return "Tminus";
    case VClass::Tzero: return "Tzero";
  }
  throw PreconditionError("unknown ring class");
}

std::vector<int> ClassPartition::members(VClass c) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(class_of.size()); ++i)
    if (class_of[i] == c) out.push_back(i);
  return out;
}

int ClassPartition::count(VClass c) const {
  return static_cast<int>(members(c).size());
}

std::string to_string(CrossTag t) {
  switch (t) {
    case CrossTag::FirstOut: return "first_out";
    case CrossTag::LastIn: return "last_in";
    case CrossTag::RedRed: return "red_red";
    case CrossTag::BackLast: return "back_last";
    case CrossTag::FrontFirst: return "front_first";
    case CrossTag::PathPair: return "path_pair";
  }
  throw PreconditionError("unknown crossing tag");
}

std::optional<CrossingPair> first_ring_crossing(const Drawing& d, int i, int k,
                                                int s) {
  const ProductGraph& g = d.graph;
  g.check_vertex(VertexId{i, s});
  g.check_vertex(VertexId{0, k});
  for (int t = 1; t <= g.n; ++t) {
    EdgeId e = blue_edge(i, add(cyc(s, g.n), t).v);
    for (const CrossEntry& ce : d.crossings[g.edge_index(e)])
      if (in_red_cycle(ce.other, k)) return make_crossing(e, ce.other);
  }
  return std::nullopt;
}

std::optional<CrossingPair> last_ring_crossing(const Drawing& d, int i, int k,
                                               int s) {
  const ProductGraph& g = d.graph;
  g.check_vertex(VertexId{i, s});
  g.check_vertex(VertexId{0, k});
  for (int t = g.n; t >= 1; --t) {
    EdgeId e = blue_edge(i, add(cyc(s, g.n), t).v);
    const auto& list = d.crossings[g.edge_index(e)];
    for (auto it = list.rbegin(); it != list.rend(); ++it)
      if (in_red_cycle(it->other, k)) return make_crossing(e, it->other);
  }
  return std::nullopt;
}

RedComplementTables RedComplementTables::of(const Drawing& d) {
  RedComplementTables t{planarize(d), {}, {}};
  t.parts.reserve(d.graph.n);
  t.omega.reserve(d.graph.n);
  for (int j = 0; j < d.graph.n; ++j) {
    t.parts.push_back(complement_components(t.pm, j));
    t.omega.push_back(omega_component(t.pm, t.parts.back()));
  }
  return t;
}

Associator::Associator(const Drawing& d)
    : d_(d), rep_(), tab_(RedComplementTables::of(d_)) {
  rep_ = analyze(d_, tab_.pm);
  if (!rep_.robust)
    throw PreconditionError("association requires a robust drawing");
}

int Associator::wrap(int v) const { return cyc(v, d_.graph.n).v; }

bool Associator::path_crosses(int cycle, int i, int from, int to) const {
  return d_.pair_crossings(d_.graph.open_blue_path(i, wrap(from), wrap(to)),
                           d_.graph.red_cycle(wrap(cycle))) > 0;
}

ClassPartition Associator::classify(int j) const {
  j = wrap(j);
  const int m = d_.graph.m;
  const int big = *rep_.max_gap;
  const RegionPartition& part = tab_.parts[j];
  const int shared = tab_.omega[j];
  ClassPartition out{j, std::vector<VClass>(m, VClass::Tzero)};
  for (int i = 0; i < m; ++i) {
    VertexId v{i, j};
    int fwd = germ_component(tab_.pm, part, blue_edge(i, wrap(j + 1)), v);
    int bwd = germ_component(tab_.pm, part, blue_edge(i, j), v);
    if (fwd != shared) {
      out.class_of[i] = VClass::Cplus;
    } else if (bwd != shared) {
      out.class_of[i] = VClass::Cminus;
    } else if (path_crosses(j, i, j, j + big)) {
      out.class_of[i] = VClass::Tplus;
    } else if (path_crosses(j, i, j - big, j)) {
      out.class_of[i] = VClass::Tminus;
    } else if (path_crosses(j, i, j - big, j + big)) {
      throw FalsificationError(ring_label(i) + " around " + cycle_label(j) +
                               " fits no class: the two half windows miss "
                               "every crossing the full window sees");
    }
  }
  return out;
}

BetaData Associator::beta_data(int j) const {
  j = wrap(j);
  const int m = d_.graph.m;
  const int n = d_.graph.n;
  const int back_gap = *rep_.b[j];
  BetaData out{j, std::vector<int>(m, 0), {}, {}};
  for (int i = 0; i < m; ++i) {
    int found = -1;
    for (int b = 1; b < n; ++b) {
      int k = wrap(j - b);
      if (locate_vertex(tab_.pm, tab_.parts[k], VertexId{i, j}) ==
          tab_.omega[k]) {
        found = b;
        break;
      }
    }
    if (found < 0)
      throw FalsificationError(to_string(VertexId{i, j}) +
                               " lies outside the shared component of every "
                               "other cross cycle");
    if (found > back_gap)
      throw FalsificationError("back reach " + std::to_string(found) + " of " +
                               to_string(VertexId{i, j}) +
                               " exceeds the back gap " +
                               std::to_string(back_gap) +
                               " on a robust drawing");
    out.bbar[i] = found;
  }
  ClassPartition part = classify(j);
  std::set<int> attained(out.bbar.begin(), out.bbar.end());
  for (int beta : attained) {
    std::vector<int> bucket;
    for (int i = 0; i < m; ++i)
      if (part.class_of[i] == VClass::Tzero && out.bbar[i] == beta)
        bucket.push_back(i);
    out.S.push_back(beta);
    out.T[beta] = std::move(bucket);
  }
  return out;
}

std::vector<TaggedCrossing> Associator::y_set(int j) const {
  j = wrap(j);
  ClassPartition part = classify(j);
  std::vector<TaggedCrossing> out;
  for (int i = 0; i < d_.graph.m; ++i) {
    VClass c = part.class_of[i];
    if (c == VClass::Cplus || c == VClass::Tplus) {
      auto hit = first_ring_crossing(d_, i, j, j);
      if (!hit)
        throw FalsificationError(ring_label(i) + " never crosses " +
                                 cycle_label(j) +
                                 " despite leaving it outward");
      out.push_back({*hit, CrossTag::FirstOut, i, -1});
    } else if (c == VClass::Cminus || c == VClass::Tminus) {
      auto hit = last_ring_crossing(d_, i, j, j);
      if (!hit)
        throw FalsificationError(ring_label(i) + " never crosses " +
                                 cycle_label(j) +
                                 " despite entering it from outside");
      out.push_back({*hit, CrossTag::LastIn, i, -1});
    }
  }
  return out;
}

std::vector<TaggedCrossing> Associator::x_set(int beta, int j) const {
  j = wrap(j);
  BetaData bd = beta_data(j);
  if (!std::binary_search(bd.S.begin(), bd.S.end(), beta))
    throw PreconditionError("back distance " + std::to_string(beta) +
                            " is not attained for " + cycle_label(j));
  const ProductGraph& g = d_.graph;
  const int back = wrap(j - beta);
  const int front = wrap(j + *rep_.a[j]);
  std::vector<TaggedCrossing> out;

  // Every crossing between the back cycle and the home cycle.
  std::vector<CrossingPair> red_red;
  for (EdgeId e : g.red_cycle(back))
    for (const CrossEntry& ce : d_.crossings[g.edge_index(e)])
      if (in_red_cycle(ce.other, j)) red_red.push_back(make_crossing(e, ce.other));
  std::sort(red_red.begin(), red_red.end());
  for (const CrossingPair& c : red_red)
    out.push_back({c, CrossTag::RedRed, -1, -1});

  const std::vector<int>& bucket = bd.T[beta];

  // Rings of the bucket whose front half meets the back cycle contribute
  // their last back-cycle crossing seen from the front anchor; rings whose
  // back half meets the front cycle contribute their first front-cycle
  // crossing seen from the back anchor.
  for (int i : bucket) {
    if (path_crosses(back, i, j, front)) {
      auto hit = last_ring_crossing(d_, i, back, front);
      if (!hit)
        throw FalsificationError(ring_label(i) +
                                 " meets the back cycle on its front half "
                                 "yet a full walk finds no crossing");
      out.push_back({*hit, CrossTag::BackLast, i, -1});
    }
    if (path_crosses(front, i, back, j)) {
      auto hit = first_ring_crossing(d_, i, front, back);
      if (!hit)
        throw FalsificationError(ring_label(i) +
                                 " meets the front cycle on its back half "
                                 "yet a full walk finds no crossing");
      out.push_back({*hit, CrossTag::FrontFirst, i, -1});
    }
  }

  // Crossings between the tracked paths of two bucket rings: back half
  // against back half, and back half against front half either way round.
  for (std::size_t p = 0; p < bucket.size(); ++p) {
    for (std::size_t q = p + 1; q < bucket.size(); ++q) {
      int i = bucket[p], i2 = bucket[q];
      std::set<EdgeId> back_i, back_i2, front_i, front_i2;
      for (EdgeId e : g.open_blue_path(i, back, j)) back_i.insert(e);
      for (EdgeId e : g.open_blue_path(i2, back, j)) back_i2.insert(e);
      for (EdgeId e : g.open_blue_path(i, j, front)) front_i.insert(e);
      for (EdgeId e : g.open_blue_path(i2, j, front)) front_i2.insert(e);
      std::set<CrossingPair> hits;
      for (EdgeId e : back_i)
        for (const CrossEntry& ce : d_.crossings[g.edge_index(e)])
          if (back_i2.count(ce.other) || front_i2.count(ce.other))
            hits.insert(make_crossing(e, ce.other));
      for (EdgeId e : back_i2)
        for (const CrossEntry& ce : d_.crossings[g.edge_index(e)])
          if (front_i.count(ce.other)) hits.insert(make_crossing(e, ce.other));
      for (const CrossingPair& c : hits)
        out.push_back({c, CrossTag::PathPair, i, i2});
    }
  }
  return out;
}

AssociationSet Associator::associated(int j) const {
  j = wrap(j);
  AssociationSet out{j, y_set(j), {}, {}};
  BetaData bd = beta_data(j);
  for (int beta : bd.S) out.X[beta] = x_set(beta, j);

  std::map<CrossingPair, std::string> seen;
  auto claim = [&](const TaggedCrossing& tc, const std::string& where) {
    std::string label = where + ":" + to_string(tc.tag);
    auto [it, fresh] = seen.emplace(tc.cross, label);
    if (!fresh)
      throw FalsificationError("crossing " + to_string(tc.cross) +
                               " claimed twice for " + cycle_label(j) + ": " +
                               it->second + " and " + label);
  };
  for (const TaggedCrossing& tc : out.Y) claim(tc, "Y");
  for (const auto& [beta, list] : out.X)
    for (const TaggedCrossing& tc : list)
      claim(tc, "X[" + std::to_string(beta) + "]");
  out.claimed.reserve(seen.size());
  for (const auto& [c, label] : seen) out.claimed.push_back(c);
  return out;
}

std::vector<std::string> Associator::guarantee_check(int j) const {
  j = wrap(j);
  ClassPartition part = classify(j);
  const int fwd_gap = *rep_.a[j];
  const int back_gap = *rep_.b[j];
  const int big = *rep_.max_gap;
  std::vector<std::string> out;
  auto miss = [&](int i, const char* what, int from, int to) {
    out.push_back(ring_label(i) + " classed " +
                  to_string(part.class_of[i]) + " around " + cycle_label(j) +
                  " but its " + what + " window [" + std::to_string(wrap(from)) +
                  ", " + std::to_string(wrap(to)) + "] misses the cycle");
  };
  for (int i = 0; i < d_.graph.m; ++i) {
    switch (part.class_of[i]) {
      case VClass::Cplus:
        if (!path_crosses(j, i, j, j + fwd_gap)) miss(i, "forward", j, j + fwd_gap);
        break;
      case VClass::Cminus:
        if (!path_crosses(j, i, j - back_gap, j)) miss(i, "back", j - back_gap, j);
        break;
      case VClass::Tplus:
        if (!path_crosses(j, i, j, j + big)) miss(i, "forward", j, j + big);
        break;
      case VClass::Tminus:
        if (!path_crosses(j, i, j - big, j)) miss(i, "back", j - big, j);
        break;
      case VClass::Tzero:
        break;
    }
  }
  return out;
}

std::vector<std::string> Associator::interleaving_check() const {
  const int n = d_.graph.n;
  std::vector<BetaData> bds;
  bds.reserve(n);
  for (int j = 0; j < n; ++j) bds.push_back(beta_data(j));
  std::vector<std::string> out;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (j == k || !circ_lt(cyc(j, n), cyc(k, n))) continue;
      for (const auto& [beta, Tj] : bds[j].T) {
        for (const auto& [beta2, Tk] : bds[k].T) {
          std::vector<int> common;
          std::set_intersection(Tj.begin(), Tj.end(), Tk.begin(), Tk.end(),
                                std::back_inserter(common));
          if (common.empty()) continue;
          if (!circ_leq(cyc(j, n), cyc(k - beta2, n)))
            out.push_back(
                ring_label(common.front()) + " sits in bucket " +
                std::to_string(beta) + " of " + cycle_label(j) +
                " and bucket " + std::to_string(beta2) + " of " +
                cycle_label(k) +
                ", yet the first cycle lies inside the second's back window");
        }
      }
    }
  }
  return out;
}

Association associate_all(const Drawing& d) {
  Associator a(d);
  Association out{d.graph.m, d.graph.n, a.report(), {}, {}, {}};
  for (int j = 0; j < d.graph.n; ++j) {
    out.classes.push_back(a.classify(j));
    out.beta.push_back(a.beta_data(j));
    out.sets.push_back(a.associated(j));
  }
  return out;
}

ClassPartition classify(const Drawing& d, int j) {
  return Associator(d).classify(j);
}

BetaData beta_data(const Drawing& d, int j) {
  return Associator(d).beta_data(j);
}

std::vector<TaggedCrossing> y_set(const Drawing& d, int j) {
  return Associator(d).y_set(j);
}

std::vector<TaggedCrossing> x_set(const Drawing& d, int beta, int j) {
  return Associator(d).x_set(beta, j);
}

AssociationSet associated(const Drawing& d, int j) {
  return Associator(d).associated(j);
}

std::string association_json(const Association& a) {
  ordered_json root;
  root["format"] = "crossring-association/1";
  root["m"] = a.m;
  root["n"] = a.n;
  root["robust"] = a.report.robust;
  root["max_gap"] = a.report.max_gap.value();
  ordered_json per_j = ordered_json::array();
  for (int j = 0; j < a.n; ++j) {
    ordered_json row;
    row["j"] = j;
    row["b"] = a.report.b[j].value();
    row["a"] = a.report.a[j].value();
    ordered_json classes = ordered_json::array();
    for (VClass c : a.classes[j].class_of) classes.push_back(to_string(c));
    row["classes"] = classes;
    row["bbar"] = a.beta[j].bbar;
    row["S"] = a.beta[j].S;
    ordered_json tbuckets = ordered_json::object();
    for (const auto& [beta, rings] : a.beta[j].T)
      tbuckets[std::to_string(beta)] = rings;
    row["T"] = tbuckets;
    auto entry = [](const TaggedCrossing& tc) {
      ordered_json e;
      e["edges"] = {to_string(tc.cross.e), to_string(tc.cross.f)};
      e["tag"] = to_string(tc.tag);
      if (tc.ring >= 0) e["ring"] = tc.ring;
      if (tc.ring2 >= 0) e["ring2"] = tc.ring2;
      return e;
    };
    ordered_json yj = ordered_json::array();
    for (const TaggedCrossing& tc : a.sets[j].Y) yj.push_back(entry(tc));
    row["Y"] = yj;
    ordered_json xj = ordered_json::object();
    for (const auto& [beta, list] : a.sets[j].X) {
      ordered_json arr = ordered_json::array();
      for (const TaggedCrossing& tc : list) arr.push_back(entry(tc));
      xj[std::to_string(beta)] = arr;
    }
    row["X"] = xj;
    ordered_json claimed = ordered_json::array();
    for (const CrossingPair& c : a.sets[j].claimed)
      claimed.push_back({to_string(c.e), to_string(c.f)});
    row["claimed"] = claimed;
    row["size"] = a.sets[j].claimed.size();
    per_j.push_back(row);
  }
  root["per_j"] = per_j;
  return root.dump(2) + "\n";
}

}  // namespace crossring
