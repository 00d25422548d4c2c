#include "crossring/verifier.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include <json.hpp>

#include "crossring/errors.hpp"
#include "crossring/zring.hpp"

namespace crossring {

namespace {

void collect_pairs(const Drawing& d, const std::vector<EdgeId>& H,
                   const std::set<EdgeId>& K, std::set<CrossingPair>& out) {
  for (EdgeId e : H)
    for (const CrossEntry& ce : d.crossings[d.graph.edge_index(e)])
      if (K.count(ce.other)) out.insert(make_crossing(e, ce.other));
}

void append(std::vector<std::string>& sink, std::vector<std::string> more) {
  for (std::string& msg : more) sink.push_back(std::move(msg));
}

}  // namespace

ConfigView extract_configuration(const Associator& eng, int j, int beta) {
  const Drawing& d = eng.drawing();
  const int n = d.graph.n;
  j = cyc(j, n).v;
  BetaData bd = eng.beta_data(j);
  if (!std::binary_search(bd.S.begin(), bd.S.end(), beta))
    throw PreconditionError("back distance " + std::to_string(beta) +
                            " is not attained for cycle " + std::to_string(j));
  const std::vector<int>& bucket = bd.T.at(beta);
  if (bucket.empty())
    throw PreconditionError("no ring reaches back exactly " +
                            std::to_string(beta) + " around cycle " +
                            std::to_string(j));

  ConfigView cv;
  cv.j = j;
  cv.beta = beta;
  cv.back = cyc(j - beta, n).v;
  cv.home = j;
  cv.front = cyc(j + *eng.report().a[j], n).v;
  cv.rings = bucket;
  cv.k = d.pair_crossings(d.graph.red_cycle(cv.back),
                          d.graph.red_cycle(cv.home));
  return cv;
}

ConfigView extract_configuration(const Drawing& d, int j, int beta) {
  Associator eng(d);
  return extract_configuration(eng, j, beta);
}

std::vector<std::string> configuration_axioms(const Drawing& d,
                                              const RedComplementTables& tab,
                                              const ConfigView& cv) {
  std::vector<std::string> out;
  const ProductGraph& g = d.graph;
  const std::vector<EdgeId> r_back = g.red_cycle(cv.back);
  const std::vector<EdgeId> r_home = g.red_cycle(cv.home);
  const std::vector<EdgeId> r_front = g.red_cycle(cv.front);

  if (int c = d.pair_crossings(r_front, r_back); c > 0)
    out.push_back("front cycle " + std::to_string(cv.front) +
                  " crosses the back cycle " + std::to_string(cv.back) + " " +
                  std::to_string(c) + " times");
  if (int c = d.pair_crossings(r_front, r_home); c > 0)
    out.push_back("front cycle " + std::to_string(cv.front) +
                  " crosses the home cycle " + std::to_string(cv.home) + " " +
                  std::to_string(c) + " times");
  if (int c = d.pair_crossings(r_back, r_home); c != cv.k)
    out.push_back("back/home crossings recount to " + std::to_string(c) +
                  " against the recorded " + std::to_string(cv.k));

  struct Triple {
    int at, x, y;
  };
  for (Triple t : {Triple{cv.back, cv.home, cv.front},
                   Triple{cv.home, cv.back, cv.front},
                   Triple{cv.front, cv.back, cv.home}})
    if (separates(tab.pm, tab.parts[t.at], t.x, t.y))
      out.push_back("cross cycle " + std::to_string(t.at) +
                    " separates cross cycles " + std::to_string(t.x) +
                    " and " + std::to_string(t.y));

  const RegionPartition& home_part = tab.parts[cv.home];
  for (int i : cv.rings) {
    const std::vector<EdgeId> arc = g.open_blue_path(i, cv.back, cv.front);
    if (int c = d.pair_crossings(arc, r_home); c > 0)
      out.push_back("arc of ring " + std::to_string(i) +
                    " crosses the home cycle " + std::to_string(cv.home) +
                    " " + std::to_string(c) + " times");
    const VertexId mid{i, cv.home};
    const int before = germ_component(tab.pm, home_part,
                                      blue_edge(i, cv.home), mid);
    const int after = germ_component(
        tab.pm, home_part, blue_edge(i, cyc(cv.home + 1, g.n).v), mid);
    if (before != after)
      out.push_back("arc of ring " + std::to_string(i) +
                    " passes through the home cycle " +
                    std::to_string(cv.home) + " at its middle vertex");
  }
  return out;
}

ConfigCheck configuration_inequality(const Drawing& d, const ConfigView& cv) {
  const ProductGraph& g = d.graph;
  ConfigCheck cc;
  cc.s = static_cast<int>(cv.rings.size());
  cc.k = cv.k;

  const std::vector<EdgeId> r_back = g.red_cycle(cv.back);
  const std::vector<EdgeId> r_front = g.red_cycle(cv.front);

  std::vector<std::vector<EdgeId>> initial, final_half;
  for (int i : cv.rings) {
    initial.push_back(g.open_blue_path(i, cv.back, cv.home));
    final_half.push_back(g.open_blue_path(i, cv.home, cv.front));
  }

  std::set<CrossingPair> good;
  for (size_t p = 0; p < cv.rings.size(); ++p)
    for (size_t q = p + 1; q < cv.rings.size(); ++q) {
      const std::set<EdgeId> init_q(initial[q].begin(), initial[q].end());
      const std::set<EdgeId> fin_q(final_half[q].begin(), final_half[q].end());
      const std::set<EdgeId> fin_p(final_half[p].begin(), final_half[p].end());
      collect_pairs(d, initial[p], init_q, good);
      collect_pairs(d, initial[p], fin_q, good);
      collect_pairs(d, initial[q], fin_p, good);
    }
  cc.x1 = static_cast<int>(good.size());

  for (size_t p = 0; p < cv.rings.size(); ++p) {
    if (d.pair_crossings(initial[p], r_front) > 0) ++cc.x2;
    if (d.pair_crossings(final_half[p], r_back) > 0) ++cc.x3;
  }

  cc.holds = cc.k == 0 ? cc.x1 + cc.x2 + cc.x3 >= cc.s - 2
                       : cc.x1 + cc.x2 + cc.x3 + cc.k >= cc.s;
  return cc;
}

std::vector<std::string> disjointness_check(const Association& a) {
  std::map<CrossingPair, std::vector<std::string>> owners;
  for (const AssociationSet& s : a.sets) {
    for (const TaggedCrossing& t : s.Y)
      owners[t.cross].push_back("Y(" + std::to_string(s.j) +
                                "):" + to_string(t.tag));
    for (const auto& [beta, xs] : s.X)
      for (const TaggedCrossing& t : xs)
        owners[t.cross].push_back("X(" + std::to_string(beta) + "," +
                                  std::to_string(s.j) + "):" + to_string(t.tag));
  }
  std::vector<std::string> out;
  for (const auto& [cross, who] : owners) {
    if (who.size() < 2) continue;
    std::string msg = "crossing " + to_string(cross) + " claimed by ";
    for (size_t x = 0; x < who.size(); ++x) {
      if (x) msg += " and ";
      msg += who[x];
    }
    out.push_back(std::move(msg));
  }
  return out;
}

std::vector<std::string> counting_check(const Association& a) {
  std::vector<std::string> out;
  for (int j = 0; j < a.n; ++j) {
    const ClassPartition& cp = a.classes[j];
    const BetaData& bd = a.beta[j];
    const AssociationSet& s = a.sets[j];

    const int moving = cp.count(VClass::Cplus) + cp.count(VClass::Cminus) +
                       cp.count(VClass::Tplus) + cp.count(VClass::Tminus);
    if (static_cast<int>(s.Y.size()) < moving)
      out.push_back("cycle " + std::to_string(j) + " holds " +
                    std::to_string(s.Y.size()) + " Y crossings for " +
                    std::to_string(moving) + " moving rings");

    if (!a.report.b[j]) {
      out.push_back("cycle " + std::to_string(j) +
                    " has no back gap in the report");
      continue;
    }
    const int back_gap = *a.report.b[j];
    for (int beta : bd.S) {
      const int bucket = static_cast<int>(bd.T.at(beta).size());
      const int have =
          s.X.count(beta) ? static_cast<int>(s.X.at(beta).size()) : 0;
      const int need = beta == back_gap ? bucket - 2 : bucket;
      if (have < need)
        out.push_back("cycle " + std::to_string(j) + " holds " +
                      std::to_string(have) + " X crossings at back distance " +
                      std::to_string(beta) + " for a bucket of " +
                      std::to_string(bucket));
    }

    if (static_cast<int>(s.claimed.size()) < a.m - 2)
      out.push_back("cycle " + std::to_string(j) + " claims " +
                    std::to_string(s.claimed.size()) +
                    " crossings, below the floor of " +
                    std::to_string(a.m - 2));
  }
  return out;
}

Certificate certify(const Drawing& d) {
  d.require_valid();

  Certificate c;
  c.digest = drawing_digest(d);
  c.m = d.graph.m;
  c.n = d.graph.n;
  c.total_crossings = d.total_crossings();
  c.required_total = (c.m - 2) * c.n;

  const RobustReport rep = analyze(d);
  c.robust = rep.robust;
  append(c.falsifications, gap_bound_check(rep));

  if (!rep.robust) {
    if (meets_guarantee_threshold(c.m, c.n)) {
      try {
        const ThresholdResult t = threshold_diagnose(d, rep);
        c.diagnosis = "heavy_red_cycle";
        c.heavy_j = t.heavy_j;
      } catch (const FalsificationError& e) {
        c.diagnosis = "dichotomy_failed";
        c.falsifications.push_back(e.what());
      }
    } else {
      c.diagnosis = "not_robust_below_threshold";
    }
    return c;
  }

  c.diagnosis = "robust";
  try {
    const Associator eng(d);
    Association a;
    a.m = c.m;
    a.n = c.n;
    a.report = eng.report();
    for (int j = 0; j < c.n; ++j) {
      a.classes.push_back(eng.classify(j));
      a.beta.push_back(eng.beta_data(j));
      a.sets.push_back(eng.associated(j));
    }

    for (int j = 0; j < c.n; ++j)
      append(c.falsifications, eng.guarantee_check(j));
    append(c.falsifications, eng.interleaving_check());
    append(c.falsifications, counting_check(a));

    const std::vector<std::string> overlaps = disjointness_check(a);
    c.pairwise_disjoint = overlaps.empty();
    append(c.falsifications, overlaps);

    for (int j = 0; j < c.n; ++j)
      for (int beta : a.beta[j].S) {
        if (a.beta[j].T.at(beta).empty()) continue;
        const ConfigView cv = extract_configuration(eng, j, beta);
        append(c.falsifications, configuration_axioms(d, eng.tables(), cv));
        const ConfigCheck cc = configuration_inequality(d, cv);
        if (!cc.holds)
          c.falsifications.push_back(
              "bucket at cycle " + std::to_string(j) + ", back distance " +
              std::to_string(beta) + " breaks its counting floor: x1=" +
              std::to_string(cc.x1) + " x2=" + std::to_string(cc.x2) +
              " x3=" + std::to_string(cc.x3) + " k=" + std::to_string(cc.k) +
              " against s=" + std::to_string(cc.s));
      }

    std::set<CrossingPair> all;
    std::int64_t size_sum = 0;
    for (const AssociationSet& s : a.sets) {
      PerCycleSummary row;
      row.j = s.j;
      row.claimed = static_cast<int>(s.claimed.size());
      for (const TaggedCrossing& t : s.Y) ++row.tags[to_string(t.tag)];
      for (const auto& [beta, xs] : s.X)
        for (const TaggedCrossing& t : xs) ++row.tags[to_string(t.tag)];
      c.per_j.push_back(std::move(row));
      size_sum += static_cast<std::int64_t>(s.claimed.size());
      all.insert(s.claimed.begin(), s.claimed.end());
    }
    c.claimed_total = static_cast<int>(all.size());
    if (size_sum > c.total_crossings)
      c.falsifications.push_back(
          "claimed set sizes sum to " + std::to_string(size_sum) +
          ", past the drawing's " + std::to_string(c.total_crossings) +
          " crossings");
    c.guarantee_met = c.claimed_total >= c.required_total;
  } catch (const FalsificationError& e) {
    c.falsifications.push_back(e.what());
  }
  return c;
}

std::string certificate_json(const Certificate& c) {
  nlohmann::ordered_json out;
  out["format"] = "crossring-certificate/1";
  out["digest"] = c.digest;
  out["m"] = c.m;
  out["n"] = c.n;
  out["robust"] = c.robust;
  out["diagnosis"] = c.diagnosis;
  out["heavy_j"] = c.heavy_j;
  out["total_crossings"] = c.total_crossings;
  out["required_total"] = c.required_total;
  out["claimed_total"] = c.claimed_total;
  out["pairwise_disjoint"] = c.pairwise_disjoint;
  out["guarantee_met"] = c.guarantee_met;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const PerCycleSummary& row : c.per_j) {
    nlohmann::ordered_json r;
    r["j"] = row.j;
    r["claimed"] = row.claimed;
    nlohmann::ordered_json tags;
    for (const auto& [tag, count] : row.tags) tags[tag] = count;
    r["tags"] = std::move(tags);
    rows.push_back(std::move(r));
  }
  out["per_j"] = std::move(rows);
  out["falsifications"] = c.falsifications;
  return out.dump(2) + "\n";
}

Rational hks_statement_bound(int m, int n, const Rational& n0) {
  if (m < 3) throw PreconditionError("need at least three rings");
  const Rational nn(n);
  if (nn < n0)
    throw PreconditionError("the closed-form bound needs n at least n0");
  const Rational guarantee(static_cast<std::int64_t>(m - 2) * n);
  const Rational ramp = (nn - n0) * Rational(m);
  return guarantee < ramp ? guarantee : ramp;
}

}  // namespace crossring
