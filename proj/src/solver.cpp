#include "crossring/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include "crossring/errors.hpp"

namespace crossring {

void SmallGraph::require_valid() const {
  if (num_vertices < 1) throw PreconditionError("graph needs a vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
      throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self loop");
    if (!seen.insert(std::minmax(u, v)).second)
      throw PreconditionError("duplicate edge");
  }
  std::vector<std::vector<int>> adj(num_vertices);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> hit(num_vertices, 0);
  std::vector<int> stack{0};
  hit[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!hit[v]) {
        hit[v] = 1;
        stack.push_back(v);
      }
  }
  for (char h : hit)
    if (!h) throw PreconditionError("graph is disconnected");
}

SmallGraph product_cycles(int m, int n) {
  if (m < 3 || n < 3) throw PreconditionError("cycles need length 3");
  SmallGraph g;
  g.num_vertices = m * n;
  auto at = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      g.edges.emplace_back(at(i, j), at(i, (j + 1) % n));
      g.edges.emplace_back(at(i, j), at((i + 1) % m, j));
    }
  return g;
}

SmallGraph cylinder_grid(int rings, int len) {
  if (rings < 1 || len < 3) throw PreconditionError("bad cylinder shape");
  SmallGraph g;
  g.num_vertices = rings * len;
  auto at = [len](int r, int j) { return r * len + j; };
  for (int r = 0; r < rings; ++r)
    for (int j = 0; j < len; ++j) {
      g.edges.emplace_back(at(r, j), at(r, (j + 1) % len));
      if (r + 1 < rings) g.edges.emplace_back(at(r, j), at(r + 1, j));
    }
  return g;
}

SmallGraph complete_graph(int n) {
  if (n < 1) throw PreconditionError("graph needs a vertex");
  SmallGraph g;
  g.num_vertices = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  return g;
}

SmallGraph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw PreconditionError("empty side");
  SmallGraph g;
  g.num_vertices = a + b;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.edges.emplace_back(u, a + v);
  return g;
}

namespace {

std::vector<std::vector<int>> close_group(
    std::vector<std::vector<int>> gens) {
  const size_t n = gens.empty() ? 0 : gens[0].size();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  for (size_t q = 0; q < queue.size(); ++q)
    for (const std::vector<int>& gen : gens) {
      std::vector<int> next(n);
      for (size_t i = 0; i < n; ++i) next[i] = gen[queue[q][i]];
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  return queue;
}

}  // namespace

std::vector<std::vector<int>> product_cycle_automorphisms(int m, int n) {
  if (m < 3 || n < 3) throw PreconditionError("cycles need length 3");
  auto at = [n](int i, int j) { return i * n + j; };
  std::vector<std::vector<int>> gens;
  std::vector<int> p(m * n);
  auto fill = [&](auto&& f) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) p[at(i, j)] = f(i, j);
    gens.push_back(p);
  };
  fill([&](int i, int j) { return at((i + 1) % m, j); });
  fill([&](int i, int j) { return at(i, (j + 1) % n); });
  fill([&](int i, int j) { return at((m - i) % m, j); });
  fill([&](int i, int j) { return at(i, (n - j) % n); });
  if (m == n) fill([&](int i, int j) { return at(j, i); });
  return close_group(gens);
}

Planarization planarize(const SmallGraph& g,
                        const std::vector<std::pair<int, int>>& pairs,
                        const std::vector<std::vector<int>>& order) {
  Planarization pl;
  pl.num_vertices = g.num_vertices + static_cast<int>(pairs.size());
  for (size_t e = 0; e < g.edges.size(); ++e) {
    int prev = g.edges[e].first;
    for (int t : order[e]) {
      pl.segments.emplace_back(prev, g.num_vertices + t);
      prev = g.num_vertices + t;
    }
    pl.segments.emplace_back(prev, g.edges[e].second);
  }
  return pl;
}

namespace {

using BGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

BGraph to_bgl(const Planarization& pl) {
  BGraph bg(pl.num_vertices);
  for (size_t s = 0; s < pl.segments.size(); ++s)
    boost::add_edge(pl.segments[s].first, pl.segments[s].second,
                    static_cast<int>(s), bg);
  return bg;
}

bool bgl_planar(const Planarization& pl) {
  BGraph bg = to_bgl(pl);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool bgl_embedding(const Planarization& pl,
                   std::vector<std::vector<int>>& rotations) {
  BGraph bg = to_bgl(pl);
  std::vector<std::vector<BEdge>> emb(boost::num_vertices(bg));
  bool ok = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(
              emb.begin(), boost::get(boost::vertex_index, bg)));
  if (!ok) return false;
  rotations.assign(emb.size(), {});
  for (size_t v = 0; v < emb.size(); ++v)
    for (BEdge ed : emb[v])
      rotations[v].push_back(boost::get(boost::edge_index, bg, ed));
  return true;
}

bool edges_adjacent(const SmallGraph& g, int a, int b) {
  auto [u1, v1] = g.edges[a];
  auto [u2, v2] = g.edges[b];
  return u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2;
}

// Faces of a rotation system by dart tracing; -1 when the rotations do not
// form a permutation of the incidences.
int trace_face_count(const Planarization& pl,
                     const std::vector<std::vector<int>>& rotations) {
  const int segs = static_cast<int>(pl.segments.size());
  if (static_cast<int>(rotations.size()) != pl.num_vertices) return -1;
  std::vector<std::map<int, int>> slot(pl.num_vertices);
  for (int v = 0; v < pl.num_vertices; ++v)
    for (size_t x = 0; x < rotations[v].size(); ++x) {
      int s = rotations[v][x];
      if (s < 0 || s >= segs) return -1;
      if (pl.segments[s].first != v && pl.segments[s].second != v) return -1;
      if (!slot[v].emplace(s, static_cast<int>(x)).second) return -1;
    }
  for (int s = 0; s < segs; ++s)
    if (!slot[pl.segments[s].first].count(s) ||
        !slot[pl.segments[s].second].count(s))
      return -1;

  // dart 2s runs first -> second, 2s+1 the reverse
  std::vector<char> used(2 * segs, 0);
  int faces = 0;
  for (int d0 = 0; d0 < 2 * segs; ++d0) {
    if (used[d0]) continue;
    ++faces;
    int d = d0;
    do {
      used[d] = 1;
      const int s = d / 2;
      const int head = d % 2 == 0 ? pl.segments[s].second : pl.segments[s].first;
      const std::vector<int>& rot = rotations[head];
      const int at = slot[head].at(s);
      const int s2 = rot[(at + 1) % rot.size()];
      d = pl.segments[s2].first == head ? 2 * s2 : 2 * s2 + 1;
    } while (d != d0);
  }
  return faces;
}

}  // namespace

bool verify_witness(const SmallGraph& g, const CrossingWitness& w) {
  const int E = static_cast<int>(g.edges.size());
  if (w.k != static_cast<int>(w.pairs.size())) return false;
  if (static_cast<int>(w.order.size()) != E) return false;
  for (size_t t = 0; t < w.pairs.size(); ++t) {
    auto [a, b] = w.pairs[t];
    if (a < 0 || b < 0 || a >= E || b >= E || a >= b) return false;
    if (edges_adjacent(g, a, b)) return false;
    if (t > 0 && !(w.pairs[t - 1] < w.pairs[t])) return false;
  }
  std::vector<std::vector<int>> expect(E);
  for (size_t t = 0; t < w.pairs.size(); ++t) {
    expect[w.pairs[t].first].push_back(static_cast<int>(t));
    expect[w.pairs[t].second].push_back(static_cast<int>(t));
  }
  for (int e = 0; e < E; ++e) {
    std::vector<int> got = w.order[e];
    std::sort(got.begin(), got.end());
    if (got != expect[e]) return false;
  }

  const Planarization pl = planarize(g, w.pairs, w.order);
  const int faces = trace_face_count(pl, w.rotations);
  if (faces < 0) return false;
  return pl.num_vertices - static_cast<int>(pl.segments.size()) + faces == 2;
}

namespace {

struct SearchSpace {
  std::vector<std::pair<int, int>> cand;  // non-adjacent edge index pairs
  std::vector<char> first_ok;             // orbit minima, candidates for slot 0
};

SearchSpace build_space(const SmallGraph& g,
                        const std::vector<std::vector<int>>& autos) {
  SearchSpace sp;
  const int E = static_cast<int>(g.edges.size());
  for (int a = 0; a < E; ++a)
    for (int b = a + 1; b < E; ++b)
      if (!edges_adjacent(g, a, b)) sp.cand.emplace_back(a, b);
  sp.first_ok.assign(sp.cand.size(), 1);
  if (autos.empty()) return sp;

  std::map<std::pair<int, int>, int> eidx;
  for (int e = 0; e < E; ++e)
    eidx[std::minmax(g.edges[e].first, g.edges[e].second)] = e;
  std::map<std::pair<int, int>, int> pidx;
  for (size_t p = 0; p < sp.cand.size(); ++p) pidx[sp.cand[p]] = static_cast<int>(p);

  for (const std::vector<int>& sigma : autos) {
    if (static_cast<int>(sigma.size()) != g.num_vertices)
      throw PreconditionError("automorphism size mismatch");
    std::vector<int> emap(E);
    for (int e = 0; e < E; ++e) {
      auto it = eidx.find(std::minmax(sigma[g.edges[e].first],
                                      sigma[g.edges[e].second]));
      if (it == eidx.end())
        throw PreconditionError("permutation is not a graph automorphism");
      emap[e] = it->second;
    }
    for (size_t p = 0; p < sp.cand.size(); ++p) {
      auto [a, b] = sp.cand[p];
      const int image = pidx.at(std::minmax(emap[a], emap[b]));
      if (image < static_cast<int>(p)) sp.first_ok[p] = 0;
    }
  }
  return sp;
}

struct Searcher {
  const SmallGraph& g;
  const SearchSpace& sp;
  std::uint64_t max_nodes;
  std::uint64_t nodes = 0;
  std::vector<int> chosen;
  CrossingWitness hit;
  bool found = false;

  void budget() {
    if (++nodes > max_nodes)
      throw BudgetError("planarity search budget exhausted");
  }

  // Enumerates crossing orders along every edge carrying two or more
  // crossings, testing each planarization.
  bool try_orders(std::vector<std::vector<int>>& order,
                  const std::vector<int>& multi, size_t depth) {
    if (depth == multi.size()) {
      budget();
      const Planarization pl = planarize(g, hit.pairs, order);
      if (!bgl_planar(pl)) return false;
      hit.order = order;
      if (!bgl_embedding(pl, hit.rotations))
        throw FalsificationError("planarity flipped between runs");
      return true;
    }
    std::vector<int>& slot = order[multi[depth]];
    std::sort(slot.begin(), slot.end());
    do {
      if (try_orders(order, multi, depth + 1)) return true;
    } while (std::next_permutation(slot.begin(), slot.end()));
    return false;
  }

  bool leaf() {
    hit.k = static_cast<int>(chosen.size());
    hit.pairs.clear();
    for (int p : chosen) hit.pairs.push_back(sp.cand[p]);
    std::vector<std::vector<int>> order(g.edges.size());
    for (size_t t = 0; t < hit.pairs.size(); ++t) {
      order[hit.pairs[t].first].push_back(static_cast<int>(t));
      order[hit.pairs[t].second].push_back(static_cast<int>(t));
    }
    std::vector<int> multi;
    for (size_t e = 0; e < order.size(); ++e)
      if (order[e].size() >= 2) multi.push_back(static_cast<int>(e));
    return try_orders(order, multi, 0);
  }

  bool subsets(int start, int remaining) {
    if (remaining == 0) return leaf();
    const int limit = static_cast<int>(sp.cand.size()) - remaining;
    for (int p = start; p <= limit; ++p) {
      if (chosen.empty() && !sp.first_ok[p]) continue;
      chosen.push_back(p);
      if (subsets(p + 1, remaining - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

SolveResult exact_crossing_search(
    const SmallGraph& g, int k_max,
    const std::vector<std::vector<int>>& automorphisms,
    std::uint64_t max_nodes) {
  g.require_valid();
  if (k_max < 0) throw PreconditionError("negative crossing budget");
  const SearchSpace sp = build_space(g, automorphisms);

  Searcher se{g, sp, max_nodes};
  SolveResult res;
  for (int k = 0; k <= k_max; ++k) {
    if (k > static_cast<int>(sp.cand.size())) break;
    se.chosen.clear();
    if (se.subsets(0, k)) {
      res.crossing_number = k;
      res.witness = se.hit;
      res.nodes = se.nodes;
      if (!verify_witness(g, res.witness))
        throw FalsificationError(
            "planarity witness failed independent revalidation");
      return res;
    }
  }
  res.nodes = se.nodes;
  return res;
}

std::optional<int> exact_crossing_number(
    const SmallGraph& g, int k_max,
    const std::vector<std::vector<int>>& automorphisms,
    std::uint64_t max_nodes) {
  return exact_crossing_search(g, k_max, automorphisms, max_nodes)
      .crossing_number;
}

BoundResult hks_lower_bound(int m, int n) {
  if (m < 3) throw PreconditionError("need at least three rings");
  if (n < m) throw PreconditionError("bound needs n >= m");

  const Rational n0 =
      Rational(static_cast<std::int64_t>(m + 3) * (m + 3), 2) + Rational(1);
  const Rational nn(n);

  BoundResult out;
  if (nn >= Rational(m, 2) * n0) {
    out.regime = "exact_hks";
    out.value = Rational(static_cast<std::int64_t>(m - 2) * n);
  } else if (nn >= (Rational(m, 4) + Rational(1, 2)) * n0) {
    out.regime = "improved_hks";
    out.value = Rational(static_cast<std::int64_t>(m - 2) * n);
  } else if (m >= 8 && 4 * n <= 5 * (m - 1)) {
    out.regime = "five_sevenths";
    out.value = Rational(5 * static_cast<std::int64_t>(m) * n, 7);
  } else {
    out.regime = "half_bound";
    out.value = Rational(static_cast<std::int64_t>(m - 2) * n, 2);
  }
  out.integer_floor_applies = out.value.den != 1;
  return out;
}

}  // namespace crossring
