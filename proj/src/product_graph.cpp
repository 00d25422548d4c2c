#include "crossring/product_graph.hpp"

#include <charconv>

#include "crossring/errors.hpp"

namespace crossring {

EdgeId blue_edge(int i, int j) { return EdgeId{Color::Blue, i, j}; }

EdgeId red_edge(int j, int i) { return EdgeId{Color::Red, j, i}; }

std::string to_string(VertexId v) {
  return "v:" + std::to_string(v.i) + ":" + std::to_string(v.j);
}

std::string to_string(EdgeId e) {
  return std::string(e.color == Color::Blue ? "B:" : "R:") +
         std::to_string(e.a) + ":" + std::to_string(e.b);
}

namespace {

std::array<int, 2> parse_two_ints(const std::string& s, size_t from,
                                  const std::string& whole) {
  size_t colon = s.find(':', from);
  if (colon == std::string::npos)
    throw ParseError("malformed id token: " + whole);
  std::array<int, 2> out{};
  const char* b1 = s.data() + from;
  const char* e1 = s.data() + colon;
  const char* b2 = s.data() + colon + 1;
  const char* e2 = s.data() + s.size();
  auto r1 = std::from_chars(b1, e1, out[0]);
  auto r2 = std::from_chars(b2, e2, out[1]);
  if (r1.ec != std::errc() || r1.ptr != e1 || r2.ec != std::errc() ||
      r2.ptr != e2 || b1 == e1 || b2 == e2)
    throw ParseError("malformed id token: " + whole);
  return out;
}

}  // namespace

VertexId parse_vertex(const std::string& s) {
  if (s.size() < 5 || s.compare(0, 2, "v:") != 0)
    throw ParseError("malformed vertex token: " + s);
  auto [i, j] = parse_two_ints(s, 2, s);
  return VertexId{i, j};
}

EdgeId parse_edge(const std::string& s) {
  if (s.size() < 5 || (s[0] != 'B' && s[0] != 'R') || s[1] != ':')
    throw ParseError("malformed edge token: " + s);
  auto [a, b] = parse_two_ints(s, 2, s);
  return EdgeId{s[0] == 'B' ? Color::Blue : Color::Red, a, b};
}

ProductGraph::ProductGraph(int m_, int n_) : m(m_), n(n_) {
  if (m < 3 || n < 3)
    throw PreconditionError("product graph needs both cycle lengths >= 3");
}

void ProductGraph::check_vertex(VertexId v) const {
  if (v.i < 0 || v.i >= m || v.j < 0 || v.j >= n)
    throw PreconditionError("vertex out of range: " + to_string(v));
}

void ProductGraph::check_edge(EdgeId e) const {
  bool ok = e.color == Color::Blue
                ? (e.a >= 0 && e.a < m && e.b >= 0 && e.b < n)
                : (e.a >= 0 && e.a < n && e.b >= 0 && e.b < m);
  if (!ok) throw PreconditionError("edge out of range: " + to_string(e));
}

int ProductGraph::vertex_index(VertexId v) const {
  check_vertex(v);
  return v.i * n + v.j;
}

VertexId ProductGraph::vertex_at(int idx) const {
  if (idx < 0 || idx >= num_vertices())
    throw PreconditionError("vertex index out of range");
  return VertexId{idx / n, idx % n};
}

int ProductGraph::edge_index(EdgeId e) const {
  check_edge(e);
  if (e.color == Color::Blue) return e.a * n + e.b;
  return m * n + e.a * m + e.b;
}

EdgeId ProductGraph::edge_at(int idx) const {
  if (idx < 0 || idx >= num_edges())
    throw PreconditionError("edge index out of range");
  if (idx < m * n) return blue_edge(idx / n, idx % n);
  idx -= m * n;
  return red_edge(idx / m, idx % m);
}

VertexId ProductGraph::tail(EdgeId e) const {
  check_edge(e);
  if (e.color == Color::Blue) return VertexId{e.a, sub(cyc(e.b, n), 1).v};
  return VertexId{e.b, e.a};
}

VertexId ProductGraph::head(EdgeId e) const {
  check_edge(e);
  if (e.color == Color::Blue) return VertexId{e.a, e.b};
  return VertexId{add(cyc(e.b, m), 1).v, e.a};
}

bool ProductGraph::adjacent(EdgeId e, EdgeId f) const {
  VertexId et = tail(e), eh = head(e), ft = tail(f), fh = head(f);
  return et == ft || et == fh || eh == ft || eh == fh;
}

std::vector<EdgeId> ProductGraph::blue_cycle(int i) const {
  std::vector<EdgeId> out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) out.push_back(blue_edge(i, j));
  check_edge(out.front());
  return out;
}

std::vector<EdgeId> ProductGraph::red_cycle(int j) const {
  std::vector<EdgeId> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) out.push_back(red_edge(j, i));
  check_edge(out.front());
  return out;
}

std::vector<EdgeId> ProductGraph::open_blue_path(int i, int j, int k) const {
  check_vertex(VertexId{i, j});
  check_vertex(VertexId{i, k});
  std::vector<EdgeId> out;
  int steps = fwd_dist(cyc(j, n), cyc(k, n));
  out.reserve(steps);
  for (int t = 1; t <= steps; ++t)
    out.push_back(blue_edge(i, add(cyc(j, n), t).v));
  return out;
}

std::vector<VertexId> ProductGraph::open_blue_path_interior(int i, int j,
                                                            int k) const {
  check_vertex(VertexId{i, j});
  check_vertex(VertexId{i, k});
  std::vector<VertexId> out;
  int steps = fwd_dist(cyc(j, n), cyc(k, n));
  for (int t = 1; t < steps; ++t)
    out.push_back(VertexId{i, add(cyc(j, n), t).v});
  return out;
}

std::array<EdgeId, 4> ProductGraph::incident_edges(VertexId v) const {
  check_vertex(v);
  return {blue_edge(v.i, v.j), blue_edge(v.i, add(cyc(v.j, n), 1).v),
          red_edge(v.j, sub(cyc(v.i, m), 1).v), red_edge(v.j, v.i)};
}

}  // namespace crossring
