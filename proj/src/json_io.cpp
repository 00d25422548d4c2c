#include <json.hpp>

#include "crossring/drawing.hpp"
#include "crossring/errors.hpp"

namespace crossring {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string chirality_token(std::int8_t c) { return c > 0 ? "+" : "-"; }

std::int8_t parse_chirality(const ordered_json& v) {
  if (!v.is_string()) throw ParseError("chirality must be a string");
  std::string s = v.get<std::string>();
  if (s == "+") return 1;
  if (s == "-" || s == "\xE2\x88\x92") return -1;
  throw ParseError("chirality must be \"+\" or \"-\", got \"" + s + "\"");
}

int require_int(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

const ordered_json& require_object(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_object())
    throw ParseError(std::string("missing object field \"") + key + "\"");
  return j[key];
}

std::string require_string(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw ParseError(std::string("missing string field \"") + key + "\"");
  return j[key].get<std::string>();
}

}  // namespace

std::string Drawing::to_json() const {
  ordered_json root;
  root["m"] = graph.m;
  root["n"] = graph.n;
  ordered_json rot = ordered_json::object();
  for (int idx = 0; idx < graph.num_vertices(); ++idx) {
    ordered_json arr = ordered_json::array();
    for (EdgeId e : rotations[idx]) arr.push_back(to_string(e));
    rot[to_string(graph.vertex_at(idx))] = std::move(arr);
  }
  root["rotations"] = std::move(rot);
  ordered_json edges = ordered_json::object();
  for (int idx = 0; idx < graph.num_edges(); ++idx) {
    EdgeId e = graph.edge_at(idx);
    ordered_json obj;
    obj["tail"] = to_string(graph.tail(e));
    obj["head"] = to_string(graph.head(e));
    ordered_json arr = ordered_json::array();
    for (const CrossEntry& entry : crossings[idx]) {
      ordered_json c;
      c["other"] = to_string(entry.other);
      c["chirality"] = chirality_token(entry.chirality);
      arr.push_back(std::move(c));
    }
    obj["crossings"] = std::move(arr);
    edges[to_string(e)] = std::move(obj);
  }
  root["edges"] = std::move(edges);
  return root.dump(2) + "\n";
}

Drawing Drawing::from_json(const std::string& text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("not valid JSON: ") + ex.what());
  }
  if (!root.is_object()) throw ParseError("top level must be an object");
  int m = require_int(root, "m");
  int n = require_int(root, "n");
  if (m < 3 || n < 3) throw ParseError("m and n must both be at least 3");

  Drawing d;
  d.graph = ProductGraph(m, n);
  d.rotations.resize(d.graph.num_vertices());
  d.crossings.resize(d.graph.num_edges());

  const ordered_json& rot = require_object(root, "rotations");
  if ((int)rot.size() != d.graph.num_vertices())
    throw ParseError("rotations must have exactly " +
                     std::to_string(d.graph.num_vertices()) + " entries");
  std::vector<bool> seen_vertex(d.graph.num_vertices(), false);
  for (auto it = rot.begin(); it != rot.end(); ++it) {
    VertexId v = parse_vertex(it.key());
    int vidx;
    try {
      vidx = d.graph.vertex_index(v);
    } catch (const PreconditionError& ex) {
      throw ParseError(ex.what());
    }
    if (seen_vertex[vidx]) throw ParseError("duplicate vertex " + it.key());
    seen_vertex[vidx] = true;
    if (!it.value().is_array() || it.value().size() != 4)
      throw ParseError("rotation at " + it.key() +
                       " must be an array of 4 edge tokens");
    for (int t = 0; t < 4; ++t) {
      if (!it.value()[t].is_string())
        throw ParseError("rotation entries must be edge tokens");
      EdgeId e = parse_edge(it.value()[t].get<std::string>());
      try {
        d.graph.check_edge(e);
      } catch (const PreconditionError& ex) {
        throw ParseError(ex.what());
      }
      d.rotations[vidx][t] = e;
    }
  }

  const ordered_json& edges = require_object(root, "edges");
  if ((int)edges.size() != d.graph.num_edges())
    throw ParseError("edges must have exactly " +
                     std::to_string(d.graph.num_edges()) + " entries");
  std::vector<bool> seen_edge(d.graph.num_edges(), false);
  for (auto it = edges.begin(); it != edges.end(); ++it) {
    EdgeId e = parse_edge(it.key());
    int eidx;
    try {
      eidx = d.graph.edge_index(e);
    } catch (const PreconditionError& ex) {
      throw ParseError(ex.what());
    }
    if (seen_edge[eidx]) throw ParseError("duplicate edge " + it.key());
    seen_edge[eidx] = true;
    const ordered_json& obj = it.value();
    if (!obj.is_object()) throw ParseError("edge " + it.key() + " must map to an object");
    if (parse_vertex(require_string(obj, "tail")) != d.graph.tail(e))
      throw ParseError("edge " + it.key() + " has wrong tail");
    if (parse_vertex(require_string(obj, "head")) != d.graph.head(e))
      throw ParseError("edge " + it.key() + " has wrong head");
    if (!obj.contains("crossings") || !obj["crossings"].is_array())
      throw ParseError("edge " + it.key() + " needs a crossings array");
    for (const ordered_json& c : obj["crossings"]) {
      if (!c.is_object()) throw ParseError("crossing entries must be objects");
      EdgeId other = parse_edge(require_string(c, "other"));
      try {
        d.graph.check_edge(other);
      } catch (const PreconditionError& ex) {
        throw ParseError(ex.what());
      }
      if (!c.contains("chirality"))
        throw ParseError("crossing entry lacks chirality");
      d.crossings[eidx].push_back({other, parse_chirality(c["chirality"])});
    }
  }
  return d;
}

std::string drawing_digest(const Drawing& d) {
  std::string text = d.to_json();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char byte : text) {
    h ^= byte;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int t = 15; t >= 0; --t) {
    out[t] = hex[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace crossring
