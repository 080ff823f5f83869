// Copyright 2026 The jp2c Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON and DOT encodings. Subset vertices are sorted element arrays ([1,2]);
// fixture vertices are fixed-width binary strings ("101"). Objects keep
// insertion order so output is byte-stable.

#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "jp2c/error.hpp"
#include "jp2c/graphs.hpp"
#include "jp2c/subset.hpp"
#include "jp2c/sweep.hpp"
#include "jp2c/types.hpp"
#include "jp2c/verify.hpp"

namespace jp2c {

using Json = nlohmann::ordered_json;

/// Vertex encoding for subset-labelled graphs over [n].
struct SetCodec {
  int n;

  Json write(const ElementSet& s) const { return Json(s.elements()); }
  ElementSet read(const Json& j) const {
    if (!j.is_array()) fail(ErrorCode::kInvalidArgument, "a subset vertex is an array of elements");
    std::vector<int> elems;
    for (const auto& e : j) {
      if (!e.is_number_integer()) fail(ErrorCode::kInvalidArgument, "subset elements must be integers");
      elems.push_back(e.get<int>());
    }
    return ElementSet::of(n, elems);
  }
  std::string label(const ElementSet& s) const { return s.to_string(); }
};

/// Vertex encoding for fixtures whose vertices are numbered by binary value.
struct BinaryCodec {
  int width;

  std::string label(int v) const {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
      if ((v >> i) & 1) s[static_cast<std::size_t>(width - 1 - i)] = '1';
    }
    return s;
  }
  Json write(int v) const { return label(v); }
  int parse(const std::string& s) const {
    if (static_cast<int>(s.size()) != width || s.find_first_not_of("01") != std::string::npos) {
      fail(ErrorCode::kInvalidArgument, "'" + s + "' is not a " + std::to_string(width) + "-digit binary label");
    }
    return std::stoi(s, nullptr, 2);
  }
  int read(const Json& j) const {
    if (!j.is_string()) fail(ErrorCode::kInvalidArgument, "a fixture vertex is a binary string");
    return parse(j.get<std::string>());
  }
};

inline Json descriptor(const JohnsonGraph& g) { return {{"kind", "johnson"}, {"n", g.n()}, {"k", g.k()}}; }
inline Json descriptor(const QJGraph& g) { return {{"kind", "qj"}, {"n", g.n()}, {"levels", g.levels().values()}}; }
inline Json complete_descriptor(int n) { return {{"kind", "complete"}, {"n", n}}; }
inline Json fixture_descriptor(const Fixture& f) { return {{"kind", "fixture"}, {"name", f.name}}; }

template <class Codec, class V>
Json path_json(const Codec& c, const Path<V>& p) {
  Json out = Json::array();
  for (const auto& w : p) out.push_back(c.write(w));
  return out;
}

template <class Codec, class V>
Json quad_json(const Codec& c, const EndpointQuad<V>& q) {
  return {{"u", c.write(q.u)}, {"v", c.write(q.v)}, {"x", c.write(q.x)}, {"y", c.write(q.y)}};
}

template <class Codec>
auto read_quad(const Codec& c, const Json& j) {
  return EndpointQuad{c.read(j.at("u")), c.read(j.at("v")), c.read(j.at("x")), c.read(j.at("y"))};
}

template <class Codec>
auto read_path(const Codec& c, const Json& j) {
  if (!j.is_array()) fail(ErrorCode::kInvalidArgument, "a path is an array of vertices");
  Path<decltype(c.read(j))> p;
  for (const auto& w : j) p.push_back(c.read(w));
  return p;
}

template <class Codec, class V>
Json solution_json(const Codec& c, const P2CSolution<V>& s) {
  return {{"path_uv", path_json(c, s.path_uv)}, {"path_xy", path_json(c, s.path_xy)}};
}

inline Json report_json(const CheckReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations) vs.push_back({{"code", std::string(to_string(v.code))}, {"detail", v.detail}});
  return {{"valid", r.valid}, {"violations", std::move(vs)}};
}

template <class Codec, class V>
Json sweep_json(const Codec& c, Json graph, const std::string& constructor, const SweepSummary<V>& s) {
  Json out{{"graph", std::move(graph)}, {"mode", to_string(s.config.mode)}, {"constructor", constructor}};
  if (s.config.mode == SweepMode::kSampled) {
    out["seed"] = s.config.seed;
    out["count"] = s.config.count;
  }
  out["total"] = s.total;
  out["valid"] = s.valid;
  out["invalid"] = s.invalid;
  out["errors"] = s.errors;
  Json fs = Json::array();
  for (const auto& f : s.failures) fs.push_back({{"quad", quad_json(c, f.quad)}, {"reason", f.reason}});
  out["failures"] = std::move(fs);
  return out;
}

/// Vertex and edge lists; each edge once, as (smaller, larger) in vertex order.
template <GraphView G, class Codec>
Json graph_json(const G& g, const Codec& c, Json desc) {
  const auto vs = g.vertices();
  Json vertices = Json::array();
  Json edges = Json::array();
  for (const auto& a : vs) {
    vertices.push_back(c.write(a));
    for (const auto& b : g.neighbors(a)) {
      if (a < b) edges.push_back(Json::array({c.write(a), c.write(b)}));
    }
  }
  return {{"graph", std::move(desc)}, {"vertex_count", vs.size()}, {"edge_count", edges.size()},
          {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

namespace detail {

inline std::string dot_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace detail

/// DOT export. Each highlighted path gets its own edge attributes; all other
/// edges are drawn grey.
template <GraphView G, class Codec>
std::string to_dot(const G& g, const Codec& c,
                   const std::vector<std::pair<Path<typename G::vertex_type>, std::string>>& highlight = {}) {
  using V = typename G::vertex_type;
  std::map<std::pair<V, V>, std::string> styled;
  for (const auto& [path, attrs] : highlight) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const auto& a = path[i];
      const auto& b = path[i + 1];
      styled[a < b ? std::pair{a, b} : std::pair{b, a}] = attrs;
    }
  }
  std::ostringstream out;
  out << "graph G {\n  node [shape=box, fontname=\"monospace\"];\n";
  const auto vs = g.vertices();
  for (const auto& a : vs) out << "  " << detail::dot_quote(c.label(a)) << ";\n";
  for (const auto& a : vs) {
    for (const auto& b : g.neighbors(a)) {
      if (!(a < b)) continue;
      auto it = styled.find({a, b});
      out << "  " << detail::dot_quote(c.label(a)) << " -- " << detail::dot_quote(c.label(b)) << " ["
          << (it == styled.end() ? std::string("color=\"gray70\"") : it->second) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

inline constexpr const char* kDotFirstPath = "color=\"red\", penwidth=3";
inline constexpr const char* kDotSecondPath = "color=\"blue\", penwidth=3, style=\"dashed\"";

}  // namespace jp2c
