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

// Graph models. JohnsonGraph and QJGraph are implicit: adjacency is computed
// from the subsets themselves. GenericGraph is an explicit adjacency list used
// only for fixtures and by the exhaustive oracles.
//
// Every graph type here models the same small "graph view" surface that the
// checkers and oracles are written against:
//
//   using vertex_type = ...;
//   std::size_t vertex_count() const;
//   bool contains(const vertex_type&) const;
//   bool adjacent(const vertex_type&, const vertex_type&) const;
//   std::vector<vertex_type> vertices() const;
//   std::vector<vertex_type> neighbors(const vertex_type&) const;

#include <algorithm>
#include <array>
#include <concepts>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jp2c/error.hpp"
#include "jp2c/subset.hpp"

namespace jp2c {

template <class G>
concept GraphView = requires(const G& g, const typename G::vertex_type& a) {
  { g.vertex_count() } -> std::convertible_to<std::size_t>;
  { g.contains(a) } -> std::convertible_to<bool>;
  { g.adjacent(a, a) } -> std::convertible_to<bool>;
  { g.vertices() } -> std::convertible_to<std::vector<typename G::vertex_type>>;
};

class JohnsonGraph {
 public:
  using vertex_type = ElementSet;

  JohnsonGraph(int n, int k) : n_(n), k_(k) {
    if (n < 0 || n > kMaxGround || k < 0 || k > n) fail(ErrorCode::kInvalidArgument, "J(n,k) needs 0 <= k <= n <= 62");
  }

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t vertex_count() const { return bits::binomial(n_, k_); }
  int degree() const { return k_ * (n_ - k_); }

  bool contains(const ElementSet& s) const { return s.ground() == n_ && s.cardinality() == k_; }

  bool adjacent(const ElementSet& a, const ElementSet& b) const {
    return contains(a) && contains(b) && bits::card(a.bits() ^ b.bits()) == 2;
  }

  /// All k-subsets in bit-vector order.
  std::vector<ElementSet> vertices() const {
    std::vector<ElementSet> out;
    out.reserve(vertex_count());
    bits::for_each_subset(bits::ground(n_), k_, [&](Mask m) { out.emplace_back(n_, m); });
    return out;
  }

  std::vector<ElementSet> neighbors(const ElementSet& s) const {
    require_vertex(s);
    if (k_ == 0 || k_ == n_) return {};
    return same_level_neighbors(s);
  }

  void require_vertex(const ElementSet& s) const {
    if (!contains(s)) fail(ErrorCode::kNotAVertex, s.to_string() + " is not a vertex of J(" + std::to_string(n_) + "," + std::to_string(k_) + ")");
  }

 private:
  int n_;
  int k_;
};

/// Strictly increasing level values a_1 < ... < a_m inside [1, n].
class LevelSpec {
 public:
  LevelSpec(int n, std::vector<int> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) fail(ErrorCode::kInvalidArgument, "level set must be non-empty");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      if (levels_[i] < 1 || levels_[i] > n) fail(ErrorCode::kInvalidArgument, "level " + std::to_string(levels_[i]) + " outside [1,n]");
      if (i > 0 && levels_[i] <= levels_[i - 1]) fail(ErrorCode::kInvalidArgument, "levels must be strictly increasing");
    }
  }

  const std::vector<int>& values() const { return levels_; }
  std::size_t size() const { return levels_.size(); }
  int operator[](std::size_t i) const { return levels_[i]; }
  bool contains(int a) const { return std::binary_search(levels_.begin(), levels_.end(), a); }

 private:
  std::vector<int> levels_;
};

class QJGraph {
 public:
  using vertex_type = ElementSet;

  QJGraph(int n, std::vector<int> levels) : n_(n), levels_(n, std::move(levels)) {
    if (n < 1 || n > kMaxGround) fail(ErrorCode::kInvalidArgument, "QJ(n,A) needs 1 <= n <= 62");
    index_.fill(-1);
    for (std::size_t i = 0; i < levels_.size(); ++i) index_[static_cast<std::size_t>(levels_[i])] = static_cast<int>(i);
  }

  int n() const { return n_; }
  const LevelSpec& levels() const { return levels_; }

  std::size_t vertex_count() const {
    std::size_t total = 0;
    for (int a : levels_.values()) total += bits::binomial(n_, a);
    return total;
  }

  /// Level index (0-based) of a vertex, or -1 if its cardinality is not in A.
  int level_of(const ElementSet& s) const {
    if (s.ground() != n_) return -1;
    return index_[static_cast<std::size_t>(s.cardinality())];
  }

  bool contains(const ElementSet& s) const { return level_of(s) >= 0; }

  bool adjacent(const ElementSet& a, const ElementSet& b) const {
    const int la = level_of(a);
    const int lb = level_of(b);
    if (la < 0 || lb < 0) return false;
    if (la == lb) return bits::card(a.bits() ^ b.bits()) == 2;
    if (la + 1 == lb) return (a.bits() & ~b.bits()) == 0;
    if (lb + 1 == la) return (b.bits() & ~a.bits()) == 0;
    return false;
  }

  /// Level by level, bit-vector order inside each level.
  std::vector<ElementSet> vertices() const {
    std::vector<ElementSet> out;
    out.reserve(vertex_count());
    for (int a : levels_.values()) bits::for_each_subset(bits::ground(n_), a, [&](Mask m) { out.emplace_back(n_, m); });
    return out;
  }

  std::vector<ElementSet> neighbors(const ElementSet& s) const {
    const int li = level_of(s);
    if (li < 0) fail(ErrorCode::kNotAVertex, s.to_string() + " has no level in A");
    const auto level = static_cast<std::size_t>(li);
    const Mask all = bits::ground(n_);
    std::vector<Mask> out = bits::swap_neighbors(s.bits(), all);
    if (level + 1 < levels_.size()) {
      auto up = bits::supersets(s.bits(), levels_[level + 1], all);
      out.insert(out.end(), up.begin(), up.end());
    }
    if (level > 0) {
      bits::for_each_subset(s.bits(), levels_[level - 1], [&](Mask m) { out.push_back(m); });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::vector<ElementSet> result;
    result.reserve(out.size());
    for (Mask m : out) result.emplace_back(n_, m);
    return result;
  }

 private:
  int n_;
  LevelSpec levels_;
  std::array<int, kMaxGround + 2> index_{};
};

/// Explicit undirected simple graph on vertices 0..vertex_count-1.
class GenericGraph {
 public:
  using vertex_type = int;

  GenericGraph() = default;

  GenericGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
      : adjacency_(static_cast<std::size_t>(vertex_count)) {
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) fail(ErrorCode::kInvalidArgument, "edge endpoint out of range");
      if (a == b) fail(ErrorCode::kInvalidArgument, "self-loop");
      adjacency_[static_cast<std::size_t>(a)].push_back(b);
      adjacency_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  std::size_t vertex_count() const { return adjacency_.size(); }
  bool contains(int v) const { return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size(); }

  bool adjacent(int a, int b) const {
    if (!contains(a) || !contains(b)) return false;
    const auto& list = adjacency_[static_cast<std::size_t>(a)];
    return std::binary_search(list.begin(), list.end(), b);
  }

  std::vector<int> vertices() const {
    std::vector<int> out(adjacency_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
    return out;
  }

  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(int v) const { return neighbors(v).size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& list : adjacency_) twice += list.size();
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < adjacency_.size(); ++a) {
      for (int b : adjacency_[a]) {
        if (static_cast<int>(a) < b) out.emplace_back(static_cast<int>(a), b);
      }
    }
    return out;
  }

 private:
  std::vector<std::vector<int>> adjacency_;
};

struct Fixture {
  std::string name;
  GenericGraph graph;
  std::array<int, 4> endpoints{};  // u, v, x, y
  int label_bits = 0;              // vertices print as binary strings of this width
};

/// The 3-cube plus the chords 000-011 and 100-111, vertices indexed by their
/// binary value, with endpoints u=000, v=101, x=100, y=001. Hamilton-connected
/// yet it has no pair of disjoint covering paths for those endpoints.
inline Fixture fig1_counterexample() {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < 8; ++a) {
    for (int d = 0; d < 3; ++d) {
      const int b = a ^ (1 << d);
      if (a < b) edges.emplace_back(a, b);
    }
  }
  edges.emplace_back(0b000, 0b011);
  edges.emplace_back(0b100, 0b111);
  return {"fig1", GenericGraph(8, edges), {0b000, 0b101, 0b100, 0b001}, 3};
}

/// Explicit copy of an implicit graph, with the vertex labels kept alongside.
template <class V>
struct Materialized {
  GenericGraph graph;
  std::vector<V> labels;          // index -> vertex
  std::map<V, int> index;         // vertex -> index

  int index_of(const V& v) const {
    auto it = index.find(v);
    if (it == index.end()) fail(ErrorCode::kNotAVertex, "vertex not in materialized graph");
    return it->second;
  }
};

template <GraphView G>
Materialized<typename G::vertex_type> materialize(const G& g) {
  Materialized<typename G::vertex_type> m;
  m.labels = g.vertices();
  for (std::size_t i = 0; i < m.labels.size(); ++i) m.index.emplace(m.labels[i], static_cast<int>(i));
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    for (std::size_t j = i + 1; j < m.labels.size(); ++j) {
      if (g.adjacent(m.labels[i], m.labels[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  m.graph = GenericGraph(static_cast<int>(m.labels.size()), edges);
  return m;
}

}  // namespace jp2c
