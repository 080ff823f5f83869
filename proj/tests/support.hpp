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

// Test-side reference implementations. Deliberately naive and independent of
// the library: plain vectors of ints, no bit tricks, no pruning.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "jp2c/jp2c.hpp"

namespace ref {

using Set = std::vector<int>;  // sorted elements

/// All k-subsets of {1..n} by plain recursion, ordered by bit-vector value.
inline std::vector<Set> k_subsets(int n, int k) {
  std::vector<Set> out;
  Set cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int e = next; e <= n; ++e) {
      cur.push_back(e);
      rec(e + 1);
      cur.pop_back();
    }
  };
  rec(1);
  auto value = [](const Set& s) {
    std::uint64_t v = 0;
    for (int e : s) v += std::uint64_t{1} << e;
    return v;
  };
  std::sort(out.begin(), out.end(), [&](const Set& a, const Set& b) { return value(a) < value(b); });
  return out;
}

inline int common(const Set& a, const Set& b) {
  int c = 0;
  for (int e : a) c += std::count(b.begin(), b.end(), e);
  return c;
}

inline bool subset_of(const Set& a, const Set& b) { return static_cast<int>(a.size()) == common(a, b); }

inline jp2c::ElementSet to_es(int n, const Set& s) { return jp2c::ElementSet::of(n, std::span<const int>(s)); }

/// Explicit adjacency matrix of J(n,k) or QJ(n,levels), from the definitions.
struct Explicit {
  std::vector<Set> labels;
  std::vector<std::vector<bool>> adj;

  int size() const { return static_cast<int>(labels.size()); }
  int index_of(const Set& s) const {
    return static_cast<int>(std::find(labels.begin(), labels.end(), s) - labels.begin());
  }
};

inline Explicit explicit_qj(int n, const std::vector<int>& levels) {
  Explicit g;
  for (int a : levels) {
    for (auto& s : k_subsets(n, a)) g.labels.push_back(s);
  }
  const int m = g.size();
  g.adj.assign(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m), false));
  auto level = [&](const Set& s) { return static_cast<int>(std::find(levels.begin(), levels.end(), int(s.size())) - levels.begin()); };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const Set& a = g.labels[static_cast<std::size_t>(i)];
      const Set& b = g.labels[static_cast<std::size_t>(j)];
      const int la = level(a), lb = level(b);
      bool e = false;
      if (la == lb) e = common(a, b) == static_cast<int>(a.size()) - 1;
      if (la + 1 == lb) e = subset_of(a, b);
      if (lb + 1 == la) e = subset_of(b, a);
      g.adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
    }
  }
  return g;
}

inline Explicit explicit_johnson(int n, int k) { return explicit_qj(n, {k}); }

/// Naive DFS: does a path from s to t through exactly the vertices of `room` exist?
inline bool naive_path_exists(const std::vector<std::vector<bool>>& adj, std::vector<bool> room, int s, int t) {
  const int left = static_cast<int>(std::count(room.begin(), room.end(), true));
  std::function<bool(int, int)> go = [&](int head, int remaining) -> bool {
    if (remaining == 0) return head == t;
    if (head == t) return false;
    for (int w = 0; w < static_cast<int>(adj.size()); ++w) {
      if (!room[static_cast<std::size_t>(w)] || !adj[static_cast<std::size_t>(head)][static_cast<std::size_t>(w)]) continue;
      room[static_cast<std::size_t>(w)] = false;
      if (go(w, remaining - 1)) return true;
      room[static_cast<std::size_t>(w)] = true;
    }
    return false;
  };
  if (!room[static_cast<std::size_t>(s)] || !room[static_cast<std::size_t>(t)]) return false;
  room[static_cast<std::size_t>(s)] = false;
  return go(s, left - 1);
}

inline bool naive_hamilton_exists(const std::vector<std::vector<bool>>& adj, int s, int t) {
  return naive_path_exists(adj, std::vector<bool>(adj.size(), true), s, t);
}

/// Naive P2C existence: enumerate every u-v path avoiding x and y, then ask
/// for an x-y Hamilton path of the rest.
inline bool naive_p2c_exists(const std::vector<std::vector<bool>>& adj, int u, int v, int x, int y) {
  const int m = static_cast<int>(adj.size());
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  used[static_cast<std::size_t>(u)] = true;
  std::function<bool(int)> go = [&](int head) -> bool {
    if (head == v) {
      std::vector<bool> room(static_cast<std::size_t>(m));
      for (int w = 0; w < m; ++w) room[static_cast<std::size_t>(w)] = !used[static_cast<std::size_t>(w)];
      return naive_path_exists(adj, room, x, y);
    }
    for (int w = 0; w < m; ++w) {
      if (used[static_cast<std::size_t>(w)] || w == x || w == y || !adj[static_cast<std::size_t>(head)][static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = true;
      if (go(w)) return true;
      used[static_cast<std::size_t>(w)] = false;
    }
    return false;
  };
  return go(u);
}

/// Independent cover checker on labelled vertices: `adjacent` and the full
/// vertex list define the graph.
template <class V, class Adj>
bool naive_is_cover(const std::vector<V>& all, Adj adjacent, const jp2c::EndpointQuad<V>& q, const jp2c::P2CSolution<V>& sol) {
  auto joins = [](const std::vector<V>& p, const V& a, const V& b) {
    return !p.empty() && ((p.front() == a && p.back() == b) || (p.front() == b && p.back() == a));
  };
  if (!joins(sol.path_uv, q.u, q.v) || !joins(sol.path_xy, q.x, q.y)) return false;
  for (const auto* p : {&sol.path_uv, &sol.path_xy}) {
    for (std::size_t i = 0; i + 1 < p->size(); ++i) {
      if (!adjacent((*p)[i], (*p)[i + 1])) return false;
    }
  }
  std::vector<V> seen = sol.path_uv;
  seen.insert(seen.end(), sol.path_xy.begin(), sol.path_xy.end());
  std::vector<V> want = all;
  std::sort(seen.begin(), seen.end());
  std::sort(want.begin(), want.end());
  return seen == want;
}

/// Adjacency from the definitions, on ElementSets, for J and QJ alike.
inline bool qj_adjacent_ref(const std::vector<int>& levels, const jp2c::ElementSet& a, const jp2c::ElementSet& b) {
  const Set sa = a.elements(), sb = b.elements();
  auto level = [&](const Set& s) { return static_cast<int>(std::find(levels.begin(), levels.end(), int(s.size())) - levels.begin()); };
  const int la = level(sa), lb = level(sb);
  if (la == static_cast<int>(levels.size()) || lb == static_cast<int>(levels.size())) return false;
  if (la == lb) return common(sa, sb) == static_cast<int>(sa.size()) - 1;
  if (la + 1 == lb) return subset_of(sa, sb);
  if (lb + 1 == la) return subset_of(sb, sa);
  return false;
}

inline std::vector<jp2c::ElementSet> es_vertices(int n, const std::vector<int>& levels) {
  std::vector<jp2c::ElementSet> out;
  for (int a : levels) {
    for (auto& s : k_subsets(n, a)) out.push_back(to_es(n, s));
  }
  return out;
}

/// Every ordered quad of distinct vertices.
template <class V, class F>
void for_each_quad(const std::vector<V>& vs, F&& f) {
  for (const auto& u : vs)
    for (const auto& v : vs)
      for (const auto& x : vs)
        for (const auto& y : vs) {
          if (u == v || u == x || u == y || v == x || v == y || x == y) continue;
          f(jp2c::EndpointQuad<V>{u, v, x, y});
        }
}

}  // namespace ref
