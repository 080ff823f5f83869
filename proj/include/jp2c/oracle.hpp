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

// Exact backtracking oracles for Hamilton paths and paired 2-path covers on
// small explicit graphs (at most 64 vertices, one bit per vertex). The pruning
// rules only discard states that provably cannot be completed, so both
// searches are exact; every witness is still re-checked by the caller.

#include <cstddef>
#include <optional>
#include <vector>

#include "jp2c/error.hpp"
#include "jp2c/graphs.hpp"
#include "jp2c/types.hpp"
#include "jp2c/verify.hpp"

namespace jp2c {

inline constexpr std::size_t kDefaultOracleCap = 20;

namespace detail {

class BitGraph {
 public:
  explicit BitGraph(const GenericGraph& g) : nbr_(g.vertex_count(), 0) {
    if (g.vertex_count() > 64) fail(ErrorCode::kTooLargeForOracle, "oracle graphs are limited to 64 vertices");
    for (std::size_t a = 0; a < g.vertex_count(); ++a) {
      for (int b : g.neighbors(static_cast<int>(a))) nbr_[a] |= Mask{1} << b;
    }
  }

  int size() const { return static_cast<int>(nbr_.size()); }
  Mask nbr(int v) const { return nbr_[static_cast<std::size_t>(v)]; }
  Mask all() const { return nbr_.size() == 64 ? ~Mask{0} : (Mask{1} << nbr_.size()) - 1; }

  /// Vertices of `within` reachable from `from` (which need not be in `within`).
  Mask reach(int from, Mask within) const {
    Mask seen = 0;
    Mask frontier = nbr(from) & within;
    while (frontier != 0) {
      seen |= frontier;
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= nbr(std::countr_zero(f));
      frontier = next & within & ~seen;
    }
    return seen;
  }

 private:
  std::vector<Mask> nbr_;
};

/// Hamilton path of the subgraph induced by `allowed`, from s to t.
class HamiltonSearch {
 public:
  HamiltonSearch(const BitGraph& g, Mask allowed, int s, int t) : g_(g), allowed_(allowed), t_(t) {
    path_.push_back(s);
  }

  std::optional<std::vector<int>> run() {
    const int s = path_.front();
    if (((allowed_ >> s) & 1) == 0 || ((allowed_ >> t_) & 1) == 0) return std::nullopt;
    if (s == t_) return allowed_ == (Mask{1} << s) ? std::optional(path_) : std::nullopt;
    if (extend(s, Mask{1} << s)) return path_;
    return std::nullopt;
  }

 private:
  bool feasible(int head, Mask visited) const {
    const Mask rest = allowed_ & ~visited;
    if (rest == 0) return head == t_;
    if (head == t_) return false;
    if ((g_.reach(head, rest) & rest) != rest) return false;
    const Mask open = rest | (Mask{1} << head);
    for (Mask r = rest; r != 0; r &= r - 1) {
      const int w = std::countr_zero(r);
      const int need = (w == t_) ? 1 : 2;
      if (std::popcount(g_.nbr(w) & open) < need) return false;
    }
    return true;
  }

  bool extend(int head, Mask visited) {
    if (visited == allowed_) return head == t_;
    if (!feasible(head, visited)) return false;
    for (Mask c = g_.nbr(head) & allowed_ & ~visited; c != 0; c &= c - 1) {
      const int next = std::countr_zero(c);
      path_.push_back(next);
      if (extend(next, visited | (Mask{1} << next))) return true;
      path_.pop_back();
    }
    return false;
  }

  const BitGraph& g_;
  Mask allowed_;
  int t_;
  std::vector<int> path_;
};

/// Grows the u-v path first; each time it reaches v, asks for a Hamilton
/// path x-y of what is left.
class P2CSearch {
 public:
  P2CSearch(const BitGraph& g, const EndpointQuad<int>& q) : g_(g), q_(q) {}

  std::optional<P2CSolution<int>> run() {
    path_.push_back(q_.u);
    if (extend(q_.u, Mask{1} << q_.u)) return P2CSolution<int>{path_, second_};
    return std::nullopt;
  }

 private:
  Mask bit(int v) const { return Mask{1} << v; }

  bool feasible(int head, Mask visited) const {
    const Mask rest = g_.all() & ~visited;
    const Mask xy = bit(q_.x) | bit(q_.y);
    const Mask first_room = rest & ~xy;
    const Mask second_room = rest & ~bit(q_.v);
    const Mask from_head = g_.reach(head, first_room);
    if ((from_head & bit(q_.v)) == 0) return false;
    const Mask from_x = g_.reach(q_.x, second_room) | bit(q_.x);
    if ((from_x & bit(q_.y)) == 0) return false;
    if ((rest & ~(from_head | from_x)) != 0) return false;
    const Mask open = rest | bit(head);
    for (Mask r = rest & ~(xy | bit(q_.v)); r != 0; r &= r - 1) {
      if (std::popcount(g_.nbr(std::countr_zero(r)) & open) < 2) return false;
    }
    return true;
  }

  bool extend(int head, Mask visited) {
    if (head == q_.v) {
      HamiltonSearch second(g_, g_.all() & ~visited, q_.x, q_.y);
      if (auto found = second.run()) {
        second_ = std::move(*found);
        return true;
      }
      return false;
    }
    if (!feasible(head, visited)) return false;
    const Mask banned = visited | bit(q_.x) | bit(q_.y);
    for (Mask c = g_.nbr(head) & ~banned; c != 0; c &= c - 1) {
      const int next = std::countr_zero(c);
      path_.push_back(next);
      if (extend(next, visited | bit(next))) return true;
      path_.pop_back();
    }
    return false;
  }

  const BitGraph& g_;
  EndpointQuad<int> q_;
  std::vector<int> path_;
  std::vector<int> second_;
};

}  // namespace detail

/// Exact Hamilton path search; absent iff no s-t Hamilton path exists.
inline std::optional<Path<int>> hamilton_bruteforce(const GenericGraph& g, int s, int t) {
  if (s == t) fail(ErrorCode::kEqualEndpoints, "Hamilton path endpoints must differ");
  if (!g.contains(s) || !g.contains(t)) fail(ErrorCode::kNotAVertex, "endpoint out of range");
  const detail::BitGraph bg(g);
  return detail::HamiltonSearch(bg, bg.all(), s, t).run();
}

/// Exact paired 2-path cover search; absent iff no cover exists.
inline std::optional<P2CSolution<int>> p2c_bruteforce(const GenericGraph& g, const EndpointQuad<int>& q,
                                                      std::size_t cap = kDefaultOracleCap) {
  if (g.vertex_count() > cap || g.vertex_count() > 64) {
    fail(ErrorCode::kTooLargeForOracle, std::to_string(g.vertex_count()) + " vertices exceeds cap " + std::to_string(cap));
  }
  for (int w : q.as_array()) {
    if (!g.contains(w)) fail(ErrorCode::kNotAVertex, "endpoint out of range");
  }
  if (!q.pairwise_distinct()) fail(ErrorCode::kBadQuad, "endpoints must be pairwise distinct");
  const detail::BitGraph bg(g);
  return detail::P2CSearch(bg, q).run();
}

/// Oracle on an implicit graph: materializes it, searches, maps labels back.
template <GraphView G>
  requires(!std::same_as<G, GenericGraph>)
std::optional<P2CSolution<typename G::vertex_type>> p2c_bruteforce(const G& g, const EndpointQuad<typename G::vertex_type>& q,
                                                                   std::size_t cap = kDefaultOracleCap) {
  if (g.vertex_count() > cap) {
    fail(ErrorCode::kTooLargeForOracle, std::to_string(g.vertex_count()) + " vertices exceeds cap " + std::to_string(cap));
  }
  for (const auto& w : q.as_array()) {
    if (!g.contains(w)) fail(ErrorCode::kNotAVertex, describe(w));
  }
  const auto m = materialize(g);
  const EndpointQuad<int> iq{m.index_of(q.u), m.index_of(q.v), m.index_of(q.x), m.index_of(q.y)};
  auto found = p2c_bruteforce(m.graph, iq, cap);
  if (!found) return std::nullopt;
  P2CSolution<typename G::vertex_type> out;
  for (int i : found->path_uv) out.path_uv.push_back(m.labels[static_cast<std::size_t>(i)]);
  for (int i : found->path_xy) out.path_xy.push_back(m.labels[static_cast<std::size_t>(i)]);
  return out;
}

template <GraphView G>
  requires(!std::same_as<G, GenericGraph>)
std::optional<Path<typename G::vertex_type>> hamilton_bruteforce(const G& g, const typename G::vertex_type& s,
                                                                 const typename G::vertex_type& t) {
  const auto m = materialize(g);
  auto found = hamilton_bruteforce(m.graph, m.index_of(s), m.index_of(t));
  if (!found) return std::nullopt;
  Path<typename G::vertex_type> out;
  for (int i : *found) out.push_back(m.labels[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace jp2c
