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

// Paired 2-disjoint path covers of complete graphs and Johnson graphs.
//
// J(n,k) with n >= 2k is cut by a split element e into X (sets without e) and
// Y (sets with e). Which case applies depends on how many of the four
// endpoints lie in Y:
//
//   4 / 0  solve inside Y / X, then route the other half through one edge
//   1 / 3  solve the big side with a substitute endpoint, walk the small side
//   2      every element lies in exactly two endpoints, so n = 2k: either one
//          Hamilton path per side, or two sub-covers glued by two cross edges
//
// When some element is hit by other than two endpoints it becomes the split
// element, which keeps the 2-in-Y case for the balanced configurations only.

#include <optional>
#include <tuple>
#include <vector>

#include "jp2c/detail/views.hpp"
#include "jp2c/error.hpp"
#include "jp2c/graphs.hpp"
#include "jp2c/hamilton.hpp"
#include "jp2c/oracle.hpp"
#include "jp2c/subset.hpp"
#include "jp2c/types.hpp"

namespace jp2c {
namespace detail {

/// <u,v> and <x, rest ascending..., y>.
inline MaskSolution p2c_complete(const std::vector<Mask>& vertices, const MaskQuad& q) {
  MaskSolution sol{{q.u, q.v}, {q.x}};
  for (Mask w : vertices) {
    if (w != q.u && w != q.v && w != q.x && w != q.y) sol.path_xy.push_back(w);
  }
  sol.path_xy.push_back(q.y);
  return sol;
}

inline MaskSolution p2c_johnson_search(Mask ground, int k, const MaskQuad& q) {
  using Key = std::tuple<int, int, Mask, Mask, Mask, Mask>;
  static MemoCache<Key, MaskSolution> cache;
  const int n = bits::card(ground);
  const Key key{n, k, compress(q.u, ground), compress(q.v, ground), compress(q.x, ground), compress(q.y, ground)};
  MaskSolution sol = cache.get_or_compute(key, [&] {
    const auto m = materialize(JohnsonView{bits::ground(n), k});
    const EndpointQuad<int> iq{m.index_of(std::get<2>(key)), m.index_of(std::get<3>(key)), m.index_of(std::get<4>(key)),
                               m.index_of(std::get<5>(key))};
    auto found = p2c_bruteforce(m.graph, iq, kBaseCaseVertices);
    if (!found) fail(ErrorCode::kConstructionCheckFailed, "base case has no paired cover");
    MaskSolution out;
    for (int i : found->path_uv) out.path_uv.push_back(m.labels[static_cast<std::size_t>(i)]);
    for (int i : found->path_xy) out.path_xy.push_back(m.labels[static_cast<std::size_t>(i)]);
    return out;
  });
  for (Mask& w : sol.path_uv) w = expand(w, ground);
  for (Mask& w : sol.path_xy) w = expand(w, ground);
  return sol;
}

/// Number of endpoints containing element e.
inline int hits(const MaskQuad& q, Mask e) {
  return ((q.u & e) != 0) + ((q.v & e) != 0) + ((q.x & e) != 0) + ((q.y & e) != 0);
}

/// Split element: the largest element unless it is hit exactly twice, in
/// which case the smallest element hit other than twice; the largest again
/// when every element is hit twice.
inline Mask split_element(Mask ground, const MaskQuad& q) {
  const Mask top = bits::bit(bits::highest(ground));
  if (hits(q, top) != 2) return top;
  for (Mask g = ground; g != 0; g &= g - 1) {
    const Mask e = g & (~g + 1);
    if (hits(q, e) != 2) return e;
  }
  return top;
}

template <class Pred>
std::optional<Orientation> find_orientation(const MaskQuad& q, Pred&& pred) {
  for (const Orientation& o : Orientation::all()) {
    if (pred(o.apply(q))) return o;
  }
  return std::nullopt;
}

inline MaskSolution p2c_johnson(Mask ground, int k, const MaskQuad& q, const BuildOptions& opt);

/// Shared state of one split of J(ground, k) by element e.
struct JohnsonSplit {
  Mask ground;
  int k;
  Mask e;
  const BuildOptions& opt;

  Mask rest() const { return ground & ~e; }
  bool in_y(Mask w) const { return (w & e) != 0; }

  MaskPath ham_x(Mask a, Mask b) const { return ham_johnson(rest(), k, a, b, opt); }
  MaskPath ham_y(Mask a, Mask b) const {
    MaskPath p = ham_johnson(rest(), k - 1, a & ~e, b & ~e, opt);
    for (Mask& w : p) w |= e;
    return p;
  }
  MaskSolution p2c_x(const MaskQuad& q) const { return p2c_johnson(rest(), k, q, opt); }
  MaskSolution p2c_y(const MaskQuad& q) const {
    MaskSolution s = p2c_johnson(rest(), k - 1, {q.u & ~e, q.v & ~e, q.x & ~e, q.y & ~e}, opt);
    for (Mask& w : s.path_uv) w |= e;
    for (Mask& w : s.path_xy) w |= e;
    return s;
  }

  /// X-neighbours (b - e + f) of a Y vertex b, ascending.
  std::vector<Mask> x_neighbors(Mask b) const {
    std::vector<Mask> out;
    for (Mask f = rest() & ~b; f != 0; f &= f - 1) out.push_back((b & ~e) | (f & (~f + 1)));
    std::sort(out.begin(), out.end());
    return out;
  }
  /// Y-neighbours (a - c + e) of an X vertex a, ascending.
  std::vector<Mask> y_neighbors(Mask a) const {
    std::vector<Mask> out;
    for (Mask c = a; c != 0; c &= c - 1) out.push_back((a & ~(c & (~c + 1))) | e);
    std::sort(out.begin(), out.end());
    return out;
  }
};

// All four endpoints in Y. Route X through the first edge ab of the cover:
// with i outside a and b, a - e + i and b - e + i are distinct X-neighbours.
inline MaskSolution case_all_in_y(const JohnsonSplit& sp, const MaskQuad& q) {
  MaskSolution sol = sp.p2c_y(q);
  for (MaskPath* p : {&sol.path_uv, &sol.path_xy}) {
    for (std::size_t at = 0; at + 1 < p->size(); ++at) {
      const Mask a = (*p)[at], b = (*p)[at + 1];
      const Mask free = sp.rest() & ~(a | b);
      if (free == 0) continue;
      const Mask i = free & (~free + 1);
      splice_after(*p, at, sp.ham_x((a & ~sp.e) | i, (b & ~sp.e) | i));
      return sol;
    }
  }
  fail(ErrorCode::kSpliceEdgeNotFound, "no edge of the Y cover admits a replacement element");
}

// No endpoint in Y. Route Y through the first edge ab: removing the smallest
// common element c gives the distinct Y-neighbours a - c + e and b - c + e.
inline MaskSolution case_none_in_y(const JohnsonSplit& sp, const MaskQuad& q) {
  MaskSolution sol = sp.p2c_x(q);
  for (MaskPath* p : {&sol.path_uv, &sol.path_xy}) {
    for (std::size_t at = 0; at + 1 < p->size(); ++at) {
      const Mask a = (*p)[at], b = (*p)[at + 1];
      const Mask common = a & b;
      if (common == 0) continue;
      const Mask c = common & (~common + 1);
      splice_after(*p, at, sp.ham_y((a & ~c) | sp.e, (b & ~c) | sp.e));
      return sol;
    }
  }
  fail(ErrorCode::kSpliceEdgeNotFound, "no edge of the X cover has a common element");
}

// Exactly one endpoint (normalized to u) in Y: cover X with a stand-in a for
// u, then walk Y from u to a Y-neighbour b of a.
inline MaskSolution case_one_in_y(const JohnsonSplit& sp, const MaskQuad& q) {
  const Mask a_pick = [&] {
    Mask a = 0;
    bits::for_each_subset(sp.rest(), sp.k, [&](Mask w) {
      if (a == 0 && w != q.v && w != q.x && w != q.y) a = w;
    });
    return a;
  }();
  for (Mask b : sp.y_neighbors(a_pick)) {
    if (b == q.u) continue;
    MaskSolution inner = sp.p2c_x({a_pick, q.v, q.x, q.y});
    return {concat(sp.ham_y(q.u, b), inner.path_uv), std::move(inner.path_xy)};
  }
  fail(ErrorCode::kSelectionExhausted, "no Y-neighbour of the stand-in vertex");
}

// Exactly one endpoint (normalized to u) outside Y: mirror of the above.
inline MaskSolution case_three_in_y(const JohnsonSplit& sp, const MaskQuad& q) {
  Mask a_pick = 0;
  bits::for_each_subset(sp.rest(), sp.k - 1, [&](Mask w) {
    const Mask a = w | sp.e;
    if (a_pick == 0 && a != q.v && a != q.x && a != q.y) a_pick = a;
  });
  for (Mask b : sp.x_neighbors(a_pick)) {
    if (b == q.u) continue;
    MaskSolution inner = sp.p2c_y({a_pick, q.v, q.x, q.y});
    return {concat(sp.ham_x(q.u, b), inner.path_uv), std::move(inner.path_xy)};
  }
  fail(ErrorCode::kSelectionExhausted, "no X-neighbour of the stand-in vertex");
}

// Two endpoints in Y and n = 2k. One pair per side: a Hamilton path each.
inline MaskSolution case_pair_per_side(const JohnsonSplit& sp, const MaskQuad& q) {
  if (sp.in_y(q.u)) return {sp.ham_y(q.u, q.v), sp.ham_x(q.x, q.y)};
  return {sp.ham_x(q.u, q.v), sp.ham_y(q.x, q.y)};
}

// Two endpoints in Y and n = 2k, normalized so v, y are in Y. Cover X with
// (u,a';x,b') and Y with (a,v;b,y), glued by the cross edges aa' and bb'.
inline MaskSolution case_crossed_pairs(const JohnsonSplit& sp, const MaskQuad& q) {
  std::vector<Mask> ys;
  bits::for_each_subset(sp.rest(), sp.k - 1, [&](Mask w) {
    const Mask y = w | sp.e;
    if (y != q.v && y != q.y) ys.push_back(y);
  });
  for (Mask a : ys) {
    for (Mask b : ys) {
      if (b == a) continue;
      for (Mask a_x : sp.x_neighbors(a)) {
        if (a_x == q.u || a_x == q.x) continue;
        for (Mask b_x : sp.x_neighbors(b)) {
          if (b_x == q.u || b_x == q.x || b_x == a_x) continue;
          MaskSolution low = sp.p2c_x({q.u, a_x, q.x, b_x});
          MaskSolution high = sp.p2c_y({a, q.v, b, q.y});
          return {concat(std::move(low.path_uv), high.path_uv), concat(std::move(low.path_xy), high.path_xy)};
        }
      }
    }
  }
  fail(ErrorCode::kSelectionExhausted, "no two Y vertices with distinct admissible X-neighbours");
}

inline MaskSolution p2c_johnson(Mask ground, int k, const MaskQuad& q, const BuildOptions& opt) {
  const int n = bits::card(ground);
  MaskSolution sol;
  if (k == 1 || k == n - 1) {
    sol = p2c_complete(bits::subsets(ground, k), q);
  } else if (bits::binomial(n, k) <= kBaseCaseVertices) {
    sol = p2c_johnson_search(ground, k, q);
  } else if (2 * k > n) {
    const MaskQuad c{ground & ~q.u, ground & ~q.v, ground & ~q.x, ground & ~q.y};
    sol = p2c_johnson(ground, n - k, c, opt);
    for (Mask& w : sol.path_uv) w = ground & ~w;
    for (Mask& w : sol.path_xy) w = ground & ~w;
  } else {
    const JohnsonSplit sp{ground, k, split_element(ground, q), opt};
    const int in_y = hits(q, sp.e);
    if (in_y == 4) {
      sol = case_all_in_y(sp, q);
    } else if (in_y == 0) {
      sol = case_none_in_y(sp, q);
    } else if (in_y == 1 || in_y == 3) {
      // Normalize the odd endpoint out to u.
      const bool odd_in_y = in_y == 1;
      auto o = find_orientation(q, [&](const MaskQuad& c) { return sp.in_y(c.u) == odd_in_y; });
      const MaskQuad c = o->apply(q);
      sol = o->restore(odd_in_y ? case_one_in_y(sp, c) : case_three_in_y(sp, c));
    } else {
      if (2 * k != n) fail(ErrorCode::kConstructionCheckFailed, "balanced endpoints with n != 2k");
      if (sp.in_y(q.u) == sp.in_y(q.v)) {
        sol = case_pair_per_side(sp, q);
      } else {
        auto o = find_orientation(q, [&](const MaskQuad& c) { return sp.in_y(c.v) && sp.in_y(c.y); });
        const MaskQuad c = o->apply(q);
        sol = o->restore(case_crossed_pairs(sp, c));
      }
    }
  }
  if (opt.debug_check) require_valid(JohnsonView{ground, k}, q, sol, "p2c_johnson");
  return sol;
}

inline void require_quad(const EndpointQuad<ElementSet>& q) {
  if (!q.pairwise_distinct()) fail(ErrorCode::kBadQuad, "endpoints must be pairwise distinct");
}

inline MaskQuad to_masks(const EndpointQuad<ElementSet>& q) { return {q.u.bits(), q.v.bits(), q.x.bits(), q.y.bits()}; }

inline P2CSolution<ElementSet> to_sets(int n, const MaskSolution& s) { return {to_sets(n, s.path_uv), to_sets(n, s.path_xy)}; }

}  // namespace detail

/// Cover of the complete graph on `vertices`: <u,v> and <x, others ascending, y>.
template <class V>
P2CSolution<V> p2c_complete(const std::vector<V>& vertices, const EndpointQuad<V>& q) {
  if (vertices.size() < 4) fail(ErrorCode::kTooFewVertices, "complete graph needs at least 4 vertices");
  if (!q.pairwise_distinct()) fail(ErrorCode::kBadQuad, "endpoints must be pairwise distinct");
  for (const auto& w : q.as_array()) {
    if (std::find(vertices.begin(), vertices.end(), w) == vertices.end()) fail(ErrorCode::kBadQuad, "endpoint not a vertex");
  }
  auto rest = vertices;
  std::sort(rest.begin(), rest.end());
  P2CSolution<V> sol{{q.u, q.v}, {q.x}};
  for (const auto& w : rest) {
    if (w != q.u && w != q.v && w != q.x && w != q.y) sol.path_xy.push_back(w);
  }
  sol.path_xy.push_back(q.y);
  return sol;
}

/// Paired 2-disjoint path cover of J(n,k), n >= 4 and 1 <= k <= n-1. Paths
/// are oriented u -> v and x -> y.
inline P2CSolution<ElementSet> p2c_johnson(const JohnsonGraph& g, const EndpointQuad<ElementSet>& q,
                                           const BuildOptions& opt = {}) {
  if (g.n() < 4 || g.k() < 1 || g.k() > g.n() - 1) {
    fail(ErrorCode::kOutOfTheoremRange, "J(" + std::to_string(g.n()) + "," + std::to_string(g.k()) + ")");
  }
  for (const auto& w : q.as_array()) {
    if (!g.contains(w)) fail(ErrorCode::kBadQuad, w.to_string() + " is not a vertex");
  }
  detail::require_quad(q);
  return detail::to_sets(g.n(), detail::p2c_johnson(bits::ground(g.n()), g.k(), detail::to_masks(q), opt));
}

}  // namespace jp2c
