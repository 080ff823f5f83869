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

// Paired 2-disjoint path covers of QJ(n,A).
//
// The construction works on a "stack", a contiguous run of levels of A. It
// first builds a local cover of the levels spanned by the four endpoints, by
// cases on how the endpoints are spread over those levels, and then expands
// it: the levels below are absorbed by replacing one edge inside the lowest
// spanned level with a detour through a Hamilton path of the lower stack, and
// the levels above likewise through an edge of the highest spanned level.
//
// Arrangements that are mirror images of a handled case (for example two
// endpoints on the top level instead of the bottom one) are solved in the
// complemented stack QJ(n, n - A), which reverses the level order, and mapped
// back. The apex level {[n]} is handled last by splicing [n] into an edge of
// the level below it.

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "jp2c/detail/views.hpp"
#include "jp2c/error.hpp"
#include "jp2c/graphs.hpp"
#include "jp2c/hamilton.hpp"
#include "jp2c/p2c_johnson.hpp"
#include "jp2c/subset.hpp"
#include "jp2c/types.hpp"

namespace jp2c {
namespace detail {

/// Neighbours of a on level `to` (an adjacent QJ level), ascending.
inline std::vector<Mask> cross_neighbors(int n, Mask a, int to) {
  if (to > bits::card(a)) return bits::supersets(a, to, bits::ground(n));
  return bits::subsets(a, to);
}

inline bool avoided(Mask w, const std::vector<Mask>& avoid) { return std::find(avoid.begin(), avoid.end(), w) != avoid.end(); }

inline std::optional<Mask> pick_one(int n, Mask a, int to, const std::vector<Mask>& avoid) {
  for (Mask c : cross_neighbors(n, a, to)) {
    if (!avoided(c, avoid)) return c;
  }
  return std::nullopt;
}

/// Distinct neighbours a' of a and b' of b on level `to`, both outside
/// `avoid`; first pair in scan order.
inline std::optional<std::pair<Mask, Mask>> pick_two(int n, Mask a, Mask b, int to, const std::vector<Mask>& avoid) {
  const auto for_b = cross_neighbors(n, b, to);
  for (Mask ca : cross_neighbors(n, a, to)) {
    if (avoided(ca, avoid)) continue;
    for (Mask cb : for_b) {
      if (cb != ca && !avoided(cb, avoid)) return std::pair{ca, cb};
    }
  }
  return std::nullopt;
}

inline std::vector<int> slice(const std::vector<int>& st, std::size_t lo, std::size_t hi) {
  return {st.begin() + static_cast<std::ptrdiff_t>(lo), st.begin() + static_cast<std::ptrdiff_t>(hi + 1)};
}

inline MaskPath tail_from(const MaskPath& p, std::size_t at) { return {p.begin() + static_cast<std::ptrdiff_t>(at), p.end()}; }
inline MaskPath head_to(const MaskPath& p, std::size_t at) { return {p.begin(), p.begin() + static_cast<std::ptrdiff_t>(at + 1)}; }

class QjBuilder {
 public:
  QjBuilder(int n, const BuildOptions& opt) : n_(n), all_(bits::ground(n)), opt_(opt) {}

  /// Cover of QJ(n, st); every level in [1, n-1].
  MaskSolution solve(const std::vector<int>& st, const MaskQuad& q) const {
    std::size_t lo = st.size(), hi = 0;
    for (Mask w : q.as_array()) {
      const std::size_t i = index(st, w);
      lo = std::min(lo, i);
      hi = std::max(hi, i);
    }
    MaskSolution sol = local(slice(st, lo, hi), q);
    sol = expand(st, lo, hi, std::move(sol));
    check(st, q, sol, "qj cover");
    return sol;
  }

  /// Absorbs the levels of `st` outside [lo, hi] into a cover of st[lo..hi].
  MaskSolution expand(const std::vector<int>& st, std::size_t lo, std::size_t hi, MaskSolution sol) const {
    std::vector<Mask> used;
    if (lo > 0) {
      used = splice_level(sol, st[lo], st[lo - 1], slice(st, 0, lo - 1), {});
      if (used.empty()) {
        fail(ErrorCode::kSpliceEdgeNotFound, "no edge inside level " + std::to_string(st[lo]) + " to expand downward");
      }
    }
    if (hi + 1 < st.size()) {
      // The upward edge must not touch the downward splice ends.
      if (splice_level(sol, st[hi], st[hi + 1], slice(st, hi + 1, st.size() - 1), used).empty()) {
        fail(ErrorCode::kSpliceEdgeNotFound, "no edge inside level " + std::to_string(st[hi]) + " to expand upward");
      }
    }
    return sol;
  }

  /// Local cover of QJ(n, st) where the endpoints occupy the bottom and top
  /// level of st.
  MaskSolution local(const std::vector<int>& st, const MaskQuad& q) const {
    const std::size_t top = st.size() - 1;
    std::vector<std::size_t> occupied;
    std::array<int, 64> count{};
    for (Mask w : q.as_array()) {
      const std::size_t i = index(st, w);
      if (count[i]++ == 0) occupied.push_back(i);
    }
    std::sort(occupied.begin(), occupied.end());

    MaskSolution sol;
    if (occupied.size() == 1) {
      sol = p2c_johnson(all_, st[0], q, opt_);
    } else if (occupied.size() == 2) {
      if (count[0] == 2) {
        sol = aligned(st, q, [&](const MaskQuad& c) { return at(st, c.u, 0) && at(st, c.v, 0); })
                  ? with(st, q, [&](const MaskQuad& c) { return at(st, c.u, 0) && at(st, c.v, 0); }, &QjBuilder::two_levels_aligned)
                  : with(st, q, [&](const MaskQuad& c) { return at(st, c.u, 0) && at(st, c.x, 0); }, &QjBuilder::two_levels_crossed);
      } else if (count[0] == 3) {
        sol = with(st, q, [&](const MaskQuad& c) { return at(st, c.y, top); }, &QjBuilder::two_levels_three_low);
      } else {
        sol = mirrored(st, q);
      }
    } else if (occupied.size() == 3) {
      const std::size_t mid = occupied[1];
      if (count[0] == 2) {
        auto pair_low = [&](const MaskQuad& c) { return at(st, c.u, 0) && at(st, c.v, 0) && at(st, c.x, mid); };
        sol = aligned(st, q, pair_low)
                  ? with(st, q, pair_low, &QjBuilder::three_levels_pair_low)
                  : with(st, q, [&](const MaskQuad& c) { return at(st, c.u, 0) && at(st, c.x, 0) && at(st, c.v, mid); },
                         &QjBuilder::three_levels_split_low);
      } else if (count[mid] == 2) {
        auto pair_mid = [&](const MaskQuad& c) { return at(st, c.x, mid) && at(st, c.y, mid) && at(st, c.u, 0); };
        sol = aligned(st, q, pair_mid)
                  ? with(st, q, pair_mid, &QjBuilder::three_levels_pair_mid)
                  : with(st, q, [&](const MaskQuad& c) { return at(st, c.u, mid) && at(st, c.x, mid) && at(st, c.v, 0); },
                         &QjBuilder::three_levels_split_mid);
      } else {
        sol = mirrored(st, q);
      }
    } else {
      const std::size_t j = occupied[1], s = occupied[2];
      auto shape = [&st](std::size_t pv, std::size_t px, std::size_t py) {
        return [&st, pv, px, py](const MaskQuad& c) {
          return at(st, c.u, 0) && at(st, c.v, pv) && at(st, c.x, px) && at(st, c.y, py);
        };
      };
      if (aligned(st, q, shape(j, s, top))) {
        sol = with(st, q, shape(j, s, top), &QjBuilder::four_levels_nested);
      } else if (aligned(st, q, shape(s, j, top))) {
        sol = with(st, q, shape(s, j, top), &QjBuilder::four_levels_interleaved);
      } else {
        sol = with(st, q, shape(top, j, s), &QjBuilder::four_levels_enclosing);
      }
    }
    check(st, q, sol, "local cover");
    return sol;
  }

 private:
  using CaseFn = MaskSolution (QjBuilder::*)(const std::vector<int>&, const MaskQuad&) const;

  static std::size_t index(const std::vector<int>& st, Mask w) {
    const int c = bits::card(w);
    for (std::size_t i = 0; i < st.size(); ++i) {
      if (st[i] == c) return i;
    }
    fail(ErrorCode::kNotAVertex, describe(w) + " lies outside the stack");
  }

  static bool at(const std::vector<int>& st, Mask w, std::size_t level) { return bits::card(w) == st[level]; }

  template <class Pred>
  static bool aligned(const std::vector<int>&, const MaskQuad& q, const Pred& pred) {
    return find_orientation(q, pred).has_value();
  }

  template <class Pred>
  MaskSolution with(const std::vector<int>& st, const MaskQuad& q, Pred&& pred, CaseFn fn) const {
    auto o = find_orientation(q, pred);
    if (!o) fail(ErrorCode::kConstructionCheckFailed, "no orientation matches the case shape");
    return o->restore((this->*fn)(st, o->apply(q)));
  }

  void check(const std::vector<int>& st, const MaskQuad& q, const MaskSolution& sol, const char* what) const {
    if (opt_.debug_check) require_valid(StackView{n_, st}, q, sol, what);
  }

  MaskPath ham(const std::vector<int>& st, Mask s, Mask t) const { return ham_stack(n_, st, s, t, opt_); }

  Mask complement(Mask w) const { return all_ & ~w; }

  MaskSolution mirrored(const std::vector<int>& st, const MaskQuad& q) const {
    std::vector<int> flipped;
    for (auto it = st.rbegin(); it != st.rend(); ++it) flipped.push_back(n_ - *it);
    MaskSolution sol = local(flipped, {complement(q.u), complement(q.v), complement(q.x), complement(q.y)});
    for (Mask& w : sol.path_uv) w = complement(w);
    for (Mask& w : sol.path_xy) w = complement(w);
    return sol;
  }

  /// Replaces the first edge inside `level` (path_uv first) that avoids
  /// `skip` by a detour through a Hamilton path of `other`, entered from level
  /// `to`. Returns the ends of the replaced edge, or nothing.
  std::vector<Mask> splice_level(MaskSolution& sol, int level, int to, const std::vector<int>& other,
                                 const std::vector<Mask>& skip) const {
    for (MaskPath* p : {&sol.path_uv, &sol.path_xy}) {
      for (std::size_t i = 0; i + 1 < p->size(); ++i) {
        const Mask a = (*p)[i], b = (*p)[i + 1];
        if (bits::card(a) != level || bits::card(b) != level || avoided(a, skip) || avoided(b, skip)) continue;
        auto picked = pick_two(n_, a, b, to, {});
        if (!picked) continue;
        splice_after(*p, i, ham(other, picked->first, picked->second));
        return {a, b};
      }
    }
    return {};
  }

  /// Smallest vertex of `level` outside `exclude` that has a neighbour on
  /// level `to` outside `avoid`; returns the vertex and that neighbour.
  std::pair<Mask, Mask> stand_in(int level, const std::vector<Mask>& exclude, int to, const std::vector<Mask>& avoid) const {
    std::optional<std::pair<Mask, Mask>> found;
    bits::for_each_subset(all_, level, [&](Mask a) {
      if (found || avoided(a, exclude)) return;
      if (auto c = pick_one(n_, a, to, avoid)) found = std::pair{a, *c};
    });
    if (!found) fail(ErrorCode::kSelectionExhausted, "no stand-in vertex on level " + std::to_string(level));
    return *found;
  }

  // u, v low; x, y on the top level.
  MaskSolution two_levels_aligned(const std::vector<int>& st, const MaskQuad& q) const {
    const std::size_t top = st.size() - 1;
    return {ham(slice(st, 0, top - 1), q.u, q.v), ham_johnson(all_, st[top], q.x, q.y, opt_)};
  }

  // u, x low; v, y on the top level.
  MaskSolution two_levels_crossed(const std::vector<int>& st, const MaskQuad& q) const {
    const std::size_t top = st.size() - 1;
    const int high = st[top];
    const int below = st[top - 1];
    if (high < n_ - 1) {
      // Hamilton path u..x below the top; leave it through an edge ab of
      // its highest level, enter the top level at distinct a', b' != v, y.
      const MaskPath low = ham(slice(st, 0, top - 1), q.u, q.x);
      for (std::size_t i = 0; i + 1 < low.size(); ++i) {
        const Mask a = low[i], b = low[i + 1];
        if (bits::card(a) != below || bits::card(b) != below) continue;
        auto picked = pick_two(n_, a, b, high, {q.v, q.y});
        if (!picked) continue;
        MaskSolution upper = p2c_johnson(all_, high, {picked->first, q.v, picked->second, q.y}, opt_);
        return {concat(head_to(low, i), upper.path_uv), concat(reversed(tail_from(low, i + 1)), upper.path_xy)};
      }
      fail(ErrorCode::kSpliceEdgeNotFound, "Hamilton path has no usable edge below the top level");
    }
    // The top level is J(n, n-1): walk it v..y, and drop from an edge cd to
    // distinct c', d' != u, x of the level below.
    const MaskPath upper = ham_johnson(all_, high, q.v, q.y, opt_);
    for (std::size_t i = 0; i + 1 < upper.size(); ++i) {
      const Mask c = upper[i], d = upper[i + 1];
      auto picked = pick_two(n_, c, d, below, {q.u, q.x});
      if (!picked) continue;
      MaskSolution lower = solve(slice(st, 0, top - 1), {picked->first, q.u, picked->second, q.x});
      return {concat(reversed(lower.path_uv), reversed(head_to(upper, i))), concat(reversed(lower.path_xy), tail_from(upper, i + 1))};
    }
    fail(ErrorCode::kSpliceEdgeNotFound, "top-level Hamilton path has no usable edge");
  }

  // u, v, x low; y on the top level.
  MaskSolution two_levels_three_low(const std::vector<int>& st, const MaskQuad& q) const {
    const std::size_t top = st.size() - 1;
    const auto [a, a_up] = stand_in(st[0], {q.u, q.v, q.x}, st[1], {q.y});
    MaskSolution sol = p2c_johnson(all_, st[0], {q.u, q.v, q.x, a}, opt_);
    sol.path_xy = concat(std::move(sol.path_xy), ham(slice(st, 1, top), a_up, q.y));
    return sol;
  }

  // u, v low; x on a middle level; y on the top level.
  MaskSolution three_levels_pair_low(const std::vector<int>& st, const MaskQuad& q) const {
    const std::size_t top = st.size() - 1;
    return {ham_johnson(all_, st[0], q.u, q.v, opt_), ham(slice(st, 1, top), q.x, q.y)};
  }

  // u, x low; v on a middle level; y on the top level.
  MaskSolution three_levels_split_low(const std::vector<int>& st, const MaskQuad& q) const {
    const std::size_t top = st.size() - 1;
    const std::size_t mid = index(st, q.v);
    const auto [a, a_up] = stand_in(st[mid], {q.v}, st[mid + 1], {q.y});
    MaskSolution sol = solve(slice(st, 0, mid), {q.u, q.v, q.x, a});
    sol.path_xy = concat(std::move(sol.path_xy), ham(slice(st, mid + 1, top), a_up, q.y));
    return sol;
  }

  // x, y on a middle level; u low; v on the top level.
  MaskSolution three_levels_pair_mid(const std::vector<int>& st, const MaskQuad& q) const {
    const std::size_t top = st.size() - 1;
    const std::size_t mid = index(st, q.x);
    const auto [a, a_down] = stand_in(st[mid], {q.x, q.y}, st[mid - 1], {q.u});
    const auto [b, b_up] = stand_in(st[mid], {q.x, q.y, a}, st[mid + 1], {q.v});
    MaskSolution inner = p2c_johnson(all_, st[mid], {q.x, q.y, a, b}, opt_);
    MaskPath uv = concat(ham(slice(st, 0, mid - 1), q.u, a_down), inner.path_xy);
    return {concat(std::move(uv), ham(slice(st, mid + 1, top), b_up, q.v)), std::move(inner.path_uv)};
  }

  // u, x on a middle level; v low; y on the top level.
  MaskSolution three_levels_split_mid(const std::vector<int>& st, const MaskQuad& q) const {
    const std::size_t top = st.size() - 1;
    const std::size_t mid = index(st, q.u);
    const auto [a, a_down] = stand_in(st[mid], {q.u, q.x}, st[mid - 1], {q.v});
    const auto [b, b_up] = stand_in(st[mid], {q.u, q.x, a}, st[mid + 1], {q.y});
    MaskSolution inner = p2c_johnson(all_, st[mid], {q.u, a, q.x, b}, opt_);
    return {concat(std::move(inner.path_uv), reversed(ham(slice(st, 0, mid - 1), q.v, a_down))),
            concat(std::move(inner.path_xy), ham(slice(st, mid + 1, top), b_up, q.y))};
  }

  // One endpoint per level, bottom to top: u, v, x, y.
  MaskSolution four_levels_nested(const std::vector<int>& st, const MaskQuad& q) const {
    const std::size_t top = st.size() - 1;
    const std::size_t j = index(st, q.v);
    return {ham(slice(st, 0, j), q.u, q.v), ham(slice(st, j + 1, top), q.x, q.y)};
  }

  // Bottom to top: u, x, v, y.
  MaskSolution four_levels_interleaved(const std::vector<int>& st, const MaskQuad& q) const {
    const std::size_t top = st.size() - 1;
    const std::size_t j = index(st, q.x), s = index(st, q.v);
    const auto [a, a_down] = stand_in(st[j], {q.x}, st[j - 1], {q.u});
    const auto [b, b_up] = stand_in(st[s], {q.v}, st[s + 1], {q.y});
    MaskSolution inner = solve(slice(st, j, s), {a, q.v, b, q.x});
    return {concat(ham(slice(st, 0, j - 1), q.u, a_down), inner.path_uv),
            concat(reversed(std::move(inner.path_xy)), ham(slice(st, s + 1, top), b_up, q.y))};
  }

  // Bottom to top: u, x, y, v.
  MaskSolution four_levels_enclosing(const std::vector<int>& st, const MaskQuad& q) const {
    const std::size_t top = st.size() - 1;
    const std::size_t j = index(st, q.x), s = index(st, q.y);
    const auto [a, a_down] = stand_in(st[j], {q.x}, st[j - 1], {q.u});
    const auto [b, b_up] = stand_in(st[s], {q.y}, st[s + 1], {q.v});
    MaskSolution inner = solve(slice(st, j, s), {a, b, q.x, q.y});
    MaskPath uv = concat(ham(slice(st, 0, j - 1), q.u, a_down), inner.path_uv);
    return {concat(std::move(uv), ham(slice(st, s + 1, top), b_up, q.v)), std::move(inner.path_xy)};
  }

  int n_;
  Mask all_;
  const BuildOptions& opt_;
};

inline std::vector<int> without_apex(const QJGraph& g) {
  std::vector<int> levels = g.levels().values();
  if (!levels.empty() && levels.back() == g.n()) levels.pop_back();
  return levels;
}

/// Cover of QJ(n, A + {n}) built from covers of QJ(n, A).
inline MaskSolution absorb_apex(int n, const std::vector<int>& below, const MaskQuad& q, const BuildOptions& opt) {
  const Mask apex = bits::ground(n);
  const int top = below.back();
  const QjBuilder builder(n, opt);
  auto o = find_orientation(q, [&](const MaskQuad& c) { return c.u == apex; });
  if (!o) {
    MaskSolution sol = builder.solve(below, q);
    for (MaskPath* p : {&sol.path_uv, &sol.path_xy}) {
      for (std::size_t i = 0; i + 1 < p->size(); ++i) {
        if (bits::card((*p)[i]) == top && bits::card((*p)[i + 1]) == top) {
          splice_after(*p, i, {apex});
          return sol;
        }
      }
    }
    fail(ErrorCode::kSpliceEdgeNotFound, "no edge inside the level below the apex");
  }
  // The apex is an endpoint: step from it to a substitute c' on the level below.
  const MaskQuad c = o->apply(q);
  Mask sub = 0;
  bits::for_each_subset(apex, top, [&](Mask w) {
    if (sub == 0 && w != c.v && w != c.x && w != c.y) sub = w;
  });
  if (sub == 0) fail(ErrorCode::kSelectionExhausted, "no substitute for the apex endpoint");
  MaskSolution sol = builder.solve(below, {sub, c.v, c.x, c.y});
  sol.path_uv.insert(sol.path_uv.begin(), apex);
  return o->restore(std::move(sol));
}

inline void require_qj_quad(const QJGraph& g, const EndpointQuad<ElementSet>& q) {
  for (const auto& w : q.as_array()) {
    if (!g.contains(w)) fail(ErrorCode::kBadQuad, w.to_string() + " is not a vertex");
  }
  require_quad(q);
}

inline void require_qj_range(const QJGraph& g) {
  if (g.n() < 4 || g.vertex_count() < 4) {
    fail(ErrorCode::kOutOfTheoremRange, "QJ needs n >= 4 and at least 4 vertices");
  }
}

}  // namespace detail

/// 1-based inclusive range of level indices into A.
struct LevelRange {
  std::size_t lo = 1;
  std::size_t hi = 1;
};

/// Distinct neighbours a' of a and b' of b on level `level_to`, outside
/// `avoid`. With two vertices to avoid the level pair must be one where such
/// neighbours are guaranteed: upward into a level below n-1, downward into a
/// level above 1, or between levels 1 and n-1.
inline std::pair<ElementSet, ElementSet> pick_two_avoiding(int level_from, int level_to, const ElementSet& a,
                                                           const ElementSet& b, const std::vector<ElementSet>& avoid) {
  const int n = a.ground();
  if (a == b || a.cardinality() != level_from || b.cardinality() != level_from || b.ground() != n || level_to == level_from ||
      level_to < 1 || level_to > n) {
    fail(ErrorCode::kLemmaPreconditionViolated, "need two distinct vertices on level_from and a different level_to");
  }
  const bool special = (level_from == 1 && level_to == n - 1) || (level_from == n - 1 && level_to == 1);
  const bool guaranteed = level_to > level_from ? (level_to < n - 1 || special) : (level_to > 1 || special);
  if (avoid.size() > 2 || (avoid.size() == 2 && !guaranteed) || n < 4) {
    fail(ErrorCode::kLemmaPreconditionViolated, "distinct neighbours are not guaranteed for these levels");
  }
  std::vector<Mask> av;
  for (const auto& w : avoid) av.push_back(w.bits());
  auto picked = detail::pick_two(n, a.bits(), b.bits(), level_to, av);
  if (!picked) fail(ErrorCode::kSelectionExhausted, "no admissible neighbour pair");
  return {ElementSet(n, picked->first), ElementSet(n, picked->second)};
}

/// Smallest neighbour of a on the adjacent level `level_to` other than s.
inline ElementSet pick_one_avoiding(int level_from, int level_to, const ElementSet& a, const std::optional<ElementSet>& avoid) {
  const int n = a.ground();
  if (a.cardinality() != level_from || level_to == level_from || level_to < 1 || level_to > n) {
    fail(ErrorCode::kLemmaPreconditionViolated, "a must lie on level_from and level_to must differ");
  }
  std::vector<Mask> av;
  if (avoid) av.push_back(avoid->bits());
  auto picked = detail::pick_one(n, a.bits(), level_to, av);
  if (!picked) fail(ErrorCode::kSelectionExhausted, "every neighbour is avoided");
  return ElementSet(n, *picked);
}

/// Turns a cover of the levels range.lo..range.hi of g (n not in A) into a
/// cover of all of g.
inline P2CSolution<ElementSet> ep2c_expand(const QJGraph& g, LevelRange range, const P2CSolution<ElementSet>& local,
                                           const BuildOptions& opt = {}) {
  const auto& levels = g.levels().values();
  if (levels.back() == g.n()) fail(ErrorCode::kLemmaPreconditionViolated, "expansion needs n outside A");
  if (range.lo < 1 || range.lo > range.hi || range.hi > levels.size()) fail(ErrorCode::kInvalidArgument, "bad level range");
  detail::MaskSolution sol{detail::to_masks(local.path_uv), detail::to_masks(local.path_xy)};
  const detail::QjBuilder builder(g.n(), opt);
  sol = builder.expand(levels, range.lo - 1, range.hi - 1, std::move(sol));
  return detail::to_sets(g.n(), sol);
}

/// Cover of g whose level set contains n, from the covers of the levels below.
inline P2CSolution<ElementSet> absorb_apex(const QJGraph& g, const EndpointQuad<ElementSet>& q, const BuildOptions& opt = {}) {
  detail::require_qj_range(g);
  if (!g.levels().contains(g.n()) || g.levels().size() < 2) {
    fail(ErrorCode::kLemmaPreconditionViolated, "apex absorption needs n and at least one other level in A");
  }
  detail::require_qj_quad(g, q);
  return detail::to_sets(g.n(), detail::absorb_apex(g.n(), detail::without_apex(g), detail::to_masks(q), opt));
}

/// Paired 2-disjoint path cover of QJ(n,A), n >= 4 with at least 4 vertices.
inline P2CSolution<ElementSet> p2c_qj(const QJGraph& g, const EndpointQuad<ElementSet>& q, const BuildOptions& opt = {}) {
  detail::require_qj_range(g);
  detail::require_qj_quad(g, q);
  const auto below = detail::without_apex(g);
  const auto mq = detail::to_masks(q);
  detail::MaskSolution sol = below.size() < g.levels().size() ? detail::absorb_apex(g.n(), below, mq, opt)
                                                              : detail::QjBuilder(g.n(), opt).solve(below, mq);
  return detail::to_sets(g.n(), sol);
}

}  // namespace jp2c
