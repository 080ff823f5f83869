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

// Hamilton paths between prescribed endpoints.
//
// J(n,k) is split by its largest element e into X (sets without e, a copy of
// J(n-1,k)) and Y (sets with e, a copy of J(n-1,k-1)); the two halves are
// joined through one cross edge or one spliced edge. QJ(n,A) peels its top
// level the same way. Recursion bottoms out at complete graphs (k = 1 or
// k = n-1) and at Johnson graphs of at most 12 vertices, which are searched
// exhaustively and memoized.
//
// Shape guarantee relied on by the cover constructors: every level of a QJ
// stack path with at least 4 vertices carries at least two edges inside that
// level, and the top level always carries at least one.

#include <algorithm>
#include <tuple>
#include <vector>

#include "jp2c/detail/views.hpp"
#include "jp2c/error.hpp"
#include "jp2c/graphs.hpp"
#include "jp2c/oracle.hpp"
#include "jp2c/subset.hpp"
#include "jp2c/types.hpp"

namespace jp2c {
namespace detail {

inline constexpr std::size_t kBaseCaseVertices = 12;

/// s, then everything else in ascending order, then t.
inline MaskPath ham_complete(const std::vector<Mask>& vertices, Mask s, Mask t) {
  MaskPath p;
  p.reserve(vertices.size());
  p.push_back(s);
  for (Mask w : vertices) {
    if (w != s && w != t) p.push_back(w);
  }
  p.push_back(t);
  return p;
}

inline MaskPath ham_johnson_search(Mask ground, int k, Mask s, Mask t) {
  using Key = std::tuple<int, int, Mask, Mask>;
  static MemoCache<Key, MaskPath> cache;
  const int n = bits::card(ground);
  const Key key{n, k, compress(s, ground), compress(t, ground)};
  MaskPath canonical = cache.get_or_compute(key, [&] {
    const auto m = materialize(JohnsonView{bits::ground(n), k});
    auto found = hamilton_bruteforce(m.graph, m.index_of(std::get<2>(key)), m.index_of(std::get<3>(key)));
    if (!found) fail(ErrorCode::kConstructionCheckFailed, "base case has no Hamilton path");
    MaskPath out;
    for (int i : *found) out.push_back(m.labels[static_cast<std::size_t>(i)]);
    return out;
  });
  for (Mask& w : canonical) w = expand(w, ground);
  return canonical;
}

/// Hamilton path through all k-subsets of `ground` from s to t (s != t).
inline MaskPath ham_johnson(Mask ground, int k, Mask s, Mask t, const BuildOptions& opt) {
  const int n = bits::card(ground);
  MaskPath out;
  if (k == 1 || k == n - 1) {
    out = ham_complete(bits::subsets(ground, k), s, t);
  } else if (bits::binomial(n, k) <= kBaseCaseVertices) {
    out = ham_johnson_search(ground, k, s, t);
  } else if (2 * k > n) {
    out = ham_johnson(ground, n - k, ground & ~s, ground & ~t, opt);
    for (Mask& w : out) w = ground & ~w;
  } else {
    // n >= 2k, k >= 2. X = sets without e, Y = sets with e.
    const Mask e = bits::bit(bits::highest(ground));
    const Mask rest = ground & ~e;
    auto ham_x = [&](Mask a, Mask b) { return ham_johnson(rest, k, a, b, opt); };
    auto ham_y = [&](Mask a, Mask b) {
      MaskPath p = ham_johnson(rest, k - 1, a & ~e, b & ~e, opt);
      for (Mask& w : p) w |= e;
      return p;
    };
    const bool s_in_y = (s & e) != 0;
    const bool t_in_y = (t & e) != 0;
    if (!s_in_y && !t_in_y) {
      out = ham_x(s, t);
      // a = C+p, b = C+q. C+e is a Y-neighbour of a; b - c + e (c in C) of b.
      const Mask a = out[0], b = out[1];
      const Mask common = a & b;
      const Mask a_y = common | e;
      const Mask b_y = (b & ~(common & (~common + 1))) | e;
      splice_after(out, 0, ham_y(a_y, b_y));
    } else if (s_in_y && t_in_y) {
      out = ham_y(s, t);
      // a = C+p, b = C+q with e in C. a - e + q is an X-neighbour of a;
      // b - e + f for the smallest f outside a and b is one of b.
      const Mask a = out[0], b = out[1];
      const Mask a_x = (a | b) & ~e;
      const Mask free = rest & ~(a | b);
      const Mask b_x = (b & ~e) | (free & (~free + 1));
      splice_after(out, 0, ham_x(a_x, b_x));
    } else if (!s_in_y) {
      // Leave X at its smallest vertex other than s, enter Y next to it.
      Mask a = 0;
      bits::for_each_subset(rest, k, [&](Mask w) {
        if (a == 0 && w != s) a = w;
      });
      Mask a_y = 0;
      for (Mask in = a; in != 0; in &= in - 1) {
        const Mask cand = (a & ~(in & (~in + 1))) | e;
        if (cand != t && (a_y == 0 || cand < a_y)) a_y = cand;
      }
      out = concat(ham_x(s, a), ham_y(a_y, t));
    } else {
      out = reversed(ham_johnson(ground, k, t, s, opt));
    }
  }
  if (opt.debug_check) require_valid(JohnsonView{ground, k}, out, s, t, "ham_johnson");
  return out;
}

/// Hamilton path of QJ(n, levels) from s to t; `levels` ascending, non-empty.
inline MaskPath ham_stack(int n, const std::vector<int>& levels, Mask s, Mask t, const BuildOptions& opt) {
  const Mask all = bits::ground(n);
  if (levels.size() == 1) return ham_johnson(all, levels[0], s, t, opt);

  const int top = levels.back();
  const int below = levels[levels.size() - 2];
  const std::vector<int> lower(levels.begin(), levels.end() - 1);
  const bool s_top = bits::card(s) == top;
  const bool t_top = bits::card(t) == top;
  const bool apex = top == n;

  MaskPath out;
  if (!s_top && !t_top) {
    out = ham_stack(n, lower, s, t, opt);
    bool spliced = false;
    for (std::size_t i = 0; i + 1 < out.size() && !spliced; ++i) {
      const Mask a = out[i], b = out[i + 1];
      if (bits::card(a) != below || bits::card(b) != below) continue;
      if (apex) {
        splice_after(out, i, {all});
      } else {
        // A superset of a that misses b's extra element cannot also contain b.
        const Mask q = b & ~a;
        Mask a_up = 0;
        for (Mask cand : bits::supersets(a, top, all)) {
          if ((cand & q) == 0) {
            a_up = cand;
            break;
          }
        }
        Mask b_up = 0;
        for (Mask cand : bits::supersets(b, top, all)) {
          if (cand != a_up) {
            b_up = cand;
            break;
          }
        }
        splice_after(out, i, ham_johnson(all, top, a_up, b_up, opt));
      }
      spliced = true;
    }
    if (!spliced) fail(ErrorCode::kSpliceEdgeNotFound, "no edge inside level " + std::to_string(below));
  } else if (s_top && t_top) {
    out = ham_johnson(all, top, s, t, opt);
    const Mask c = out[0], d = out[1];
    const Mask p = c & ~d;
    Mask c_down = 0;
    bits::for_each_subset(c, below, [&](Mask w) {
      if (c_down == 0 && (w & p) != 0) c_down = w;
    });
    Mask d_down = 0;
    bits::for_each_subset(d, below, [&](Mask w) {
      if (d_down == 0 && w != c_down) d_down = w;
    });
    splice_after(out, 0, ham_stack(n, lower, c_down, d_down, opt));
  } else if (t_top) {
    // Bridge from the level below the top into the top level.
    Mask b = 0, b_up = 0;
    bits::for_each_subset(all, below, [&](Mask w) {
      if (b != 0 || w == s) return;
      for (Mask cand : bits::supersets(w, top, all)) {
        if (cand != t || apex) {
          b = w;
          b_up = cand;
          return;
        }
      }
    });
    out = ham_stack(n, lower, s, b, opt);
    out = concat(std::move(out), apex ? MaskPath{t} : ham_johnson(all, top, b_up, t, opt));
  } else {
    out = reversed(ham_stack(n, levels, t, s, opt));
  }
  if (opt.debug_check) require_valid(StackView{n, levels}, out, s, t, "ham_stack");
  return out;
}

inline std::vector<Mask> to_masks(const std::vector<ElementSet>& p) {
  std::vector<Mask> out;
  out.reserve(p.size());
  for (const auto& w : p) out.push_back(w.bits());
  return out;
}

inline Path<ElementSet> to_sets(int n, const MaskPath& p) {
  Path<ElementSet> out;
  out.reserve(p.size());
  for (Mask w : p) out.emplace_back(n, w);
  return out;
}

}  // namespace detail

/// Hamilton path of a complete graph on `vertices`: s, the others in
/// ascending order, t.
template <class V>
Path<V> hamilton_complete(const std::vector<V>& vertices, const V& s, const V& t) {
  if (s == t) fail(ErrorCode::kEqualEndpoints, "Hamilton path endpoints must differ");
  if (std::find(vertices.begin(), vertices.end(), s) == vertices.end() ||
      std::find(vertices.begin(), vertices.end(), t) == vertices.end()) {
    fail(ErrorCode::kNotAVertex, "endpoint not among the vertices");
  }
  auto rest = vertices;
  std::sort(rest.begin(), rest.end());
  Path<V> p{s};
  for (const auto& w : rest) {
    if (w != s && w != t) p.push_back(w);
  }
  p.push_back(t);
  return p;
}

inline Path<ElementSet> hamilton_johnson(const JohnsonGraph& g, const ElementSet& s, const ElementSet& t,
                                         const BuildOptions& opt = {}) {
  g.require_vertex(s);
  g.require_vertex(t);
  if (s == t) fail(ErrorCode::kEqualEndpoints, s.to_string());
  return detail::to_sets(g.n(), detail::ham_johnson(bits::ground(g.n()), g.k(), s.bits(), t.bits(), opt));
}

inline Path<ElementSet> hamilton_qj(const QJGraph& g, const ElementSet& s, const ElementSet& t, const BuildOptions& opt = {}) {
  if (!g.contains(s)) fail(ErrorCode::kNotAVertex, s.to_string());
  if (!g.contains(t)) fail(ErrorCode::kNotAVertex, t.to_string());
  if (s == t) fail(ErrorCode::kEqualEndpoints, s.to_string());
  return detail::to_sets(g.n(), detail::ham_stack(g.n(), g.levels().values(), s.bits(), t.bits(), opt));
}

}  // namespace jp2c
