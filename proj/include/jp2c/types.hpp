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

#include <algorithm>
#include <array>
#include <compare>
#include <vector>

namespace jp2c {

/// Ordered vertex sequence. Validity (adjacency, no repeats) is a property
/// checked against a host graph by the verify module, not enforced here.
template <class V>
using Path = std::vector<V>;

/// Endpoints of a paired 2-path cover: one path joins u and v, the other x and y.
template <class V>
struct EndpointQuad {
  V u{}, v{}, x{}, y{};

  std::array<V, 4> as_array() const { return {u, v, x, y}; }

  bool pairwise_distinct() const {
    auto a = as_array();
    std::sort(a.begin(), a.end());
    return std::adjacent_find(a.begin(), a.end()) == a.end();
  }

  friend auto operator<=>(const EndpointQuad&, const EndpointQuad&) = default;
  friend bool operator==(const EndpointQuad&, const EndpointQuad&) = default;
};

template <class V>
struct P2CSolution {
  Path<V> path_uv;
  Path<V> path_xy;

  friend bool operator==(const P2CSolution&, const P2CSolution&) = default;
};

/// One of the eight symmetries of the P2C definition: optionally swap the two
/// pairs, then optionally reverse each pair. Used to bring a quad into the
/// arrangement a construction case expects, and to map the answer back.
struct Orientation {
  bool swap_pairs = false;
  bool flip_first = false;
  bool flip_second = false;

  template <class V>
  EndpointQuad<V> apply(const EndpointQuad<V>& q) const {
    V a = q.u, b = q.v, c = q.x, d = q.y;
    if (swap_pairs) {
      std::swap(a, c);
      std::swap(b, d);
    }
    if (flip_first) std::swap(a, b);
    if (flip_second) std::swap(c, d);
    return {a, b, c, d};
  }

  /// Turns a solution of apply(q) into a solution of q.
  template <class V>
  P2CSolution<V> restore(P2CSolution<V> s) const {
    if (flip_first) std::reverse(s.path_uv.begin(), s.path_uv.end());
    if (flip_second) std::reverse(s.path_xy.begin(), s.path_xy.end());
    if (swap_pairs) std::swap(s.path_uv, s.path_xy);
    return s;
  }

  static constexpr std::array<Orientation, 8> all() {
    std::array<Orientation, 8> out{};
    for (int i = 0; i < 8; ++i) out[static_cast<std::size_t>(i)] = {(i & 4) != 0, (i & 2) != 0, (i & 1) != 0};
    return out;
  }
};

}  // namespace jp2c
