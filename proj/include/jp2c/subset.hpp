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

// Subsets of a ground set [n] = {1..n} stored in one machine word. Bit e holds
// element e, so bit 0 is always clear. Every vertex of every graph in this
// library is one of these, and "bit-vector order" (ascending unsigned value)
// is the canonical order wherever a construction has to pick something.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "jp2c/error.hpp"

namespace jp2c {

using Mask = std::uint64_t;

inline constexpr int kMaxGround = 62;

namespace bits {

constexpr Mask bit(int e) { return Mask{1} << e; }

/// Mask of [n].
constexpr Mask ground(int n) { return n <= 0 ? 0 : ((Mask{1} << (n + 1)) - 1) & ~Mask{1}; }

constexpr int card(Mask m) { return std::popcount(m); }

constexpr int lowest(Mask m) { return std::countr_zero(m); }

constexpr int highest(Mask m) { return 63 - std::countl_zero(m); }

/// Scatter the low bits of `packed` into the set positions of `where`.
constexpr Mask deposit(Mask packed, Mask where) {
  Mask out = 0;
  while (where != 0 && packed != 0) {
    const Mask low = where & (~where + 1);
    if (packed & 1) out |= low;
    packed >>= 1;
    where &= where - 1;
  }
  return out;
}

/// Inverse of deposit: gather the bits of `m` found at the positions of `where`.
constexpr Mask extract(Mask m, Mask where) {
  Mask out = 0;
  int i = 0;
  while (where != 0) {
    const Mask low = where & (~where + 1);
    if (m & low) out |= Mask{1} << i;
    ++i;
    where &= where - 1;
  }
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Calls f(s) for every k-subset s of `within`, in ascending order.
template <class F>
void for_each_subset(Mask within, int k, F&& f) {
  const int w = card(within);
  if (k < 0 || k > w) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  // Gosper's hack over the packed index space, then scatter. Scattering is
  // monotone so the order carries over.
  Mask packed = (Mask{1} << k) - 1;
  const Mask limit = Mask{1} << w;
  while (packed < limit) {
    f(deposit(packed, within));
    const Mask c = packed & (~packed + 1);
    const Mask r = packed + c;
    packed = (((r ^ packed) >> 2) / c) | r;
  }
}

inline std::vector<Mask> subsets(Mask within, int k) {
  std::vector<Mask> out;
  out.reserve(binomial(card(within), k));
  for_each_subset(within, k, [&](Mask s) { out.push_back(s); });
  return out;
}

/// Supersets of s inside `ground_mask` with q elements, ascending.
inline std::vector<Mask> supersets(Mask s, int q, Mask ground_mask) {
  std::vector<Mask> out;
  for_each_subset(ground_mask & ~s, q - card(s), [&](Mask t) { out.push_back(s | t); });
  return out;
}

/// Johnson adjacency: same size, symmetric difference of exactly two elements.
constexpr bool johnson_adjacent(Mask a, Mask b) { return card(a) == card(b) && card(a ^ b) == 2; }

/// All single-swap neighbours of s inside `ground_mask`, ascending.
inline std::vector<Mask> swap_neighbors(Mask s, Mask ground_mask) {
  std::vector<Mask> out;
  for (Mask in = s; in != 0; in &= in - 1) {
    const Mask drop = in & (~in + 1);
    for (Mask outside = ground_mask & ~s; outside != 0; outside &= outside - 1) {
      out.push_back((s & ~drop) | (outside & (~outside + 1)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> elements(Mask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(lowest(m));
  return out;
}

}  // namespace bits

/// A subset of [n], 1 <= n <= 62. Immutable value type.
class ElementSet {
 public:
  ElementSet() = default;

  ElementSet(int n, Mask bits) : bits_(bits), n_(n) {
    if (n < 0 || n > kMaxGround) fail(ErrorCode::kInvalidArgument, "ground set size must be in 0..62");
    if ((bits & ~bits::ground(n)) != 0) fail(ErrorCode::kInvalidArgument, "element outside [n]");
  }

  static ElementSet of(int n, std::initializer_list<int> elems) {
    return of(n, std::span<const int>(elems.begin(), elems.size()));
  }

  static ElementSet of(int n, std::span<const int> elems) {
    Mask m = 0;
    for (int e : elems) {
      if (e < 1 || e > n) fail(ErrorCode::kInvalidArgument, "element " + std::to_string(e) + " outside [n]");
      m |= bits::bit(e);
    }
    return ElementSet(n, m);
  }

  static ElementSet full(int n) { return ElementSet(n, bits::ground(n)); }

  Mask bits() const { return bits_; }
  int ground() const { return n_; }
  int cardinality() const { return bits::card(bits_); }
  bool contains(int e) const { return e >= 1 && e <= n_ && (bits_ & bits::bit(e)) != 0; }
  std::vector<int> elements() const { return bits::elements(bits_); }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ',';
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  // Bit-vector order, ground size as tie-breaker.
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  Mask bits_ = 0;
  int n_ = 0;
};

/// A permutation of [n] in array form: image(e) for e in 1..n.
class Relabeling {
 public:
  /// `image` lists the images of 1..n in order.
  explicit Relabeling(std::vector<int> image) : perm_(image.size() + 1, 0) {
    const int n = static_cast<int>(image.size());
    if (n > kMaxGround) fail(ErrorCode::kInvalidArgument, "relabeling larger than 62");
    Mask seen = 0;
    for (int e = 1; e <= n; ++e) {
      const int to = image[static_cast<std::size_t>(e - 1)];
      if (to < 1 || to > n || (seen & bits::bit(to)) != 0) fail(ErrorCode::kInvalidArgument, "not a permutation of [n]");
      seen |= bits::bit(to);
      perm_[static_cast<std::size_t>(e)] = to;
    }
  }

  static Relabeling identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    return Relabeling(std::move(image));
  }

  static Relabeling transposition(int n, int i, int j) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    if (i < 1 || i > n || j < 1 || j > n) fail(ErrorCode::kInvalidArgument, "transposition outside [n]");
    std::swap(image[static_cast<std::size_t>(i - 1)], image[static_cast<std::size_t>(j - 1)]);
    return Relabeling(std::move(image));
  }

  int size() const { return static_cast<int>(perm_.size()) - 1; }
  int operator()(int e) const { return perm_.at(static_cast<std::size_t>(e)); }

  Relabeling inverse() const {
    std::vector<int> image(perm_.size() - 1);
    for (int e = 1; e <= size(); ++e) image[static_cast<std::size_t>(perm_[static_cast<std::size_t>(e)] - 1)] = e;
    return Relabeling(std::move(image));
  }

  Mask apply(Mask m) const {
    Mask out = 0;
    for (; m != 0; m &= m - 1) out |= bits::bit((*this)(bits::lowest(m)));
    return out;
  }

 private:
  std::vector<int> perm_;  // index 0 unused
};

inline ElementSet complement(const ElementSet& s) { return ElementSet(s.ground(), bits::ground(s.ground()) & ~s.bits()); }

inline bool johnson_adjacent(const ElementSet& a, const ElementSet& b) {
  if (a.cardinality() != b.cardinality()) fail(ErrorCode::kCardinalityMismatch, a.to_string() + " vs " + b.to_string());
  return bits::card(a.bits() ^ b.bits()) == 2;
}

/// Containment test for vertices of consecutive QJ levels. The caller checks
/// that the two cardinalities really are consecutive members of the level set.
inline bool qj_cross_adjacent(const ElementSet& lower, const ElementSet& upper) {
  if (lower.cardinality() >= upper.cardinality()) {
    fail(ErrorCode::kCardinalityOrder, lower.to_string() + " is not smaller than " + upper.to_string());
  }
  return (lower.bits() & ~upper.bits()) == 0;
}

inline std::vector<ElementSet> up_neighbors(const ElementSet& s, int target_card) {
  if (target_card <= s.cardinality() || target_card > s.ground()) {
    fail(ErrorCode::kCardinalityOrder, "target cardinality " + std::to_string(target_card) + " out of range");
  }
  std::vector<ElementSet> out;
  for (Mask m : bits::supersets(s.bits(), target_card, bits::ground(s.ground()))) out.emplace_back(s.ground(), m);
  return out;
}

inline std::vector<ElementSet> same_level_neighbors(const ElementSet& s) {
  if (s.cardinality() == 0 || s.cardinality() == s.ground()) fail(ErrorCode::kNoNeighbors, s.to_string());
  std::vector<ElementSet> out;
  for (Mask m : bits::swap_neighbors(s.bits(), bits::ground(s.ground()))) out.emplace_back(s.ground(), m);
  return out;
}

inline ElementSet apply_relabeling(const Relabeling& r, const ElementSet& s) {
  if (r.size() != s.ground()) fail(ErrorCode::kInvalidArgument, "relabeling and set disagree on n");
  return ElementSet(s.ground(), r.apply(s.bits()));
}

}  // namespace jp2c
