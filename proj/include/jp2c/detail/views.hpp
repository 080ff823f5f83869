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

// Raw-mask graph views used inside the constructors. A JohnsonView is J on an
// arbitrary ground mask (so X/Y halves need no relabeling); a StackView is
// QJ(n, levels) for a contiguous run of levels.

#include <array>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "jp2c/error.hpp"
#include "jp2c/subset.hpp"
#include "jp2c/types.hpp"
#include "jp2c/verify.hpp"

namespace jp2c {

/// Knobs shared by all constructors.
struct BuildOptions {
  /// Check every intermediate sub-solution before it is spliced into a larger one.
  bool debug_check = false;
};

namespace detail {

using MaskPath = std::vector<Mask>;
using MaskQuad = EndpointQuad<Mask>;
using MaskSolution = P2CSolution<Mask>;

struct JohnsonView {
  using vertex_type = Mask;
  Mask ground;
  int k;

  std::size_t vertex_count() const { return bits::binomial(bits::card(ground), k); }
  bool contains(Mask m) const { return (m & ~ground) == 0 && bits::card(m) == k; }
  bool adjacent(Mask a, Mask b) const { return contains(a) && contains(b) && bits::card(a ^ b) == 2; }
  std::vector<Mask> vertices() const { return bits::subsets(ground, k); }
};

struct StackView {
  using vertex_type = Mask;
  int n;
  std::vector<int> levels;

  int level_of(Mask m) const {
    if ((m & ~bits::ground(n)) != 0) return -1;
    const int c = bits::card(m);
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (levels[i] == c) return static_cast<int>(i);
    }
    return -1;
  }
  std::size_t vertex_count() const {
    std::size_t total = 0;
    for (int a : levels) total += bits::binomial(n, a);
    return total;
  }
  bool contains(Mask m) const { return level_of(m) >= 0; }
  bool adjacent(Mask a, Mask b) const {
    const int la = level_of(a);
    const int lb = level_of(b);
    if (la < 0 || lb < 0) return false;
    if (la == lb) return bits::card(a ^ b) == 2;
    if (la + 1 == lb) return (a & ~b) == 0;
    if (lb + 1 == la) return (b & ~a) == 0;
    return false;
  }
  std::vector<Mask> vertices() const {
    std::vector<Mask> out;
    for (int a : levels) bits::for_each_subset(bits::ground(n), a, [&](Mask m) { out.push_back(m); });
    return out;
  }
};

/// Thread-safe memo for base-case search results. Concurrent inserts of the
/// same key store the same deterministic value, so races are harmless.
template <class Key, class Value>
class MemoCache {
 public:
  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return map_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> map_;
};

/// Canonical form of a subset of `ground`: the same subset after renaming the
/// elements of `ground` to 1..|ground| in order.
inline Mask compress(Mask m, Mask ground) { return bits::extract(m, ground) << 1; }
inline Mask expand(Mask m, Mask ground) { return bits::deposit(m >> 1, ground); }

template <GraphView G>
void require_valid(const G& g, const MaskPath& p, Mask s, Mask t, const char* what) {
  auto report = check_hamilton(g, p, s, t);
  if (!report.valid) fail(ErrorCode::kConstructionCheckFailed, std::string(what) + ": " + report.violations.front().detail);
}

template <GraphView G>
void require_valid(const G& g, const MaskQuad& q, const MaskSolution& sol, const char* what) {
  auto report = check_p2c(g, q, sol);
  if (!report.valid) {
    fail(ErrorCode::kConstructionCheckFailed,
         std::string(what) + ": " + std::string(to_string(report.violations.front().code)) + " " + report.violations.front().detail);
  }
}

inline MaskPath reversed(MaskPath p) {
  std::reverse(p.begin(), p.end());
  return p;
}

inline MaskPath concat(MaskPath a, const MaskPath& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Replaces the edge p[at]-p[at+1] by the detour p[at], detour..., p[at+1].
inline void splice_after(MaskPath& p, std::size_t at, const MaskPath& detour) {
  p.insert(p.begin() + static_cast<std::ptrdiff_t>(at + 1), detour.begin(), detour.end());
}

}  // namespace detail
}  // namespace jp2c
