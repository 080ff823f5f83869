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

// Certificate checkers. They never throw on bad input: every problem found is
// reported as a violation, so a report can be printed as-is.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "jp2c/graphs.hpp"
#include "jp2c/subset.hpp"
#include "jp2c/types.hpp"

namespace jp2c {

enum class ViolationCode {
  kBadEndpoint,
  kNotAdjacentStep,
  kRepeatedVertex,
  kPathsIntersect,
  kNotCovering,
  kForeignVertex,
};

constexpr std::string_view to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::kBadEndpoint: return "BadEndpoint";
    case ViolationCode::kNotAdjacentStep: return "NotAdjacentStep";
    case ViolationCode::kRepeatedVertex: return "RepeatedVertex";
    case ViolationCode::kPathsIntersect: return "PathsIntersect";
    case ViolationCode::kNotCovering: return "NotCovering";
    case ViolationCode::kForeignVertex: return "ForeignVertex";
  }
  return "Unknown";
}

struct Violation {
  ViolationCode code;
  std::string detail;
};

struct CheckReport {
  bool valid = true;
  std::vector<Violation> violations;

  void add(ViolationCode code, std::string detail) {
    valid = false;
    violations.push_back({code, std::move(detail)});
  }

  bool has(ViolationCode code) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.code == code; });
  }
};

inline std::string describe(int v) { return std::to_string(v); }
inline std::string describe(const ElementSet& s) { return s.to_string(); }
inline std::string describe(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int e : bits::elements(m)) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

namespace detail {

template <GraphView G>
void check_steps(const G& g, const Path<typename G::vertex_type>& p, std::string_view label, CheckReport& report) {
  for (const auto& w : p) {
    if (!g.contains(w)) report.add(ViolationCode::kForeignVertex, std::string(label) + ": " + describe(w));
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (g.contains(p[i]) && g.contains(p[i + 1]) && !g.adjacent(p[i], p[i + 1])) {
      report.add(ViolationCode::kNotAdjacentStep, std::string(label) + ": " + describe(p[i]) + " -> " + describe(p[i + 1]));
    }
  }
  auto sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i] == sorted[i + 1] && (i == 0 || sorted[i - 1] != sorted[i])) {
      report.add(ViolationCode::kRepeatedVertex, std::string(label) + ": " + describe(sorted[i]));
    }
  }
}

template <class V>
std::size_t distinct_count(std::vector<V> all) {
  std::sort(all.begin(), all.end());
  return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
}

template <class V>
bool joins(const Path<V>& p, const V& a, const V& b) {
  if (p.empty()) return false;
  return (p.front() == a && p.back() == b) || (p.front() == b && p.back() == a);
}

}  // namespace detail

/// Valid iff p runs from s to t through every vertex of g exactly once.
template <GraphView G>
CheckReport check_hamilton(const G& g, const Path<typename G::vertex_type>& p, const typename G::vertex_type& s,
                           const typename G::vertex_type& t) {
  CheckReport report;
  if (p.empty() || p.front() != s || p.back() != t) {
    report.add(ViolationCode::kBadEndpoint, "path does not run from " + describe(s) + " to " + describe(t));
  }
  detail::check_steps(g, p, "path", report);
  const std::size_t covered = detail::distinct_count(p);
  if (covered != g.vertex_count() || p.size() != g.vertex_count()) {
    report.add(ViolationCode::kNotCovering, std::to_string(covered) + " of " + std::to_string(g.vertex_count()) + " vertices");
  }
  return report;
}

/// Valid iff the two paths join u-v and x-y (either orientation), are
/// vertex-disjoint, and together cover g exactly.
template <GraphView G>
CheckReport check_p2c(const G& g, const EndpointQuad<typename G::vertex_type>& q,
                      const P2CSolution<typename G::vertex_type>& sol) {
  CheckReport report;
  if (!q.pairwise_distinct()) report.add(ViolationCode::kBadEndpoint, "endpoints are not pairwise distinct");
  if (!detail::joins(sol.path_uv, q.u, q.v)) {
    report.add(ViolationCode::kBadEndpoint, "path_uv does not join " + describe(q.u) + " and " + describe(q.v));
  }
  if (!detail::joins(sol.path_xy, q.x, q.y)) {
    report.add(ViolationCode::kBadEndpoint, "path_xy does not join " + describe(q.x) + " and " + describe(q.y));
  }
  detail::check_steps(g, sol.path_uv, "path_uv", report);
  detail::check_steps(g, sol.path_xy, "path_xy", report);

  auto a = sol.path_uv;
  auto b = sol.path_xy;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<typename G::vertex_type> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  common.erase(std::unique(common.begin(), common.end()), common.end());
  for (const auto& w : common) report.add(ViolationCode::kPathsIntersect, describe(w));

  auto all = sol.path_uv;
  all.insert(all.end(), sol.path_xy.begin(), sol.path_xy.end());
  std::size_t inside = 0;
  for (const auto& w : all) inside += g.contains(w) ? 1 : 0;
  const std::size_t covered = detail::distinct_count(all);
  if (covered != g.vertex_count() || all.size() != g.vertex_count() || inside != all.size()) {
    report.add(ViolationCode::kNotCovering, std::to_string(covered) + " distinct of " + std::to_string(g.vertex_count()) + " vertices");
  }
  return report;
}

}  // namespace jp2c
