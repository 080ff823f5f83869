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

// Runs a cover constructor over many endpoint quadruples of one graph and
// certifies each result with check_p2c.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "jp2c/detail/views.hpp"
#include "jp2c/error.hpp"
#include "jp2c/graphs.hpp"
#include "jp2c/oracle.hpp"
#include "jp2c/p2c_johnson.hpp"
#include "jp2c/p2c_qj.hpp"
#include "jp2c/types.hpp"
#include "jp2c/verify.hpp"

namespace jp2c {

enum class SweepMode { kExhaustive, kSampled };

inline constexpr std::uint64_t kDefaultSweepSeed = 20260314;
inline constexpr std::size_t kMaxReportedFailures = 10;

inline const char* to_string(SweepMode m) { return m == SweepMode::kExhaustive ? "exhaustive" : "sampled"; }

struct SweepConfig {
  SweepMode mode = SweepMode::kExhaustive;
  std::uint64_t seed = kDefaultSweepSeed;
  std::size_t count = 1000;
  /// Largest number of ordered quads an exhaustive sweep may visit.
  std::size_t budget = 5'000'000;
  unsigned jobs = 1;
};

template <class V>
struct SweepFailure {
  EndpointQuad<V> quad;
  std::string reason;
};

template <class V>
struct SweepSummary {
  SweepConfig config;
  std::size_t total = 0;
  std::size_t valid = 0;
  std::size_t invalid = 0;
  std::size_t errors = 0;
  /// The smallest failing quads, at most kMaxReportedFailures.
  std::vector<SweepFailure<V>> failures;

  bool all_valid() const { return valid == total; }
};

namespace detail {

template <class V>
bool quad_less(const EndpointQuad<V>& a, const EndpointQuad<V>& b) {
  return a.as_array() < b.as_array();
}

template <class V>
void keep_smallest(std::vector<SweepFailure<V>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return quad_less(a.quad, b.quad); });
  if (fs.size() > kMaxReportedFailures) fs.resize(kMaxReportedFailures);
}

template <class V>
struct Tally {
  std::size_t total = 0, valid = 0, invalid = 0, errors = 0;
  std::vector<SweepFailure<V>> failures;

  void fail(const EndpointQuad<V>& q, std::string reason) {
    failures.push_back({q, std::move(reason)});
    if (failures.size() > 4 * kMaxReportedFailures) keep_smallest(failures);
  }
};

template <GraphView G, class Solve>
void evaluate(const G& g, const Solve& solve, const EndpointQuad<typename G::vertex_type>& q, Tally<typename G::vertex_type>& t) {
  ++t.total;
  try {
    auto sol = solve(g, q);
    if (!sol) {
      ++t.invalid;
      t.fail(q, "no solution");
      return;
    }
    auto report = check_p2c(g, q, *sol);
    if (report.valid) {
      ++t.valid;
    } else {
      ++t.invalid;
      t.fail(q, std::string(to_string(report.violations.front().code)) + ": " + report.violations.front().detail);
    }
  } catch (const Error& e) {
    ++t.errors;
    t.fail(q, e.what());
  }
}

}  // namespace detail

/// `solve(g, q)` returns an optional cover; an absent result counts as
/// invalid. Results do not depend on `config.jobs`.
template <GraphView G, class Solve>
SweepSummary<typename G::vertex_type> sweep(const G& g, const Solve& solve, const SweepConfig& config = {}) {
  using V = typename G::vertex_type;
  const std::vector<V> vs = g.vertices();
  const std::size_t n = vs.size();
  if (n < 4) fail(ErrorCode::kInvalidArgument, "sweeps need at least 4 vertices");

  std::vector<EndpointQuad<V>> samples;
  if (config.mode == SweepMode::kExhaustive) {
    const double quads = double(n) * double(n - 1) * double(n - 2) * double(n - 3);
    if (quads > double(config.budget)) {
      fail(ErrorCode::kSweepBudget, std::to_string(static_cast<std::uint64_t>(quads)) + " quads exceed budget " +
                                        std::to_string(config.budget));
    }
  } else {
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    samples.reserve(config.count);
    while (samples.size() < config.count) {
      EndpointQuad<V> q{vs[pick(rng)], vs[pick(rng)], vs[pick(rng)], vs[pick(rng)]};
      if (q.pairwise_distinct()) samples.push_back(q);
    }
  }

  const unsigned jobs = std::max(1u, config.jobs);
  std::vector<detail::Tally<V>> tallies(jobs);
  auto work = [&](unsigned w) {
    auto& t = tallies[w];
    if (config.mode == SweepMode::kSampled) {
      for (std::size_t i = w; i < samples.size(); i += jobs) detail::evaluate(g, solve, samples[i], t);
      return;
    }
    for (std::size_t a = w; a < n; a += jobs) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          for (std::size_t d = 0; d < n; ++d) {
            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
            detail::evaluate(g, solve, EndpointQuad<V>{vs[a], vs[b], vs[c], vs[d]}, t);
          }
        }
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }

  SweepSummary<V> out;
  out.config = config;
  for (auto& t : tallies) {
    out.total += t.total;
    out.valid += t.valid;
    out.invalid += t.invalid;
    out.errors += t.errors;
    out.failures.insert(out.failures.end(), t.failures.begin(), t.failures.end());
  }
  detail::keep_smallest(out.failures);
  return out;
}

// Ready-made constructors for sweep().

inline auto johnson_constructor(BuildOptions opt = {}) {
  return [opt](const JohnsonGraph& g, const EndpointQuad<ElementSet>& q) {
    return std::optional(p2c_johnson(g, q, opt));
  };
}

inline auto qj_constructor(BuildOptions opt = {}) {
  return [opt](const QJGraph& g, const EndpointQuad<ElementSet>& q) { return std::optional(p2c_qj(g, q, opt)); };
}

/// Complete-graph constructor over any view (used with J(n,1) = K_n).
inline auto complete_constructor() {
  return [](const auto& g, const auto& q) { return std::optional(p2c_complete(g.vertices(), q)); };
}

inline auto oracle_constructor(std::size_t cap = kDefaultOracleCap) {
  return [cap](const auto& g, const auto& q) { return p2c_bruteforce(g, q, cap); };
}

}  // namespace jp2c
