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

#include <gtest/gtest.h>

#include <random>

#include "equivariance.hpp"
#include "support.hpp"
#include "reference_covers.hpp"

namespace {

using jp2c::ElementSet;
using jp2c::EndpointQuad;
using jp2c::ErrorCode;
using jp2c::JohnsonGraph;

ElementSet es(int n, std::initializer_list<int> e) { return ElementSet::of(n, e); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const jp2c::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(P2CComplete, Examples) {
  const auto k4 = JohnsonGraph(4, 1).vertices();
  auto sol = jp2c::p2c_complete(k4, EndpointQuad{es(4, {1}), es(4, {2}), es(4, {3}), es(4, {4})});
  EXPECT_EQ(sol.path_uv, (std::vector{es(4, {1}), es(4, {2})}));
  EXPECT_EQ(sol.path_xy, (std::vector{es(4, {3}), es(4, {4})}));

  const auto k5 = JohnsonGraph(5, 1).vertices();
  sol = jp2c::p2c_complete(k5, EndpointQuad{es(5, {1}), es(5, {2}), es(5, {3}), es(5, {5})});
  EXPECT_EQ(sol.path_uv, (std::vector{es(5, {1}), es(5, {2})}));
  EXPECT_EQ(sol.path_xy, (std::vector{es(5, {3}), es(5, {4}), es(5, {5})}));

  const auto k6 = JohnsonGraph(6, 1).vertices();
  sol = jp2c::p2c_complete(k6, EndpointQuad{es(6, {1}), es(6, {6}), es(6, {2}), es(6, {5})});
  EXPECT_EQ(sol.path_uv, (std::vector{es(6, {1}), es(6, {6})}));
  EXPECT_EQ(sol.path_xy, (std::vector{es(6, {2}), es(6, {3}), es(6, {4}), es(6, {5})}));
}

TEST(P2CComplete, Errors) {
  const auto k3 = JohnsonGraph(3, 1).vertices();
  EXPECT_EQ(code_of([&] { (void)jp2c::p2c_complete(k3, EndpointQuad{k3[0], k3[1], k3[2], k3[0]}); }), ErrorCode::kTooFewVertices);
  const auto k4 = JohnsonGraph(4, 1).vertices();
  EXPECT_EQ(code_of([&] { (void)jp2c::p2c_complete(k4, EndpointQuad{k4[0], k4[1], k4[2], k4[1]}); }), ErrorCode::kBadQuad);
  EXPECT_EQ(code_of([&] { (void)jp2c::p2c_complete(k4, EndpointQuad{k4[0], k4[1], k4[2], es(4, {1, 2})}); }), ErrorCode::kBadQuad);
}

TEST(P2CJohnson, ReferenceCoverInstances) {
  const JohnsonGraph g(4, 2);
  for (const auto& row : reference_covers::rows()) {
    const auto sol = jp2c::p2c_johnson(g, row.quad, {true});
    EXPECT_TRUE(jp2c::check_p2c(g, row.quad, sol).valid);
    EXPECT_EQ(sol.path_uv.front(), row.quad.u);
    EXPECT_EQ(sol.path_uv.back(), row.quad.v);
    EXPECT_EQ(sol.path_xy.front(), row.quad.x);
    EXPECT_EQ(sol.path_xy.back(), row.quad.y);
  }
}

TEST(P2CJohnson, SpecExamples) {
  const JohnsonGraph j51(5, 1);
  const EndpointQuad q51{es(5, {1}), es(5, {2}), es(5, {3}), es(5, {5})};
  const auto a = jp2c::p2c_johnson(j51, q51);
  const auto b = jp2c::p2c_complete(j51.vertices(), q51);
  EXPECT_EQ(a.path_uv, b.path_uv);
  EXPECT_EQ(a.path_xy, b.path_xy);

  const JohnsonGraph j63(6, 3);
  const EndpointQuad q63{es(6, {1, 2, 3}), es(6, {4, 5, 6}), es(6, {1, 2, 4}), es(6, {3, 5, 6})};
  const auto c = jp2c::p2c_johnson(j63, q63, {true});
  EXPECT_TRUE(jp2c::check_p2c(j63, q63, c).valid);
  EXPECT_EQ(c.path_uv.size() + c.path_xy.size(), 20u);
}

// One instance for each way the split element can fall across the endpoints.
TEST(P2CJohnson, SplitCases) {
  const JohnsonGraph g(8, 3);
  const std::vector<std::pair<const char*, EndpointQuad<ElementSet>>> cases{
      {"all four contain 8", {es(8, {1, 2, 8}), es(8, {1, 3, 8}), es(8, {2, 5, 8}), es(8, {6, 7, 8})}},
      {"none contain 8", {es(8, {1, 2, 3}), es(8, {4, 5, 6}), es(8, {1, 2, 7}), es(8, {3, 6, 7})}},
      {"one contains 8", {es(8, {1, 2, 8}), es(8, {4, 5, 6}), es(8, {1, 2, 7}), es(8, {3, 6, 7})}},
      {"three contain 8", {es(8, {1, 2, 8}), es(8, {4, 5, 8}), es(8, {1, 2, 7}), es(8, {3, 6, 8})}},
      {"two contain 8", {es(8, {1, 2, 8}), es(8, {4, 5, 8}), es(8, {1, 2, 7}), es(8, {3, 6, 7})}},
  };
  for (const auto& [name, q] : cases) {
    const auto sol = jp2c::p2c_johnson(g, q, {true});
    EXPECT_TRUE(jp2c::check_p2c(g, q, sol).valid) << name;
  }
}

TEST(P2CJohnson, BalancedEndpointsAtHalfSize) {
  // Every element lies in exactly two endpoints, so no other split element helps.
  const JohnsonGraph g(6, 3);
  const EndpointQuad pair_side{es(6, {1, 2, 3}), es(6, {1, 4, 5}), es(6, {4, 5, 6}), es(6, {2, 3, 6})};
  const EndpointQuad crossed{es(6, {1, 2, 6}), es(6, {3, 4, 5}), es(6, {3, 4, 6}), es(6, {1, 2, 5})};
  for (const auto& q : {pair_side, crossed}) {
    for (int e = 1; e <= 6; ++e) {
      int c = 0;
      for (const auto& w : q.as_array()) c += w.contains(e);
      ASSERT_EQ(c, 2);
    }
    EXPECT_TRUE(jp2c::check_p2c(g, q, jp2c::p2c_johnson(g, q, {true})).valid);
  }
}

TEST(P2CJohnson, Errors) {
  EXPECT_EQ(code_of([] {
              const JohnsonGraph g(3, 1);
              (void)jp2c::p2c_johnson(g, EndpointQuad{es(3, {1}), es(3, {2}), es(3, {3}), es(3, {1})});
            }),
            ErrorCode::kOutOfTheoremRange);
  EXPECT_EQ(code_of([] {
              const JohnsonGraph g(4, 4);
              const auto f = ElementSet::full(4);
              (void)jp2c::p2c_johnson(g, EndpointQuad{f, f, f, f});
            }),
            ErrorCode::kOutOfTheoremRange);
  EXPECT_EQ(code_of([] {
              const JohnsonGraph g(5, 2);
              (void)jp2c::p2c_johnson(g, EndpointQuad{es(5, {1, 2}), es(5, {1, 3}), es(5, {1, 2}), es(5, {2, 4})});
            }),
            ErrorCode::kBadQuad);
  EXPECT_EQ(code_of([] {
              const JohnsonGraph g(5, 2);
              (void)jp2c::p2c_johnson(g, EndpointQuad{es(5, {1, 2}), es(5, {1, 3}), es(5, {1, 2, 3}), es(5, {2, 4})});
            }),
            ErrorCode::kBadQuad);
}

TEST(P2CJohnson, ExhaustiveDeskScale) {
  for (int n = 4; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      const JohnsonGraph g(n, k);
      const auto vs = g.vertices();
      std::size_t total = 0;
      ref::for_each_quad(vs, [&](const EndpointQuad<ElementSet>& q) {
        ++total;
        const auto sol = jp2c::p2c_johnson(g, q, {n <= 5});
        ASSERT_TRUE(jp2c::check_p2c(g, q, sol).valid);
        ASSERT_EQ(sol.path_uv.front(), q.u);
        ASSERT_EQ(sol.path_xy.front(), q.x);
      });
      const std::size_t m = vs.size();
      EXPECT_EQ(total, m * (m - 1) * (m - 2) * (m - 3));
    }
  }
}

TEST(P2CJohnson, IndependentCheckerAgrees) {
  const int n = 5, k = 2;
  const JohnsonGraph g(n, k);
  const auto vs = ref::es_vertices(n, {k});
  ref::for_each_quad(vs, [&](const EndpointQuad<ElementSet>& q) {
    const auto sol = jp2c::p2c_johnson(g, q);
    ASSERT_TRUE(ref::naive_is_cover(vs, [&](const ElementSet& a, const ElementSet& b) { return ref::qj_adjacent_ref({k}, a, b); },
                                    q, sol));
  });
}

TEST(P2CJohnson, OrientationSoundness) {
  const JohnsonGraph g(6, 2);
  const auto vs = g.vertices();
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    EndpointQuad q{vs[rng() % vs.size()], vs[rng() % vs.size()], vs[rng() % vs.size()], vs[rng() % vs.size()]};
    if (!q.pairwise_distinct()) continue;
    auto sol = jp2c::p2c_johnson(g, q);
    auto rev_uv = sol;
    std::reverse(rev_uv.path_uv.begin(), rev_uv.path_uv.end());
    EXPECT_TRUE(jp2c::check_p2c(g, EndpointQuad{q.v, q.u, q.x, q.y}, rev_uv).valid);
    auto rev_xy = sol;
    std::reverse(rev_xy.path_xy.begin(), rev_xy.path_xy.end());
    EXPECT_TRUE(jp2c::check_p2c(g, EndpointQuad{q.u, q.v, q.y, q.x}, rev_xy).valid);
  }
}

TEST(P2CJohnson, RelabelingAndComplementEquivariance) {
  const auto r = equivariance::run(200, 99);
  EXPECT_EQ(r.relabel_ok, r.instances);
  EXPECT_EQ(r.complement_ok, r.instances);
}

TEST(P2CJohnson, LargeInstanceValidates) {
  const JohnsonGraph g(12, 6);
  const EndpointQuad q{es(12, {1, 2, 3, 4, 5, 6}), es(12, {7, 8, 9, 10, 11, 12}), es(12, {1, 3, 5, 7, 9, 11}),
                       es(12, {2, 4, 6, 8, 10, 12})};
  EXPECT_TRUE(jp2c::check_p2c(g, q, jp2c::p2c_johnson(g, q, {true})).valid);
}

TEST(P2CJohnson, ConcurrentCallsAgree) {
  const JohnsonGraph g(9, 4);
  const auto vs = g.vertices();
  std::vector<EndpointQuad<ElementSet>> qs;
  for (std::size_t i = 0; i < 64; ++i) {
    const EndpointQuad q{vs[i], vs[(i * 31 + 7) % vs.size()], vs[(i * 17 + 50) % vs.size()], vs[(i * 5 + 99) % vs.size()]};
    if (q.pairwise_distinct()) qs.push_back(q);
  }
  std::vector<jp2c::P2CSolution<ElementSet>> serial, parallel(qs.size());
  for (const auto& q : qs) serial.push_back(jp2c::p2c_johnson(g, q));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < 4; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < qs.size(); i += 4) parallel[i] = jp2c::p2c_johnson(g, qs[i]);
      });
    }
  }
  for (std::size_t i = 0; i < qs.size(); ++i) {
    EXPECT_EQ(serial[i].path_uv, parallel[i].path_uv);
    EXPECT_EQ(serial[i].path_xy, parallel[i].path_xy);
  }
}

}  // namespace
