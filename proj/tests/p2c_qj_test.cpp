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

#include "support.hpp"

namespace {

using jp2c::ElementSet;
using jp2c::EndpointQuad;
using jp2c::ErrorCode;
using jp2c::QJGraph;

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

std::vector<std::vector<int>> all_level_sets(int n) {
  std::vector<std::vector<int>> out;
  for (jp2c::Mask a = 1; a < (jp2c::Mask{1} << n); ++a) {
    std::vector<int> lv;
    for (int i = 0; i < n; ++i) {
      if ((a >> i) & 1) lv.push_back(i + 1);
    }
    out.push_back(lv);
  }
  return out;
}

std::size_t cover_size(const jp2c::P2CSolution<ElementSet>& s) { return s.path_uv.size() + s.path_xy.size(); }

TEST(PickTwoAvoiding, Examples) {
  const auto [a, b] = jp2c::pick_two_avoiding(1, 2, es(5, {1}), es(5, {2}), {es(5, {1, 2}), es(5, {1, 3})});
  EXPECT_EQ(a, es(5, {1, 4}));
  EXPECT_EQ(b, es(5, {2, 3}));

  const auto [c, d] = jp2c::pick_two_avoiding(3, 2, es(6, {1, 2, 3}), es(6, {4, 5, 6}), {});
  EXPECT_EQ(c, es(6, {1, 2}));
  EXPECT_EQ(d, es(6, {4, 5}));
}

TEST(PickTwoAvoiding, LowestToHighestLevelAvoidingAnyTwo) {
  // n = 4, A = {1,3}: from any two singletons into level 3 avoiding any two 3-sets.
  const auto threes = jp2c::QJGraph(4, {3}).vertices();
  const auto ones = jp2c::QJGraph(4, {1}).vertices();
  for (const auto& a : ones) {
    for (const auto& b : ones) {
      if (a == b) continue;
      for (const auto& s : threes) {
        for (const auto& t : threes) {
          if (s == t) continue;
          const auto [x, y] = jp2c::pick_two_avoiding(1, 3, a, b, {s, t});
          EXPECT_NE(x, y);
          EXPECT_TRUE(jp2c::qj_cross_adjacent(a, x));
          EXPECT_TRUE(jp2c::qj_cross_adjacent(b, y));
          EXPECT_TRUE(x != s && x != t && y != s && y != t);
        }
      }
    }
  }
}

TEST(PickTwoAvoiding, PostconditionOnAllGuaranteedInputs) {
  // Exhaustive over n = 5, every admissible level pair and every avoid pair.
  const int n = 5;
  for (int from = 1; from <= n; ++from) {
    for (int to = 1; to <= n; ++to) {
      const bool up = to > from;
      const bool special = (from == 1 && to == n - 1) || (from == n - 1 && to == 1);
      if (to == from || !(up ? (to < n - 1 || special) : (to > 1 || special))) continue;
      const auto src = QJGraph(n, {from}).vertices();
      const auto dst = QJGraph(n, {to}).vertices();
      for (const auto& a : src) {
        for (const auto& b : src) {
          if (!(a < b)) continue;
          for (std::size_t i = 0; i < dst.size(); ++i) {
            for (std::size_t j = i + 1; j < dst.size(); ++j) {
              const auto [x, y] = jp2c::pick_two_avoiding(from, to, a, b, {dst[i], dst[j]});
              ASSERT_NE(x, y);
              ASSERT_EQ(x.cardinality(), to);
              ASSERT_TRUE(up ? jp2c::qj_cross_adjacent(a, x) : jp2c::qj_cross_adjacent(x, a));
              ASSERT_TRUE(up ? jp2c::qj_cross_adjacent(b, y) : jp2c::qj_cross_adjacent(y, b));
              ASSERT_TRUE(x != dst[i] && x != dst[j] && y != dst[i] && y != dst[j]);
            }
          }
        }
      }
    }
  }
}

TEST(PickTwoAvoiding, PreconditionViolations) {
  // Upward into level n-1 from a level other than 1, avoiding two.
  EXPECT_EQ(code_of([] { (void)jp2c::pick_two_avoiding(2, 4, es(5, {1, 2}), es(5, {1, 3}), {es(5, {1, 2, 3, 4}), es(5, {1, 2, 3, 5})}); }),
            ErrorCode::kLemmaPreconditionViolated);
  // Downward into level 1 from a level other than n-1.
  EXPECT_EQ(code_of([] { (void)jp2c::pick_two_avoiding(2, 1, es(5, {1, 2}), es(5, {1, 3}), {es(5, {1}), es(5, {2})}); }),
            ErrorCode::kLemmaPreconditionViolated);
  EXPECT_EQ(code_of([] { (void)jp2c::pick_two_avoiding(1, 2, es(5, {1}), es(5, {1}), {}); }), ErrorCode::kLemmaPreconditionViolated);
  EXPECT_EQ(code_of([] { (void)jp2c::pick_two_avoiding(2, 2, es(5, {1, 2}), es(5, {1, 3}), {}); }), ErrorCode::kLemmaPreconditionViolated);
}

TEST(PickTwoAvoiding, ExhaustionIsReported) {
  // {1,2} and {1,3} have one common superset {1,2,3} in J(3,3): no distinct pair.
  EXPECT_EQ(code_of([] { (void)jp2c::pick_two_avoiding(2, 3, es(3, {1, 2}), es(3, {1, 3}), {}); }), ErrorCode::kLemmaPreconditionViolated);
  EXPECT_EQ(code_of([] { (void)jp2c::pick_two_avoiding(3, 4, es(4, {1, 2, 3}), es(4, {1, 2, 4}), {}); }), ErrorCode::kSelectionExhausted);
}

TEST(PickOneAvoiding, Examples) {
  EXPECT_EQ(jp2c::pick_one_avoiding(3, 1, es(4, {1, 2, 3}), es(4, {2})), es(4, {1}));
  EXPECT_EQ(jp2c::pick_one_avoiding(1, 2, es(5, {1}), es(5, {1, 2})), es(5, {1, 3}));
  EXPECT_EQ(jp2c::pick_one_avoiding(2, 3, es(4, {1, 2}), es(4, {1, 2, 3})), es(4, {1, 2, 4}));
  EXPECT_EQ(code_of([] { (void)jp2c::pick_one_avoiding(3, 4, es(4, {1, 2, 3}), ElementSet::full(4)); }), ErrorCode::kSelectionExhausted);
}

TEST(AbsorbApex, ApexAsEndpoint) {
  const QJGraph g(4, {1, 2, 3, 4});
  const auto apex = ElementSet::full(4);
  const EndpointQuad q{apex, es(4, {1}), es(4, {2}), es(4, {1, 2})};
  const auto sol = jp2c::absorb_apex(g, q, {true});
  EXPECT_TRUE(jp2c::check_p2c(g, q, sol).valid);
  ASSERT_GE(sol.path_uv.size(), 2u);
  EXPECT_EQ(sol.path_uv[0], apex);
  EXPECT_EQ(sol.path_uv[1].cardinality(), 3);
}

TEST(AbsorbApex, ApexAsOtherEndpoints) {
  const QJGraph g(5, {2, 3, 5});
  const auto apex = ElementSet::full(5);
  const std::vector<EndpointQuad<ElementSet>> qs{
      {es(5, {1, 2}), apex, es(5, {1, 2, 3}), es(5, {3, 4})},
      {es(5, {1, 2}), es(5, {1, 3}), apex, es(5, {3, 4})},
      {es(5, {1, 2}), es(5, {1, 3}), es(5, {2, 3, 4}), apex},
  };
  for (const auto& q : qs) EXPECT_TRUE(jp2c::check_p2c(g, q, jp2c::absorb_apex(g, q, {true})).valid);
}

TEST(AbsorbApex, ApexSplicedInside) {
  const QJGraph g(4, {3, 4});
  const EndpointQuad q{es(4, {1, 2, 3}), es(4, {1, 2, 4}), es(4, {1, 3, 4}), es(4, {2, 3, 4})};
  const auto sol = jp2c::absorb_apex(g, q, {true});
  EXPECT_TRUE(jp2c::check_p2c(g, q, sol).valid);
  EXPECT_EQ(cover_size(sol), 5u);

  const QJGraph h(5, {4, 5});
  const EndpointQuad r{es(5, {1, 2, 3, 4}), es(5, {1, 2, 3, 5}), es(5, {1, 2, 4, 5}), es(5, {1, 3, 4, 5})};
  const auto s2 = jp2c::absorb_apex(h, r, {true});
  EXPECT_TRUE(jp2c::check_p2c(h, r, s2).valid);
  int interior = 0;
  for (const auto* p : {&s2.path_uv, &s2.path_xy}) {
    for (std::size_t i = 1; i + 1 < p->size(); ++i) interior += (*p)[i] == ElementSet::full(5);
  }
  EXPECT_EQ(interior, 1);
}

TEST(AbsorbApex, Preconditions) {
  EXPECT_EQ(code_of([] {
              const QJGraph g(4, {1, 2});
              (void)jp2c::absorb_apex(g, EndpointQuad{es(4, {1}), es(4, {2}), es(4, {3}), es(4, {4})});
            }),
            ErrorCode::kLemmaPreconditionViolated);
}

TEST(Ep2cExpand, FullRangeIsIdentity) {
  const QJGraph g(5, {2, 3});
  const EndpointQuad q{es(5, {1, 2}), es(5, {1, 2, 3}), es(5, {3, 4}), es(5, {2, 4, 5})};
  const auto local = jp2c::p2c_qj(g, q);
  const auto out = jp2c::ep2c_expand(g, {1, 2}, local);
  EXPECT_EQ(out.path_uv, local.path_uv);
  EXPECT_EQ(out.path_xy, local.path_xy);
}

TEST(Ep2cExpand, DownwardSplice) {
  const QJGraph local_graph(4, {2, 3});
  const QJGraph g(4, {1, 2, 3});
  const EndpointQuad q{es(4, {1, 2}), es(4, {1, 2, 3}), es(4, {3, 4}), es(4, {2, 3, 4})};
  const auto local = jp2c::p2c_qj(local_graph, q);
  const auto out = jp2c::ep2c_expand(g, {2, 3}, local, {true});
  EXPECT_TRUE(jp2c::check_p2c(g, q, out).valid);
  EXPECT_EQ(cover_size(out), 4u + 6u + 4u);
}

TEST(Ep2cExpand, BothSplices) {
  const QJGraph local_graph(5, {2, 3});
  const QJGraph g(5, {1, 2, 3, 4});
  const EndpointQuad q{es(5, {1, 2}), es(5, {1, 2, 3}), es(5, {3, 4}), es(5, {2, 4, 5})};
  const auto local = jp2c::p2c_qj(local_graph, q);
  const auto out = jp2c::ep2c_expand(g, {2, 3}, local, {true});
  EXPECT_TRUE(jp2c::check_p2c(g, q, out).valid);
  EXPECT_EQ(cover_size(out), 5u + 10u + 10u + 5u);
}

TEST(Ep2cExpand, RejectsApexAndBadRange) {
  const QJGraph g(4, {1, 2, 4});
  EXPECT_EQ(code_of([&] { (void)jp2c::ep2c_expand(g, {1, 1}, {}); }), ErrorCode::kLemmaPreconditionViolated);
  const QJGraph h(4, {1, 2});
  EXPECT_EQ(code_of([&] { (void)jp2c::ep2c_expand(h, {2, 1}, {}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { (void)jp2c::ep2c_expand(h, {1, 3}, {}); }), ErrorCode::kInvalidArgument);
}

TEST(P2CQj, SpecExamples) {
  const QJGraph g(4, {1, 2});
  const EndpointQuad q{es(4, {1}), es(4, {2}), es(4, {1, 2}), es(4, {3, 4})};
  const auto sol = jp2c::p2c_qj(g, q, {true});
  EXPECT_TRUE(jp2c::check_p2c(g, q, sol).valid);
  EXPECT_EQ(cover_size(sol), 10u);
  const auto r = ref::explicit_qj(4, {1, 2});
  EXPECT_TRUE(ref::naive_p2c_exists(r.adj, r.index_of({1}), r.index_of({2}), r.index_of({1, 2}), r.index_of({3, 4})));
  EXPECT_TRUE(jp2c::p2c_bruteforce(g, q).has_value());

  const QJGraph single(5, {2});
  const EndpointQuad q2{es(5, {1, 2}), es(5, {3, 4}), es(5, {1, 5}), es(5, {2, 3})};
  const auto a = jp2c::p2c_qj(single, q2);
  const auto b = jp2c::p2c_johnson(jp2c::JohnsonGraph(5, 2), q2);
  EXPECT_EQ(a.path_uv, b.path_uv);
  EXPECT_EQ(a.path_xy, b.path_xy);

  const QJGraph three(5, {1, 2, 4});
  const EndpointQuad q3{es(5, {1}), es(5, {2, 3}), es(5, {1, 2, 3, 4}), es(5, {4})};
  const auto c = jp2c::p2c_qj(three, q3, {true});
  EXPECT_TRUE(jp2c::check_p2c(three, q3, c).valid);
  EXPECT_EQ(cover_size(c), 20u);
}

TEST(P2CQj, Errors) {
  EXPECT_EQ(code_of([] {
              const QJGraph g(3, {1, 2});
              (void)jp2c::p2c_qj(g, EndpointQuad{es(3, {1}), es(3, {2}), es(3, {3}), es(3, {1, 2})});
            }),
            ErrorCode::kOutOfTheoremRange);
  EXPECT_EQ(code_of([] {
              const QJGraph g(5, {5});
              const auto f = ElementSet::full(5);
              (void)jp2c::p2c_qj(g, EndpointQuad{f, f, f, f});
            }),
            ErrorCode::kOutOfTheoremRange);
  EXPECT_EQ(code_of([] {
              const QJGraph g(4, {1, 2});
              (void)jp2c::p2c_qj(g, EndpointQuad{es(4, {1}), es(4, {2}), es(4, {1}), es(4, {3, 4})});
            }),
            ErrorCode::kBadQuad);
  EXPECT_EQ(code_of([] {
              const QJGraph g(4, {1, 2});
              (void)jp2c::p2c_qj(g, EndpointQuad{es(4, {1}), es(4, {2}), es(4, {1, 2, 3}), es(4, {3, 4})});
            }),
            ErrorCode::kBadQuad);
}

TEST(P2CQj, ExhaustiveNFourWithDebugChecks) {
  int graphs = 0;
  for (const auto& lv : all_level_sets(4)) {
    const QJGraph g(4, lv);
    if (g.vertex_count() < 4) continue;
    ++graphs;
    const auto vs = g.vertices();
    const auto r = ref::es_vertices(4, lv);
    ref::for_each_quad(vs, [&](const EndpointQuad<ElementSet>& q) {
      const auto sol = jp2c::p2c_qj(g, q, {true});
      ASSERT_TRUE(jp2c::check_p2c(g, q, sol).valid);
      ASSERT_TRUE(ref::naive_is_cover(r, [&](const ElementSet& a, const ElementSet& b) { return ref::qj_adjacent_ref(lv, a, b); }, q, sol));
      ASSERT_EQ(cover_size(sol), g.vertex_count());
    });
  }
  EXPECT_EQ(graphs, 14);
}

TEST(P2CQj, SampledNSixAndSeven) {
  std::mt19937_64 rng(23);
  for (int n : {6, 7}) {
    for (const auto& lv : all_level_sets(n)) {
      const QJGraph g(n, lv);
      if (g.vertex_count() < 4) continue;
      const auto vs = g.vertices();
      for (int i = 0; i < 40; ++i) {
        EndpointQuad q{vs[rng() % vs.size()], vs[rng() % vs.size()], vs[rng() % vs.size()], vs[rng() % vs.size()]};
        if (!q.pairwise_distinct()) continue;
        ASSERT_TRUE(jp2c::check_p2c(g, q, jp2c::p2c_qj(g, q)).valid);
      }
    }
  }
}

}  // namespace
