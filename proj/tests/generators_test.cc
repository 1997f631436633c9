// Copyright 2026 The densematch Authors
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

#include "densematch/generators.h"

#include <array>

#include "densematch/error.h"
#include "densematch/graph.h"
#include "densematch/oracles.h"
#include "densematch/rng.h"
#include "gtest/gtest.h"
#include "support/brute_force.h"

namespace densematch {
namespace {

TEST(TwoCliquesTest, Examples) {
  const Graph g = TwoCliques(3);
  EXPECT_EQ(g.num_vertices(), 6u);
  EXPECT_EQ(g.num_edges(), 6u);
  EXPECT_EQ(testing::BruteConnectedMatchingNumber(g), 1u);

  EXPECT_EQ(testing::BruteConnectedMatchingNumber(TwoCliques(5)), 2u);

  const Graph pair = TwoCliques(1);
  EXPECT_EQ(pair.num_vertices(), 2u);
  EXPECT_EQ(pair.num_edges(), 0u);
  EXPECT_THROW(TwoCliques(0), InputError);
}

TEST(TwoCliquesTest, ExtremalConnectedMatchingNumber) {
  for (std::size_t t = 1; t <= 4; ++t) {
    EXPECT_EQ(ConnectedMatchingNumber(TwoCliques(2 * t - 1)), t - 1) << t;
  }
}

TEST(RandomTriangleFreeTest, Examples) {
  EXPECT_EQ(ComplementOfRandomTriangleFree(1, 3).num_vertices(), 1u);
  const Graph a = ComplementOfRandomTriangleFree(20, 7);
  EXPECT_TRUE(IsAlphaAtMost2(a));
  EXPECT_EQ(a, ComplementOfRandomTriangleFree(20, 7));
  EXPECT_THROW(ComplementOfRandomTriangleFree(0, 1), InputError);
}

TEST(RandomTriangleFreeTest, ComplementIsMaximalTriangleFree) {
  Rng rng(41);
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t n = 3 + rng.UniformBelow(14);
    const Graph h = Complement(ComplementOfRandomTriangleFree(n, rng.Next()));
    // Maximality: every non-edge of h closes a triangle.
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) {
        if (h.HasEdge(u, v)) continue;
        bool common = false;
        for (VertexId w = 0; w < n; ++w)
          common = common || (h.HasEdge(u, w) && h.HasEdge(v, w));
        EXPECT_TRUE(common) << "pair " << u << "," << v;
      }
    EXPECT_EQ(testing::BruteAlpha(Complement(h)), 2u);
  }
}

TEST(C5BlowupTest, Examples) {
  const Graph single = C5BlowupComplement({1, 1, 1, 1, 1});
  EXPECT_EQ(single.num_edges(), 5u);
  EXPECT_EQ(testing::BruteAlpha(single), 2u);

  const Graph doubled = C5BlowupComplement({2, 2, 2, 2, 2});
  EXPECT_EQ(doubled.num_vertices(), 10u);
  EXPECT_TRUE(IsAlphaAtMost2(doubled));

  const Graph uneven = C5BlowupComplement({1, 1, 1, 1, 2});
  EXPECT_EQ(uneven.num_vertices(), 6u);
  EXPECT_EQ(testing::BruteAlpha(uneven), 2u);

  EXPECT_THROW(C5BlowupComplement({1, 0, 1, 1, 1}), InputError);
}

TEST(CompleteGraphTest, Examples) {
  EXPECT_EQ(CompleteGraph(4).num_edges(), 6u);
  EXPECT_EQ(CompleteGraph(1).num_edges(), 0u);
  const Graph k6 = CompleteGraph(6);
  EXPECT_EQ(NonadjacentPairs(k6, Matching{{{0, 1}, {2, 3}, {4, 5}}}), 0u);
  EXPECT_EQ(NonadjacentPairs(k6, Matching{{{0, 5}, {1, 4}, {2, 3}}}), 0u);
  EXPECT_THROW(CompleteGraph(0), InputError);
}

TEST(GeneratorsTest, EveryFamilyHasAlphaAtMostTwo) {
  Rng rng(1234);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + rng.UniformBelow(60);
    EXPECT_TRUE(IsAlphaAtMost2(ComplementOfRandomTriangleFree(n, rng.Next())));
    EXPECT_TRUE(IsAlphaAtMost2(TwoCliques(1 + n / 2)));
    EXPECT_TRUE(IsAlphaAtMost2(CompleteGraph(n)));
    std::array<std::size_t, 5> parts{};
    for (auto& p : parts) p = 1 + rng.UniformBelow(12);
    EXPECT_TRUE(IsAlphaAtMost2(C5BlowupComplement(parts)));
  }
}

TEST(GeneratorsTest, RepeatCallsAreIdentical) {
  EXPECT_EQ(TwoCliques(9), TwoCliques(9));
  EXPECT_EQ(CompleteGraph(33), CompleteGraph(33));
  EXPECT_EQ(C5BlowupComplement({3, 1, 4, 1, 5}),
            C5BlowupComplement({3, 1, 4, 1, 5}));
  EXPECT_EQ(ComplementOfRandomTriangleFree(90, 123),
            ComplementOfRandomTriangleFree(90, 123));
  EXPECT_NE(ComplementOfRandomTriangleFree(90, 123),
            ComplementOfRandomTriangleFree(90, 124));
}

}  // namespace
}  // namespace densematch
