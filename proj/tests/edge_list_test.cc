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

#include "densematch/edge_list.h"

#include <sstream>

#include "densematch/error.h"
#include "densematch/generators.h"
#include "densematch/rng.h"
#include "gtest/gtest.h"

namespace densematch {
namespace {

Graph Parse(const std::string& text) {
  std::istringstream in(text);
  return ReadEdgeList(in);
}

TEST(EdgeListTest, ParsesCommentsAndWhitespace) {
  const Graph g = Parse(
      "# triangle plus a pendant\n"
      "4 4\n"
      "0 1\n"
      "1\t2   # inline comment\n"
      "\n"
      "2 0\n"
      "2 3\n");
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 4u);
  EXPECT_TRUE(g.HasEdge(3, 2));
}

TEST(EdgeListTest, DuplicatesCollapse) {
  EXPECT_EQ(Parse("3 3\n0 1\n1 0\n0 1\n").num_edges(), 1u);
}

TEST(EdgeListTest, Errors) {
  EXPECT_THROW(Parse(""), InputError);
  EXPECT_THROW(Parse("3 2\n0 1\n"), InputError);
  EXPECT_THROW(Parse("3 1\n0 1\n2\n"), InputError);
  EXPECT_THROW(Parse("3 1\n0 3\n"), InputError);
  EXPECT_THROW(Parse("3 1\n1 1\n"), InputError);
  EXPECT_THROW(Parse("3 1\n0 x\n"), InputError);
  EXPECT_THROW(Parse("3 1\n0 -1\n"), InputError);
  EXPECT_THROW(ReadEdgeListFile("/nonexistent/graph.txt"), InputError);
}

TEST(EdgeListTest, WriteThenReadIsIdentity) {
  Rng rng(9);
  for (int iter = 0; iter < 20; ++iter) {
    const Graph g =
        ComplementOfRandomTriangleFree(1 + rng.UniformBelow(70), rng.Next());
    const std::string text = EdgeListString(g);
    EXPECT_EQ(Parse(text), g);
    EXPECT_EQ(EdgeListString(Parse(text)), text);
  }
}

TEST(EdgeListTest, CanonicalOutput) {
  EXPECT_EQ(EdgeListString(TwoCliques(2)), "4 2\n0 1\n2 3\n");
}

}  // namespace
}  // namespace densematch
