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

#include "densematch/sampling.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "densematch/error.h"
#include "densematch/generators.h"
#include "gtest/gtest.h"
#include "support/brute_force.h"

namespace densematch {
namespace {

// Upper 1e-3 quantiles of chi-square (scipy.stats.chi2.ppf(0.999, df)).
constexpr double kChi2Df2 = 13.815510557964274;
constexpr double kChi2Df14 = 36.12327368039813;

double BinomialSigma(double p, double trials) {
  return std::sqrt(p * (1 - p) / trials);
}

bool Contains(const Partition& x, Edge e) {
  e = Normalized(e);
  for (const Edge& p : x.pairs)
    if (p == e) return true;
  return false;
}

std::vector<VertexId> Range(std::size_t n) { return AllVertices(n); }

TEST(SamplePartitionTest, CoversEveryVertexOnce) {
  Rng rng(1);
  for (std::size_t size = 2; size <= 40; size += 2) {
    const Partition x = SamplePartition(Range(size), rng);
    ASSERT_EQ(x.pairs.size(), size / 2);
    std::vector<int> seen(size, 0);
    for (const Edge& p : x.pairs) {
      EXPECT_LT(p.u, p.v);
      ++seen[p.u];
      ++seen[p.v];
    }
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

TEST(SamplePartitionTest, TwoElementSet) {
  Rng rng(2);
  const std::vector<VertexId> s{7, 3};
  const Partition x = SamplePartition(s, rng);
  ASSERT_EQ(x.pairs.size(), 1u);
  EXPECT_EQ(x.pairs[0], (Edge{3, 7}));
}

TEST(SamplePartitionTest, RejectsOddOrEmpty) {
  Rng rng(3);
  EXPECT_THROW(SamplePartition(Range(5), rng), InputError);
  EXPECT_THROW(SamplePartition(Range(0), rng), InputError);
}

TEST(SamplePartitionTest, SixSetHitsAllFifteenPairings) {
  const auto pairings = testing::AllPairings(6);
  ASSERT_EQ(pairings.size(), 15u);  // 5!! by enumeration
  Rng rng(4);
  std::map<std::vector<Edge>, int> seen;
  for (int i = 0; i < 2000; ++i) {
    auto pairs = SamplePartition(Range(6), rng).pairs;
    std::sort(pairs.begin(), pairs.end());
    seen[pairs]++;
  }
  EXPECT_EQ(seen.size(), 15u);
}

// Chi-square goodness of fit against the uniform law on all pairings.
void ExpectUniform(std::size_t size, double critical) {
  const auto pairings = testing::AllPairings(size);
  std::map<std::vector<Edge>, std::size_t> index;
  for (std::size_t i = 0; i < pairings.size(); ++i) index[pairings[i]] = i;
  std::vector<double> counts(pairings.size(), 0);
  Rng rng(100 + size);
  const int samples = 100000;
  for (int i = 0; i < samples; ++i) {
    auto pairs = SamplePartition(Range(size), rng).pairs;
    std::sort(pairs.begin(), pairs.end());
    counts[index.at(pairs)] += 1;
  }
  const double expected = static_cast<double>(samples) / pairings.size();
  double stat = 0;
  for (double c : counts) stat += (c - expected) * (c - expected) / expected;
  EXPECT_LT(stat, critical) << "|S| = " << size;
}

TEST(SamplePartitionTest, UniformOnFourAndSixSets) {
  ExpectUniform(4, kChi2Df2);
  ExpectUniform(6, kChi2Df14);
}

TEST(SamplePartitionTest, PairMembershipLaws) {
  for (std::size_t size : {6u, 8u, 12u}) {
    Rng rng(size);
    const double trials = 200000;
    double single = 0, both = 0;
    for (int i = 0; i < trials; ++i) {
      const Partition x = SamplePartition(Range(size), rng);
      const bool e = Contains(x, {0, 1});
      single += e;
      both += e && Contains(x, {2, 3});
    }
    const double p1 = 1.0 / (size - 1);
    const double p2 = 1.0 / ((size - 1.0) * (size - 3.0));
    EXPECT_LE(std::abs(single / trials - p1), 4 * BinomialSigma(p1, trials));
    EXPECT_LE(std::abs(both / trials - p2), 4 * BinomialSigma(p2, trials));
  }
}

TEST(SamplePartitionTest, FixedPairOnFourSet) {
  Rng rng(8);
  const double trials = 100000;
  double hits = 0;
  for (int i = 0; i < trials; ++i) {
    hits += Contains(SamplePartition(Range(4), rng), {1, 2});
  }
  EXPECT_NEAR(hits / trials, 1.0 / 3, 4 * BinomialSigma(1.0 / 3, trials));
}

TEST(SamplePartitionTest, SeedDeterminesSequence) {
  Rng a(77), b(77);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(SamplePartition(Range(30), a).pairs,
              SamplePartition(Range(30), b).pairs);
  }
}

TEST(CountIntersectionTest, Examples) {
  Rng rng(5);
  const Graph all = CompleteGraph(4);
  const Graph none = Graph::FromEdgeList(4, {});
  for (int i = 0; i < 20; ++i) {
    const Partition x = SamplePartition(Range(4), rng);
    EXPECT_EQ(CountIntersection(x, all), 2u);
    EXPECT_EQ(CountIntersection(x, none), 0u);
  }
  const std::vector<Edge> one{{2, 4}};
  const Graph single = Graph::FromEdgeList(6, one);
  const double trials = 60000;
  double total = 0;
  for (int i = 0; i < trials; ++i) {
    total += CountIntersection(SamplePartition(Range(6), rng), single);
  }
  EXPECT_NEAR(total / trials, 0.2, 4 * BinomialSigma(0.2, trials));
}

TEST(DeviationRateTest, DeterministicFamilies) {
  Rng rng(6);
  for (double lambda : {0.01, 0.5, 3.0}) {
    EXPECT_EQ(EmpiricalDeviationRate(Range(8), CompleteGraph(8), lambda, 500,
                                     rng).rate, 0.0);
    EXPECT_EQ(EmpiricalDeviationRate(Range(8), Graph::FromEdgeList(8, {}),
                                     lambda, 500, rng).rate, 0.0);
  }
}

TEST(DeviationRateTest, TwoCliquesOnForty) {
  Rng rng(7);
  const Graph f = TwoCliques(20);
  ASSERT_EQ(f.num_edges(), 380u);
  const auto est = EmpiricalDeviationRate(Range(40), f, 10, 10000, rng);
  EXPECT_DOUBLE_EQ(est.mean, 380.0 / 39);
  EXPECT_DOUBLE_EQ(est.chebyshev_bound, 0.4);
  EXPECT_LE(est.rate, 0.4 + 3 * BinomialSigma(0.4, 10000));
}

TEST(DeviationRateTest, Errors) {
  Rng rng(8);
  EXPECT_THROW(EmpiricalDeviationRate(Range(2), CompleteGraph(2), 1, 10, rng),
               InputError);
  EXPECT_THROW(EmpiricalDeviationRate(Range(6), CompleteGraph(6), 0, 10, rng),
               InputError);
  EXPECT_THROW(EmpiricalDeviationRate(Range(6), CompleteGraph(6), 1, 0, rng),
               InputError);
  // Family pair (0, 7) leaves the vertex set {0..5}.
  const std::vector<Edge> outside{{0, 7}};
  EXPECT_THROW(EmpiricalDeviationRate(Range(6), Graph::FromEdgeList(8, outside),
                                      1, 10, rng),
               InputError);
}

TEST(SampleWithEdgeThresholdTest, CliqueAcceptsImmediately) {
  Rng rng(9);
  const auto accepted = SampleWithEdgeThreshold(CompleteGraph(4), 2, rng);
  EXPECT_EQ(accepted.attempts, 1u);
  EXPECT_EQ(accepted.intersection, 2u);
}

TEST(SampleWithEdgeThresholdTest, EmptyEventFails) {
  Rng rng(10);
  try {
    SampleWithEdgeThreshold(Graph::FromEdgeList(6, {}), 1, rng, 500);
    FAIL() << "expected SamplingFailure";
  } catch (const SamplingFailure& e) {
    EXPECT_EQ(e.attempts(), 500u);
  }
  EXPECT_THROW(SampleWithEdgeThreshold(CompleteGraph(5), 1, rng), InputError);
}

TEST(SampleWithEdgeThresholdTest, AcceptanceRateMeetsChebyshevFloor) {
  // |S| = 200, F = E(two_cliques(100)); lambda = 20 gives a floor of
  // 1 - 200/400 = 1/2 on Pr(|F cap X| > mean - lambda).
  const Graph g = TwoCliques(100);
  const double mean = static_cast<double>(g.num_edges()) / 199;
  const auto threshold = static_cast<std::size_t>(std::ceil(mean - 20));
  Rng rng(11);
  std::uint64_t attempts = 0;
  const int draws = 2000;
  for (int i = 0; i < draws; ++i) {
    const auto accepted = SampleWithEdgeThreshold(g, threshold, rng);
    EXPECT_GE(accepted.intersection, threshold);
    attempts += accepted.attempts;
  }
  const double rate = draws / static_cast<double>(attempts);
  EXPECT_GE(rate, 0.5);
}

TEST(SampleWithEdgeThresholdTest, AcceptedSampleIsUniformOnEvent) {
  // On C5 plus an isolated vertex exactly 5 of the 15 pairings carry two
  // edges (one per partner of the isolated vertex); accepted draws must be
  // uniform on those.
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  const Graph g = Graph::FromEdgeList(6, edges);
  std::map<std::vector<Edge>, double> counts;
  for (const auto& pairing : testing::AllPairings(6)) {
    std::size_t hits = 0;
    for (const Edge& e : pairing) hits += g.HasEdge(e.u, e.v);
    if (hits >= 2) counts[pairing] = 0;
  }
  ASSERT_EQ(counts.size(), 5u);
  Rng rng(12);
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) {
    auto pairs = SampleWithEdgeThreshold(g, 2, rng).partition.pairs;
    std::sort(pairs.begin(), pairs.end());
    ASSERT_TRUE(counts.contains(pairs));
    counts[pairs] += 1;
  }
  const double expected = static_cast<double>(draws) / counts.size();
  double stat = 0;
  for (auto& [pairs, c] : counts) stat += (c - expected) * (c - expected) / expected;
  EXPECT_LT(stat, 18.46682695290317);  // chi2.ppf(0.999, 4)
}

}  // namespace
}  // namespace densematch
