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

#ifndef DENSEMATCH_SAMPLING_H_
#define DENSEMATCH_SAMPLING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "densematch/graph.h"
#include "densematch/rng.h"

namespace densematch {

// A perfect pairing of an even vertex set. Pairs are normalized (u < v).
struct Partition {
  std::vector<Edge> pairs;
};

inline constexpr std::uint64_t kDefaultMaxAttempts = 1'000'000;

// Uniform random partition of `vertices` into pairs: Fisher-Yates shuffle,
// then consecutive elements are paired. Every one of the (|S| - 1)!!
// pairings is equally likely. Throws InputError for odd or empty sets.
Partition SamplePartition(std::span<const VertexId> vertices, Rng& rng);

// 0, 1, ..., n - 1.
std::vector<VertexId> AllVertices(std::size_t n);

// |{p in x : p is an edge of family}|. The pair family is given as the edge
// set of a graph on a vertex range covering x.
std::size_t CountIntersection(const Partition& x, const Graph& family);

struct DeviationEstimate {
  std::size_t trials = 0;
  std::size_t deviations = 0;  // trials with | |F cap X| - mean | >= lambda
  double rate = 0;
  double mean = 0;             // |F| / (|S| - 1)
  double chebyshev_bound = 0;  // min(1, |S| / lambda^2)
};

// Monte Carlo estimate of Pr(| |F cap X| - |F|/(|S|-1) | >= lambda) for a
// uniform partition X of `vertices`. Every edge of `family` must have both
// endpoints in `vertices`.
DeviationEstimate EmpiricalDeviationRate(std::span<const VertexId> vertices,
                                         const Graph& family, double lambda,
                                         std::size_t trials, Rng& rng);

struct AcceptedPartition {
  Partition partition;
  std::uint64_t attempts = 0;
  std::size_t intersection = 0;  // |X cap E(g)|
};

// Draws uniform partitions of V(g) until one has at least `threshold` pairs
// that are edges of g. The accepted sample is uniform over all such
// partitions. Throws SamplingFailure after `max_attempts` rejections.
AcceptedPartition SampleWithEdgeThreshold(
    const Graph& g, std::size_t threshold, Rng& rng,
    std::uint64_t max_attempts = kDefaultMaxAttempts);

}  // namespace densematch

#endif  // DENSEMATCH_SAMPLING_H_
