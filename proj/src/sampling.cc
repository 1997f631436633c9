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
#include <numeric>
#include <string>

#include "densematch/error.h"

namespace densematch {
namespace {

void PairUp(std::span<const VertexId> shuffled, Partition& out) {
  out.pairs.resize(shuffled.size() / 2);
  for (std::size_t i = 0; i < out.pairs.size(); ++i) {
    out.pairs[i] = Normalized({shuffled[2 * i], shuffled[2 * i + 1]});
  }
}

void CheckPairable(std::size_t size) {
  if (size < 2 || size % 2 != 0) {
    throw InputError("cannot partition a set of size " + std::to_string(size) +
                     " into pairs");
  }
}

}  // namespace

Partition SamplePartition(std::span<const VertexId> vertices, Rng& rng) {
  CheckPairable(vertices.size());
  std::vector<VertexId> order(vertices.begin(), vertices.end());
  rng.Shuffle(std::span<VertexId>(order));
  Partition x;
  PairUp(order, x);
  return x;
}

std::vector<VertexId> AllVertices(std::size_t n) {
  std::vector<VertexId> out(n);
  std::iota(out.begin(), out.end(), VertexId{0});
  return out;
}

std::size_t CountIntersection(const Partition& x, const Graph& family) {
  std::size_t count = 0;
  for (const Edge& p : x.pairs) {
    if (p.u < family.num_vertices() && p.v < family.num_vertices() &&
        family.HasEdge(p.u, p.v)) {
      ++count;
    }
  }
  return count;
}

DeviationEstimate EmpiricalDeviationRate(std::span<const VertexId> vertices,
                                         const Graph& family, double lambda,
                                         std::size_t trials, Rng& rng) {
  if (vertices.size() < 4 || vertices.size() % 2 != 0) {
    throw InputError("deviation estimate needs an even set of size >= 4");
  }
  if (!(lambda > 0)) throw InputError("lambda must be positive");
  if (trials == 0) throw InputError("trials must be positive");

  std::vector<bool> in_set(family.num_vertices(), false);
  for (VertexId v : vertices) {
    if (v < in_set.size()) in_set[v] = true;
  }
  for (const Edge& e : family.Edges()) {
    if (!in_set[e.u] || !in_set[e.v]) {
      throw InputError("pair (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ") is not inside the vertex set");
    }
  }

  const double size = static_cast<double>(vertices.size());
  DeviationEstimate out;
  out.trials = trials;
  out.mean = static_cast<double>(family.num_edges()) / (size - 1);
  out.chebyshev_bound = std::min(1.0, size / (lambda * lambda));

  std::vector<VertexId> order(vertices.begin(), vertices.end());
  Partition x;
  for (std::size_t i = 0; i < trials; ++i) {
    rng.Shuffle(std::span<VertexId>(order));
    PairUp(order, x);
    const double hits = static_cast<double>(CountIntersection(x, family));
    if (std::abs(hits - out.mean) >= lambda) ++out.deviations;
  }
  out.rate = static_cast<double>(out.deviations) / static_cast<double>(trials);
  return out;
}

AcceptedPartition SampleWithEdgeThreshold(const Graph& g,
                                          std::size_t threshold, Rng& rng,
                                          std::uint64_t max_attempts) {
  CheckPairable(g.num_vertices());
  std::vector<VertexId> order = AllVertices(g.num_vertices());
  AcceptedPartition out;
  for (out.attempts = 1; out.attempts <= max_attempts; ++out.attempts) {
    rng.Shuffle(std::span<VertexId>(order));
    PairUp(order, out.partition);
    out.intersection = CountIntersection(out.partition, g);
    if (out.intersection >= threshold) return out;
  }
  throw SamplingFailure("no partition reached " + std::to_string(threshold) +
                            " graph edges in " + std::to_string(max_attempts) +
                            " attempts",
                        max_attempts);
}

}  // namespace densematch
