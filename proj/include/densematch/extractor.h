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

#ifndef DENSEMATCH_EXTRACTOR_H_
#define DENSEMATCH_EXTRACTOR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "densematch/graph.h"
#include "densematch/rng.h"
#include "densematch/sampling.h"

namespace densematch {

// Knobs of one extraction run on a graph with c' * t vertices.
//
//   k = (c' - 1) / 2 - ell        p = 1 / k        q = 1 - c' / (ell^2 t)
//   bound = p^2 c' t (t - 1)^3 / (8 q (c' t - 1)(c' t - 3))
//
// `bound` caps the expected number of non-adjacent edge pairs of the matching
// drawn by ExtractOnce, and `threshold` = ceil(k t) is the number of graph
// edges a partition needs before it is accepted.
struct ExtractionParams {
  double c_prime = 0;
  std::size_t t = 0;
  double ell = 0;
  double k = 0;
  double q = 0;
  double p = 0;
  std::size_t threshold = 0;
  double bound = 0;
};

// The ell minimizing the bound for large t: (c'(c' - 1) / (2t))^(1/3).
double OptimalEll(double c_prime, std::size_t t);

// The closed-form bound as a function of (c', t, ell), written in the
// expanded form c' t (t-1)^3 / (2 (c'-1-2 ell)^2 (1 - c'/(ell^2 t))
// (c't - 1)(c't - 3)). No hypothesis checks.
double ExpectedNonadjacentBound(double c_prime, std::size_t t, double ell);

// Throws ParameterError naming the first violated requirement among
// c' >= 4, t >= 1, ell^2 > c'/t, ell <= c'/2 - 3/2.
ExtractionParams DeriveParams(double c_prime, std::size_t t, double ell);

struct TrialReport {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t rejection_attempts = 0;
  std::size_t intersection_size = 0;  // |X cap E(G)|
  std::size_t nonadjacent_pairs = 0;
  double bound = 0;
  bool within_bound = false;
};

struct TrialOutcome {
  Matching matching;
  TrialReport report;
};

// Uniformly random t-subset of the pairs of x that are edges of g.
// InputError if fewer than t such pairs exist.
Matching SelectFromPartition(const Graph& g, const Partition& x,
                             std::size_t t, Rng& rng);

// One draw of the randomized procedure: a uniform partition of V(g) with at
// least params.threshold graph edges (by rejection), then t of those edges
// chosen uniformly. g must have an even number of vertices equal to
// round(c' t) and independence number at most 2.
TrialOutcome ExtractOnce(const Graph& g, const ExtractionParams& params,
                         std::uint64_t seed,
                         std::uint64_t max_attempts = kDefaultMaxAttempts);

struct ExtractOptions {
  // Before sampling, look for a connected matching of size t: the clique
  // construction on a greedy clique at any size, then exact search when the
  // graph has at most `exact_shortcut_limit` vertices.
  bool shortcut = true;
  std::size_t exact_shortcut_limit = 16;
  std::uint64_t max_attempts = kDefaultMaxAttempts;
  // Worker threads for the trials. Results do not depend on this.
  unsigned threads = 1;
};

enum class ExtractionRoute { kSampled, kConnectedShortcut };

struct ExtractionResult {
  std::size_t input_vertices = 0;
  std::optional<VertexId> deleted_vertex;  // parity fix, input numbering
  std::size_t vertices_used = 0;
  // Missing only when the shortcut fired on a graph where the parameter
  // inequalities fail.
  std::optional<ExtractionParams> params;
  ExtractionRoute route = ExtractionRoute::kSampled;
  Matching best;  // input numbering
  std::size_t best_nonadjacent = 0;
  std::optional<std::size_t> best_trial;
  std::vector<TrialReport> reports;  // successful trials, by trial index
  std::size_t failed_trials = 0;
  std::uint64_t total_attempts = 0;
};

// Full pipeline: validate (c > 4, n >= c t, alpha <= 2), delete vertex 0 if
// n is odd, set c' = n'/t and ell = OptimalEll(c', t), then run `trials`
// independent ExtractOnce draws seeded DeriveSeed(master_seed, i) and keep
// the one with fewest non-adjacent pairs (ties to the lowest index).
ExtractionResult ExtractBest(const Graph& g, double c, std::size_t t,
                             std::size_t trials, std::uint64_t master_seed,
                             const ExtractOptions& options = {});

}  // namespace densematch

#endif  // DENSEMATCH_EXTRACTOR_H_
