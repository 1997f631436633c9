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

#include "densematch/extractor.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <string>
#include <thread>

#include "densematch/error.h"
#include "densematch/oracles.h"

namespace densematch {
namespace {

std::string Num(double x) {
  std::ostringstream out;
  out.precision(10);
  out << x;
  return out.str();
}

// ExtractOnce without the graph precondition checks.
TrialOutcome RunTrial(const Graph& g, const ExtractionParams& params,
                      std::uint64_t seed, std::uint64_t max_attempts) {
  Rng rng(seed);
  AcceptedPartition accepted =
      SampleWithEdgeThreshold(g, params.threshold, rng, max_attempts);
  TrialOutcome out;
  out.matching = SelectFromPartition(g, accepted.partition, params.t, rng);
  out.report.seed = seed;
  out.report.rejection_attempts = accepted.attempts;
  out.report.intersection_size = accepted.intersection;
  out.report.nonadjacent_pairs = NonadjacentPairs(g, out.matching);
  out.report.bound = params.bound;
  out.report.within_bound =
      static_cast<double>(out.report.nonadjacent_pairs) <= params.bound;
  return out;
}

Matching ToInputNumbering(Matching m, std::optional<VertexId> deleted) {
  if (!deleted) return m;
  for (Edge& e : m.edges) {
    if (e.u >= *deleted) ++e.u;
    if (e.v >= *deleted) ++e.v;
  }
  return m;
}

}  // namespace

double OptimalEll(double c_prime, std::size_t t) {
  return std::cbrt(c_prime * (c_prime - 1) / (2.0 * static_cast<double>(t)));
}

double ExpectedNonadjacentBound(double c_prime, std::size_t t, double ell) {
  const double tt = static_cast<double>(t);
  const double ct = c_prime * tt;
  const double gap = c_prime - 1 - 2 * ell;
  return ct * std::pow(tt - 1, 3) /
         (2 * gap * gap * (1 - c_prime / (ell * ell * tt)) * (ct - 1) *
          (ct - 3));
}

ExtractionParams DeriveParams(double c_prime, std::size_t t, double ell) {
  if (!(c_prime >= 4)) {
    throw ParameterError("c' = " + Num(c_prime) + " violates c' >= 4");
  }
  if (t == 0) throw ParameterError("t must be at least 1");
  const double tt = static_cast<double>(t);
  if (!(ell > 0)) throw ParameterError("ell = " + Num(ell) + " is not positive");
  if (!(ell * ell > c_prime / tt)) {
    throw ParameterError("ell^2 = " + Num(ell * ell) + " violates ell^2 > c'/t = " +
                         Num(c_prime / tt));
  }
  if (!(ell <= c_prime / 2 - 1.5)) {
    throw ParameterError("ell = " + Num(ell) +
                         " violates ell <= c'/2 - 3/2 = " +
                         Num(c_prime / 2 - 1.5));
  }
  ExtractionParams out;
  out.c_prime = c_prime;
  out.t = t;
  out.ell = ell;
  out.k = (c_prime - 1) / 2 - ell;
  out.q = 1 - c_prime / (ell * ell * tt);
  out.p = 1 / out.k;
  out.threshold = static_cast<std::size_t>(std::ceil(out.k * tt));
  const double ct = c_prime * tt;
  out.bound = out.p * out.p * ct * std::pow(tt - 1, 3) /
              (8 * out.q * (ct - 1) * (ct - 3));
  return out;
}

Matching SelectFromPartition(const Graph& g, const Partition& x,
                             std::size_t t, Rng& rng) {
  std::vector<Edge> hits;
  hits.reserve(x.pairs.size());
  for (const Edge& e : x.pairs) {
    if (g.HasEdge(e.u, e.v)) hits.push_back(e);
  }
  if (hits.size() < t) {
    throw InputError("partition holds " + std::to_string(hits.size()) +
                     " graph edges, fewer than t = " + std::to_string(t));
  }
  rng.PartialShuffle(std::span<Edge>(hits), t);
  hits.resize(t);
  return Matching{std::move(hits)};
}

TrialOutcome ExtractOnce(const Graph& g, const ExtractionParams& params,
                         std::uint64_t seed, std::uint64_t max_attempts) {
  const std::size_t n = g.num_vertices();
  if (n % 2 != 0) throw InputError("extraction needs an even vertex count");
  const auto expected = std::llround(params.c_prime *
                                     static_cast<double>(params.t));
  if (static_cast<long long>(n) != expected) {
    throw InputError("graph has " + std::to_string(n) +
                     " vertices but c' t = " + std::to_string(expected));
  }
  if (!IsAlphaAtMost2(g)) {
    throw InputError("graph has three pairwise non-adjacent vertices");
  }
  return RunTrial(g, params, seed, max_attempts);
}

ExtractionResult ExtractBest(const Graph& g, double c, std::size_t t,
                             std::size_t trials, std::uint64_t master_seed,
                             const ExtractOptions& options) {
  if (t == 0) throw InputError("t must be at least 1");
  if (trials == 0) throw InputError("trials must be at least 1");
  if (!(c > 4)) throw InputError("c = " + Num(c) + " must exceed 4");
  const std::size_t n = g.num_vertices();
  if (static_cast<double>(n) < c * static_cast<double>(t)) {
    throw InputError("graph has " + std::to_string(n) +
                     " vertices, fewer than c t = " +
                     Num(c * static_cast<double>(t)));
  }
  if (!IsAlphaAtMost2(g)) {
    throw InputError("graph has three pairwise non-adjacent vertices");
  }

  ExtractionResult result;
  result.input_vertices = n;
  Graph trimmed;
  const Graph* work = &g;
  if (n % 2 != 0) {
    result.deleted_vertex = 0;
    trimmed = g.WithoutVertex(0);
    work = &trimmed;
  }
  result.vertices_used = work->num_vertices();
  const double c_prime =
      static_cast<double>(result.vertices_used) / static_cast<double>(t);

  std::optional<ParameterError> param_error;
  try {
    result.params = DeriveParams(c_prime, t, OptimalEll(c_prime, t));
  } catch (const ParameterError& e) {
    param_error = e;
  }

  if (options.shortcut) {
    std::optional<Matching> connected;
    Matching built = ExtendFromClique(g, GreedyClique(g));
    if (built.size() >= t) {
      built.edges.resize(t);
      connected = std::move(built);
    } else if (n <= options.exact_shortcut_limit) {
      connected = FindConnectedMatching(g, t, n);
    }
    if (connected) {
      result.route = ExtractionRoute::kConnectedShortcut;
      result.best = *std::move(connected);
      result.best_nonadjacent = 0;
      return result;
    }
  }
  if (param_error) throw *param_error;

  const ExtractionParams& params = *result.params;
  std::vector<std::optional<TrialOutcome>> outcomes(trials);
  std::vector<std::uint64_t> failed_attempts(trials, 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      const std::uint64_t seed = DeriveSeed(master_seed, i);
      try {
        outcomes[i] = RunTrial(*work, params, seed, options.max_attempts);
        outcomes[i]->report.trial = i;
      } catch (const SamplingFailure& e) {
        failed_attempts[i] = e.attempts();
      }
    }
  };
  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < trials; ++i) {
    if (!outcomes[i]) {
      ++result.failed_trials;
      result.total_attempts += failed_attempts[i];
      continue;
    }
    const TrialReport& report = outcomes[i]->report;
    result.total_attempts += report.rejection_attempts;
    if (!result.best_trial ||
        report.nonadjacent_pairs < result.best_nonadjacent) {
      result.best_trial = i;
      result.best_nonadjacent = report.nonadjacent_pairs;
    }
    result.reports.push_back(report);
  }
  if (!result.best_trial) {
    throw SamplingFailure("all " + std::to_string(trials) +
                              " trials failed to reach the edge threshold " +
                              std::to_string(params.threshold),
                          result.total_attempts);
  }
  result.best = ToInputNumbering(outcomes[*result.best_trial]->matching,
                                 result.deleted_vertex);
  return result;
}

}  // namespace densematch
