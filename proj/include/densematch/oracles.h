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

#ifndef DENSEMATCH_ORACLES_H_
#define DENSEMATCH_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "densematch/graph.h"

namespace densematch {

inline constexpr std::size_t kConnectedMatchingLimit = 24;
inline constexpr std::size_t kCliqueLimit = 40;
inline constexpr std::size_t kMinMatchingLimit = 14;

// Number of unordered pairs {e, f} of matching edges with no edge of g
// between V(e) and V(f). Builds the neighbourhood union row of every matching
// edge once, then tests membership. Throws InputError on an invalid matching.
std::size_t NonadjacentPairs(const Graph& g, const Matching& m);

// Same quantity by scanning the four cross pairs of every edge pair.
std::size_t NonadjacentPairsScan(const Graph& g, const Matching& m);

// True iff every two edges of m have adjacent endpoint sets.
bool IsConnectedMatching(const Graph& g, const Matching& m);

// Ordered (u, v, w, z) with uv, wz edges and uw, uz, vw, vz non-edges.
struct BadQuadrupleCount {
  std::uint64_t count = 0;
  std::uint64_t non_edges = 0;  // b = |E(complement)|
  std::size_t k = 0;
  std::uint64_t bound = 0;      // 2 b (k - 1)^2, saturating
  bool bound_applies = false;   // min degree >= n - k
};

// Exact count by enumerating ordered non-edges (u, w), then v among the
// neighbours of u that miss w, then z among the neighbours of w that miss
// both u and v. `k` defaults to n - min_degree.
BadQuadrupleCount CountBadQuadruples(const Graph& g,
                                     std::optional<std::size_t> k = {});

// Largest connected matching size. Exact branch and bound; SizeError when
// n exceeds `limit` (at most 64).
std::size_t ConnectedMatchingNumber(const Graph& g,
                                    std::size_t limit = kConnectedMatchingLimit);

// A connected matching of exactly `t` edges, if one exists.
std::optional<Matching> FindConnectedMatching(
    const Graph& g, std::size_t t, std::size_t limit = kConnectedMatchingLimit);

// Exact clique number via bit-row branch and bound.
std::size_t CliqueNumber(const Graph& g, std::size_t limit = kCliqueLimit);
std::vector<VertexId> MaximumClique(const Graph& g,
                                    std::size_t limit = kCliqueLimit);

// Maximal clique grown by repeatedly taking the candidate with the most
// candidate neighbours. Polynomial; used as a cheap lower bound.
std::vector<VertexId> GreedyClique(const Graph& g);

struct MinNonadjacentMatching {
  Matching matching;
  std::size_t nonadjacent = 0;
};

// Exhaustive minimum of NonadjacentPairs over all t-edge matchings.
// InfeasibleError if g has no matching of size t; SizeError above `limit`.
MinNonadjacentMatching MinNonadjacentMatchingExact(
    const Graph& g, std::size_t t, std::size_t limit = kMinMatchingLimit);

// Connected matching built from a clique A: a maximum matching between A and
// B = V \ A (augmenting paths), then the unmatched vertices of A paired up
// among themselves. Edges of the bipartite part come first. InputError if A
// is not a clique.
Matching ExtendFromClique(const Graph& g, std::span<const VertexId> clique);

struct CliqueBoundAudit {
  bool hypotheses_hold = false;  // alpha = 2, n >= 4t - 1, cm <= t - 1
  bool holds = true;             // hypotheses imply omega <= cm
  std::optional<std::size_t> cm;
  std::optional<std::size_t> omega;
};

// Checks on one instance that a graph with independence number exactly 2,
// at least 4t - 1 vertices and no connected matching of size t has clique
// number at most cm. Vacuously holds when a hypothesis fails.
CliqueBoundAudit AuditCliqueBound(const Graph& g, std::size_t t,
                                  std::size_t limit = kConnectedMatchingLimit);

}  // namespace densematch

#endif  // DENSEMATCH_ORACLES_H_
