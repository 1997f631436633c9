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

#ifndef DENSEMATCH_GENERATORS_H_
#define DENSEMATCH_GENERATORS_H_

#include <array>
#include <cstddef>
#include <cstdint>

#include "densematch/graph.h"

namespace densematch {

// Disjoint union of two s-cliques on vertices [0, s) and [s, 2s).
// two_cliques(2t - 1) has no connected matching of size t.
Graph TwoCliques(std::size_t clique_size);

// Complement of a maximal triangle-free graph from the random greedy process:
// every pair of vertices is visited once in seeded random order and becomes
// an edge unless it would close a triangle. Time and memory are
// Theta(n^2), so this is intended for n in the low thousands.
Graph ComplementOfRandomTriangleFree(std::size_t n, std::uint64_t seed);

// Complement of the C5 blow-up where vertex i becomes an independent set of
// part_sizes[i] vertices (numbered consecutively, part 0 first) and
// consecutive parts are completely joined. Every part must be nonempty.
Graph C5BlowupComplement(const std::array<std::size_t, 5>& part_sizes);

Graph CompleteGraph(std::size_t n);

}  // namespace densematch

#endif  // DENSEMATCH_GENERATORS_H_
