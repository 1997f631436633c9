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

#include <string>
#include <vector>

#include "densematch/error.h"
#include "densematch/rng.h"

namespace densematch {

Graph TwoCliques(std::size_t clique_size) {
  if (clique_size == 0) throw InputError("clique size must be at least 1");
  GraphBuilder builder(2 * clique_size);
  for (std::size_t base : {std::size_t{0}, clique_size}) {
    for (std::size_t u = 0; u < clique_size; ++u) {
      for (std::size_t v = u + 1; v < clique_size; ++v) {
        builder.AddEdge(static_cast<VertexId>(base + u),
                        static_cast<VertexId>(base + v));
      }
    }
  }
  return std::move(builder).Build();
}

Graph ComplementOfRandomTriangleFree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("vertex count must be at least 1");
  std::vector<std::uint64_t> candidates;
  candidates.reserve(n * (n - 1) / 2);
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = u + 1; v < n; ++v) {
      candidates.push_back(u * n + v);
    }
  }
  Rng rng(seed);
  rng.Shuffle(std::span<std::uint64_t>(candidates));

  GraphBuilder triangle_free(n);
  const std::size_t words = WordsFor(n);
  for (std::uint64_t key : candidates) {
    const auto u = static_cast<VertexId>(key / n);
    const auto v = static_cast<VertexId>(key % n);
    auto row_u = triangle_free.Row(u);
    auto row_v = triangle_free.Row(v);
    bool closes_triangle = false;
    for (std::size_t w = 0; w < words; ++w) {
      if ((row_u[w] & row_v[w]) != 0) {
        closes_triangle = true;
        break;
      }
    }
    if (!closes_triangle) triangle_free.AddEdge(u, v);
  }
  return Complement(std::move(triangle_free).Build());
}

Graph C5BlowupComplement(const std::array<std::size_t, 5>& part_sizes) {
  std::array<std::size_t, 6> offset{};
  for (std::size_t i = 0; i < 5; ++i) {
    if (part_sizes[i] == 0) {
      throw InputError("C5 blow-up part " + std::to_string(i) + " is empty");
    }
    offset[i + 1] = offset[i] + part_sizes[i];
  }
  GraphBuilder blowup(offset[5]);
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t j = (i + 1) % 5;
    for (std::size_t a = offset[i]; a < offset[i + 1]; ++a) {
      for (std::size_t b = offset[j]; b < offset[j + 1]; ++b) {
        blowup.AddEdge(static_cast<VertexId>(a), static_cast<VertexId>(b));
      }
    }
  }
  return Complement(std::move(blowup).Build());
}

Graph CompleteGraph(std::size_t n) {
  if (n == 0) throw InputError("vertex count must be at least 1");
  return Complement(GraphBuilder(n).Build());
}

}  // namespace densematch
