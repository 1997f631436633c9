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

#include "densematch/graph.h"

#include <algorithm>
#include <string>

#include "densematch/error.h"

namespace densematch {
namespace {

void CheckEndpoints(std::size_t n, VertexId u, VertexId v) {
  if (u >= n || v >= n) {
    throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") has an endpoint outside [0, " + std::to_string(n) +
                     ")");
  }
  if (u == v) {
    throw InputError("self-loop at vertex " + std::to_string(u));
  }
}

}  // namespace

GraphBuilder::GraphBuilder(std::size_t n, std::size_t max_vertices)
    : n_(n), words_(WordsFor(n)) {
  if (n > max_vertices) {
    throw InputError("vertex count " + std::to_string(n) +
                     " exceeds the limit " + std::to_string(max_vertices));
  }
  bits_.assign(n_ * words_, 0);
}

bool GraphBuilder::AddEdge(VertexId u, VertexId v) {
  CheckEndpoints(n_, u, v);
  std::span<Word> row_u{bits_.data() + u * words_, words_};
  if (TestBit(row_u, v)) return false;
  SetBit(row_u, v);
  SetBit(std::span<Word>{bits_.data() + v * words_, words_}, u);
  ++m_;
  return true;
}

bool GraphBuilder::HasEdge(VertexId u, VertexId v) const {
  return TestBit(Row(u), v);
}

Graph GraphBuilder::Build() && {
  Graph g;
  g.n_ = n_;
  g.words_ = words_;
  g.m_ = m_;
  g.bits_ = std::move(bits_);
  n_ = words_ = m_ = 0;
  return g;
}

Graph Graph::FromEdgeList(std::size_t n, std::span<const Edge> edges,
                          std::size_t max_vertices) {
  GraphBuilder builder(n, max_vertices);
  for (const Edge& e : edges) builder.AddEdge(e.u, e.v);
  return std::move(builder).Build();
}

std::size_t Graph::Degree(VertexId v) const { return PopCount(Row(v)); }

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (VertexId u = 0; u < n_; ++u) {
    auto row = Row(u);
    for (std::size_t w = (u + 1) / kWordBits; w < words_; ++w) {
      Word bits = row[w];
      if (w == (u + 1) / kWordBits) bits &= ~Word{0} << ((u + 1) % kWordBits);
      while (bits != 0) {
        const auto v = static_cast<VertexId>(w * kWordBits +
                                             std::countr_zero(bits));
        out.push_back({u, v});
        bits &= bits - 1;
      }
    }
  }
  return out;
}

Graph Graph::WithoutVertex(VertexId v) const {
  if (v >= n_) {
    throw InputError("cannot delete vertex " + std::to_string(v) +
                     " from a graph on " + std::to_string(n_) + " vertices");
  }
  GraphBuilder builder(n_ - 1, n_);
  for (const Edge& e : Edges()) {
    if (e.u == v || e.v == v) continue;
    builder.AddEdge(e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v);
  }
  return std::move(builder).Build();
}

void ValidateMatching(const Graph& g, const Matching& m) {
  std::vector<bool> used(g.num_vertices(), false);
  for (const Edge& e : m.edges) {
    if (e.u >= g.num_vertices() || e.v >= g.num_vertices() || e.u == e.v ||
        !g.HasEdge(e.u, e.v)) {
      throw InputError("matching pair (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ") is not an edge of the graph");
    }
    if (used[e.u] || used[e.v]) {
      throw InputError("matching pairs share an endpoint at (" +
                       std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
    used[e.u] = used[e.v] = true;
  }
}

Graph Complement(const Graph& g) {
  Graph h;
  h.n_ = g.n_;
  h.words_ = g.words_;
  h.bits_.resize(g.bits_.size());
  const std::size_t tail = g.n_ % kWordBits;
  const Word last_mask = tail == 0 ? ~Word{0} : (Word{1} << tail) - 1;
  std::size_t degree_sum = 0;
  for (VertexId u = 0; u < g.n_; ++u) {
    std::span<Word> row{h.bits_.data() + u * h.words_, h.words_};
    auto src = g.Row(u);
    for (std::size_t w = 0; w < h.words_; ++w) row[w] = ~src[w];
    row[h.words_ - 1] &= last_mask;
    ClearBit(row, u);
    degree_sum += PopCount(row);
  }
  h.m_ = degree_sum / 2;
  return h;
}

bool IsAlphaAtMost2(const Graph& g) {
  // Triangle search in the complement: for every complement edge uv with
  // u < v, look for a common complement neighbour.
  const Graph h = Complement(g);
  const std::size_t words = h.words_per_row();
  for (VertexId u = 0; u < h.num_vertices(); ++u) {
    auto row_u = h.Row(u);
    for (std::size_t w = 0; w < words; ++w) {
      Word bits = row_u[w];
      while (bits != 0) {
        const auto v = static_cast<VertexId>(w * kWordBits +
                                             std::countr_zero(bits));
        bits &= bits - 1;
        if (v <= u) continue;
        auto row_v = h.Row(v);
        for (std::size_t x = 0; x < words; ++x) {
          if ((row_u[x] & row_v[x]) != 0) return false;
        }
      }
    }
  }
  return true;
}

std::size_t MinDegree(const Graph& g) {
  if (g.num_vertices() == 0) throw InputError("minimum degree of empty graph");
  std::size_t best = g.Degree(0);
  for (VertexId v = 1; v < g.num_vertices(); ++v) {
    best = std::min(best, g.Degree(v));
  }
  return best;
}

std::size_t MaxDegree(const Graph& g) {
  if (g.num_vertices() == 0) throw InputError("maximum degree of empty graph");
  std::size_t best = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    best = std::max(best, g.Degree(v));
  }
  return best;
}

bool SetsAdjacent(const Graph& g, std::span<const VertexId> a,
                  std::span<const VertexId> b) {
  if (a.empty() || b.empty()) {
    throw InputError("set adjacency needs two nonempty sets");
  }
  std::vector<Word> mask(g.words_per_row(), 0);
  for (VertexId v : b) {
    if (v >= g.num_vertices()) {
      throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    SetBit(mask, v);
  }
  for (VertexId u : a) {
    if (u >= g.num_vertices()) {
      throw InputError("vertex " + std::to_string(u) + " out of range");
    }
    if (TestBit(mask, u)) {
      throw InputError("sets overlap at vertex " + std::to_string(u));
    }
  }
  for (VertexId u : a) {
    auto row = g.Row(u);
    for (std::size_t w = 0; w < mask.size(); ++w) {
      if ((row[w] & mask[w]) != 0) return true;
    }
  }
  return false;
}

}  // namespace densematch
