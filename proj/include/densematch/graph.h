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

#ifndef DENSEMATCH_GRAPH_H_
#define DENSEMATCH_GRAPH_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace densematch {

// Dense vertex index in [0, n).
using VertexId = std::uint32_t;

// Unordered vertex pair. Graph-producing code normalizes to u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge Normalized(Edge e) {
  return e.u < e.v ? e : Edge{e.v, e.u};
}

inline constexpr std::size_t kDefaultMaxVertices = std::size_t{1} << 20;

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t WordsFor(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

class Graph;

// Mutable adjacency matrix used while constructing a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n,
                        std::size_t max_vertices = kDefaultMaxVertices);

  std::size_t num_vertices() const { return n_; }

  // Throws InputError on out-of-range ids or a self-loop. Duplicates are
  // ignored. Returns true iff the edge was new.
  bool AddEdge(VertexId u, VertexId v);
  bool HasEdge(VertexId u, VertexId v) const;
  std::span<const Word> Row(VertexId v) const {
    return {bits_.data() + v * words_, words_};
  }

  Graph Build() &&;

 private:
  friend class Graph;

  std::size_t n_;
  std::size_t words_;
  std::size_t m_ = 0;
  std::vector<Word> bits_;
};

// Immutable simple graph stored as one packed bit-row per vertex.
// Symmetric and irreflexive by construction; safe to share across threads.
class Graph {
 public:
  Graph() = default;

  // Duplicates collapse; self-loops and out-of-range ids throw InputError.
  static Graph FromEdgeList(std::size_t n, std::span<const Edge> edges,
                            std::size_t max_vertices = kDefaultMaxVertices);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return m_; }
  std::size_t words_per_row() const { return words_; }

  bool HasEdge(VertexId u, VertexId v) const {
    return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  std::span<const Word> Row(VertexId v) const {
    return {bits_.data() + v * words_, words_};
  }
  std::size_t Degree(VertexId v) const;

  // All edges with u < v, in lexicographic order.
  std::vector<Edge> Edges() const;

  // Deletes `v` and renumbers vertices above it down by one.
  Graph WithoutVertex(VertexId v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  friend Graph Complement(const Graph& g);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<Word> bits_;
};

// A set of vertex-disjoint edges of some host graph.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

// Throws InputError unless every pair is an edge of `g` and all endpoints are
// distinct.
void ValidateMatching(const Graph& g, const Matching& m);

// True iff no three vertices are pairwise non-adjacent, i.e. the complement is
// triangle-free. Runs as triangle detection over complement rows.
bool IsAlphaAtMost2(const Graph& g);

Graph Complement(const Graph& g);

// Require n >= 1.
std::size_t MinDegree(const Graph& g);
std::size_t MaxDegree(const Graph& g);

// True iff some vertex of `a` is adjacent to some vertex of `b`. The sets must
// be nonempty and disjoint (InputError otherwise).
bool SetsAdjacent(const Graph& g, std::span<const VertexId> a,
                  std::span<const VertexId> b);

// Bit helpers shared by the algorithms.
inline bool TestBit(std::span<const Word> row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1U;
}
inline void SetBit(std::span<Word> row, std::size_t i) {
  row[i / kWordBits] |= Word{1} << (i % kWordBits);
}
inline void ClearBit(std::span<Word> row, std::size_t i) {
  row[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}
inline std::size_t PopCount(std::span<const Word> row) {
  std::size_t total = 0;
  for (Word w : row) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

}  // namespace densematch

#endif  // DENSEMATCH_GRAPH_H_
