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

#include "densematch/oracles.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <utility>

#include "densematch/error.h"

namespace densematch {
namespace {

using Mask = std::uint64_t;

void CheckLimit(const Graph& g, std::size_t limit, const char* what) {
  if (limit > 64) {
    throw SizeError(std::string(what) + " supports at most 64 vertices");
  }
  if (g.num_vertices() > limit) {
    throw SizeError(std::string(what) + ": graph has " +
                    std::to_string(g.num_vertices()) +
                    " vertices, limit is " + std::to_string(limit));
  }
}

// Neighbourhoods as single words; callers have checked n <= 64.
std::vector<Mask> NeighbourMasks(const Graph& g) {
  std::vector<Mask> out(g.num_vertices(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) out[v] = g.Row(v)[0];
  return out;
}

Mask Bit(VertexId v) { return Mask{1} << v; }

// Branch and bound over connected matchings. Candidate edges at a node are
// those disjoint from and adjacent to every chosen edge; they are consumed in
// index order so each edge set is visited once.
class ConnectedMatchingSearch {
 public:
  explicit ConnectedMatchingSearch(const Graph& g) {
    const std::vector<Mask> nbr = NeighbourMasks(g);
    edges_ = g.Edges();
    std::stable_sort(edges_.begin(), edges_.end(),
                     [&](const Edge& a, const Edge& b) {
                       return g.Degree(a.u) + g.Degree(a.v) >
                              g.Degree(b.u) + g.Degree(b.v);
                     });
    const std::size_t m = edges_.size();
    words_ = WordsFor(m);
    ends_.resize(m);
    std::vector<Mask> reach(m);
    for (std::size_t i = 0; i < m; ++i) {
      ends_[i] = Bit(edges_[i].u) | Bit(edges_[i].v);
      reach[i] = nbr[edges_[i].u] | nbr[edges_[i].v];
    }
    compat_.assign(m * words_, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if ((ends_[i] & ends_[j]) == 0 && (reach[i] & ends_[j]) != 0) {
          SetBit(std::span<Word>(compat_.data() + i * words_, words_), j);
        }
      }
    }
  }

  // Searches for a connected matching larger than `incumbent_size`, stopping
  // as soon as one of size `target` is found. Returns the best one found, or
  // nullopt if nothing beat the incumbent.
  std::optional<Matching> Run(std::size_t incumbent_size, std::size_t target) {
    best_size_ = incumbent_size;
    target_ = target;
    found_.reset();
    std::vector<Word> all(words_, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) SetBit(all, i);
    stack_.clear();
    Expand(all);
    return found_;
  }

 private:
  std::size_t Bound(std::span<const Word> cand) const {
    Mask covered = 0;
    std::size_t count = 0;
    for (std::size_t w = 0; w < cand.size(); ++w) {
      Word bits = cand[w];
      while (bits != 0) {
        covered |= ends_[w * kWordBits + std::countr_zero(bits)];
        bits &= bits - 1;
        ++count;
      }
    }
    return std::min<std::size_t>(count, std::popcount(covered) / 2);
  }

  bool Done() const { return best_size_ >= target_; }

  void Expand(std::vector<Word>& cand) {
    const std::size_t depth = stack_.size();
    if (depth > best_size_) {
      best_size_ = depth;
      found_ = Matching{};
      for (std::size_t i : stack_) found_->edges.push_back(edges_[i]);
      if (Done()) return;
    }
    if (depth + Bound(cand) <= best_size_) return;
    std::vector<Word> next(words_);
    for (std::size_t w = 0; w < words_; ++w) {
      while (cand[w] != 0) {
        const std::size_t i = w * kWordBits + std::countr_zero(cand[w]);
        cand[w] &= cand[w] - 1;
        const Word* row = compat_.data() + i * words_;
        for (std::size_t x = 0; x < words_; ++x) next[x] = cand[x] & row[x];
        stack_.push_back(i);
        Expand(next);
        stack_.pop_back();
        if (Done()) return;
        if (depth + Bound(cand) <= best_size_) return;
      }
    }
  }

  std::vector<Edge> edges_;
  std::vector<Mask> ends_;
  std::size_t words_ = 0;
  std::vector<Word> compat_;
  std::vector<std::size_t> stack_;
  std::size_t best_size_ = 0;
  std::size_t target_ = 0;
  std::optional<Matching> found_;
};

// Tomita-style maximum clique with greedy colouring bounds.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : nbr_(NeighbourMasks(g)) {}

  std::vector<VertexId> Run() {
    Mask all = 0;
    for (std::size_t v = 0; v < nbr_.size(); ++v) all |= Bit(v);
    best_.clear();
    current_.clear();
    Expand(all);
    return best_;
  }

 private:
  void Expand(Mask cand) {
    // Colour classes give an upper bound on the clique inside each prefix.
    std::vector<std::pair<VertexId, std::size_t>> order;
    Mask uncoloured = cand;
    std::size_t colour = 0;
    while (uncoloured != 0) {
      ++colour;
      Mask available = uncoloured;
      while (available != 0) {
        const auto v = static_cast<VertexId>(std::countr_zero(available));
        available &= ~(nbr_[v] | Bit(v));
        uncoloured &= ~Bit(v);
        order.emplace_back(v, colour);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto [v, bound] = *it;
      if (current_.size() + bound <= best_.size()) return;
      current_.push_back(v);
      const Mask next = cand & nbr_[v];
      if (next == 0) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        Expand(next);
      }
      current_.pop_back();
      cand &= ~Bit(v);
    }
  }

  std::vector<Mask> nbr_;
  std::vector<VertexId> current_;
  std::vector<VertexId> best_;
};

class MinNonadjacentSearch {
 public:
  MinNonadjacentSearch(const Graph& g, std::size_t t)
      : nbr_(NeighbourMasks(g)), t_(t) {}

  std::optional<MinNonadjacentMatching> Run() {
    Mask all = 0;
    for (std::size_t v = 0; v < nbr_.size(); ++v) all |= Bit(v);
    Recurse(all, 0);
    return best_;
  }

 private:
  struct Chosen {
    Edge edge;
    Mask ends;
    Mask reach;
  };

  void Recurse(Mask free, std::size_t cost) {
    if (best_ && cost >= best_->nonadjacent) return;
    if (chosen_.size() == t_) {
      best_ = MinNonadjacentMatching{};
      for (const Chosen& c : chosen_) best_->matching.edges.push_back(c.edge);
      best_->nonadjacent = cost;
      return;
    }
    const std::size_t needed = 2 * (t_ - chosen_.size());
    if (static_cast<std::size_t>(std::popcount(free)) < needed) return;
    const auto v = static_cast<VertexId>(std::countr_zero(free));
    const Mask rest = free & ~Bit(v);
    Mask partners = nbr_[v] & rest;
    while (partners != 0) {
      const auto w = static_cast<VertexId>(std::countr_zero(partners));
      partners &= partners - 1;
      const Mask ends = Bit(v) | Bit(w);
      const Mask reach = nbr_[v] | nbr_[w];
      std::size_t extra = 0;
      for (const Chosen& c : chosen_) {
        if ((reach & c.ends) == 0) ++extra;
      }
      chosen_.push_back({{v, w}, ends, reach});
      Recurse(rest & ~Bit(w), cost + extra);
      chosen_.pop_back();
      if (best_ && best_->nonadjacent == 0) return;
    }
    if (static_cast<std::size_t>(std::popcount(rest)) >= needed) {
      Recurse(rest, cost);
    }
  }

  std::vector<Mask> nbr_;
  std::size_t t_;
  std::vector<Chosen> chosen_;
  std::optional<MinNonadjacentMatching> best_;
};

}  // namespace

std::size_t NonadjacentPairs(const Graph& g, const Matching& m) {
  ValidateMatching(g, m);
  const std::size_t words = g.words_per_row();
  std::vector<Word> reach(m.size() * words);
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto ru = g.Row(m.edges[i].u);
    auto rv = g.Row(m.edges[i].v);
    for (std::size_t w = 0; w < words; ++w) {
      reach[i * words + w] = ru[w] | rv[w];
    }
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::span<const Word> row(reach.data() + i * words, words);
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!TestBit(row, m.edges[j].u) && !TestBit(row, m.edges[j].v)) ++count;
    }
  }
  return count;
}

std::size_t NonadjacentPairsScan(const Graph& g, const Matching& m) {
  ValidateMatching(g, m);
  std::size_t count = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Edge& e = m.edges[i];
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const Edge& f = m.edges[j];
      if (!g.HasEdge(e.u, f.u) && !g.HasEdge(e.u, f.v) &&
          !g.HasEdge(e.v, f.u) && !g.HasEdge(e.v, f.v)) {
        ++count;
      }
    }
  }
  return count;
}

bool IsConnectedMatching(const Graph& g, const Matching& m) {
  return NonadjacentPairs(g, m) == 0;
}

BadQuadrupleCount CountBadQuadruples(const Graph& g,
                                     std::optional<std::size_t> k) {
  const std::size_t n = g.num_vertices();
  BadQuadrupleCount out;
  if (n == 0) return out;
  const Graph h = Complement(g);
  const std::size_t words = g.words_per_row();
  out.non_edges = h.num_edges();
  const std::size_t min_degree = MinDegree(g);
  out.k = k.value_or(n - min_degree);
  out.bound_applies = out.k >= 1 && min_degree + out.k >= n;

  for (VertexId u = 0; u < n; ++u) {
    auto non_u = h.Row(u);
    auto adj_u = g.Row(u);
    for (VertexId w = 0; w < n; ++w) {
      if (!TestBit(non_u, w)) continue;
      auto non_w = h.Row(w);
      auto adj_w = g.Row(w);
      for (std::size_t a = 0; a < words; ++a) {
        Word vs = adj_u[a] & non_w[a];
        while (vs != 0) {
          const auto v = static_cast<VertexId>(a * kWordBits +
                                               std::countr_zero(vs));
          vs &= vs - 1;
          auto non_v = h.Row(v);
          for (std::size_t b = 0; b < words; ++b) {
            out.count += static_cast<std::uint64_t>(
                std::popcount(adj_w[b] & non_u[b] & non_v[b]));
          }
        }
      }
    }
  }

  const unsigned __int128 km1 = out.k >= 1 ? out.k - 1 : 0;
  const unsigned __int128 bound = 2 * out.non_edges * km1 * km1;
  const auto cap = std::numeric_limits<std::uint64_t>::max();
  out.bound = bound > cap ? cap : static_cast<std::uint64_t>(bound);
  return out;
}

std::optional<Matching> FindConnectedMatching(const Graph& g, std::size_t t,
                                              std::size_t limit) {
  CheckLimit(g, limit, "connected matching search");
  if (t == 0) return Matching{};
  if (2 * t > g.num_vertices()) return std::nullopt;
  ConnectedMatchingSearch search(g);
  return search.Run(t - 1, t);
}

std::size_t ConnectedMatchingNumber(const Graph& g, std::size_t limit) {
  CheckLimit(g, limit, "connected matching number");
  // Seed the incumbent with the clique construction.
  const std::size_t seed = ExtendFromClique(g, GreedyClique(g)).size();
  ConnectedMatchingSearch search(g);
  auto better = search.Run(seed, std::numeric_limits<std::size_t>::max());
  return better ? better->size() : seed;
}

std::vector<VertexId> MaximumClique(const Graph& g, std::size_t limit) {
  CheckLimit(g, limit, "clique number");
  return CliqueSearch(g).Run();
}

std::size_t CliqueNumber(const Graph& g, std::size_t limit) {
  return MaximumClique(g, limit).size();
}

std::vector<VertexId> GreedyClique(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t words = g.words_per_row();
  std::vector<Word> cand(words, 0);
  for (std::size_t v = 0; v < n; ++v) SetBit(cand, v);
  std::vector<VertexId> clique;
  while (true) {
    std::optional<VertexId> pick;
    std::size_t pick_score = 0;
    for (std::size_t w = 0; w < words; ++w) {
      Word bits = cand[w];
      while (bits != 0) {
        const auto v = static_cast<VertexId>(w * kWordBits +
                                             std::countr_zero(bits));
        bits &= bits - 1;
        auto row = g.Row(v);
        std::size_t score = 0;
        for (std::size_t x = 0; x < words; ++x) {
          score += static_cast<std::size_t>(std::popcount(row[x] & cand[x]));
        }
        if (!pick || score > pick_score) {
          pick = v;
          pick_score = score;
        }
      }
    }
    if (!pick) break;
    clique.push_back(*pick);
    auto row = g.Row(*pick);
    for (std::size_t x = 0; x < words; ++x) cand[x] &= row[x];
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

MinNonadjacentMatching MinNonadjacentMatchingExact(const Graph& g,
                                                   std::size_t t,
                                                   std::size_t limit) {
  CheckLimit(g, limit, "minimum non-adjacent matching");
  auto best = MinNonadjacentSearch(g, t).Run();
  if (!best) {
    throw InfeasibleError("graph has no matching with " + std::to_string(t) +
                          " edges");
  }
  return *std::move(best);
}

Matching ExtendFromClique(const Graph& g, std::span<const VertexId> clique) {
  const std::size_t n = g.num_vertices();
  std::vector<char> in_clique(n, 0);
  for (VertexId a : clique) {
    if (a >= n) throw InputError("clique vertex out of range");
    if (in_clique[a]) throw InputError("clique lists a vertex twice");
    in_clique[a] = 1;
  }
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (!g.HasEdge(clique[i], clique[j])) {
        throw InputError("vertices " + std::to_string(clique[i]) + " and " +
                         std::to_string(clique[j]) + " are not adjacent");
      }
    }
  }

  // Kuhn's augmenting paths from the clique side.
  constexpr VertexId kNone = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> mate_of_outside(n, kNone);
  std::vector<char> visited(n, 0);
  const std::size_t words = g.words_per_row();
  auto augment = [&](auto&& self, VertexId a) -> bool {
    auto row = g.Row(a);
    for (std::size_t w = 0; w < words; ++w) {
      Word bits = row[w];
      while (bits != 0) {
        const auto b = static_cast<VertexId>(w * kWordBits +
                                             std::countr_zero(bits));
        bits &= bits - 1;
        if (in_clique[b] || visited[b]) continue;
        visited[b] = 1;
        if (mate_of_outside[b] == kNone || self(self, mate_of_outside[b])) {
          mate_of_outside[b] = a;
          return true;
        }
      }
    }
    return false;
  };
  std::vector<char> matched(n, 0);
  for (VertexId a : clique) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(augment, a);
  }

  Matching m;
  for (VertexId b = 0; b < n; ++b) {
    if (mate_of_outside[b] != kNone) {
      m.edges.push_back(Normalized({mate_of_outside[b], b}));
      matched[mate_of_outside[b]] = 1;
    }
  }
  std::optional<VertexId> pending;
  for (VertexId a : clique) {
    if (matched[a]) continue;
    if (pending) {
      m.edges.push_back(Normalized({*pending, a}));
      pending.reset();
    } else {
      pending = a;
    }
  }
  return m;
}

CliqueBoundAudit AuditCliqueBound(const Graph& g, std::size_t t,
                                  std::size_t limit) {
  CheckLimit(g, limit, "clique bound audit");
  CliqueBoundAudit out;
  const std::size_t n = g.num_vertices();
  const bool alpha_two =
      n >= 2 && g.num_edges() < n * (n - 1) / 2 && IsAlphaAtMost2(g);
  if (t == 0 || !alpha_two || n + 1 < 4 * t) return out;
  if (FindConnectedMatching(g, t, limit)) return out;
  out.hypotheses_hold = true;
  out.cm = ConnectedMatchingNumber(g, limit);
  out.omega = CliqueNumber(g, std::max(limit, kCliqueLimit));
  out.holds = *out.omega <= *out.cm;
  return out;
}

}  // namespace densematch
