// Copyright 2026 The Imbalance Authors
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

// Graphs, vertex orderings, and the imbalance objective.
//
// The imbalance of a vertex v under an ordering is the absolute difference
// between the number of neighbours placed before v and the number placed
// after it. The imbalance of an ordering is the sum over all vertices.
//
// Vertices are opaque string tokens. Every choice that is otherwise
// arbitrary (bipartition colour, tie-breaking in constructions, witness
// selection) resolves to the lexicographically smallest token first.

#ifndef IMBALANCE_GRAPH_H_
#define IMBALANCE_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace imbalance {

using VertexId = std::string;

// Undirected simple graph. Vertices are stored sorted, so vertex index
// order equals lexicographic token order. Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  // Sorted vertex tokens; index i in every index-based accessor refers to
  // vertices()[i].
  const std::vector<VertexId>& vertices() const { return names_; }
  const VertexId& name(int v) const { return names_[v]; }

  std::optional<int> FindIndex(std::string_view id) const;
  // Throws DomainError if `id` is not a vertex.
  int Index(std::string_view id) const;
  bool Contains(std::string_view id) const { return FindIndex(id).has_value(); }

  // Sorted neighbour indices.
  const std::vector<int>& Neighbors(int v) const { return adjacency_[v]; }
  std::size_t Degree(int v) const { return adjacency_[v].size(); }
  bool HasEdge(int u, int v) const;
  bool HasEdge(std::string_view u, std::string_view v) const;

  // All edges as index pairs (u < v), sorted.
  std::vector<std::pair<int, int>> Edges() const;

  // G[S] for the given vertex subset. Throws DomainError on unknown ids.
  Graph InducedSubgraph(std::span<const VertexId> subset) const;

 private:
  friend class GraphBuilder;

  std::vector<VertexId> names_;
  std::unordered_map<VertexId, int> index_;
  std::vector<std::vector<int>> adjacency_;
  std::size_t num_edges_ = 0;
};

class GraphBuilder {
 public:
  // Both calls are idempotent.
  void AddVertex(VertexId id);
  // Throws DomainError on a self-loop.
  void AddEdge(const VertexId& u, const VertexId& v);
  Graph Build() &&;

 private:
  std::unordered_map<VertexId, std::vector<VertexId>> adjacency_;
};

// Two-colouring of a graph.
struct Bipartition {
  std::vector<VertexId> x_part;  // sorted
  std::vector<VertexId> y_part;  // sorted

  bool InX(std::string_view id) const;
  bool InY(std::string_view id) const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// Bijection from a vertex set onto positions 1..n. Position k holds
// sequence()[k - 1].
class Ordering {
 public:
  Ordering() = default;
  // Throws DomainError if a vertex appears twice.
  explicit Ordering(std::vector<VertexId> sequence);

  const std::vector<VertexId>& sequence() const { return sequence_; }
  std::size_t size() const { return sequence_.size(); }
  bool empty() const { return sequence_.empty(); }
  // 0-based access.
  const VertexId& operator[](std::size_t i) const { return sequence_[i]; }

  bool Contains(std::string_view id) const;
  // 1-based position. Throws DomainError when absent.
  std::size_t PositionOf(std::string_view id) const;

  Ordering Reversed() const;

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.sequence_ == b.sequence_;
  }
  friend std::strong_ordering operator<=>(const Ordering& a,
                                          const Ordering& b) {
    return a.sequence_ <=> b.sequence_;
  }

 private:
  std::vector<VertexId> sequence_;
  std::unordered_map<VertexId, std::size_t> position_;
};

// --- text formats ----------------------------------------------------------

// Edge-list format: `#` starts a comment, blank lines are ignored, a data
// line holds two tokens (an edge) or one token (a vertex). Duplicate edges
// collapse. Throws ParseError on a bad line or a self-loop.
Graph ParseEdgeList(std::string_view text);

// Whitespace-separated tokens in position order. Throws ParseError on a
// repeated token.
Ordering ParseOrdering(std::string_view text);

// Canonical edge-list text: sorted edges, then isolated vertices.
std::string FormatEdgeList(const Graph& g);
std::string FormatOrdering(const Ordering& o);

// --- structure -------------------------------------------------------------

// Throws NotBipartite naming an odd cycle. Within each connected component
// the smallest vertex is coloured X; isolated vertices land in X.
Bipartition ComputeBipartition(const Graph& g);

bool IsConnected(const Graph& g);

// True iff |E| = |X|·|Y| for a valid bipartition `b` of `g`.
bool IsCompleteBipartite(const Graph& g, const Bipartition& b);

// --- objective -------------------------------------------------------------

std::uint64_t VertexImbalance(std::string_view v, const Ordering& o,
                              const Graph& g);
std::uint64_t OrderingImbalance(const Ordering& o, const Graph& g);
// Per-position imbalances: result[k] is the imbalance of o[k].
std::vector<std::uint64_t> VertexImbalances(const Ordering& o, const Graph& g);

// Order-preserving restriction of `o` to `subset`.
Ordering Subordering(const Ordering& o, std::span<const VertexId> subset);

// Concatenation of orderings over pairwise-disjoint vertex sets.
Ordering ConcatOrderings(std::span<const Ordering> parts);

// Checked accumulation for machine-width counts.
std::uint64_t CheckedAdd(std::uint64_t a, std::uint64_t b);
std::uint64_t CheckedMul(std::uint64_t a, std::uint64_t b);

}  // namespace imbalance

#endif  // IMBALANCE_GRAPH_H_
