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

#include "imbalance/graph.h"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "imbalance/errors.h"

namespace imbalance {
namespace {

// Positions of g's vertices under o, indexed by graph vertex index. Checks
// that o orders exactly the vertex set of g.
std::vector<std::size_t> PositionsByIndex(const Ordering& o, const Graph& g) {
  if (o.size() != g.num_vertices()) {
    throw DomainError("ordering has " + std::to_string(o.size()) +
                      " vertices but the graph has " +
                      std::to_string(g.num_vertices()));
  }
  std::vector<std::size_t> pos(g.num_vertices(), 0);
  for (std::size_t k = 0; k < o.size(); ++k) {
    const std::optional<int> v = g.FindIndex(o[k]);
    if (!v) throw DomainError("vertex '" + o[k] + "' is not in the graph");
    pos[*v] = k + 1;
  }
  return pos;
}

std::uint64_t ImbalanceAt(int v, const std::vector<std::size_t>& pos,
                          const Graph& g) {
  std::uint64_t left = 0;
  std::uint64_t right = 0;
  for (const int u : g.Neighbors(v)) {
    if (pos[u] < pos[v]) {
      ++left;
    } else {
      ++right;
    }
  }
  return left > right ? left - right : right - left;
}

}  // namespace

std::uint64_t CheckedAdd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("64-bit overflow in imbalance count");
  }
  return r;
}

std::uint64_t CheckedMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("64-bit overflow in imbalance count");
  }
  return r;
}

// --- Graph -----------------------------------------------------------------

std::optional<int> Graph::FindIndex(std::string_view id) const {
  const auto it = index_.find(VertexId(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Graph::Index(std::string_view id) const {
  const std::optional<int> v = FindIndex(id);
  if (!v) throw DomainError("vertex '" + std::string(id) + "' is not in the graph");
  return *v;
}

bool Graph::HasEdge(int u, int v) const {
  const auto& nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

bool Graph::HasEdge(std::string_view u, std::string_view v) const {
  const auto iu = FindIndex(u);
  const auto iv = FindIndex(v);
  return iu && iv && HasEdge(*iu, *iv);
}

std::vector<std::pair<int, int>> Graph::Edges() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(num_edges_);
  for (int u = 0; u < static_cast<int>(adjacency_.size()); ++u) {
    for (const int v : adjacency_[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

Graph Graph::InducedSubgraph(std::span<const VertexId> subset) const {
  std::vector<int> keep;
  keep.reserve(subset.size());
  for (const VertexId& id : subset) keep.push_back(Index(id));
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  GraphBuilder builder;
  for (const int u : keep) {
    builder.AddVertex(names_[u]);
    for (const int v : adjacency_[u]) {
      if (u < v && std::binary_search(keep.begin(), keep.end(), v)) {
        builder.AddEdge(names_[u], names_[v]);
      }
    }
  }
  return std::move(builder).Build();
}

void GraphBuilder::AddVertex(VertexId id) { adjacency_.try_emplace(std::move(id)); }

void GraphBuilder::AddEdge(const VertexId& u, const VertexId& v) {
  if (u == v) throw DomainError("self-loop on '" + u + "'");
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
}

Graph GraphBuilder::Build() && {
  Graph g;
  g.names_.reserve(adjacency_.size());
  for (const auto& [id, unused] : adjacency_) g.names_.push_back(id);
  std::sort(g.names_.begin(), g.names_.end());
  for (int i = 0; i < static_cast<int>(g.names_.size()); ++i) {
    g.index_.emplace(g.names_[i], i);
  }
  g.adjacency_.resize(g.names_.size());
  std::size_t degree_sum = 0;
  for (auto& [id, nbrs] : adjacency_) {
    auto& out = g.adjacency_[g.index_.at(id)];
    out.reserve(nbrs.size());
    for (const VertexId& n : nbrs) out.push_back(g.index_.at(n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    degree_sum += out.size();
  }
  g.num_edges_ = degree_sum / 2;
  adjacency_.clear();
  return g;
}

// --- Bipartition / Ordering --------------------------------------------------

bool Bipartition::InX(std::string_view id) const {
  return std::binary_search(x_part.begin(), x_part.end(), id);
}

bool Bipartition::InY(std::string_view id) const {
  return std::binary_search(y_part.begin(), y_part.end(), id);
}

Ordering::Ordering(std::vector<VertexId> sequence)
    : sequence_(std::move(sequence)) {
  position_.reserve(sequence_.size());
  for (std::size_t k = 0; k < sequence_.size(); ++k) {
    if (!position_.emplace(sequence_[k], k + 1).second) {
      throw DomainError("vertex '" + sequence_[k] +
                        "' appears twice in the ordering");
    }
  }
}

bool Ordering::Contains(std::string_view id) const {
  return position_.contains(VertexId(id));
}

std::size_t Ordering::PositionOf(std::string_view id) const {
  const auto it = position_.find(VertexId(id));
  if (it == position_.end()) {
    throw DomainError("vertex '" + std::string(id) + "' is not in the ordering");
  }
  return it->second;
}

Ordering Ordering::Reversed() const {
  return Ordering(std::vector<VertexId>(sequence_.rbegin(), sequence_.rend()));
}

// --- text formats ------------------------------------------------------------

Graph ParseEdgeList(std::string_view text) {
  GraphBuilder builder;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
    if (tokens.size() == 1) {
      builder.AddVertex(tokens[0]);
    } else if (tokens.size() == 2) {
      if (tokens[0] == tokens[1]) {
        throw ParseError(line_no, "self-loop on '" + tokens[0] + "'");
      }
      builder.AddEdge(tokens[0], tokens[1]);
    } else if (tokens.size() > 2) {
      throw ParseError(line_no, "expected 1 or 2 tokens, got " +
                                    std::to_string(tokens.size()));
    }
    start = end + 1;
  }
  return std::move(builder).Build();
}

Ordering ParseOrdering(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<VertexId> seq;
  for (std::string tok; in >> tok;) seq.push_back(std::move(tok));
  try {
    return Ordering(std::move(seq));
  } catch (const DomainError& e) {
    throw ParseError(0, e.what());
  }
}

std::string FormatEdgeList(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.Edges()) {
    out += g.name(u);
    out += ' ';
    out += g.name(v);
    out += '\n';
  }
  for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) {
    if (g.Degree(v) == 0) {
      out += g.name(v);
      out += '\n';
    }
  }
  return out;
}

std::string FormatOrdering(const Ordering& o) {
  std::string out;
  for (std::size_t k = 0; k < o.size(); ++k) {
    if (k > 0) out += ' ';
    out += o[k];
  }
  return out;
}

// --- structure ---------------------------------------------------------------

Bipartition ComputeBipartition(const Graph& g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<int> color(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::deque<int> queue = {root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const int v : g.Neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          // Walk both BFS-tree paths up to their meeting point.
          std::vector<int> left = {u};
          std::vector<int> right = {v};
          int a = u;
          int b = v;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          std::string cycle;
          for (const int w : left) cycle += g.name(w) + " ";
          for (auto it = right.rbegin(); it != right.rend(); ++it) {
            cycle += g.name(*it) + " ";
          }
          cycle.pop_back();
          throw NotBipartite("odd cycle: " + cycle);
        }
      }
    }
  }
  Bipartition b;
  for (int v = 0; v < n; ++v) {
    (color[v] == 0 ? b.x_part : b.y_part).push_back(g.name(v));
  }
  return b;
}

bool IsConnected(const Graph& g) {
  const int n = static_cast<int>(g.num_vertices());
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const int v : g.Neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

bool IsCompleteBipartite(const Graph& g, const Bipartition& b) {
  return g.num_edges() == CheckedMul(b.x_part.size(), b.y_part.size());
}

// --- objective ---------------------------------------------------------------

std::uint64_t VertexImbalance(std::string_view v, const Ordering& o,
                              const Graph& g) {
  if (!o.Contains(v)) {
    throw DomainError("vertex '" + std::string(v) + "' is not in the ordering");
  }
  const std::vector<std::size_t> pos = PositionsByIndex(o, g);
  return ImbalanceAt(g.Index(v), pos, g);
}

std::vector<std::uint64_t> VertexImbalances(const Ordering& o, const Graph& g) {
  const std::vector<std::size_t> pos = PositionsByIndex(o, g);
  std::vector<std::uint64_t> out(o.size());
  for (std::size_t k = 0; k < o.size(); ++k) {
    out[k] = ImbalanceAt(g.Index(o[k]), pos, g);
  }
  return out;
}

std::uint64_t OrderingImbalance(const Ordering& o, const Graph& g) {
  std::uint64_t total = 0;
  for (const std::uint64_t x : VertexImbalances(o, g)) {
    total = CheckedAdd(total, x);
  }
  return total;
}

Ordering Subordering(const Ordering& o, std::span<const VertexId> subset) {
  std::unordered_set<VertexId> keep;
  for (const VertexId& v : subset) {
    if (!o.Contains(v)) {
      throw DomainError("vertex '" + v + "' is not in the ordering");
    }
    keep.insert(v);
  }
  std::vector<VertexId> seq;
  seq.reserve(keep.size());
  for (const VertexId& v : o.sequence()) {
    if (keep.contains(v)) seq.push_back(v);
  }
  return Ordering(std::move(seq));
}

Ordering ConcatOrderings(std::span<const Ordering> parts) {
  std::vector<VertexId> seq;
  for (const Ordering& part : parts) {
    seq.insert(seq.end(), part.sequence().begin(), part.sequence().end());
  }
  // The Ordering constructor rejects a vertex shared between parts.
  return Ordering(std::move(seq));
}

}  // namespace imbalance
