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

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "imbalance/chained.h"
#include "imbalance/errors.h"

namespace imbalance {
namespace {

using VertexSet = std::vector<int>;  // sorted graph indices

constexpr std::size_t kSearchStepLimit = 1'000'000;

VertexSet Intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// Size of a ∩ b, saturating at `cap`.
std::size_t SharedCount(const VertexSet& a, const VertexSet& b,
                        std::size_t cap) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end() && n < cap) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

// Common neighbourhood of a non-empty vertex set.
VertexSet CommonNeighbors(const Graph& g, const VertexSet& s) {
  VertexSet out = g.Neighbors(s.front());
  for (std::size_t k = 1; k < s.size() && !out.empty(); ++k) {
    out = Intersect(out, g.Neighbors(s[k]));
  }
  return out;
}

// Selects a sub-family of the candidate bicliques that covers every edge
// and forms a chain.
class ChainSelector {
 public:
  ChainSelector(const Graph& g, std::vector<VertexSet> candidates)
      : g_(g), candidates_(std::move(candidates)) {
    edges_ = g_.Edges();
    std::vector<std::vector<int>> containing(g_.num_vertices());
    for (int c = 0; c < static_cast<int>(candidates_.size()); ++c) {
      for (const int v : candidates_[c]) containing[v].push_back(c);
    }
    coverers_.resize(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      coverers_[e] = Intersect(containing[edges_[e].first],
                               containing[edges_[e].second]);
    }
    cover_count_.assign(edges_.size(), 0);
  }

  // Returns the chain in path order, or throws NotChained.
  std::vector<VertexSet> Select() {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (coverers_[e].empty()) {
        throw NotChained("edge " + g_.name(edges_[e].first) + "-" +
                         g_.name(edges_[e].second) +
                         " is uncovered by any component");
      }
    }
    // A candidate that is the only cover of some edge is in every family.
    std::set<int> forced;
    for (const auto& c : coverers_) {
      if (c.size() == 1) forced.insert(c.front());
    }
    for (const int c : forced) {
      if (!Compatible(c)) {
        throw NotChained("overlap count != 1: two components share " +
                         std::string("more than one vertex"));
      }
      Choose(c);
    }
    if (Search()) return path_;
    throw NotChained(failure_.empty()
                         ? "overlap count != 1: no edge cover by components "
                           "sharing at most one vertex"
                         : failure_);
  }

 private:
  bool Compatible(int c) const {
    for (const int other : chosen_) {
      if (SharedCount(candidates_[c], candidates_[other], 2) >= 2) return false;
    }
    return true;
  }

  void Choose(int c) {
    chosen_.push_back(c);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (std::binary_search(coverers_[e].begin(), coverers_[e].end(), c)) {
        ++cover_count_[e];
      }
    }
  }

  void Unchoose() {
    const int c = chosen_.back();
    chosen_.pop_back();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (std::binary_search(coverers_[e].begin(), coverers_[e].end(), c)) {
        --cover_count_[e];
      }
    }
  }

  bool Search() {
    if (++steps_ > kSearchStepLimit) {
      throw NotChained("component search limit exceeded");
    }
    std::size_t open = edges_.size();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (cover_count_[e] == 0) {
        open = e;
        break;
      }
    }
    if (open == edges_.size()) return TryPath();
    for (const int c : coverers_[open]) {
      if (!Compatible(c)) continue;
      Choose(c);
      if (Search()) return true;
      Unchoose();
    }
    return false;
  }

  // Orders the chosen family as a path, if it is one.
  bool TryPath() {
    const std::size_t k = chosen_.size();
    std::vector<std::vector<std::size_t>> next(k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (SharedCount(candidates_[chosen_[a]], candidates_[chosen_[b]], 1) ==
            1) {
          next[a].push_back(b);
          next[b].push_back(a);
        }
      }
    }
    std::size_t start = 0;
    std::size_t ends = 0;
    for (std::size_t a = 0; a < k; ++a) {
      if (next[a].size() > 2) {
        return Fail("non-consecutive sharing: a component meets " +
                    std::to_string(next[a].size()) + " others");
      }
      if (next[a].size() <= 1) {
        ++ends;
        start = a;
      }
    }
    if (k > 1 && ends != 2) {
      return Fail("non-consecutive sharing: components form a cycle");
    }
    std::vector<VertexSet> path;
    std::vector<char> seen(k, 0);
    for (std::size_t cur = start, prev = k;;) {
      seen[cur] = 1;
      path.push_back(candidates_[chosen_[cur]]);
      std::size_t step = k;
      for (const std::size_t n : next[cur]) {
        if (n != prev) step = n;
      }
      if (step == k) break;
      prev = cur;
      cur = step;
    }
    if (path.size() != k) {
      return Fail("non-consecutive sharing: components do not form one chain");
    }
    path_ = std::move(path);
    return true;
  }

  bool Fail(std::string reason) {
    if (failure_.empty()) failure_ = std::move(reason);
    return false;
  }

  const Graph& g_;
  std::vector<VertexSet> candidates_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<VertexSet> coverers_;
  std::vector<int> cover_count_;
  std::vector<int> chosen_;
  std::vector<VertexSet> path_;
  std::string failure_;
  std::size_t steps_ = 0;
};

void ValidateChain(const Graph& g, const std::vector<VertexSet>& sets,
                   const std::vector<char>& in_x) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    VertexSet xs;
    VertexSet ys;
    for (const int v : sets[i]) (in_x[v] ? xs : ys).push_back(v);
    if (xs.empty() || ys.empty()) {
      throw NotChained("component " + std::to_string(i + 1) +
                       " has an empty part");
    }
    for (const int x : xs) {
      for (const int y : ys) {
        if (!g.HasEdge(x, y)) {
          throw NotChained("component " + std::to_string(i + 1) +
                           " is not complete bipartite");
        }
      }
    }
    // Maximal iff no outside vertex sees the whole opposite part.
    if (CommonNeighbors(g, ys) != xs || CommonNeighbors(g, xs) != ys) {
      throw NotChained("non-maximal cover: component " +
                       std::to_string(i + 1) + " extends to a larger biclique");
    }
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const std::size_t shared = Intersect(sets[i], sets[j]).size();
      if (j == i + 1 && shared != 1) {
        throw NotChained("overlap count != 1 between components " +
                         std::to_string(i + 1) + " and " +
                         std::to_string(j + 1));
      }
      if (j > i + 1 && shared != 0) {
        throw NotChained("non-consecutive sharing between components " +
                         std::to_string(i + 1) + " and " +
                         std::to_string(j + 1));
      }
    }
  }
}

}  // namespace

ChainDecomposition Decompose(const Graph& g) {
  const Bipartition bip = ComputeBipartition(g);
  if (!IsConnected(g)) throw NotConnected("graph is not connected");
  if (g.num_edges() == 0) throw NotChained("graph has no edges");

  const int n = static_cast<int>(g.num_vertices());
  std::vector<char> in_x(n, 0);
  for (const VertexId& x : bip.x_part) in_x[g.Index(x)] = 1;

  std::set<VertexSet> unique;
  for (int v = 0; v < n; ++v) {
    const VertexSet& side = g.Neighbors(v);
    VertexSet all = CommonNeighbors(g, side);
    all.insert(all.end(), side.begin(), side.end());
    std::sort(all.begin(), all.end());
    unique.insert(std::move(all));
  }
  std::vector<VertexSet> path =
      ChainSelector(g, {unique.begin(), unique.end()}).Select();

  ValidateChain(g, path, in_x);

  // Orientation: compare the smallest non-overlap vertex of each end.
  if (path.size() > 1) {
    auto smallest_private = [&](const VertexSet& end, const VertexSet& nbr) {
      const VertexSet shared = Intersect(end, nbr);
      for (const int v : end) {
        if (!std::binary_search(shared.begin(), shared.end(), v)) return v;
      }
      return n;
    };
    const int front = smallest_private(path.front(), path[1]);
    const int back = smallest_private(path.back(), path[path.size() - 2]);
    if (back < front) std::reverse(path.begin(), path.end());
  }

  ChainDecomposition d;
  for (std::size_t i = 0; i < path.size(); ++i) {
    ChainComponent c;
    for (const int v : path[i]) {
      (in_x[v] ? c.x_part : c.y_part).push_back(g.name(v));
    }
    d.components.push_back(std::move(c));
    if (i + 1 < path.size()) {
      const int s = Intersect(path[i], path[i + 1]).front();
      d.overlaps.push_back(g.name(s));
      d.overlap_in_x.push_back(in_x[s] != 0);
    }
  }

  // A one-vertex part holding an overlap would contradict maximality.
  for (std::size_t i = 0; i < d.overlaps.size(); ++i) {
    for (const std::size_t j : {i, i + 1}) {
      const ChainComponent& c = d.components[j];
      const auto& part = d.overlap_in_x[i] ? c.x_part : c.y_part;
      if (part.size() == 1) {
        throw NotChained("non-maximal cover: overlap " + d.overlaps[i] +
                         " is alone in its part of component " +
                         std::to_string(j + 1));
      }
    }
  }
  return d;
}

}  // namespace imbalance
