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

#include "imbalance/oracle.h"

#include <functional>
#include <limits>
#include <string>

#include "imbalance/errors.h"

namespace imbalance {
namespace {

// Depth-first search over orderings in lexicographic order. Vertex indices
// follow token order, so trying candidates by increasing index visits the
// orderings lexicographically.
//
// A vertex's imbalance is fixed the moment it is placed: it is
// |2·(placed neighbours) − degree|. For a vertex u not yet placed, with a
// neighbours already placed, the final imbalance is at least
// max(deg(u) mod 2, 2a − deg(u)).
class PermutationSearch {
 public:
  PermutationSearch(const Graph& g, bool prune)
      : g_(g),
        n_(static_cast<int>(g.num_vertices())),
        prune_(prune),
        placed_(n_, 0),
        placed_neighbors_(n_, 0) {
    order_.reserve(n_);
  }

  // Returns the minimum and stores the first optimal leaf in `witness`.
  std::uint64_t Minimize(std::vector<int>& witness) {
    best_ = std::numeric_limits<std::uint64_t>::max();
    on_leaf_ = [&](std::uint64_t value) {
      if (value < best_) {
        best_ = value;
        witness = order_;
      }
    };
    strict_ = true;
    Recurse(0);
    return best_;
  }

  // Visits every leaf whose value equals `target`.
  void ForEachOptimum(std::uint64_t target,
                      const std::function<void(const std::vector<int>&)>& fn) {
    best_ = target;
    strict_ = false;
    on_leaf_ = [&](std::uint64_t value) {
      if (value == target) fn(order_);
    };
    Recurse(0);
  }

 private:
  std::uint64_t LowerBound() const {
    std::uint64_t bound = 0;
    for (int u = 0; u < n_; ++u) {
      if (placed_[u]) continue;
      const std::int64_t deg = static_cast<std::int64_t>(g_.Degree(u));
      const std::int64_t surplus = 2 * placed_neighbors_[u] - deg;
      bound += static_cast<std::uint64_t>(std::max<std::int64_t>(deg % 2, surplus));
    }
    return bound;
  }

  bool Prunable(std::uint64_t partial) const {
    if (!prune_) return false;
    const std::uint64_t lb = partial + LowerBound();
    // In minimisation an equal value can never replace the incumbent.
    return strict_ ? lb >= best_ : lb > best_;
  }

  void Recurse(std::uint64_t partial) {
    if (static_cast<int>(order_.size()) == n_) {
      on_leaf_(partial);
      return;
    }
    if (Prunable(partial)) return;
    for (int v = 0; v < n_; ++v) {
      if (placed_[v]) continue;
      const std::int64_t deg = static_cast<std::int64_t>(g_.Degree(v));
      const std::int64_t diff = 2 * placed_neighbors_[v] - deg;
      const std::uint64_t cost = static_cast<std::uint64_t>(diff < 0 ? -diff : diff);
      placed_[v] = 1;
      for (const int u : g_.Neighbors(v)) ++placed_neighbors_[u];
      order_.push_back(v);
      Recurse(partial + cost);
      order_.pop_back();
      for (const int u : g_.Neighbors(v)) --placed_neighbors_[u];
      placed_[v] = 0;
    }
  }

  const Graph& g_;
  const int n_;
  const bool prune_;
  bool strict_ = true;
  std::uint64_t best_ = 0;
  std::vector<char> placed_;
  std::vector<std::int64_t> placed_neighbors_;
  std::vector<int> order_;
  std::function<void(std::uint64_t)> on_leaf_;
};

void CheckCap(const Graph& g, const OracleOptions& options) {
  if (g.num_vertices() > options.cap) {
    throw SizeCapExceeded("graph has " + std::to_string(g.num_vertices()) +
                          " vertices; oracle cap is " +
                          std::to_string(options.cap));
  }
}

Ordering ToOrdering(const Graph& g, const std::vector<int>& order) {
  std::vector<VertexId> seq;
  seq.reserve(order.size());
  for (const int v : order) seq.push_back(g.name(v));
  return Ordering(std::move(seq));
}

}  // namespace

OracleResult BruteForceMin(const Graph& g, const OracleOptions& options) {
  CheckCap(g, options);
  PermutationSearch search(g, options.prune);
  std::vector<int> witness;
  OracleResult result;
  result.minimum = search.Minimize(witness);
  result.witness = ToOrdering(g, witness);
  return result;
}

std::vector<Ordering> EnumerateOptima(const Graph& g,
                                      const OracleOptions& options) {
  const std::uint64_t minimum = BruteForceMin(g, options).minimum;
  std::vector<Ordering> optima;
  PermutationSearch search(g, options.prune);
  search.ForEachOptimum(minimum, [&](const std::vector<int>& order) {
    optima.push_back(ToOrdering(g, order));
  });
  return optima;
}

std::uint64_t CountOptima(const Graph& g, const OracleOptions& options) {
  const std::uint64_t minimum = BruteForceMin(g, options).minimum;
  std::uint64_t count = 0;
  PermutationSearch search(g, options.prune);
  search.ForEachOptimum(minimum, [&](const std::vector<int>&) { ++count; });
  return count;
}

}  // namespace imbalance
