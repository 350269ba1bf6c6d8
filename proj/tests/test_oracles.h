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

// Independent reference implementations used only by the tests. None of
// them share code with the library's solvers.

#ifndef IMBALANCE_TESTS_TEST_ORACLES_H_
#define IMBALANCE_TESTS_TEST_ORACLES_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "imbalance/chained.h"
#include "imbalance/errors.h"
#include "imbalance/graph.h"

namespace imbalance::testing {

// Exact minimum imbalance by dynamic programming over vertex subsets.
// Placing v directly after the set S costs |2|N(v) ∩ S| - deg(v)|, so the
// optimum is a shortest path in the subset lattice. O(2^n n^2).
inline std::uint64_t SubsetDpMin(const Graph& g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<std::uint32_t> nbr_mask(n, 0);
  for (int v = 0; v < n; ++v) {
    for (const int u : g.Neighbors(v)) nbr_mask[v] |= 1u << u;
  }
  const std::uint32_t full = n == 0 ? 0 : (1u << n) - 1;
  std::vector<std::uint64_t> best(full + 1,
                                  std::numeric_limits<std::uint64_t>::max());
  best[0] = 0;
  for (std::uint32_t s = 0; s < full; ++s) {
    if (best[s] == std::numeric_limits<std::uint64_t>::max()) continue;
    for (int v = 0; v < n; ++v) {
      if (s & (1u << v)) continue;
      const int left = std::popcount(nbr_mask[v] & s);
      const int deg = std::popcount(nbr_mask[v]);
      const auto cost = static_cast<std::uint64_t>(std::abs(2 * left - deg));
      best[s | (1u << v)] = std::min(best[s | (1u << v)], best[s] + cost);
    }
  }
  return best[full];
}

// Imbalance of an ordering straight from the definition, without any of
// the library's bookkeeping.
inline std::uint64_t NaiveImbalance(const std::vector<VertexId>& order,
                                    const Graph& g) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::int64_t left = 0;
    std::int64_t right = 0;
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (j == i || !g.HasEdge(order[i], order[j])) continue;
      (j < i ? left : right) += 1;
    }
    total += static_cast<std::uint64_t>(std::llabs(left - right));
  }
  return total;
}

// Every permutation of the vertex set in lexicographic order.
template <typename Fn>
void ForEachPermutation(const Graph& g, Fn&& fn) {
  std::vector<VertexId> order = g.vertices();
  do {
    fn(order);
  } while (std::next_permutation(order.begin(), order.end()));
}

inline Graph CompleteGraph(std::size_t a, std::size_t b) {
  GraphBuilder builder;
  for (std::size_t i = 1; i <= a; ++i) builder.AddVertex("x" + std::to_string(i));
  for (std::size_t j = 1; j <= b; ++j) builder.AddVertex("y" + std::to_string(j));
  for (std::size_t i = 1; i <= a; ++i) {
    for (std::size_t j = 1; j <= b; ++j) {
      builder.AddEdge("x" + std::to_string(i), "y" + std::to_string(j));
    }
  }
  return std::move(builder).Build();
}

inline Bipartition XyParts(std::size_t a, std::size_t b) {
  Bipartition p;
  for (std::size_t i = 1; i <= a; ++i) p.x_part.push_back("x" + std::to_string(i));
  for (std::size_t j = 1; j <= b; ++j) p.y_part.push_back("y" + std::to_string(j));
  std::sort(p.x_part.begin(), p.x_part.end());
  std::sort(p.y_part.begin(), p.y_part.end());
  return p;
}

inline std::size_t SpecVertexCount(const ChainSpec& spec) {
  std::size_t total = 0;
  for (const auto& [nx, ny] : spec.sizes) total += nx + ny;
  return total - spec.overlap_parts.size();
}

inline bool SpecIsValid(const ChainSpec& spec) {
  try {
    ValidateChainSpec(spec);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Every valid chain spec with 1..max_components components and at most
// max_vertices vertices.
inline std::vector<ChainSpec> AllChainSpecs(std::size_t max_components,
                                            std::size_t max_vertices) {
  std::vector<ChainSpec> out;
  std::vector<ChainSpec> frontier;
  for (std::size_t n = 1; n <= max_components; ++n) {
    std::vector<ChainSpec> next;
    if (n == 1) {
      for (std::size_t nx = 1; nx < max_vertices; ++nx) {
        for (std::size_t ny = 1; nx + ny <= max_vertices; ++ny) {
          next.push_back(ChainSpec{{{nx, ny}}, {}});
        }
      }
    } else {
      for (const ChainSpec& base : frontier) {
        for (const Part p : {Part::kX, Part::kY}) {
          for (std::size_t nx = 1; nx < max_vertices; ++nx) {
            for (std::size_t ny = 1; nx + ny <= max_vertices; ++ny) {
              ChainSpec s = base;
              s.sizes.emplace_back(nx, ny);
              s.overlap_parts.push_back(p);
              if (SpecVertexCount(s) <= max_vertices) next.push_back(s);
            }
          }
        }
      }
    }
    frontier = next;
    for (const ChainSpec& s : next) {
      if (SpecIsValid(s)) out.push_back(s);
    }
  }
  return out;
}

// A random valid spec. Part sizes lie in [min, min + max_extra], where min
// is 2 for a part holding an overlap and 1 otherwise.
inline ChainSpec RandomChainSpec(std::mt19937_64& rng,
                                 std::size_t max_components,
                                 std::size_t max_extra) {
  const std::size_t n = 1 + rng() % max_components;
  ChainSpec spec;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    spec.overlap_parts.push_back(rng() % 2 ? Part::kX : Part::kY);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t min_x = 1;
    std::size_t min_y = 1;
    for (const std::size_t k : {i, i - 1}) {
      if (k >= spec.overlap_parts.size()) continue;
      (spec.overlap_parts[k] == Part::kX ? min_x : min_y) = 2;
    }
    spec.sizes.emplace_back(min_x + rng() % (max_extra + 1),
                            min_y + rng() % (max_extra + 1));
  }
  return spec;
}

}  // namespace imbalance::testing

#endif  // IMBALANCE_TESTS_TEST_ORACLES_H_
