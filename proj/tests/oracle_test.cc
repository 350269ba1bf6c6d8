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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "imbalance/errors.h"
#include "imbalance/graph.h"
#include "imbalance/oracle.h"
#include "test_oracles.h"

namespace imbalance {
namespace {

Graph RandomGraph(std::mt19937_64& rng, int n, int one_in) {
  GraphBuilder builder;
  for (int v = 0; v < n; ++v) builder.AddVertex("v" + std::to_string(v));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() % one_in == 0) {
        builder.AddEdge("v" + std::to_string(u), "v" + std::to_string(v));
      }
    }
  }
  return std::move(builder).Build();
}

// Lexicographically smallest optimum by walking every permutation.
std::pair<std::uint64_t, std::vector<VertexId>> SweepMin(const Graph& g) {
  std::uint64_t best = ~0ull;
  std::vector<VertexId> witness;
  testing::ForEachPermutation(g, [&](const std::vector<VertexId>& order) {
    const std::uint64_t value = testing::NaiveImbalance(order, g);
    if (value < best) {
      best = value;
      witness = order;
    }
  });
  return {best, witness};
}

TEST_CASE("small examples") {
  const OracleResult k22 = BruteForceMin(testing::CompleteGraph(2, 2));
  CHECK(k22.minimum == 4);

  const OracleResult edge = BruteForceMin(ParseEdgeList("u v\n"));
  CHECK(edge.minimum == 2);
  CHECK(edge.witness.sequence() == std::vector<VertexId>{"u", "v"});

  const Graph five = ParseEdgeList("a b\na c\nb c\nb d\nc e\n");
  const OracleResult r = BruteForceMin(five);
  CHECK(r.minimum <= 6);
  CHECK(r.minimum == SweepMin(five).first);
  CHECK(OrderingImbalance(r.witness, five) == r.minimum);
}

TEST_CASE("enumeration") {
  const auto edge = EnumerateOptima(ParseEdgeList("u v\n"));
  REQUIRE(edge.size() == 2);
  CHECK(edge[0].sequence() == std::vector<VertexId>{"u", "v"});
  CHECK(edge[1].sequence() == std::vector<VertexId>{"v", "u"});

  const auto empty = EnumerateOptima(ParseEdgeList("a\nb\n"));
  CHECK(empty.size() == 2);
  CHECK(BruteForceMin(ParseEdgeList("a\nb\n")).minimum == 0);

  const auto star = EnumerateOptima(ParseEdgeList("x y1\nx y2\n"));
  REQUIRE(star.size() == 2);
  CHECK(star[0].sequence() == std::vector<VertexId>{"y1", "x", "y2"});
  CHECK(star[1].sequence() == std::vector<VertexId>{"y2", "x", "y1"});
  CHECK(CountOptima(ParseEdgeList("x y1\nx y2\n")) == 2);
}

TEST_CASE("size cap") {
  GraphBuilder builder;
  for (int v = 0; v < 11; ++v) builder.AddVertex("v" + std::to_string(v));
  const Graph g = std::move(builder).Build();
  CHECK_THROWS_AS(BruteForceMin(g), SizeCapExceeded);
  CHECK_THROWS_AS(EnumerateOptima(g), SizeCapExceeded);
  CHECK(BruteForceMin(g, {.cap = 11}).minimum == 0);
}

TEST_CASE("pruned and unpruned searches agree with the sweep") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 60; ++round) {
    const Graph g = RandomGraph(rng, 2 + static_cast<int>(rng() % 6),
                                1 + static_cast<int>(rng() % 3));
    const auto [best, witness] = SweepMin(g);
    const OracleResult pruned = BruteForceMin(g, {.prune = true});
    const OracleResult plain = BruteForceMin(g, {.prune = false});
    CHECK(pruned.minimum == best);
    CHECK(plain.minimum == best);
    CHECK(pruned.witness.sequence() == witness);
    CHECK(plain.witness.sequence() == witness);
    CHECK(EnumerateOptima(g, {.prune = true}) ==
          EnumerateOptima(g, {.prune = false}));
  }
}

TEST_CASE("oracle agrees with the subset DP") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 40; ++round) {
    const Graph g = RandomGraph(rng, 3 + static_cast<int>(rng() % 6), 2);
    CHECK(BruteForceMin(g).minimum == testing::SubsetDpMin(g));
  }
}

TEST_CASE("optima are closed under reversal and sorted") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 20; ++round) {
    const Graph g = RandomGraph(rng, 2 + static_cast<int>(rng() % 5), 2);
    const auto optima = EnumerateOptima(g);
    CHECK(std::is_sorted(optima.begin(), optima.end()));
    const std::set<Ordering> all(optima.begin(), optima.end());
    for (const Ordering& o : optima) CHECK(all.contains(o.Reversed()));
    CHECK(CountOptima(g) == optima.size());
  }
}

TEST_CASE("minimum is invariant under renaming") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 20; ++round) {
    const Graph g = RandomGraph(rng, 3 + static_cast<int>(rng() % 5), 2);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
      names.push_back("r" + std::to_string(i));
    }
    std::shuffle(names.begin(), names.end(), rng);
    GraphBuilder builder;
    for (const std::string& n : names) builder.AddVertex(n);
    for (const auto& [u, v] : g.Edges()) builder.AddEdge(names[u], names[v]);
    const Graph renamed = std::move(builder).Build();
    CHECK(BruteForceMin(renamed).minimum == BruteForceMin(g).minimum);
  }
}

}  // namespace
}  // namespace imbalance
