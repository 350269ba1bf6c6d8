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

// Chained complete bipartite graphs.
//
// A chained complete bigraph is covered by maximal complete bipartite
// vertex sets C_1..C_n in which consecutive sets share exactly one vertex
// (the overlap s_i) and non-consecutive sets are disjoint. Its minimum
// imbalance has a closed form in the component part sizes and the parts
// the overlaps belong to, and an optimal ordering is obtained by chaining
// per-component optimal orderings that start and end at the overlaps.
//
// Components are indexed from 0 in this API; overlaps[i] is shared by
// components i and i+1.

#ifndef IMBALANCE_CHAINED_H_
#define IMBALANCE_CHAINED_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "imbalance/graph.h"

namespace imbalance {

enum class Part { kX, kY };

struct ChainComponent {
  std::vector<VertexId> x_part;  // sorted
  std::vector<VertexId> y_part;  // sorted

  std::vector<VertexId> Vertices() const;
  bool Contains(std::string_view v) const;
  bool InX(std::string_view v) const;

  friend bool operator==(const ChainComponent&, const ChainComponent&) = default;
};

struct ChainDecomposition {
  std::vector<ChainComponent> components;
  std::vector<VertexId> overlaps;   // size n - 1
  std::vector<bool> overlap_in_x;   // overlap_in_x[i] iff overlaps[i] ∈ X

  std::size_t size() const { return components.size(); }

  friend bool operator==(const ChainDecomposition&,
                         const ChainDecomposition&) = default;
};

// Part sizes per component plus the part of each overlap. This is all the
// closed form needs.
struct ChainSpec {
  std::vector<std::pair<std::size_t, std::size_t>> sizes;  // (|X_i|, |Y_i|)
  std::vector<Part> overlap_parts;                          // size n - 1

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

// `component NX NY` lines separated by `overlap X|Y` lines; `#` comments.
ChainSpec ParseChainSpec(std::string_view text);
std::string FormatChainSpec(const ChainSpec& spec);

// Throws SpecInvalid naming the first offending component (1-based).
void ValidateChainSpec(const ChainSpec& spec);

ChainSpec ProfileOf(const ChainDecomposition& d);
ChainSpec Reversed(const ChainSpec& spec);
// Swaps the roles of X and Y throughout.
ChainSpec PartsSwapped(const ChainSpec& spec);
bool SameProfileUpToReversal(const ChainSpec& a, const ChainSpec& b);

// `C<i>: X={...} Y={...}` lines then `s<i> = <id> (X|Y)` lines, 1-based.
std::string FormatDecomposition(const ChainDecomposition& d);

// Finds the chain of maximal complete bipartite components of `g`.
//
// Candidates are the bicliques (N(v), common neighbours of N(v)) for every
// non-isolated v, which are maximal by construction. A depth-first search
// picks a subfamily that covers every edge with pairwise intersections of
// at most one vertex, and accepts the first one that forms a path. Every
// chain condition is then re-checked explicitly. Intended for test-scale
// graphs.
//
// The chain is oriented so that the smallest non-overlap vertex of the two
// end components lies in the first one. Throws NotBipartite, NotConnected
// or NotChained (with a reason).
ChainDecomposition Decompose(const Graph& g);

// Neighbours of overlap `s` inside component `component`: |Y_j| if s ∈ X,
// else |X_j|. Throws DomainError unless `s` is an overlap of that component.
std::uint64_t GCount(std::string_view s, std::size_t component,
                     const ChainDecomposition& d);

// Closed form: sum_i (|X_i||Y_i| + (|X_i| mod 2)(|Y_i| mod 2))
//   - sum_i (g(s_i, C_i) + g(s_i, C_{i+1}))
//   + sum_i |g(s_i, C_i) - g(s_i, C_{i+1})|.
std::uint64_t MinImbalanceChained(const ChainDecomposition& d);
std::uint64_t MinImbalanceChained(const ChainSpec& spec);

// Endpoint vertices placed first and last: s_0 in C_1 and s_n in C_n. Each
// is the smallest vertex of its component, other than the neighbouring
// overlap, that does not sit in a one-vertex part (falling back to any
// vertex for K_{1,1}).
std::pair<VertexId, VertexId> SynthesizedEndpoints(const ChainDecomposition& d);

// Ordering of C_i minus {s_prev, s_next} such that s_prev, result, s_next
// is optimal for the complete bigraph G[C_i]. Throws DomainError on bad
// arguments and ConstructionInvariantViolated if the result fails its
// post-check.
Ordering ConstructComponentSubordering(std::size_t component,
                                       const ChainDecomposition& d,
                                       std::string_view s_prev,
                                       std::string_view s_next);

// s_0 C_1' s_1 C_2' s_2 ... C_n' s_n, where C_i' are the component
// suborderings. Post-checked against MinImbalanceChained.
Ordering ConstructOptimalChained(const ChainDecomposition& d);

// The graph described by a decomposition: the union of the complete
// bigraphs on its components.
Graph ChainGraph(const ChainDecomposition& d);

struct NameScheme {
  // When set, vertices are renamed v1..vN in a seeded random order.
  std::optional<std::uint64_t> shuffle_seed;
};

struct GeneratedChain {
  Graph graph;
  ChainDecomposition decomposition;
};

// Builds a chained complete bigraph realising `spec` with vertex names
// x<k>/y<k> (or shuffled v<k>). The result is decomposed again and must
// reproduce the spec's profile, up to reversal and, for shuffled names, a
// swap of the two parts; otherwise SpecInvalid is thrown.
GeneratedChain GenerateChained(const ChainSpec& spec,
                               const NameScheme& names = {});

// --- interval representation -------------------------------------------------

using Rational = boost::rational<std::int64_t>;

struct Interval {
  Rational left;
  Rational right;
};

using IntervalRep = std::map<VertexId, Interval>;

// Staircase intervals: component i (1-based) owns the window [4i, 4i+3];
// its j-th non-overlap vertex (1-based, sorted) gets [4i + jε, 4i + 3 + jε]
// with ε = 1 / (2(|C_i| + 2)); overlap s_i gets [4i + 3, 4i + 7].
IntervalRep IntervalRepresentation(const ChainDecomposition& d);

// Human-readable violations of: X–Y intervals intersect iff the pair is an
// edge; no interval contains another. Closed intervals that touch
// intersect.
std::vector<std::string> IntervalRepViolations(const IntervalRep& rep,
                                               const Graph& g,
                                               const Bipartition& b);

// --- overlap inequality ------------------------------------------------------

struct OverlapProbe {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::uint64_t l1 = 0;  // neighbours of s_1 in C_1 left of it
  std::uint64_t r1 = 0;
  std::uint64_t l2 = 0;  // neighbours of s_1 in C_2 left of it
  std::uint64_t r2 = 0;
};

// For a two-component chain and an ordering of all its vertices:
//   lhs = I(s_1 | C_1 ∪ C_2) - I(s_1 | C_1) - I(s_1 | C_2)
//   rhs = |g(s_1, C_1) - g(s_1, C_2)| - g(s_1, C_1) - g(s_1, C_2)
// where I(s | S) is the imbalance of s in the subordering on S evaluated on
// G[S]. lhs >= rhs for every ordering. Throws DomainError unless n = 2.
OverlapProbe OverlapInequalityProbe(const Ordering& o,
                                    const ChainDecomposition& d);

}  // namespace imbalance

#endif  // IMBALANCE_CHAINED_H_
