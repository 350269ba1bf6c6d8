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

// Minimum imbalance of complete bipartite graphs K_{|X|,|Y|}: the closed
// form |X|·|Y| + (|X| mod 2)(|Y| mod 2), an optimal-ordering constructor,
// the Y-position profile of an ordering, the two median shifts, and a
// linear-time optimality test.

#ifndef IMBALANCE_COMPLETE_H_
#define IMBALANCE_COMPLETE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "imbalance/graph.h"

namespace imbalance {

using BigNat = boost::multiprecision::cpp_int;

struct PartSizes {
  BigNat nx;
  BigNat ny;

  // Parses two unbounded decimal strings. Throws ParseError.
  static PartSizes FromDecimal(std::string_view nx, std::string_view ny);
};

// Throws DomainError when either part is empty.
BigNat MinImbalanceFormula(const PartSizes& p);
// Machine-width variant; throws OverflowError instead of growing.
std::uint64_t MinImbalanceFormula(std::uint64_t nx, std::uint64_t ny);

// Optimal ordering of K_{|X|,|Y|}. An even part goes on the outside
// (Y preferred when both are even); odd/odd places the median Y-vertex
// between two near-equal halves of X. Halves are taken in sorted order,
// smaller half first.
Ordering ConstructOptimalComplete(const Bipartition& b);

// Positions of the Y-vertices in an ordering of X ∪ Y, with sentinels
// l[0] = 0 and l[|Y|+1] = |X|+|Y|+1, plus the X-block sizes between them.
struct YPositionProfile {
  std::vector<std::size_t> l;       // size |Y| + 2
  std::vector<std::size_t> blocks;  // blocks[i] = l[i+1] - l[i] - 1
  std::vector<VertexId> y_at;       // y_at[i - 1] sits at position l[i]

  // The Y-vertex at l[i], 1 <= i <= |Y|.
  const VertexId& y(std::size_t i) const { return y_at.at(i - 1); }
  std::size_t num_y() const { return y_at.size(); }
};

// Throws DomainError unless `o` orders exactly X ∪ Y.
YPositionProfile ComputeYPositionProfile(const Ordering& o,
                                         const Bipartition& b);

// Moves y_{floor(|Y|/2)} to the front. Needs |Y| >= 2 so that the moved
// index is at least 1.
Ordering ShiftLeft(const Ordering& o, const Bipartition& b);
// Moves y_{ceil(|Y|/2)+1} to the back. Needs |Y| >= 2.
Ordering ShiftRight(const Ordering& o, const Bipartition& b);

enum class OptimalityProperty { kP1, kP2, kP3 };
std::string_view PropertyName(OptimalityProperty p);

struct OptimalityVerdict {
  bool optimal = false;
  std::optional<OptimalityProperty> failed_property;
  std::uint64_t achieved = 0;
  std::uint64_t minimum = 0;
};

// Decides optimality of `o` on K_{|X|,|Y|} from its Y-position profile in
// one pass, with the bipartition's y_part playing the role of Y:
//   P1  sum_{i < floor(|Y|/2)} |L_i| <= sum_{i >= floor(|Y|/2)} |L_i|
//   P2  sum_{i <= ceil(|Y|/2)} |L_i| >= sum_{i > ceil(|Y|/2)} |L_i|
//   P3  |Y| odd => the vertex at l_{ceil(|Y|/2)} has imbalance |X| mod 2
// `achieved` and `minimum` are computed separately from the implied
// complete graph and the closed form.
OptimalityVerdict VerifyOptimalComplete(const Ordering& o,
                                        const Bipartition& b);

// Imbalance of `o` on the complete bigraph over b's parts, without
// materialising the graph.
std::uint64_t CompleteOrderingImbalance(const Ordering& o,
                                        const Bipartition& b);

// K_{|X|,|Y|} on the given parts.
Graph CompleteBipartiteGraph(const Bipartition& b);

}  // namespace imbalance

#endif  // IMBALANCE_COMPLETE_H_
