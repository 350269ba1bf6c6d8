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

// Exact minimum imbalance by exhaustive search over all orderings.

#ifndef IMBALANCE_ORACLE_H_
#define IMBALANCE_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "imbalance/graph.h"

namespace imbalance {

inline constexpr std::size_t kDefaultOracleCap = 10;

struct OracleOptions {
  std::size_t cap = kDefaultOracleCap;
  // Branch-and-bound pruning. Never changes the minimum or the witness.
  bool prune = true;
};

struct OracleResult {
  std::uint64_t minimum = 0;
  // Lexicographically smallest optimal ordering.
  Ordering witness;
};

// Throws SizeCapExceeded when |V| > options.cap.
OracleResult BruteForceMin(const Graph& g, const OracleOptions& options = {});

// All optimal orderings, in lexicographic order.
std::vector<Ordering> EnumerateOptima(const Graph& g,
                                      const OracleOptions& options = {});

// Number of optimal orderings, without materialising them.
std::uint64_t CountOptima(const Graph& g, const OracleOptions& options = {});

}  // namespace imbalance

#endif  // IMBALANCE_ORACLE_H_
