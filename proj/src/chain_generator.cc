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
#include <random>
#include <string>
#include <unordered_map>

#include "imbalance/chained.h"
#include "imbalance/errors.h"

namespace imbalance {
namespace {

// Renames every vertex to v1..vN following a seeded random permutation.
// Fisher-Yates is written out so the result does not depend on the
// standard library's shuffle implementation.
std::unordered_map<VertexId, VertexId> ShuffledNames(
    const std::vector<VertexId>& ids, std::uint64_t seed) {
  std::vector<std::size_t> perm(ids.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[rng() % i]);
  }
  std::unordered_map<VertexId, VertexId> names;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    names[ids[i]] = "v" + std::to_string(perm[i] + 1);
  }
  return names;
}

bool ProfileMatches(const ChainSpec& got, const ChainSpec& want,
                    bool allow_swap) {
  if (SameProfileUpToReversal(got, want)) return true;
  return allow_swap && SameProfileUpToReversal(PartsSwapped(got), want);
}

}  // namespace

GeneratedChain GenerateChained(const ChainSpec& spec, const NameScheme& names) {
  ValidateChainSpec(spec);
  const std::size_t n = spec.sizes.size();

  std::size_t next_x = 0;
  std::size_t next_y = 0;
  auto fresh = [&](bool in_x) {
    return in_x ? "x" + std::to_string(++next_x) : "y" + std::to_string(++next_y);
  };

  ChainDecomposition d;
  for (std::size_t i = 0; i < n; ++i) {
    ChainComponent c;
    if (i > 0) {
      (d.overlap_in_x[i - 1] ? c.x_part : c.y_part).push_back(d.overlaps[i - 1]);
    }
    const bool right_in_x = i + 1 < n && spec.overlap_parts[i] == Part::kX;
    const bool right_in_y = i + 1 < n && spec.overlap_parts[i] == Part::kY;
    const std::size_t want_x = spec.sizes[i].first - (right_in_x ? 1 : 0);
    const std::size_t want_y = spec.sizes[i].second - (right_in_y ? 1 : 0);
    while (c.x_part.size() < want_x) c.x_part.push_back(fresh(true));
    while (c.y_part.size() < want_y) c.y_part.push_back(fresh(false));
    if (i + 1 < n) {
      const VertexId s = fresh(right_in_x);
      (right_in_x ? c.x_part : c.y_part).push_back(s);
      d.overlaps.push_back(s);
      d.overlap_in_x.push_back(right_in_x);
    }
    d.components.push_back(std::move(c));
  }

  if (names.shuffle_seed) {
    const Graph plain = ChainGraph(d);
    const auto rename = ShuffledNames(plain.vertices(), *names.shuffle_seed);
    for (ChainComponent& c : d.components) {
      for (VertexId& v : c.x_part) v = rename.at(v);
      for (VertexId& v : c.y_part) v = rename.at(v);
    }
    for (VertexId& s : d.overlaps) s = rename.at(s);
  }
  for (ChainComponent& c : d.components) {
    std::sort(c.x_part.begin(), c.x_part.end());
    std::sort(c.y_part.begin(), c.y_part.end());
  }

  Graph g = ChainGraph(d);
  ChainDecomposition found;
  try {
    found = Decompose(g);
  } catch (const Error& e) {
    throw SpecInvalid(std::string("generated graph does not decompose: ") +
                      e.what());
  }
  if (!ProfileMatches(ProfileOf(found), spec, names.shuffle_seed.has_value())) {
    throw SpecInvalid("generated graph decomposes to a different profile");
  }
  return GeneratedChain{std::move(g), std::move(found)};
}

}  // namespace imbalance
