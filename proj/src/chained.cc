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
#include <string>

#include "imbalance/chained.h"
#include "imbalance/complete.h"
#include "imbalance/errors.h"

namespace imbalance {
namespace {

using Block = std::vector<VertexId>;

// Splits `v` into consecutive blocks of the given sizes; the last block
// takes the remainder.
std::vector<Block> SplitSizes(const Block& v, std::initializer_list<std::size_t> sizes) {
  std::vector<Block> out;
  std::size_t at = 0;
  for (const std::size_t s : sizes) {
    out.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(at),
                     v.begin() + static_cast<std::ptrdiff_t>(at + s));
    at += s;
  }
  out.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(at), v.end());
  return out;
}

Block Without(const Block& part, std::string_view a, std::string_view b) {
  Block out;
  for (const VertexId& v : part) {
    if (v != a && v != b) out.push_back(v);
  }
  return out;
}

Block Flatten(const std::vector<Block>& groups) {
  Block out;
  for (const Block& g : groups) out.insert(out.end(), g.begin(), g.end());
  return out;
}

// Middle blocks for a complete bigraph whose endpoints are s_prev ∈ A and
// s_next ∈ A (same part). |A| >= 2.
std::vector<Block> SamePartBlocks(const Block& a_rest, std::size_t a_size,
                                  const Block& b) {
  if (a_size % 2 == 0) {
    // A_1 B A_2 with |A_1| = |A_2|.
    auto a = SplitSizes(a_rest, {(a_size - 2) / 2});
    return {a[0], b, a[1]};
  }
  // A_1 B_1 {a} B_2 A_2 with |A_1| = |A_2| and |B_1| = floor(|B|/2).
  auto a = SplitSizes(a_rest, {(a_size - 3) / 2, 1});
  auto bs = SplitSizes(b, {b.size() / 2});
  return {a[0], bs[0], a[1], bs[1], a[2]};
}

// Middle blocks for endpoints s_prev ∈ A and s_next ∈ B with |A| odd or
// both even. |A|, |B| >= 2.
std::vector<Block> CrossPartBlocks(const Block& a_rest, std::size_t a_size,
                                   const Block& b_rest, std::size_t b_size) {
  if (a_size % 2 == 0) {
    // Both even: A_1 B_1 A_2 B_2, |A_2| = |A_1| + 1, |B_1| = |B_2| + 1.
    auto a = SplitSizes(a_rest, {(a_size - 2) / 2});
    auto b = SplitSizes(b_rest, {b_size / 2});
    return {a[0], b[0], a[1], b[1]};
  }
  if (b_size % 2 == 0) {
    // |A| odd, |B| even: A_1 B_1 A_2 B_2, |A_2| = |A_1| + 2, |B_1| = |B_2| + 1.
    auto a = SplitSizes(a_rest, {(a_size - 3) / 2});
    auto b = SplitSizes(b_rest, {b_size / 2});
    return {a[0], b[0], a[1], b[1]};
  }
  // Both odd: A_1 B_1 {a} B_2 A_2, |A_2| = |A_1| + 1, |B_1| = |B_2|.
  auto a = SplitSizes(a_rest, {(a_size - 3) / 2, 1});
  auto b = SplitSizes(b_rest, {(b_size - 1) / 2});
  return {a[0], b[0], a[1], b[1], a[2]};
}

const ChainComponent& ComponentAt(const ChainDecomposition& d, std::size_t i) {
  if (i >= d.components.size()) {
    throw DomainError("component index " + std::to_string(i) +
                      " out of range");
  }
  return d.components[i];
}

// Smallest vertex of `c` other than `exclude` that is not alone in its part.
VertexId PickEndpoint(const ChainComponent& c, std::string_view exclude) {
  std::optional<VertexId> best;
  std::optional<VertexId> fallback;
  for (const VertexId& v : c.Vertices()) {
    if (v == exclude) continue;
    if (!fallback) fallback = v;
    const std::size_t part = c.InX(v) ? c.x_part.size() : c.y_part.size();
    if (part >= 2) {
      best = v;
      break;
    }
  }
  if (best) return *best;
  if (fallback) return *fallback;
  throw DomainError("component has no vertex to serve as an endpoint");
}

}  // namespace

std::uint64_t GCount(std::string_view s, std::size_t component,
                     const ChainDecomposition& d) {
  const ChainComponent& c = ComponentAt(d, component);
  const bool left = component > 0 && d.overlaps[component - 1] == s;
  const bool right = component < d.overlaps.size() && d.overlaps[component] == s;
  if (!left && !right) {
    throw DomainError("'" + std::string(s) + "' is not an overlap of component " +
                      std::to_string(component));
  }
  const std::size_t idx = left ? component - 1 : component;
  return d.overlap_in_x[idx] ? c.y_part.size() : c.x_part.size();
}

std::uint64_t MinImbalanceChained(const ChainSpec& spec) {
  ValidateChainSpec(spec);
  std::uint64_t components = 0;
  for (const auto& [nx, ny] : spec.sizes) {
    components = CheckedAdd(components, MinImbalanceFormula(nx, ny));
  }
  std::uint64_t removed = 0;
  std::uint64_t added = 0;
  for (std::size_t i = 0; i < spec.overlap_parts.size(); ++i) {
    const bool in_x = spec.overlap_parts[i] == Part::kX;
    const std::uint64_t g_left = in_x ? spec.sizes[i].second : spec.sizes[i].first;
    const std::uint64_t g_right =
        in_x ? spec.sizes[i + 1].second : spec.sizes[i + 1].first;
    removed = CheckedAdd(removed, CheckedAdd(g_left, g_right));
    added = CheckedAdd(added, g_left > g_right ? g_left - g_right
                                               : g_right - g_left);
  }
  return CheckedAdd(components, added) - removed;
}

std::uint64_t MinImbalanceChained(const ChainDecomposition& d) {
  return MinImbalanceChained(ProfileOf(d));
}

std::pair<VertexId, VertexId> SynthesizedEndpoints(const ChainDecomposition& d) {
  if (d.components.empty()) throw DomainError("empty decomposition");
  if (d.components.size() == 1) {
    const VertexId first = PickEndpoint(d.components[0], "");
    return {first, PickEndpoint(d.components[0], first)};
  }
  return {PickEndpoint(d.components.front(), d.overlaps.front()),
          PickEndpoint(d.components.back(), d.overlaps.back())};
}

Ordering ConstructComponentSubordering(std::size_t component,
                                       const ChainDecomposition& d,
                                       std::string_view s_prev,
                                       std::string_view s_next) {
  const ChainComponent& c = ComponentAt(d, component);
  if (s_prev == s_next || !c.Contains(s_prev) || !c.Contains(s_next)) {
    throw DomainError("endpoints must be two distinct vertices of component " +
                      std::to_string(component));
  }
  const bool prev_in_x = c.InX(s_prev);
  const bool next_in_x = c.InX(s_next);
  const Block& a = prev_in_x ? c.x_part : c.y_part;
  const Block& b = prev_in_x ? c.y_part : c.x_part;
  const Block a_rest = Without(a, s_prev, s_next);
  const Block b_rest = Without(b, s_prev, s_next);

  std::vector<Block> groups;
  if (a.size() == 1 && b.size() == 1) {
    // K_{1,1}: nothing between the endpoints.
  } else if (prev_in_x == next_in_x) {
    if (a.size() < 2) {
      throw ConstructionInvariantViolated("both endpoints in a one-vertex part");
    }
    groups = SamePartBlocks(a_rest, a.size(), b);
  } else {
    if (a.size() < 2 || b.size() < 2) {
      throw ConstructionInvariantViolated("endpoint alone in its part");
    }
    if (a.size() % 2 == 0 && b.size() % 2 == 1) {
      // Build from the other end and mirror.
      groups = CrossPartBlocks(b_rest, b.size(), a_rest, a.size());
      std::reverse(groups.begin(), groups.end());
    } else {
      groups = CrossPartBlocks(a_rest, a.size(), b_rest, b.size());
    }
  }
  Ordering middle(Flatten(groups));

  // Post-check on G[C_i] with the endpoints at the extremes.
  Block full;
  full.reserve(middle.size() + 2);
  full.emplace_back(s_prev);
  full.insert(full.end(), middle.sequence().begin(), middle.sequence().end());
  full.emplace_back(s_next);
  const Bipartition parts{c.x_part, c.y_part};
  if (full.size() != c.x_part.size() + c.y_part.size() ||
      CompleteOrderingImbalance(Ordering(full), parts) !=
          MinImbalanceFormula(c.x_part.size(), c.y_part.size())) {
    throw ConstructionInvariantViolated(
        "component " + std::to_string(component + 1) +
        " subordering is not optimal for its complete bigraph");
  }
  return middle;
}

Graph ChainGraph(const ChainDecomposition& d) {
  GraphBuilder builder;
  for (const ChainComponent& c : d.components) {
    for (const VertexId& x : c.x_part) {
      builder.AddVertex(x);
      for (const VertexId& y : c.y_part) builder.AddEdge(x, y);
    }
    for (const VertexId& y : c.y_part) builder.AddVertex(y);
  }
  return std::move(builder).Build();
}

Ordering ConstructOptimalChained(const ChainDecomposition& d) {
  const auto [first, last] = SynthesizedEndpoints(d);
  const std::size_t n = d.components.size();
  std::vector<Ordering> pieces;
  pieces.reserve(2 * n + 1);
  pieces.emplace_back(std::vector<VertexId>{first});
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId& prev = i == 0 ? first : d.overlaps[i - 1];
    const VertexId& next = i + 1 == n ? last : d.overlaps[i];
    pieces.push_back(ConstructComponentSubordering(i, d, prev, next));
    pieces.emplace_back(std::vector<VertexId>{next});
  }
  Ordering result = ConcatOrderings(pieces);
  if (OrderingImbalance(result, ChainGraph(d)) != MinImbalanceChained(d)) {
    throw ConstructionInvariantViolated(
        "chained ordering misses the closed-form value");
  }
  return result;
}

OverlapProbe OverlapInequalityProbe(const Ordering& o,
                                    const ChainDecomposition& d) {
  if (d.components.size() != 2) {
    throw DomainError("overlap probe needs exactly two components, got " +
                      std::to_string(d.components.size()));
  }
  const VertexId& s = d.overlaps[0];
  const Graph g = ChainGraph(d);
  const std::vector<VertexId> c1 = d.components[0].Vertices();
  const std::vector<VertexId> c2 = d.components[1].Vertices();
  auto local = [&](const std::vector<VertexId>& set) {
    return static_cast<std::int64_t>(
        VertexImbalance(s, Subordering(o, set), g.InducedSubgraph(set)));
  };
  OverlapProbe p;
  p.lhs = static_cast<std::int64_t>(VertexImbalance(s, o, g)) - local(c1) -
          local(c2);

  const std::size_t at = o.PositionOf(s);
  const bool s_in_x = d.overlap_in_x[0];
  auto count = [&](const ChainComponent& c, std::uint64_t& left,
                   std::uint64_t& right) {
    for (const VertexId& v : s_in_x ? c.y_part : c.x_part) {
      (o.PositionOf(v) < at ? left : right) += 1;
    }
  };
  count(d.components[0], p.l1, p.r1);
  count(d.components[1], p.l2, p.r2);

  const auto g1 = static_cast<std::int64_t>(GCount(s, 0, d));
  const auto g2 = static_cast<std::int64_t>(GCount(s, 1, d));
  p.rhs = (g1 > g2 ? g1 - g2 : g2 - g1) - g1 - g2;
  return p;
}

}  // namespace imbalance
