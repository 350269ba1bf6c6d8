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

#include "imbalance/complete.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "imbalance/errors.h"

namespace imbalance {
namespace {

BigNat ParseDecimal(std::string_view s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    throw ParseError(0, "not a decimal natural: '" + std::string(s) + "'");
  }
  return BigNat(std::string(s));
}

void RequireNonEmptyParts(const Bipartition& b) {
  if (b.x_part.empty() || b.y_part.empty()) {
    throw DomainError("complete bigraph needs two non-empty parts");
  }
}

// X-vertices of each gap between consecutive Y positions, L_0..L_{|Y|}.
std::vector<std::vector<VertexId>> XBlocks(const Ordering& o,
                                           const Bipartition& b) {
  std::vector<std::vector<VertexId>> blocks(1);
  for (const VertexId& v : o.sequence()) {
    if (b.InY(v)) {
      blocks.emplace_back();
    } else {
      blocks.back().push_back(v);
    }
  }
  return blocks;
}

void Append(std::vector<VertexId>& out, const std::vector<VertexId>& block) {
  out.insert(out.end(), block.begin(), block.end());
}

std::size_t BlockSum(const std::vector<std::size_t>& blocks, std::size_t from,
                     std::size_t to) {
  std::size_t sum = 0;
  for (std::size_t i = from; i < to && i < blocks.size(); ++i) sum += blocks[i];
  return sum;
}

}  // namespace

PartSizes PartSizes::FromDecimal(std::string_view nx, std::string_view ny) {
  return PartSizes{ParseDecimal(nx), ParseDecimal(ny)};
}

BigNat MinImbalanceFormula(const PartSizes& p) {
  if (p.nx == 0 || p.ny == 0) {
    throw DomainError("part sizes must both be at least 1");
  }
  BigNat result = p.nx * p.ny;
  if ((p.nx & 1) != 0 && (p.ny & 1) != 0) result += 1;
  return result;
}

std::uint64_t MinImbalanceFormula(std::uint64_t nx, std::uint64_t ny) {
  if (nx == 0 || ny == 0) {
    throw DomainError("part sizes must both be at least 1");
  }
  return CheckedAdd(CheckedMul(nx, ny), (nx & 1) & (ny & 1));
}

Graph CompleteBipartiteGraph(const Bipartition& b) {
  GraphBuilder builder;
  for (const VertexId& x : b.x_part) builder.AddVertex(x);
  for (const VertexId& y : b.y_part) builder.AddVertex(y);
  for (const VertexId& x : b.x_part) {
    for (const VertexId& y : b.y_part) builder.AddEdge(x, y);
  }
  return std::move(builder).Build();
}

std::uint64_t CompleteOrderingImbalance(const Ordering& o,
                                        const Bipartition& b) {
  const std::uint64_t nx = b.x_part.size();
  const std::uint64_t ny = b.y_part.size();
  if (o.size() != nx + ny) {
    throw DomainError("ordering does not cover the bipartition");
  }
  std::uint64_t seen_x = 0;
  std::uint64_t seen_y = 0;
  std::uint64_t total = 0;
  for (const VertexId& v : o.sequence()) {
    std::uint64_t left;
    std::uint64_t right;
    if (b.InX(v)) {
      left = seen_y;
      right = ny - seen_y;
      ++seen_x;
    } else if (b.InY(v)) {
      left = seen_x;
      right = nx - seen_x;
      ++seen_y;
    } else {
      throw DomainError("vertex '" + v + "' is in neither part");
    }
    total = CheckedAdd(total, left > right ? left - right : right - left);
  }
  return total;
}

Ordering ConstructOptimalComplete(const Bipartition& b) {
  RequireNonEmptyParts(b);
  const auto& xs = b.x_part;
  const auto& ys = b.y_part;
  std::vector<VertexId> seq;
  seq.reserve(xs.size() + ys.size());
  const auto ymid = ys.begin() + static_cast<std::ptrdiff_t>(ys.size() / 2);
  const auto xmid = xs.begin() + static_cast<std::ptrdiff_t>(xs.size() / 2);
  if (ys.size() % 2 == 0) {
    // Y_1 X Y_2
    seq.insert(seq.end(), ys.begin(), ymid);
    seq.insert(seq.end(), xs.begin(), xs.end());
    seq.insert(seq.end(), ymid, ys.end());
  } else if (xs.size() % 2 == 0) {
    // X_1 Y X_2
    seq.insert(seq.end(), xs.begin(), xmid);
    seq.insert(seq.end(), ys.begin(), ys.end());
    seq.insert(seq.end(), xmid, xs.end());
  } else {
    // Y_1 X_1 y_m X_2 Y_2 with |Y_1| = |Y_2| and |X_2| = |X_1| + 1.
    seq.insert(seq.end(), ys.begin(), ymid);
    seq.insert(seq.end(), xs.begin(), xmid);
    seq.push_back(*ymid);
    seq.insert(seq.end(), xmid, xs.end());
    seq.insert(seq.end(), ymid + 1, ys.end());
  }
  Ordering result(std::move(seq));
  const std::uint64_t want = MinImbalanceFormula(xs.size(), ys.size());
  if (CompleteOrderingImbalance(result, b) != want) {
    throw ConstructionInvariantViolated(
        "complete-bigraph construction missed the closed-form value");
  }
  return result;
}

YPositionProfile ComputeYPositionProfile(const Ordering& o,
                                         const Bipartition& b) {
  const std::size_t n = b.x_part.size() + b.y_part.size();
  if (o.size() != n) {
    throw DomainError("ordering does not cover the bipartition");
  }
  YPositionProfile p;
  p.l.reserve(b.y_part.size() + 2);
  p.l.push_back(0);
  p.blocks.push_back(0);
  for (std::size_t k = 1; k <= n; ++k) {
    const VertexId& v = o[k - 1];
    if (b.InY(v)) {
      p.l.push_back(k);
      p.y_at.push_back(v);
      p.blocks.push_back(0);
    } else if (b.InX(v)) {
      ++p.blocks.back();
    } else {
      throw DomainError("vertex '" + v + "' is in neither part");
    }
  }
  p.l.push_back(n + 1);
  return p;
}

Ordering ShiftLeft(const Ordering& o, const Bipartition& b) {
  const YPositionProfile p = ComputeYPositionProfile(o, b);
  const std::size_t ny = p.num_y();
  const std::size_t f = ny / 2;
  if (f < 1) {
    throw DomainError("shift-left needs |Y| >= 2");
  }
  const auto blocks = XBlocks(o, b);
  std::vector<VertexId> seq;
  seq.reserve(o.size());
  seq.push_back(p.y(f));
  Append(seq, blocks[0]);
  for (std::size_t i = 1; i <= f - 1; ++i) {
    seq.push_back(p.y(i));
    Append(seq, blocks[i]);
  }
  Append(seq, blocks[f]);
  for (std::size_t i = f + 1; i <= ny; ++i) {
    seq.push_back(p.y(i));
    Append(seq, blocks[i]);
  }
  return Ordering(std::move(seq));
}

Ordering ShiftRight(const Ordering& o, const Bipartition& b) {
  const YPositionProfile p = ComputeYPositionProfile(o, b);
  const std::size_t ny = p.num_y();
  const std::size_t c = (ny + 1) / 2;
  if (c + 1 > ny) {
    throw DomainError("shift-right needs |Y| >= 2");
  }
  const auto blocks = XBlocks(o, b);
  std::vector<VertexId> seq;
  seq.reserve(o.size());
  Append(seq, blocks[0]);
  for (std::size_t i = 1; i <= c; ++i) {
    seq.push_back(p.y(i));
    Append(seq, blocks[i]);
  }
  Append(seq, blocks[c + 1]);
  for (std::size_t i = c + 2; i <= ny; ++i) {
    seq.push_back(p.y(i));
    Append(seq, blocks[i]);
  }
  seq.push_back(p.y(c + 1));
  return Ordering(std::move(seq));
}

std::string_view PropertyName(OptimalityProperty p) {
  switch (p) {
    case OptimalityProperty::kP1:
      return "P1";
    case OptimalityProperty::kP2:
      return "P2";
    case OptimalityProperty::kP3:
      return "P3";
  }
  return "?";
}

OptimalityVerdict VerifyOptimalComplete(const Ordering& o,
                                        const Bipartition& b) {
  RequireNonEmptyParts(b);
  const YPositionProfile p = ComputeYPositionProfile(o, b);
  const std::size_t nx = b.x_part.size();
  const std::size_t ny = b.y_part.size();
  const std::size_t f = ny / 2;
  const std::size_t c = (ny + 1) / 2;
  const std::size_t end = p.blocks.size();

  OptimalityVerdict verdict;
  if (BlockSum(p.blocks, 0, f) > BlockSum(p.blocks, f, end)) {
    verdict.failed_property = OptimalityProperty::kP1;
  } else if (BlockSum(p.blocks, 0, c + 1) < BlockSum(p.blocks, c + 1, end)) {
    verdict.failed_property = OptimalityProperty::kP2;
  } else if (ny % 2 == 1) {
    // X-vertices left of y_m are exactly the blocks before it.
    const std::size_t left = BlockSum(p.blocks, 0, c);
    const std::size_t right = nx - left;
    const std::size_t imb = left > right ? left - right : right - left;
    if (imb != nx % 2) verdict.failed_property = OptimalityProperty::kP3;
  }
  verdict.optimal = !verdict.failed_property.has_value();
  verdict.achieved = CompleteOrderingImbalance(o, b);
  verdict.minimum = MinImbalanceFormula(nx, ny);
  return verdict;
}

}  // namespace imbalance
