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

#include <string>

#include "imbalance/chained.h"
#include "imbalance/errors.h"

namespace imbalance {
namespace {

std::string Show(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
  return out;
}

std::string Show(const VertexId& v, const Interval& iv) {
  return v + "=[" + Show(iv.left) + "," + Show(iv.right) + "]";
}

}  // namespace

IntervalRep IntervalRepresentation(const ChainDecomposition& d) {
  IntervalRep rep;
  const std::size_t n = d.components.size();
  for (std::size_t c = 0; c < n; ++c) {
    const std::int64_t i = static_cast<std::int64_t>(c) + 1;
    const ChainComponent& comp = d.components[c];
    const std::vector<VertexId> all = comp.Vertices();
    const Rational eps(1, 2 * (static_cast<std::int64_t>(all.size()) + 2));
    std::int64_t j = 0;
    for (const VertexId& v : all) {
      const bool is_overlap = (c > 0 && d.overlaps[c - 1] == v) ||
                              (c + 1 < n && d.overlaps[c] == v);
      if (is_overlap) continue;
      ++j;
      rep[v] = Interval{Rational(4 * i) + eps * j, Rational(4 * i + 3) + eps * j};
    }
    if (c + 1 < n) {
      rep[d.overlaps[c]] = Interval{Rational(4 * i + 3), Rational(4 * i + 7)};
    }
  }
  return rep;
}

std::vector<std::string> IntervalRepViolations(const IntervalRep& rep,
                                               const Graph& g,
                                               const Bipartition& b) {
  std::vector<std::string> out;
  for (const VertexId& v : g.vertices()) {
    if (!rep.contains(v)) out.push_back("no interval for " + v);
  }
  for (const auto& [v, iv] : rep) {
    if (!g.Contains(v)) out.push_back("interval for unknown vertex " + v);
    if (iv.left > iv.right) out.push_back("empty interval " + Show(v, iv));
  }
  if (!out.empty()) return out;

  for (const VertexId& x : b.x_part) {
    for (const VertexId& y : b.y_part) {
      const Interval& a = rep.at(x);
      const Interval& c = rep.at(y);
      const bool meet = a.left <= c.right && c.left <= a.right;
      const bool edge = g.HasEdge(x, y);
      if (meet != edge) {
        out.push_back((edge ? "edge with disjoint intervals: "
                            : "non-edge with intersecting intervals: ") +
                      Show(x, a) + " " + Show(y, c));
      }
    }
  }
  for (auto it = rep.begin(); it != rep.end(); ++it) {
    for (auto jt = std::next(it); jt != rep.end(); ++jt) {
      const Interval& a = it->second;
      const Interval& c = jt->second;
      if (a.left <= c.left && c.right <= a.right) {
        out.push_back("containment: " + Show(it->first, a) + " contains " +
                      Show(jt->first, c));
      } else if (c.left <= a.left && a.right <= c.right) {
        out.push_back("containment: " + Show(jt->first, c) + " contains " +
                      Show(it->first, a));
      }
    }
  }
  return out;
}

}  // namespace imbalance
