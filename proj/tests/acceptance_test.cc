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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cli.h"
#include "imbalance/chained.h"
#include "imbalance/complete.h"
#include "imbalance/errors.h"
#include "imbalance/oracle.h"
#include "test_oracles.h"

namespace imbalance {
namespace {

using testing::CompleteGraph;
using testing::XyParts;

// Outcome of a criterion: pass flag plus a short summary of what was
// checked or the first thing that went wrong.
struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome ExhaustiveComplete() {
  Outcome r;
  int graphs = 0;
  for (std::size_t a = 1; a < 8; ++a) {
    for (std::size_t b = 1; a + b <= 8; ++b, ++graphs) {
      const std::uint64_t got = BruteForceMin(CompleteGraph(a, b)).minimum;
      if (got != MinImbalanceFormula(a, b)) {
        r.Fail("K_{" + std::to_string(a) + "," + std::to_string(b) +
               "}: oracle " + std::to_string(got));
      }
    }
  }
  if (r.pass) r.detail = std::to_string(graphs) + " graphs";
  return r;
}

Outcome ConstructorComplete() {
  Outcome r;
  for (std::size_t a = 1; a <= 40; ++a) {
    for (std::size_t b = 1; b <= 40; ++b) {
      const Ordering o = ConstructOptimalComplete(XyParts(a, b));
      if (OrderingImbalance(o, CompleteGraph(a, b)) != MinImbalanceFormula(a, b)) {
        r.Fail("K_{" + std::to_string(a) + "," + std::to_string(b) + "}");
      }
    }
  }
  if (r.pass) r.detail = "1600 cases";
  return r;
}

Outcome VerifierAgreement() {
  Outcome r;
  std::uint64_t checked = 0;
  for (std::size_t a = 1; a < 7; ++a) {
    for (std::size_t b = 1; a + b <= 7; ++b) {
      const Graph g = CompleteGraph(a, b);
      const Bipartition parts = XyParts(a, b);
      const std::uint64_t best = MinImbalanceFormula(a, b);
      testing::ForEachPermutation(g, [&](const std::vector<VertexId>& order) {
        const Ordering o(order);
        const bool optimal = OrderingImbalance(o, g) == best;
        ++checked;
        if (VerifyOptimalComplete(o, parts).optimal != optimal) {
          r.Fail("K_{" + std::to_string(a) + "," + std::to_string(b) + "} " +
                 FormatOrdering(o));
        }
      });
    }
  }
  if (r.pass) r.detail = std::to_string(checked) + " orderings";
  return r;
}

Outcome ShiftsAndMedian() {
  Outcome r;
  std::uint64_t optima = 0;
  for (std::size_t a = 1; a < 7; ++a) {
    for (std::size_t b = 1; a + b <= 7; ++b) {
      const Graph g = CompleteGraph(a, b);
      const Bipartition parts = XyParts(a, b);
      const std::string name =
          "K_{" + std::to_string(a) + "," + std::to_string(b) + "} ";
      for (const Ordering& o : EnumerateOptima(g)) {
        ++optima;
        const std::uint64_t value = OrderingImbalance(o, g);
        // Either part may play the role of Y; shifts need |Y| >= 2.
        for (const Bipartition& roles :
             {parts, Bipartition{parts.y_part, parts.x_part}}) {
          if (roles.y_part.size() < 2) continue;
          if (OrderingImbalance(ShiftLeft(o, roles), g) != value) {
            r.Fail(name + "shift left of " + FormatOrdering(o));
          }
          if (OrderingImbalance(ShiftRight(o, roles), g) != value) {
            r.Fail(name + "shift right of " + FormatOrdering(o));
          }
        }
        if (a % 2 == 1 && b % 2 == 1) {
          const YPositionProfile p = ComputeYPositionProfile(o, parts);
          const VertexId& mid = p.y((p.num_y() + 1) / 2);
          if (VertexImbalance(mid, o, g) != 1) {
            r.Fail(name + "median of " + FormatOrdering(o));
          }
        }
      }
    }
  }
  if (r.pass) r.detail = std::to_string(optima) + " optima";
  return r;
}

Outcome ExhaustiveChained() {
  Outcome r;
  const std::vector<ChainSpec> specs = testing::AllChainSpecs(3, 9);
  for (const ChainSpec& spec : specs) {
    const GeneratedChain gen = GenerateChained(spec);
    const std::uint64_t got = BruteForceMin(gen.graph).minimum;
    if (got != MinImbalanceChained(spec)) {
      r.Fail("spec {" + FormatChainSpec(spec) + "}: oracle " +
             std::to_string(got));
    }
  }
  if (r.pass) r.detail = std::to_string(specs.size()) + " specs";
  return r;
}

Outcome ElevenVertexExample() {
  Outcome r;
  const ChainSpec spec = ParseChainSpec(
      "component 2 2\noverlap X\ncomponent 2 2\noverlap Y\ncomponent 2 3\n");
  const GeneratedChain gen = GenerateChained(spec);
  const ChainDecomposition d = Decompose(gen.graph);
  if (gen.graph.num_vertices() != 11) r.Fail("vertex count");
  const ChainSpec want{{{2, 2}, {2, 2}, {2, 3}}, {Part::kX, Part::kY}};
  if (!SameProfileUpToReversal(ProfileOf(d), want)) r.Fail("component sizes");
  for (std::size_t i = 0; i < d.overlaps.size(); ++i) {
    if (GCount(d.overlaps[i], i, d) != 2 || GCount(d.overlaps[i], i + 1, d) != 2) {
      r.Fail("g value of s" + std::to_string(i + 1));
    }
  }
  const std::uint64_t formula = MinImbalanceChained(d);
  if (formula != 6) r.Fail("closed form " + std::to_string(formula));
  const std::uint64_t built =
      OrderingImbalance(ConstructOptimalChained(d), gen.graph);
  if (built != 6) r.Fail("constructed ordering " + std::to_string(built));
  const std::uint64_t exact =
      BruteForceMin(gen.graph, {.cap = 11, .prune = true}).minimum;
  if (exact != 6) r.Fail("oracle " + std::to_string(exact));
  if (r.pass) r.detail = "sizes (2,2),(2,2),(2,3); g = 2; value 6 = oracle";
  return r;
}

Outcome OverlapInequality() {
  Outcome r;
  std::uint64_t probes = 0;
  int graphs = 0;
  for (const ChainSpec& spec : testing::AllChainSpecs(2, 8)) {
    if (spec.sizes.size() != 2) continue;
    ++graphs;
    const GeneratedChain gen = GenerateChained(spec);
    testing::ForEachPermutation(gen.graph, [&](const std::vector<VertexId>& order) {
      const OverlapProbe p = OverlapInequalityProbe(Ordering(order),
                                                    gen.decomposition);
      ++probes;
      if (p.lhs < p.rhs) {
        r.Fail("spec {" + FormatChainSpec(spec) + "} " +
               FormatOrdering(Ordering(order)));
      }
    });
  }
  if (r.pass) {
    r.detail = std::to_string(graphs) + " graphs, " + std::to_string(probes) +
               " orderings, 0 violations";
  }
  return r;
}

Outcome ArbitraryPrecision() {
  Outcome r;
  std::mt19937_64 rng(200);
  std::string nx;
  std::string ny;
  for (std::string* s : {&nx, &ny}) {
    *s += static_cast<char>('1' + rng() % 9);
    while (s->size() < 199) *s += static_cast<char>('0' + rng() % 10);
    *s += static_cast<char>('1' + 2 * (rng() % 5));  // odd
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      cli::RunCli({"solve", "complete", "--parts", nx, ny}, out, err);
  const mpz_class expected = mpz_class(nx) * mpz_class(ny) + 1;
  if (code != 0) r.Fail("exit code " + std::to_string(code));
  if (out.str() != expected.get_str() + "\n") r.Fail("value mismatch");
  if (r.pass) {
    r.detail = "200-digit odd parts, " + std::to_string(expected.get_str().size()) +
               "-digit result";
  }
  return r;
}

Outcome RoundTrip() {
  Outcome r;
  std::mt19937_64 rng(9);
  std::size_t largest = 0;
  for (int i = 0; i < 100; ++i) {
    // At most 12 components of at most 34 vertices each: <= 397 vertices.
    const ChainSpec spec = testing::RandomChainSpec(rng, 12, 15);
    largest = std::max(largest, testing::SpecVertexCount(spec));
    const GeneratedChain gen = GenerateChained(spec);
    const ChainDecomposition d = Decompose(gen.graph);
    if (!SameProfileUpToReversal(ProfileOf(d), spec)) {
      r.Fail("profile of spec {" + FormatChainSpec(spec) + "}");
      continue;
    }
    if (OrderingImbalance(ConstructOptimalChained(d), gen.graph) !=
        MinImbalanceChained(spec)) {
      r.Fail("ordering value for spec {" + FormatChainSpec(spec) + "}");
    }
  }
  if (r.pass) {
    r.detail = "100 specs, up to " + std::to_string(largest) + " vertices";
  }
  return r;
}

Outcome Intervals() {
  Outcome r;
  std::mt19937_64 rng(10);
  for (int i = 0; i < 50; ++i) {
    const ChainSpec spec = testing::RandomChainSpec(rng, 6, 3);
    const GeneratedChain gen = GenerateChained(spec);
    const auto violations =
        IntervalRepViolations(IntervalRepresentation(gen.decomposition),
                              gen.graph, ComputeBipartition(gen.graph));
    if (!violations.empty()) r.Fail(violations.front());
  }
  if (r.pass) r.detail = "50 chains, 0 violations";
  return r;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace imbalance

int main() {
  using imbalance::Criterion;
  const Criterion criteria[] = {
      {"complete bigraph formula vs exhaustive search, a+b <= 8",
       imbalance::ExhaustiveComplete},
      {"constructed complete orderings, 1 <= a,b <= 40",
       imbalance::ConstructorComplete},
      {"verifier agrees with optimality, a+b <= 7",
       imbalance::VerifierAgreement},
      {"shifts preserve optima; odd/odd median has imbalance 1",
       imbalance::ShiftsAndMedian},
      {"chained closed form vs exhaustive search, <= 9 vertices",
       imbalance::ExhaustiveChained},
      {"11-vertex chained example", imbalance::ElevenVertexExample},
      {"overlap inequality, two components, <= 8 vertices",
       imbalance::OverlapInequality},
      {"arbitrary precision solve complete --parts",
       imbalance::ArbitraryPrecision},
      {"generate/decompose round trip and constructed values",
       imbalance::RoundTrip},
      {"interval representation checks", imbalance::Intervals},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    imbalance::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.Fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (!outcome.pass) ++failures;
    std::printf("%s %2d  %s: %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL",
                index, c.name, outcome.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
