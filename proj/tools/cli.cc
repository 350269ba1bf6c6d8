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

#include "cli.h"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "imbalance/chained.h"
#include "imbalance/complete.h"
#include "imbalance/errors.h"
#include "imbalance/graph.h"
#include "imbalance/oracle.h"

namespace imbalance::cli {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph LoadGraph(const std::string& path) { return ParseEdgeList(ReadFile(path)); }

Ordering LoadOrdering(const std::string& path) {
  return ParseOrdering(ReadFile(path));
}

// Bipartition of a graph that must be complete bipartite with both parts
// non-empty.
Bipartition RequireComplete(const Graph& g) {
  const Bipartition b = ComputeBipartition(g);
  if (b.x_part.empty() || b.y_part.empty()) {
    throw NotComplete("graph has an empty part");
  }
  if (!IsCompleteBipartite(g, b)) {
    throw NotComplete("graph is not complete bipartite");
  }
  return b;
}

std::size_t ParseSize(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(0, "expected a natural number, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw ParseError(0, "number out of range: '" + text + "'");
  }
}

std::string GenerateComplete(std::size_t nx, std::size_t ny) {
  if (nx == 0 || ny == 0) throw NotComplete("part sizes must be positive");
  Bipartition b;
  for (std::size_t i = 1; i <= nx; ++i) b.x_part.push_back("x" + std::to_string(i));
  for (std::size_t j = 1; j <= ny; ++j) b.y_part.push_back("y" + std::to_string(j));
  std::sort(b.x_part.begin(), b.x_part.end());
  std::sort(b.y_part.begin(), b.y_part.end());
  return FormatEdgeList(CompleteBipartiteGraph(b));
}

std::string Commented(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out += "# " + line + "\n";
  return out;
}

struct Options {
  std::string graph;
  std::string ordering;
  bool verbose = false;
  std::vector<std::string> parts;
  std::size_t max_n = kDefaultOracleCap;
  bool enumerate = false;
  std::vector<std::string> gen_parts;
  std::string spec;
  std::optional<std::uint64_t> seed;
  std::string report;
};

int Dispatch(CLI::App& app, const Options& opt, std::ostream& out) {
  auto ran = [&](const char* path) {
    CLI::App* sub = &app;
    std::istringstream words(path);
    for (std::string w; words >> w;) sub = sub->get_subcommand(w);
    return sub->parsed();
  };

  if (ran("eval")) {
    const Graph g = LoadGraph(opt.graph);
    const Ordering o = LoadOrdering(opt.ordering);
    const std::vector<std::uint64_t> per = VertexImbalances(o, g);
    out << OrderingImbalance(o, g) << "\n";
    if (opt.verbose) {
      for (std::size_t i = 0; i < o.size(); ++i) {
        out << o[i] << "\t" << per[i] << "\n";
      }
    }
  } else if (ran("solve complete")) {
    if (!opt.parts.empty()) {
      if (!opt.graph.empty()) {
        throw ParseError(0, "give either a graph or --parts, not both");
      }
      const PartSizes sizes = PartSizes::FromDecimal(opt.parts[0], opt.parts[1]);
      if (sizes.nx == 0 || sizes.ny == 0) {
        throw NotComplete("part sizes must be positive");
      }
      out << MinImbalanceFormula(sizes).str() << "\n";
    } else {
      if (opt.graph.empty()) throw ParseError(0, "need a graph or --parts");
      const Graph g = LoadGraph(opt.graph);
      const Bipartition b = RequireComplete(g);
      out << MinImbalanceFormula(b.x_part.size(), b.y_part.size()) << "\n"
          << FormatOrdering(ConstructOptimalComplete(b)) << "\n";
    }
  } else if (ran("solve chained")) {
    const ChainDecomposition d = Decompose(LoadGraph(opt.graph));
    const Ordering o = ConstructOptimalChained(d);
    out << MinImbalanceChained(d) << "\n" << FormatOrdering(o) << "\n";
  } else if (ran("verify")) {
    const Graph g = LoadGraph(opt.graph);
    const Bipartition b = RequireComplete(g);
    const OptimalityVerdict v = VerifyOptimalComplete(LoadOrdering(opt.ordering), b);
    if (v.optimal) {
      out << "optimal\n";
    } else {
      out << "not-optimal property=" << PropertyName(*v.failed_property)
          << " achieved=" << v.achieved << " minimum=" << v.minimum << "\n";
    }
  } else if (ran("decompose")) {
    out << FormatDecomposition(Decompose(LoadGraph(opt.graph)));
  } else if (ran("oracle")) {
    const Graph g = LoadGraph(opt.graph);
    const OracleOptions options{.cap = opt.max_n};
    const OracleResult r = BruteForceMin(g, options);
    out << r.minimum << "\n" << FormatOrdering(r.witness) << "\n";
    if (opt.enumerate) out << "optima " << CountOptima(g, options) << "\n";
  } else if (ran("gen complete")) {
    out << GenerateComplete(ParseSize(opt.gen_parts[0]),
                            ParseSize(opt.gen_parts[1]));
  } else if (ran("gen chained")) {
    const ChainSpec spec = ParseChainSpec(ReadFile(opt.spec));
    const GeneratedChain gen = GenerateChained(spec, {.shuffle_seed = opt.seed});
    const std::string report = FormatDecomposition(gen.decomposition);
    if (!opt.report.empty()) {
      std::ofstream file(opt.report);
      if (!(file << report)) {
        throw ParseError(0, "cannot write '" + opt.report + "'");
      }
    }
    out << Commented(report) << FormatEdgeList(gen.graph);
  } else {
    throw CLI::CallForHelp();
  }
  return kOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options opt;
  CLI::App app{"Minimum imbalance orderings of complete and chained bigraphs",
               "imbalance"};
  app.require_subcommand(1);

  CLI::App* eval = app.add_subcommand("eval", "Imbalance of an ordering");
  eval->add_option("graph", opt.graph, "Edge list file")->required();
  eval->add_option("ordering", opt.ordering, "Ordering file")->required();
  eval->add_flag("-v,--verbose", opt.verbose, "Per-vertex table");

  CLI::App* solve = app.add_subcommand("solve", "Minimum imbalance");
  solve->require_subcommand(1);
  CLI::App* complete = solve->add_subcommand("complete", "Complete bigraph");
  complete->add_option("graph", opt.graph, "Edge list file");
  complete->add_option("--parts", opt.parts, "Part sizes NX NY")
      ->expected(2);
  CLI::App* chained = solve->add_subcommand("chained", "Chained bigraph");
  chained->add_option("graph", opt.graph, "Edge list file")->required();

  CLI::App* verify =
      app.add_subcommand("verify", "Check an ordering of a complete bigraph");
  verify->add_option("graph", opt.graph, "Edge list file")->required();
  verify->add_option("ordering", opt.ordering, "Ordering file")->required();

  CLI::App* decompose =
      app.add_subcommand("decompose", "Chain of maximal bicliques");
  decompose->add_option("graph", opt.graph, "Edge list file")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive search");
  oracle->add_option("graph", opt.graph, "Edge list file")->required();
  oracle->add_option("--max-n", opt.max_n, "Largest accepted vertex count");
  oracle->add_flag("--enumerate", opt.enumerate, "Also count the optima");

  CLI::App* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  CLI::App* gen_complete = gen->add_subcommand("complete", "K_{NX,NY}");
  gen_complete->add_option("sizes", opt.gen_parts, "NX NY")
      ->expected(2)
      ->required();
  CLI::App* gen_chained = gen->add_subcommand("chained", "From a chain spec");
  gen_chained->add_option("--spec", opt.spec, "Chain spec file")->required();
  gen_chained->add_option("--shuffle-names", opt.seed, "Rename with this seed");
  gen_chained->add_option("--report", opt.report, "Write the decomposition");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return Dispatch(app, opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kSizeCap;
  } catch (const ConstructionInvariantViolated& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    // NotBipartite, NotComplete, NotConnected, NotChained, SpecInvalid.
    err << "error: " << e.what() << "\n";
    return kStructural;
  }
}

}  // namespace imbalance::cli
