// Copyright 2026 The densematch Authors
//
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

// Command-line front end: gen, extract, oracle, experiment.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "densematch/edge_list.h"
#include "densematch/error.h"
#include "densematch/extractor.h"
#include "densematch/generators.h"
#include "densematch/graph.h"
#include "densematch/harness.h"
#include "densematch/oracles.h"
#include "json.hpp"

namespace {

using densematch::Edge;
using densematch::Graph;
using densematch::Matching;
using nlohmann::json;

json PairsToJson(const Matching& m) {
  json out = json::array();
  for (const Edge& e : m.edges) out.push_back({e.u, e.v});
  return out;
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw densematch::InputError("cannot write " + path);
  out << text;
}

json ExtractionToJson(const densematch::ExtractionResult& r) {
  json out;
  out["input_vertices"] = r.input_vertices;
  out["deleted_vertex"] = r.deleted_vertex ? json(*r.deleted_vertex) : json();
  out["vertices_used"] = r.vertices_used;
  out["route"] = r.route == densematch::ExtractionRoute::kSampled
                     ? "sampled"
                     : "connected-shortcut";
  if (r.params) {
    const auto& p = *r.params;
    out["params"] = {{"c_prime", p.c_prime}, {"t", p.t},
                     {"ell", p.ell},         {"k", p.k},
                     {"q", p.q},             {"p", p.p},
                     {"threshold", p.threshold}, {"bound", p.bound}};
  } else {
    out["params"] = nullptr;
  }
  json reports = json::array();
  for (const auto& t : r.reports) {
    reports.push_back({{"trial", t.trial},
                       {"seed", t.seed},
                       {"rejection_attempts", t.rejection_attempts},
                       {"intersection_size", t.intersection_size},
                       {"nonadjacent_pairs", t.nonadjacent_pairs},
                       {"bound", t.bound},
                       {"within_bound", t.within_bound}});
  }
  out["reports"] = std::move(reports);
  out["failed_trials"] = r.failed_trials;
  out["total_attempts"] = r.total_attempts;
  out["best"] = {{"trial", r.best_trial ? json(*r.best_trial) : json()},
                 {"nonadjacent_pairs", r.best_nonadjacent},
                 {"edges", PairsToJson(r.best)}};
  return out;
}

std::vector<std::size_t> ParseParts(const std::string& text) {
  std::vector<std::size_t> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(std::stoul(item));
  if (parts.size() != 5) {
    throw densematch::InputError("--parts needs five comma-separated sizes");
  }
  return parts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dense matchings in graphs with independence number at most 2"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  std::string family = "rtf";
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_parts;
  std::string gen_out = "-";
  gen->add_option("--family", family, "two-cliques | rtf | c5 | complete")
      ->check(CLI::IsMember({"two-cliques", "rtf", "c5", "complete"}));
  gen->add_option("--n", gen_n,
                  "vertex count; two-cliques rounds odd counts up");
  gen->add_option("--seed", gen_seed, "seed for rtf");
  gen->add_option("--parts", gen_parts, "five part sizes a,b,c,d,e for c5");
  gen->add_option("--out", gen_out, "output file, - for stdout");

  // extract
  auto* extract = app.add_subcommand("extract", "Run the dense matching extractor");
  std::string graph_path;
  double c = 0;
  std::size_t t = 0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool no_shortcut = false;
  std::string extract_out = "-";
  extract->add_option("--graph", graph_path, "edge-list file")->required();
  extract->add_option("--c", c, "real c > 4 with n >= c t")->required();
  extract->add_option("--t", t, "matching size")->required();
  extract->add_option("--trials", trials, "independent trials");
  extract->add_option("--seed", seed, "master seed");
  extract->add_option("--threads", threads, "worker threads");
  extract->add_flag("--no-shortcut", no_shortcut,
                    "always sample, never return a connected matching found "
                    "by the clique construction or exact search");
  extract->add_option("--out", extract_out, "JSON output file, - for stdout");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Run an exact oracle");
  std::string oracle_graph;
  std::string op;
  std::size_t oracle_t = 0;
  std::optional<std::size_t> limit;
  oracle->add_option("--graph", oracle_graph, "edge-list file")->required();
  oracle->add_option("--op", op, "cm | omega | badquads | minmatch | lemma5")
      ->required()
      ->check(CLI::IsMember({"cm", "omega", "badquads", "minmatch", "lemma5"}));
  oracle->add_option("--t", oracle_t, "matching size for minmatch/lemma5");
  oracle->add_option("--limit", limit, "override the vertex limit");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run experiment configs");
  std::string config_path;
  std::string exp_family;
  std::optional<std::size_t> exp_n, exp_t, exp_trials;
  std::optional<double> exp_c;
  std::optional<std::uint64_t> exp_seed, exp_graph_seed;
  std::optional<unsigned> exp_threads;
  unsigned parallel = 1;
  bool timing = false;
  bool exp_no_shortcut = false;
  std::string out_csv, out_json;
  experiment->add_option("--config", config_path,
                         "JSON object or array of objects");
  experiment->add_option("--family", exp_family, "graph family")
      ->check(CLI::IsMember({"two-cliques", "rtf", "c5", "complete"}));
  experiment->add_option("--n", exp_n, "vertex count (default ceil(c t))");
  experiment->add_option("--graph-seed", exp_graph_seed, "rtf generator seed");
  experiment->add_option("--c", exp_c, "real c > 4");
  experiment->add_option("--t", exp_t, "matching size");
  experiment->add_option("--trials", exp_trials, "trials per config");
  experiment->add_option("--seed", exp_seed, "master seed");
  experiment->add_option("--threads", exp_threads, "trial threads per config");
  experiment->add_flag("--no-shortcut", exp_no_shortcut,
                       "sample every config, as with extract --no-shortcut");
  experiment->add_option("--parallel", parallel, "configs run at once");
  experiment->add_flag("--timing", timing, "fill in wall-clock columns");
  experiment->add_option("--out-csv", out_csv, "CSV output file");
  experiment->add_option("--out-json", out_json, "JSON output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      Graph g;
      if (family == "two-cliques") {
        g = densematch::TwoCliques((gen_n + 1) / 2);
      } else if (family == "rtf") {
        g = densematch::ComplementOfRandomTriangleFree(gen_n, gen_seed);
      } else if (family == "c5") {
        const auto parts = ParseParts(gen_parts);
        g = densematch::C5BlowupComplement(
            {parts[0], parts[1], parts[2], parts[3], parts[4]});
      } else {
        g = densematch::CompleteGraph(gen_n);
      }
      WriteText(gen_out, densematch::EdgeListString(g));
      return 0;
    }

    if (extract->parsed()) {
      const Graph g = densematch::ReadEdgeListFile(graph_path);
      densematch::ExtractOptions options;
      options.shortcut = !no_shortcut;
      options.threads = threads;
      const auto result =
          densematch::ExtractBest(g, c, t, trials, seed, options);
      WriteText(extract_out, ExtractionToJson(result).dump(2) + "\n");
      return 0;
    }

    if (oracle->parsed()) {
      const Graph g = densematch::ReadEdgeListFile(oracle_graph);
      json out = {{"op", op}, {"n", g.num_vertices()}, {"m", g.num_edges()}};
      if (op == "cm") {
        out["cm"] = densematch::ConnectedMatchingNumber(
            g, limit.value_or(densematch::kConnectedMatchingLimit));
      } else if (op == "omega") {
        out["omega"] = densematch::CliqueNumber(
            g, limit.value_or(densematch::kCliqueLimit));
      } else if (op == "badquads") {
        const auto q = densematch::CountBadQuadruples(g);
        out["count"] = q.count;
        out["non_edges"] = q.non_edges;
        out["k"] = q.k;
        out["bound"] = q.bound;
        out["bound_applies"] = q.bound_applies;
      } else if (op == "minmatch") {
        const auto best = densematch::MinNonadjacentMatchingExact(
            g, oracle_t, limit.value_or(densematch::kMinMatchingLimit));
        out["t"] = oracle_t;
        out["nonadjacent_pairs"] = best.nonadjacent;
        out["edges"] = PairsToJson(best.matching);
      } else {
        const auto audit = densematch::AuditCliqueBound(
            g, oracle_t, limit.value_or(densematch::kConnectedMatchingLimit));
        out["t"] = oracle_t;
        out["hypotheses_hold"] = audit.hypotheses_hold;
        out["holds"] = audit.holds;
        out["cm"] = audit.cm ? json(*audit.cm) : json();
        out["omega"] = audit.omega ? json(*audit.omega) : json();
      }
      std::cout << out.dump() << "\n";
      return 0;
    }

    // experiment
    std::vector<densematch::ExperimentConfig> grid;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw densematch::InputError("cannot open " + config_path);
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::exception& e) {
        throw densematch::InputError(config_path + ": " + e.what());
      }
      grid = densematch::ConfigsFromJson(doc);
    } else {
      grid.emplace_back();
    }
    for (auto& cfg : grid) {
      if (!exp_family.empty()) cfg.family = densematch::ParseFamily(exp_family);
      if (exp_n) cfg.n = *exp_n;
      if (exp_graph_seed) cfg.graph_seed = *exp_graph_seed;
      if (exp_c) cfg.c = *exp_c;
      if (exp_t) cfg.t = *exp_t;
      if (exp_trials) cfg.trials = *exp_trials;
      if (exp_seed) cfg.master_seed = *exp_seed;
      if (exp_threads) cfg.threads = *exp_threads;
      if (exp_no_shortcut) cfg.shortcut = false;
    }
    const auto rows = densematch::Sweep(grid, parallel);
    const std::string csv = densematch::SummariesToCsv(rows, timing);
    json doc = json::array();
    for (const auto& row : rows) {
      doc.push_back(densematch::SummaryToJson(row, timing));
    }
    if (!out_csv.empty()) WriteText(out_csv, csv);
    if (!out_json.empty()) WriteText(out_json, doc.dump(2) + "\n");
    if (out_csv.empty() && out_json.empty()) std::cout << csv;
    bool any_error = false;
    for (const auto& row : rows) {
      if (!row.error.empty()) {
        std::cerr << "error: " << row.error << "\n";
        any_error = true;
      }
    }
    return any_error ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
