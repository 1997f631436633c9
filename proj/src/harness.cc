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

#include "densematch/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>

#include <fmt/format.h>

#include "densematch/error.h"
#include "densematch/generators.h"

namespace densematch {
namespace {

std::string ConfigLabel(const ExperimentConfig& cfg) {
  return fmt::format("[{} {} c={} t={} trials={} seed={}] ",
                     FamilyName(cfg.family), FamilyParams(cfg), cfg.c, cfg.t,
                     cfg.trials, cfg.master_seed);
}

std::size_t TargetVertices(const ExperimentConfig& cfg) {
  if (cfg.n != 0) return cfg.n;
  return static_cast<std::size_t>(
      std::ceil(cfg.c * static_cast<double>(cfg.t) - 1e-9));
}

double Median(std::vector<std::size_t> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return static_cast<double>(values[mid]);
  return (static_cast<double>(values[mid - 1]) +
          static_cast<double>(values[mid])) /
         2;
}

std::string CsvEscape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

template <typename T>
std::string Cell(const std::optional<T>& v) {
  return v ? fmt::format("{}", *v) : std::string();
}

ExperimentSummary Summarize(const ExperimentConfig& cfg, std::size_t n,
                            const ExtractionResult& result) {
  ExperimentSummary s;
  s.config = cfg;
  s.n = n;
  s.params = result.params;
  s.route = result.route;
  s.asymptotic_density = AsymptoticDensity(cfg.c);
  if (result.params) {
    s.bound = result.params->bound;
    s.bound_density = BoundDensity(result.params->bound, cfg.t);
  }
  s.best = result.best_nonadjacent;
  s.failed_trials = result.failed_trials;
  if (!result.reports.empty()) {
    std::vector<std::size_t> values;
    double total = 0;
    for (const TrialReport& r : result.reports) {
      values.push_back(r.nonadjacent_pairs);
      total += static_cast<double>(r.nonadjacent_pairs);
    }
    s.mean = total / static_cast<double>(values.size());
    s.max = *std::max_element(values.begin(), values.end());
    s.median = Median(std::move(values));
    s.acceptance_rate = static_cast<double>(result.reports.size()) /
                        static_cast<double>(result.total_attempts);
  }
  return s;
}

}  // namespace

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kTwoCliques:
      return "two-cliques";
    case Family::kRandomTriangleFree:
      return "rtf";
    case Family::kC5Blowup:
      return "c5";
    case Family::kComplete:
      return "complete";
  }
  return "unknown";
}

Family ParseFamily(std::string_view name) {
  for (Family f : {Family::kTwoCliques, Family::kRandomTriangleFree,
                   Family::kC5Blowup, Family::kComplete}) {
    if (FamilyName(f) == name) return f;
  }
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

void ValidateConfig(const ExperimentConfig& cfg) {
  if (!(cfg.c > 4)) throw InputError(fmt::format("c = {} must exceed 4", cfg.c));
  if (cfg.t == 0) throw InputError("t must be at least 1");
  if (cfg.trials == 0) throw InputError("trials must be at least 1");
}

Graph BuildFamilyGraph(const ExperimentConfig& cfg) {
  switch (cfg.family) {
    case Family::kTwoCliques:
      return TwoCliques((TargetVertices(cfg) + 1) / 2);
    case Family::kRandomTriangleFree:
      return ComplementOfRandomTriangleFree(TargetVertices(cfg),
                                            cfg.graph_seed);
    case Family::kC5Blowup:
      return C5BlowupComplement(cfg.parts);
    case Family::kComplete:
      return CompleteGraph(TargetVertices(cfg));
  }
  throw InputError("unknown graph family");
}

std::string FamilyParams(const ExperimentConfig& cfg) {
  switch (cfg.family) {
    case Family::kTwoCliques:
      return fmt::format("s={}", (TargetVertices(cfg) + 1) / 2);
    case Family::kRandomTriangleFree:
      return fmt::format("n={};seed={}", TargetVertices(cfg), cfg.graph_seed);
    case Family::kC5Blowup:
      return fmt::format("parts={}", fmt::join(cfg.parts, ":"));
    case Family::kComplete:
      return fmt::format("n={}", TargetVertices(cfg));
  }
  return {};
}

double AsymptoticDensity(double c) { return 1 / (c * (c - 1) * (c - 1)); }

double BoundDensity(double bound, std::size_t t) {
  if (t < 2) return 0;
  const double tt = static_cast<double>(t);
  return bound / (tt * (tt - 1) / 2);
}

ExperimentSummary RunExperiment(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  auto annotate = [&](auto& e) {
    using E = std::decay_t<decltype(e)>;
    if constexpr (std::is_same_v<E, SamplingFailure>) {
      return SamplingFailure(ConfigLabel(cfg) + e.what(), e.attempts());
    } else {
      return E(ConfigLabel(cfg) + e.what());
    }
  };
  try {
    ValidateConfig(cfg);
    const Graph g = BuildFamilyGraph(cfg);
    ExtractOptions options;
    options.shortcut = cfg.shortcut;
    options.threads = cfg.threads;
    const ExtractionResult result =
        ExtractBest(g, cfg.c, cfg.t, cfg.trials, cfg.master_seed, options);
    ExperimentSummary s = Summarize(cfg, g.num_vertices(), result);
    s.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return s;
  } catch (const InputError& e) {
    throw annotate(e);
  } catch (const ParameterError& e) {
    throw annotate(e);
  } catch (const SamplingFailure& e) {
    throw annotate(e);
  }
}

std::vector<ExperimentSummary> Sweep(std::span<const ExperimentConfig> grid,
                                     unsigned parallel) {
  if (grid.empty()) throw InputError("sweep grid is empty");
  std::vector<ExperimentSummary> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        rows[i] = RunExperiment(grid[i]);
      } catch (const std::exception& e) {
        rows[i].config = grid[i];
        rows[i].asymptotic_density = AsymptoticDensity(grid[i].c);
        rows[i].error = e.what();
      }
    }
  };
  const unsigned threads = std::max(1U, parallel);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return rows;
}

std::string SummariesToCsv(std::span<const ExperimentSummary> rows,
                           bool include_timing) {
  std::string out =
      "family,params,n,c,c_prime,t,ell,k,p,q,threshold,trials,"
      "acceptance_rate,bound,bound_density,asymptotic_density,best,mean,"
      "median,seed,wall_ms,error\n";
  for (const ExperimentSummary& s : rows) {
    const ExperimentConfig& cfg = s.config;
    const bool ok = s.error.empty();
    const auto& p = s.params;
    auto field = [&](auto member) -> std::string {
      return p ? fmt::format("{}", (*p).*member) : std::string();
    };
    out += fmt::format(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
        FamilyName(cfg.family), CsvEscape(FamilyParams(cfg)),
        ok ? fmt::format("{}", s.n) : "", cfg.c,
        field(&ExtractionParams::c_prime), cfg.t,
        field(&ExtractionParams::ell), field(&ExtractionParams::k),
        field(&ExtractionParams::p), field(&ExtractionParams::q),
        field(&ExtractionParams::threshold), cfg.trials,
        Cell(s.acceptance_rate), Cell(s.bound), Cell(s.bound_density),
        s.asymptotic_density, ok ? fmt::format("{}", s.best) : "",
        ok ? fmt::format("{}", s.mean) : "",
        ok ? fmt::format("{}", s.median) : "", cfg.master_seed,
        include_timing && ok ? fmt::format("{:.3f}", s.wall_ms) : "",
        CsvEscape(s.error));
  }
  return out;
}

nlohmann::json SummaryToJson(const ExperimentSummary& s, bool include_timing) {
  using nlohmann::json;
  const ExperimentConfig& cfg = s.config;
  json config = {{"family", FamilyName(cfg.family)},
                 {"family_params", FamilyParams(cfg)},
                 {"c", cfg.c},
                 {"t", cfg.t},
                 {"trials", cfg.trials},
                 {"seed", cfg.master_seed},
                 {"shortcut", cfg.shortcut}};
  json out = {{"config", config}};
  if (!s.error.empty()) {
    out["error"] = s.error;
    return out;
  }
  out["n"] = s.n;
  out["route"] = s.route == ExtractionRoute::kSampled ? "sampled"
                                                      : "connected-shortcut";
  if (s.params) {
    const ExtractionParams& p = *s.params;
    out["params"] = {{"c_prime", p.c_prime}, {"t", p.t},
                     {"ell", p.ell},         {"k", p.k},
                     {"q", p.q},             {"p", p.p},
                     {"threshold", p.threshold}, {"bound", p.bound}};
  } else {
    out["params"] = nullptr;
  }
  out["bound_density"] = s.bound_density ? json(*s.bound_density) : json();
  out["asymptotic_density"] = s.asymptotic_density;
  out["best"] = s.best;
  out["mean"] = s.mean;
  out["median"] = s.median;
  out["max"] = s.max;
  out["acceptance_rate"] =
      s.acceptance_rate ? json(*s.acceptance_rate) : json();
  out["failed_trials"] = s.failed_trials;
  if (include_timing) out["wall_ms"] = s.wall_ms;
  return out;
}

std::vector<ExperimentConfig> ConfigsFromJson(const nlohmann::json& doc) {
  auto one = [](const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("experiment config must be an object");
    ExperimentConfig cfg;
    try {
      if (j.contains("family")) {
        cfg.family = ParseFamily(j.at("family").get<std::string>());
      }
      cfg.n = j.value("n", cfg.n);
      cfg.graph_seed = j.value("graph_seed", cfg.graph_seed);
      if (j.contains("parts")) {
        const auto parts = j.at("parts").get<std::vector<std::size_t>>();
        if (parts.size() != 5) throw InputError("parts needs five sizes");
        std::copy(parts.begin(), parts.end(), cfg.parts.begin());
      }
      cfg.c = j.value("c", cfg.c);
      cfg.t = j.value("t", cfg.t);
      cfg.trials = j.value("trials", cfg.trials);
      cfg.master_seed = j.value("seed", cfg.master_seed);
      cfg.threads = j.value("threads", cfg.threads);
      cfg.shortcut = j.value("shortcut", cfg.shortcut);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("bad experiment config: ") + e.what());
    }
    return cfg;
  };
  std::vector<ExperimentConfig> out;
  if (doc.is_array()) {
    for (const auto& j : doc) out.push_back(one(j));
  } else {
    out.push_back(one(doc));
  }
  if (out.empty()) throw InputError("experiment config list is empty");
  return out;
}

}  // namespace densematch
