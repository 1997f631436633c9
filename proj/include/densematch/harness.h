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

#ifndef DENSEMATCH_HARNESS_H_
#define DENSEMATCH_HARNESS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "densematch/extractor.h"
#include "densematch/graph.h"
#include "json.hpp"

namespace densematch {

enum class Family { kTwoCliques, kRandomTriangleFree, kC5Blowup, kComplete };

// "two-cliques", "rtf", "c5", "complete".
std::string_view FamilyName(Family family);
Family ParseFamily(std::string_view name);

struct ExperimentConfig {
  Family family = Family::kRandomTriangleFree;
  // Target vertex count; 0 means ceil(c t). Ignored for kC5Blowup, and
  // two-cliques rounds up to an even count.
  std::size_t n = 0;
  std::uint64_t graph_seed = 0;          // kRandomTriangleFree
  std::array<std::size_t, 5> parts{};    // kC5Blowup
  double c = 8;
  std::size_t t = 1;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  unsigned threads = 1;
  bool shortcut = true;
};

// Throws InputError unless c > 4, t >= 1, trials >= 1.
void ValidateConfig(const ExperimentConfig& cfg);

Graph BuildFamilyGraph(const ExperimentConfig& cfg);

// Family parameters as a compact "key=value;..." string.
std::string FamilyParams(const ExperimentConfig& cfg);

struct ExperimentSummary {
  ExperimentConfig config;
  std::size_t n = 0;  // vertices of the generated graph
  std::optional<ExtractionParams> params;
  ExtractionRoute route = ExtractionRoute::kSampled;
  std::optional<double> bound;
  std::optional<double> bound_density;  // bound / C(t, 2); 0 when t = 1
  double asymptotic_density = 0;        // 1 / (c (c - 1)^2)
  std::size_t best = 0;
  double mean = 0;
  double median = 0;
  std::size_t max = 0;
  std::optional<double> acceptance_rate;  // accepted / attempts
  std::size_t failed_trials = 0;
  double wall_ms = 0;
  std::string error;  // nonempty for a failed config in a sweep
};

double AsymptoticDensity(double c);

// bound / C(t, 2), defined as 0 for t = 1.
double BoundDensity(double bound, std::size_t t);

// Generates the graph, runs ExtractBest and reduces the trial reports.
// Errors propagate with the config prepended to the message.
ExperimentSummary RunExperiment(const ExperimentConfig& cfg);

// Runs every config, up to `parallel` at once, keeping grid order. A failing
// config yields a summary with `error` set instead of aborting the sweep.
std::vector<ExperimentSummary> Sweep(std::span<const ExperimentConfig> grid,
                                     unsigned parallel = 1);

// CSV with the fixed column order
//   family,params,n,c,c_prime,t,ell,k,p,q,threshold,trials,acceptance_rate,
//   bound,bound_density,asymptotic_density,best,mean,median,seed,wall_ms,error
// Missing values are empty cells. wall_ms is left empty unless
// `include_timing` is set, so that output is reproducible byte for byte.
std::string SummariesToCsv(std::span<const ExperimentSummary> rows,
                           bool include_timing = false);

nlohmann::json SummaryToJson(const ExperimentSummary& s,
                             bool include_timing = false);

// Accepts one config object or an array of them. Keys mirror the struct
// fields, with "family" as in FamilyName and "seed" for master_seed.
std::vector<ExperimentConfig> ConfigsFromJson(const nlohmann::json& doc);

}  // namespace densematch

#endif  // DENSEMATCH_HARNESS_H_
