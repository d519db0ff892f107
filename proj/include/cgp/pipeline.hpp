// Copyright 2026 The cgpresolve Authors
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

// End-to-end driver: detection, knapsack clique detection, graph build,
// extension, merging and triage under the resource limits, plus the
// shifted geometric mean used for timing reports.

#ifndef CGP_PIPELINE_HPP_
#define CGP_PIPELINE_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgp/cut_pool.hpp"
#include "cgp/model.hpp"

namespace cgp {

struct Limits {
  std::size_t max_knapsack_vars = 5000;      // larger knapsacks are skipped
  std::size_t max_clique_sample = 1000;      // longer cliques are sampled
  std::size_t max_graph_nnz = 25'000'000;    // cumulative pair expansions
  std::size_t per_thread_ext_nnz = 1'250'000;  // extension literals per worker
  std::size_t max_merge_cliques = 100'000;   // merge is skipped above this
  double time_limit_s = 120.0;

  /// Throws std::invalid_argument unless every limit is strictly positive.
  void validate() const;
  /// Overrides the defaults with the keys present in a JSON object. Unknown
  /// keys and non-positive values throw std::invalid_argument.
  static Limits from_json(std::string_view text);
  std::string to_json() const;
};

struct LimitFlags {
  bool knapsack_vars = false;
  bool clique_sample = false;
  bool graph_nnz = false;
  bool extension_nnz = false;
  bool merge_cliques = false;
  bool time_limit = false;
};

struct TagCounts {
  std::size_t total = 0;
  std::size_t added = 0;
  std::size_t user = 0;
};

struct RunStats {
  std::size_t threads = 1;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> stage_seconds;
  std::array<TagCounts, kNumOriginTags> tags{};
  LimitFlags flags;

  std::size_t rows_in = 0;
  std::size_t cols_in = 0;
  std::size_t nnz_in = 0;
  std::size_t binaries = 0;
  std::size_t rows_post_detect = 0;
  std::size_t nnz_post_detect = 0;
  std::size_t rows_out = 0;
  std::size_t fixings = 0;
  std::size_t osp = 0;
  std::size_t isp = 0;
  std::size_t ck = 0;
  std::size_t ck_skipped = 0;
  std::size_t org_cliques = 0;
  std::size_t other_cliques = 0;
  std::size_t graph_edges = 0;
  std::size_t pair_expansions = 0;
  std::size_t cliques_sampled = 0;
  std::size_t cliques_skipped = 0;
  std::size_t extension_inputs = 0;
  std::size_t extension_passed_through = 0;
  std::size_t extension_pair_checks = 0;
  std::size_t merge_inputs = 0;
  std::size_t merge_removed = 0;
  std::size_t budget_demoted = 0;

  TagCounts& tag(OriginTag t) { return tags[static_cast<std::size_t>(t)]; }
  const TagCounts& tag(OriginTag t) const { return tags[static_cast<std::size_t>(t)]; }
  std::string to_json() const;
};

struct PipelineResult {
  MipModel model;  // post-detect model plus the added clique rows
  CutPool pool;
  std::string model_mps;
  std::string cuts;
  RunStats stats;
};

/// Throws InfeasibleError when detection proves the model infeasible. When
/// the time limit expires the original model is passed through with an
/// empty pool and flags.time_limit set.
PipelineResult run_pipeline(const MipModel& model, const Limits& limits,
                            std::size_t k, std::uint64_t seed);
PipelineResult run_pipeline(const std::filesystem::path& model_path,
                            const Limits& limits, std::size_t k,
                            std::uint64_t seed);

/// exp(mean(log(t + shift))) - shift. Throws std::invalid_argument for an
/// empty list or negative inputs.
double shifted_geomean(std::span<const double> times, double shift);

}  // namespace cgp

#endif  // CGP_PIPELINE_HPP_
