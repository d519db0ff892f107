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

// Synthetic scaling benchmark. Each of m cliques draws every one of the n_B
// positive literals independently with probability p; cliques with fewer
// than two members are dropped. Graph build, extension and merge are timed
// at each thread count and reported as shifted geometric means.

#ifndef CGP_BENCH_HPP_
#define CGP_BENCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cgp/clique.hpp"
#include "cgp/pipeline.hpp"

namespace cgp {

struct BenchConfig {
  std::size_t num_binaries = 2000;
  std::size_t num_cliques = 5000;
  double membership_prob = 0.01;
  std::vector<std::size_t> threads = {1, 2, 4, 8};
  std::size_t repetitions = 3;
  std::uint64_t seed = 1;
  double shift_s = 0.0;
  /// Drop thread counts above std::thread::hardware_concurrency().
  bool cap_to_host = true;

  /// Throws std::invalid_argument unless 0 < p < 1 and the lists are usable.
  void validate() const;
};

struct GeneratedCliques {
  std::vector<Clique> cliques;
  std::size_t dropped = 0;
};

GeneratedCliques bernoulli_cliques(std::size_t num_binaries, std::size_t num_cliques,
                                   double p, std::uint64_t seed);

struct BenchRow {
  std::size_t k = 1;
  std::string stage;
  double shifted_geomean_s = 0.0;
  double speedup = 1.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::size_t cliques_generated = 0;
  std::size_t cliques_dropped = 0;
  std::size_t pair_expansions = 0;
  std::size_t extension_pair_checks = 0;
  std::size_t merge_subset_scans = 0;
  std::size_t graph_edges = 0;
  std::size_t merged_kept = 0;
  bool outputs_equal = true;
  bool extension_budget_hit = false;
  unsigned host_threads = 0;
  std::vector<std::size_t> capped;  // requested counts that were not run

  /// "k,stage,shifted_geomean_s,speedup" header plus one line per row.
  std::string to_csv() const;
  /// Time of `stage` at `k`, or a negative value if absent.
  double seconds(std::size_t k, const std::string& stage) const;
  double speedup(std::size_t k, const std::string& stage) const;
};

BenchReport run_bench(const BenchConfig& cfg, const Limits& limits);

}  // namespace cgp

#endif  // CGP_BENCH_HPP_
