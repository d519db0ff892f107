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

#include "cgp/bench.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <thread>

#include "cgp/clique_extension.hpp"
#include "cgp/clique_merge.hpp"
#include "cgp/conflict_graph.hpp"
#include "cgp/parallel.hpp"

namespace cgp {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::vector<Node>> sorted_sets(const std::vector<Clique>& cliques) {
  std::vector<std::vector<Node>> out;
  out.reserve(cliques.size());
  for (const auto& c : cliques) out.push_back(c.nodes);
  std::sort(out.begin(), out.end());
  return out;
}

struct Snapshot {
  ConflictGraph graph;
  std::vector<std::vector<Node>> longest;
  std::vector<std::vector<Node>> others;
  std::vector<std::vector<Node>> kept;
  bool operator==(const Snapshot&) const = default;
};

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

void BenchConfig::validate() const {
  if (!(membership_prob > 0.0 && membership_prob < 1.0))
    throw std::invalid_argument("membership probability must lie in (0, 1)");
  if (threads.empty()) throw std::invalid_argument("no thread counts given");
  for (std::size_t k : threads)
    if (k == 0) throw std::invalid_argument("thread counts must be >= 1");
  if (repetitions == 0) throw std::invalid_argument("repetitions must be >= 1");
  if (shift_s < 0.0) throw std::invalid_argument("shift must be >= 0");
}

GeneratedCliques bernoulli_cliques(std::size_t num_binaries, std::size_t num_cliques,
                                   double p, std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("membership probability must lie in (0, 1)");
  GeneratedCliques out;
  const double log_q = std::log1p(-p);
  for (std::size_t c = 0; c < num_cliques; ++c) {
    SplitMix64 rng(mix_seed(seed, c));
    std::vector<Node> nodes;
    // Geometric gaps between successive members.
    double pos = -1.0;
    for (;;) {
      const double u = 1.0 - rng.uniform();
      pos += 1.0 + std::floor(std::log(u) / log_q);
      if (pos >= static_cast<double>(num_binaries)) break;
      nodes.push_back(static_cast<Node>(pos));
    }
    if (nodes.size() < 2) {
      ++out.dropped;
      continue;
    }
    out.cliques.push_back(Clique{std::move(nodes), CliqueSource::kOsp});
  }
  return out;
}

std::string BenchReport::to_csv() const {
  std::string out = "k,stage,shifted_geomean_s,speedup\n";
  for (const auto& r : rows) {
    out += std::to_string(r.k) + ',' + r.stage + ',' + format_double(r.shifted_geomean_s) +
           ',' + format_double(r.speedup) + '\n';
  }
  return out;
}

double BenchReport::seconds(std::size_t k, const std::string& stage) const {
  for (const auto& r : rows)
    if (r.k == k && r.stage == stage) return r.shifted_geomean_s;
  return -1.0;
}

double BenchReport::speedup(std::size_t k, const std::string& stage) const {
  for (const auto& r : rows)
    if (r.k == k && r.stage == stage) return r.speedup;
  return -1.0;
}

BenchReport run_bench(const BenchConfig& cfg, const Limits& limits) {
  cfg.validate();
  limits.validate();
  BenchReport report;
  report.host_threads = std::thread::hardware_concurrency();

  std::vector<std::size_t> ks;
  for (std::size_t k : cfg.threads) {
    if (cfg.cap_to_host && report.host_threads > 0 && k > report.host_threads &&
        k != 1) {
      report.capped.push_back(k);
      continue;
    }
    if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
  }
  if (std::find(ks.begin(), ks.end(), std::size_t{1}) == ks.end()) ks.push_back(1);
  std::sort(ks.begin(), ks.end());

  const GeneratedCliques gen =
      bernoulli_cliques(cfg.num_binaries, cfg.num_cliques, cfg.membership_prob, cfg.seed);
  report.cliques_generated = gen.cliques.size();
  report.cliques_dropped = gen.dropped;

  GraphBuildOptions gopt;
  gopt.max_clique_sample = limits.max_clique_sample;
  gopt.max_pair_expansions = limits.max_graph_nnz;
  gopt.seed = cfg.seed;
  ExtensionOptions eopt;
  eopt.per_worker_nnz_budget = limits.per_thread_ext_nnz;

  static const char* const kStages[] = {"graph", "extension", "merge", "total"};
  std::vector<std::array<std::vector<double>, 4>> times(ks.size());
  std::optional<Snapshot> reference;

  for (std::size_t ki = 0; ki < ks.size(); ++ki) {
    const std::size_t k = ks[ki];
    for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
      auto start = std::chrono::steady_clock::now();
      GraphBuildStats gstats;
      ConflictGraph graph = build_graph_parallel(gen.cliques, cfg.num_binaries, k,
                                                 cfg.seed, gopt, &gstats);
      const double t_graph = seconds_since(start);

      start = std::chrono::steady_clock::now();
      ExtensionBatch ext = extend_parallel(gen.cliques, graph, k, cfg.seed, eopt);
      const double t_ext = seconds_since(start);

      std::vector<Clique> pool = ext.longest;
      pool.insert(pool.end(), ext.others.begin(), ext.others.end());
      start = std::chrono::steady_clock::now();
      MergeOutcome merged = merge_parallel(pool, k);
      const double t_merge = seconds_since(start);

      times[ki][0].push_back(t_graph);
      times[ki][1].push_back(t_ext);
      times[ki][2].push_back(t_merge);
      times[ki][3].push_back(t_graph + t_ext + t_merge);

      report.extension_budget_hit = report.extension_budget_hit || ext.budget_hit;
      if (rep > 0) continue;
      Snapshot snap{std::move(graph), sorted_sets(ext.longest), sorted_sets(ext.others),
                    sorted_sets(merged.kept)};
      if (!reference) {
        report.pair_expansions = gstats.pair_expansions;
        report.extension_pair_checks = ext.pair_checks;
        report.merge_subset_scans = merged.subset_scans;
        report.graph_edges = snap.graph.num_edges();
        report.merged_kept = merged.kept.size();
        reference = std::move(snap);
      } else if (!(snap == *reference)) {
        report.outputs_equal = false;
      }
    }
  }

  std::array<double, 4> base{};
  for (std::size_t s = 0; s < 4; ++s) base[s] = shifted_geomean(times[0][s], cfg.shift_s);
  for (std::size_t ki = 0; ki < ks.size(); ++ki) {
    for (std::size_t s = 0; s < 4; ++s) {
      const double t = shifted_geomean(times[ki][s], cfg.shift_s);
      report.rows.push_back({ks[ki], kStages[s], t, t > 0.0 ? base[s] / t : 0.0});
    }
  }
  return report;
}

}  // namespace cgp
