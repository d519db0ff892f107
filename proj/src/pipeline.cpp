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

#include "cgp/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iterator>
#include <stdexcept>

#include "cgp/clique.hpp"
#include "cgp/clique_detection.hpp"
#include "cgp/clique_extension.hpp"
#include "cgp/clique_merge.hpp"
#include "cgp/conflict_graph.hpp"
#include "cgp/mps_io.hpp"
#include "cgp/parallel.hpp"
#include "cgp/presolve_detect.hpp"
#include "cgp/triage.hpp"
#include "json.hpp"

namespace cgp {

namespace {

using Json = nlohmann::ordered_json;

class StageClock {
 public:
  explicit StageClock(RunStats& stats) : stats_(stats) {}
  void lap(std::string name) {
    const auto now = std::chrono::steady_clock::now();
    stats_.stage_seconds.emplace_back(
        std::move(name), std::chrono::duration<double>(now - last_).count());
    last_ = now;
  }
  void total() {
    stats_.stage_seconds.emplace_back(
        "total", std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                     .count());
  }

 private:
  RunStats& stats_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
  std::chrono::steady_clock::time_point last_ = start_;
};

Clique pbc_clique(const PureBinaryConstraint& pbc, const BinaryIndex& index,
                  CliqueSource source) {
  std::vector<Node> nodes;
  nodes.reserve(pbc.terms.size());
  for (const auto& term : pbc.terms) nodes.push_back(index.node(term.literal));
  return make_clique(std::move(nodes), source);
}

OriginTag long_tag(CliqueSource source) {
  switch (source) {
    case CliqueSource::kOsp: return OriginTag::kOspLong;
    case CliqueSource::kIsp: return OriginTag::kIspLong;
    default: return OriginTag::kOrgLong;
  }
}

OriginTag other_tag(CliqueSource source) {
  switch (source) {
    case CliqueSource::kOsp: return OriginTag::kOspOther;
    case CliqueSource::kIsp: return OriginTag::kIspOther;
    default: return OriginTag::kOrgOther;
  }
}

void finish_output(PipelineResult& result) {
  result.model_mps = write_mps(result.model);
  result.cuts = export_cut_pool(result.pool);
  result.stats.rows_out = result.model.num_rows();
}

PipelineResult pass_through(const MipModel& model, RunStats stats) {
  PipelineResult result;
  result.model = model;
  result.stats = std::move(stats);
  result.stats.flags.time_limit = true;
  result.stats.tags = {};
  finish_output(result);
  return result;
}

PipelineResult run_stages(const MipModel& original, const Limits& limits,
                          std::size_t k, std::uint64_t seed,
                          const Deadline& deadline, RunStats& stats) {
  StageClock clock(stats);
  PipelineResult result;

  DetectionResult det = detect(original);
  stats.rows_post_detect = det.model.num_rows();
  stats.nnz_post_detect = det.model.nnz();
  stats.fixings = det.fixings.size();
  stats.osp = det.osp.size();
  stats.isp = det.isp.size();
  stats.ck = det.ck.size();
  clock.lap("detect");
  deadline.check();

  const BinaryIndex index(det.model);
  stats.binaries = index.num_binaries();

  std::vector<PureBinaryConstraint> knapsacks;
  knapsacks.reserve(det.ck.size());
  for (auto& pbc : det.ck) {
    if (pbc.terms.size() > limits.max_knapsack_vars) {
      ++stats.ck_skipped;
      continue;
    }
    knapsacks.push_back(std::move(pbc));
  }
  stats.flags.knapsack_vars = stats.ck_skipped > 0;
  const CliqueHarvest harvest =
      detect_cliques_parallel(knapsacks, index, k, seed, &deadline);
  stats.org_cliques = harvest.org.size();
  stats.other_cliques = harvest.other.size();
  clock.lap("clique_detection");
  deadline.check();

  std::vector<Clique> base;
  base.reserve(det.osp.size() + det.isp.size() + harvest.org.size());
  for (const auto& pbc : det.osp) base.push_back(pbc_clique(pbc, index, CliqueSource::kOsp));
  for (const auto& pbc : det.isp) base.push_back(pbc_clique(pbc, index, CliqueSource::kIsp));
  base.insert(base.end(), harvest.org.begin(), harvest.org.end());
  const std::vector<Clique> knapsack_other = harvest.materialize_other();

  std::vector<Clique> graph_input = base;
  graph_input.insert(graph_input.end(), knapsack_other.begin(), knapsack_other.end());
  GraphBuildOptions gopt;
  gopt.max_clique_sample = limits.max_clique_sample;
  gopt.max_pair_expansions = limits.max_graph_nnz;
  gopt.seed = seed;
  gopt.deadline = &deadline;
  GraphBuildStats gstats;
  const ConflictGraph graph =
      build_graph_parallel(graph_input, index.num_binaries(), k, seed, gopt, &gstats);
  stats.graph_edges = graph.num_edges();
  stats.pair_expansions = gstats.pair_expansions;
  stats.cliques_sampled = gstats.cliques_sampled;
  stats.cliques_skipped = gstats.cliques_skipped;
  stats.flags.clique_sample = gstats.sample_limit_hit();
  stats.flags.graph_nnz = gstats.pair_limit_hit();
  clock.lap("graph");
  deadline.check();

  // Cliques whose pairs did not all reach the graph are not cliques of it and
  // pass through unextended.
  std::vector<Clique> extendable;
  std::vector<Clique> unexpanded;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (gstats.status[i] == ExpansionStatus::kFull)
      extendable.push_back(base[i]);
    else
      unexpanded.push_back(base[i]);
  }
  stats.extension_inputs = extendable.size();
  ExtensionOptions eopt;
  eopt.per_worker_nnz_budget = limits.per_thread_ext_nnz;
  eopt.deadline = &deadline;
  ExtensionBatch ext = extend_parallel(extendable, graph, k, seed, eopt);
  stats.extension_passed_through = ext.passed_through + unexpanded.size();
  stats.extension_pair_checks = ext.pair_checks;
  stats.flags.extension_nnz = ext.budget_hit;
  clock.lap("extension");
  deadline.check();

  // Merge order puts long cliques first, osp before isp before org, so equal
  // sets keep the most useful tag.
  std::vector<TaggedClique> extended;
  for (const auto& c : ext.longest) extended.push_back({c, long_tag(c.source)});
  for (const auto& c : unexpanded) extended.push_back({c, long_tag(c.source)});
  for (const auto& c : ext.others) extended.push_back({c, other_tag(c.source)});
  std::stable_sort(extended.begin(), extended.end(),
                   [](const TaggedClique& a, const TaggedClique& b) {
                     const auto rank = [](OriginTag t) {
                       switch (t) {
                         case OriginTag::kOspLong: return 0;
                         case OriginTag::kIspLong: return 1;
                         case OriginTag::kOrgLong: return 2;
                         case OriginTag::kOspOther: return 3;
                         case OriginTag::kIspOther: return 4;
                         default: return 5;
                       }
                     };
                     return rank(a.origin) < rank(b.origin);
                   });
  stats.merge_inputs = extended.size();

  std::vector<TaggedClique> tagged;
  if (extended.size() > limits.max_merge_cliques) {
    stats.flags.merge_cliques = true;
    tagged = std::move(extended);
  } else {
    std::vector<Clique> plain;
    plain.reserve(extended.size());
    for (const auto& t : extended) plain.push_back(t.clique);
    const MergeOutcome merged = merge_parallel(plain, k, &deadline);
    stats.merge_removed = merged.removed_count;
    // A removed replacement hands its role to the clique that contains it, so
    // the deleted set packing row is still covered in the model.
    std::vector<OriginTag> tags(extended.size());
    for (std::size_t i = 0; i < extended.size(); ++i) tags[i] = extended[i].origin;
    for (std::size_t i = 0; i < extended.size(); ++i)
      if (merged.dominator[i] != kNoDominator && extended[i].origin == OriginTag::kOspLong)
        tags[merged.dominator[i]] = OriginTag::kOspLong;
    for (std::size_t s = 0; s < merged.kept.size(); ++s)
      tagged.push_back({merged.kept[s], tags[merged.kept_index[s]]});
  }
  clock.lap("merge");
  deadline.check();

  // Knapsack cliques beyond the original one are not extended: per knapsack
  // the first is tagged other_long and the rest other_other.
  std::vector<char> seen(knapsacks.size(), 0);
  for (std::size_t i = 0; i < harvest.other.size(); ++i) {
    const auto ks = harvest.other[i].knapsack;
    tagged.push_back({knapsack_other[i],
                      seen[ks] ? OriginTag::kOtherOther : OriginTag::kOtherLong});
    seen[ks] = 1;
  }
  std::sort(tagged.begin(), tagged.end(), [](const TaggedClique& a, const TaggedClique& b) {
    if (a.origin != b.origin) return a.origin < b.origin;
    return a.clique.nodes < b.clique.nodes;
  });

  const TriagePlan plan = triage(tagged, det.model);
  stats.budget_demoted = plan.budget_demoted;
  for (const auto& t : tagged) ++stats.tag(t.origin).total;
  for (const auto& t : plan.replacements) ++stats.tag(t.origin).added;
  for (const auto& t : plan.as_constraints) ++stats.tag(t.origin).added;
  for (const auto& t : plan.as_user_cuts) ++stats.tag(t.origin).user;

  result.pool = to_cut_pool(plan, index);
  result.model = std::move(det.model);
  append_clique_rows(result.model, result.pool);
  clock.lap("triage");
  deadline.check();
  clock.total();
  return result;
}

}  // namespace

void Limits::validate() const {
  if (max_knapsack_vars == 0 || max_clique_sample == 0 || max_graph_nnz == 0 ||
      per_thread_ext_nnz == 0 || max_merge_cliques == 0)
    throw std::invalid_argument("limits must be strictly positive");
  if (!(time_limit_s > 0.0)) throw std::invalid_argument("time_limit_s must be positive");
}

Limits Limits::from_json(std::string_view text) {
  const Json doc = Json::parse(text);
  if (!doc.is_object()) throw std::invalid_argument("limits file must hold a JSON object");
  Limits limits;
  for (const auto& [key, value] : doc.items()) {
    auto count = [&](std::size_t& field) {
      if (!value.is_number() || value.get<double>() <= 0.0 ||
          value.get<double>() != std::floor(value.get<double>()))
        throw std::invalid_argument("limit " + key + " must be a positive integer");
      field = static_cast<std::size_t>(value.get<double>());
    };
    if (key == "max_knapsack_vars") count(limits.max_knapsack_vars);
    else if (key == "max_clique_sample") count(limits.max_clique_sample);
    else if (key == "max_graph_nnz") count(limits.max_graph_nnz);
    else if (key == "per_thread_ext_nnz") count(limits.per_thread_ext_nnz);
    else if (key == "max_merge_cliques") count(limits.max_merge_cliques);
    else if (key == "time_limit_s") {
      if (!value.is_number()) throw std::invalid_argument("time_limit_s must be a number");
      limits.time_limit_s = value.get<double>();
    } else {
      throw std::invalid_argument("unknown limit: " + key);
    }
  }
  limits.validate();
  return limits;
}

std::string Limits::to_json() const {
  Json doc;
  doc["max_knapsack_vars"] = max_knapsack_vars;
  doc["max_clique_sample"] = max_clique_sample;
  doc["max_graph_nnz"] = max_graph_nnz;
  doc["per_thread_ext_nnz"] = per_thread_ext_nnz;
  doc["max_merge_cliques"] = max_merge_cliques;
  doc["time_limit_s"] = time_limit_s;
  return doc.dump(2);
}

std::string RunStats::to_json() const {
  Json doc;
  doc["threads"] = threads;
  doc["seed"] = seed;
  Json stages = Json::object();
  for (const auto& [name, secs] : stage_seconds) stages[name] = secs;
  doc["stage_seconds"] = stages;
  Json tag_doc = Json::object();
  for (OriginTag t : kAllOriginTags) {
    const TagCounts& c = tag(t);
    tag_doc[std::string(to_string(t))] = {{"total", c.total}, {"added", c.added}, {"user", c.user}};
  }
  doc["cliques"] = tag_doc;
  doc["limit_flags"] = {{"max_knapsack_vars", flags.knapsack_vars},
                        {"max_clique_sample", flags.clique_sample},
                        {"max_graph_nnz", flags.graph_nnz},
                        {"per_thread_ext_nnz", flags.extension_nnz},
                        {"max_merge_cliques", flags.merge_cliques},
                        {"time_limit_s", flags.time_limit}};
  doc["counts"] = {{"rows_in", rows_in},
                   {"cols_in", cols_in},
                   {"nnz_in", nnz_in},
                   {"binaries", binaries},
                   {"rows_post_detect", rows_post_detect},
                   {"nnz_post_detect", nnz_post_detect},
                   {"rows_out", rows_out},
                   {"fixings", fixings},
                   {"osp", osp},
                   {"isp", isp},
                   {"ck", ck},
                   {"ck_skipped", ck_skipped},
                   {"org_cliques", org_cliques},
                   {"other_cliques", other_cliques},
                   {"graph_edges", graph_edges},
                   {"pair_expansions", pair_expansions},
                   {"cliques_sampled", cliques_sampled},
                   {"cliques_skipped", cliques_skipped},
                   {"extension_inputs", extension_inputs},
                   {"extension_passed_through", extension_passed_through},
                   {"extension_pair_checks", extension_pair_checks},
                   {"merge_inputs", merge_inputs},
                   {"merge_removed", merge_removed},
                   {"budget_demoted", budget_demoted}};
  return doc.dump(2);
}

PipelineResult run_pipeline(const MipModel& model, const Limits& limits,
                            std::size_t k, std::uint64_t seed) {
  limits.validate();
  if (k == 0) throw std::invalid_argument("run_pipeline: k must be >= 1");
  const Deadline deadline(limits.time_limit_s);
  RunStats stats;
  stats.threads = k;
  stats.seed = seed;
  stats.rows_in = model.num_rows();
  stats.cols_in = model.num_cols();
  stats.nnz_in = model.nnz();
  try {
    PipelineResult result = run_stages(model, limits, k, seed, deadline, stats);
    result.stats = std::move(stats);
    finish_output(result);
    return result;
  } catch (const TimeLimitReached&) {
    return pass_through(model, std::move(stats));
  }
}

PipelineResult run_pipeline(const std::filesystem::path& model_path,
                            const Limits& limits, std::size_t k,
                            std::uint64_t seed) {
  return run_pipeline(read_mps_file(model_path), limits, k, seed);
}

double shifted_geomean(std::span<const double> times, double shift) {
  if (times.empty()) throw std::invalid_argument("shifted_geomean: empty list");
  if (shift < 0.0) throw std::invalid_argument("shifted_geomean: negative shift");
  double sum = 0.0;
  for (double t : times) {
    if (t < 0.0) throw std::invalid_argument("shifted_geomean: negative time");
    sum += std::log(t + shift);
  }
  return std::exp(sum / static_cast<double>(times.size())) - shift;
}

}  // namespace cgp
