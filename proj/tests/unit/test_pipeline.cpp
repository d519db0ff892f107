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

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "cgp/mps_io.hpp"
#include "cgp/pipeline.hpp"
#include "cgp/presolve_detect.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

using cgp::Limits;
using cgp::MipModel;
using cgp::OriginTag;
using cgp::RowSense;

namespace {

MipModel binaries(int n) {
  MipModel m;
  m.name = "T";
  for (int j = 0; j < n; ++j) m.add_column("x" + std::to_string(j + 1), 1.0, 0.0, 1.0, true);
  return m;
}

MipModel knapsack_instance() {
  MipModel m = binaries(6);
  m.add_row("k", RowSense::kLessEqual, 5.0, {{0, 1.0}, {1, 2.0}, {2, 3.0}, {3, 4.0}});
  return m;
}

// Every emitted row and cut holds at every feasible point of `original`, and
// the output model has exactly the original's feasible set.
void check_valid(const MipModel& original, const cgp::PipelineResult& r) {
  const auto domains = oracle::integer_domains(original);
  const MipModel out = cgp::parse_mps(r.model_mps);
  oracle::enumerate_points(domains, [&](const std::vector<double>& x) {
    const bool feasible = oracle::feasible(original, x);
    CHECK(oracle::feasible(out, x) == feasible);
    if (!feasible) return;
    for (const auto& cut : r.pool.cuts) CHECK(oracle::cut_satisfied(cut.literals, x));
  });
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("set packing row comes back as a clique row") {
  MipModel m = binaries(2);
  m.add_row("c1", RowSense::kLessEqual, 1.0, {{0, 1.0}, {1, 1.0}});
  const auto r = cgp::run_pipeline(m, Limits{}, 1, 0);
  CHECK(r.cuts.empty());
  const MipModel out = cgp::parse_mps(r.model_mps);
  REQUIRE(out.num_rows() == 1);
  CHECK(out.senses[0] == RowSense::kLessEqual);
  CHECK(out.rhs[0] == 1.0);
  REQUIRE(out.rows[0].size() == 2);
  CHECK(out.rows[0][0].coef == 1.0);
  CHECK(out.rows[0][1].coef == 1.0);
  CHECK(r.stats.tag(OriginTag::kOspLong).total == 1);
  CHECK(r.stats.tag(OriginTag::kOspLong).added == 1);
  check_valid(m, r);
}

TEST_CASE("knapsack instance: original clique added, other clique pooled") {
  const MipModel m = knapsack_instance();
  const auto r = cgp::run_pipeline(m, Limits{}, 2, 3);
  CHECK(r.cuts == "other_long 2 4\n");
  const MipModel out = cgp::parse_mps(r.model_mps);
  REQUIRE(out.num_rows() == 2);
  CHECK(out.rhs[1] == 1.0);
  REQUIRE(out.rows[1].size() == 2);
  CHECK(out.rows[1][0].col == 2);
  CHECK(out.rows[1][1].col == 3);
  CHECK(r.stats.tag(OriginTag::kOrgLong).added == 1);
  CHECK(r.stats.tag(OriginTag::kOtherLong).user == 1);
  CHECK(r.stats.budget_demoted == 1);
  check_valid(m, r);
}

TEST_CASE("outputs are byte-identical across runs and thread counts") {
  cgp::SplitMix64 rng(123);
  MipModel m = oracle::random_mip(rng, 120, 120, 150);
  for (;;) {
    try {
      cgp::run_pipeline(m, Limits{}, 1, 0);
      break;
    } catch (const cgp::InfeasibleError&) {
      m = oracle::random_mip(rng, 120, 120, 150);
    }
  }
  const auto path = std::filesystem::temp_directory_path() / "cgp_pipeline_determinism.mps";
  cgp::write_text_file(path, cgp::write_mps(m));
  const auto ref = cgp::run_pipeline(path, Limits{}, 1, 42);
  CHECK(ref.stats.osp + ref.stats.isp + ref.stats.ck > 0);
  for (std::size_t k : {1u, 2u, 4u, 8u}) {
    for (int rep = 0; rep < 2; ++rep) {
      const auto r = cgp::run_pipeline(path, Limits{}, k, 42);
      CHECK(r.model_mps == ref.model_mps);
      CHECK(r.cuts == ref.cuts);
    }
  }
  std::filesystem::remove(path);
}

TEST_CASE("random small MIPs: emitted rows and cuts are valid") {
  cgp::SplitMix64 rng(321);
  int feasible_runs = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const MipModel m = oracle::random_mip(rng);
    try {
      const auto r = cgp::run_pipeline(m, Limits{}, 1 + trial % 4, trial);
      ++feasible_runs;
      check_valid(m, r);
    } catch (const cgp::InfeasibleError&) {
      bool any = false;
      oracle::enumerate_points(oracle::integer_domains(m), [&](const std::vector<double>& x) {
        any = any || oracle::feasible(m, x);
      });
      CHECK_FALSE(any);
    }
  }
  CHECK(feasible_runs > 20);
}

TEST_CASE("stats document") {
  const auto r = cgp::run_pipeline(knapsack_instance(), Limits{}, 2, 1);
  const auto doc = nlohmann::json::parse(r.stats.to_json());
  CHECK(doc["threads"] == 2);
  CHECK(doc["seed"] == 1);
  for (const auto& [tag, c] : doc["cliques"].items())
    CHECK(c["added"].get<int>() + c["user"].get<int>() == c["total"].get<int>());
  for (const auto& [name, flag] : doc["limit_flags"].items()) CHECK(flag == false);
  CHECK(doc["stage_seconds"].contains("total"));
}

TEST_CASE("limits parsing") {
  const Limits l = Limits::from_json(R"({"max_knapsack_vars": 3, "time_limit_s": 0.5})");
  CHECK(l.max_knapsack_vars == 3);
  CHECK(l.time_limit_s == 0.5);
  CHECK(l.max_clique_sample == 1000);
  CHECK(l.max_graph_nnz == 25'000'000);
  CHECK(l.per_thread_ext_nnz == 1'250'000);
  CHECK(l.max_merge_cliques == 100'000);
  CHECK_THROWS_AS(Limits::from_json(R"({"bogus": 1})"), std::invalid_argument);
  CHECK_THROWS_AS(Limits::from_json(R"({"max_graph_nnz": 0})"), std::invalid_argument);
  CHECK_THROWS_AS(Limits::from_json(R"({"max_graph_nnz": 2.5})"), std::invalid_argument);
  CHECK_THROWS_AS(Limits::from_json(R"({"time_limit_s": -1})"), std::invalid_argument);
  CHECK(Limits::from_json(Limits{}.to_json()).max_graph_nnz == 25'000'000);
}

TEST_CASE("limit flags trigger exactly when their limit binds") {
  MipModel m = binaries(8);
  m.add_row("k", RowSense::kLessEqual, 5.0,
            {{0, 1.0}, {1, 2.0}, {2, 3.0}, {3, 4.0}, {4, 3.5}});
  m.add_row("p", RowSense::kLessEqual, 1.0, {{4, 1.0}, {5, 1.0}, {6, 1.0}, {7, 1.0}});
  const auto base = cgp::run_pipeline(m, Limits{}, 2, 1);
  const auto& f0 = base.stats.flags;
  CHECK_FALSE((f0.knapsack_vars || f0.clique_sample || f0.graph_nnz || f0.extension_nnz ||
               f0.merge_cliques || f0.time_limit));

  auto run_with = [&](auto edit) {
    Limits l;
    edit(l);
    const auto r = cgp::run_pipeline(m, l, 1, 1);
    check_valid(m, r);
    return r.stats.flags;
  };
  CHECK(run_with([](Limits& l) { l.max_knapsack_vars = 3; }).knapsack_vars);
  CHECK(run_with([](Limits& l) { l.max_clique_sample = 2; }).clique_sample);
  CHECK(run_with([](Limits& l) { l.max_graph_nnz = 3; }).graph_nnz);
  CHECK(run_with([](Limits& l) { l.per_thread_ext_nnz = 1; }).extension_nnz);
  CHECK(run_with([](Limits& l) { l.max_merge_cliques = 1; }).merge_cliques);
  const auto timed = run_with([](Limits& l) { l.time_limit_s = 1e-12; });
  CHECK(timed.time_limit);
  CHECK_FALSE(run_with([](Limits& l) { l.max_knapsack_vars = 5; }).knapsack_vars);
}

TEST_CASE("time limit passes the model through") {
  const MipModel m = knapsack_instance();
  Limits l;
  l.time_limit_s = 1e-12;
  const auto r = cgp::run_pipeline(m, l, 1, 0);
  CHECK(r.stats.flags.time_limit);
  CHECK(r.model_mps == cgp::write_mps(m));
  CHECK(r.cuts.empty());
  CHECK(r.pool.cuts.empty());
}

TEST_CASE("infeasible models throw") {
  MipModel m = binaries(2);
  m.add_row("bad", RowSense::kGreaterEqual, 3.0, {{0, 1.0}, {1, 1.0}});
  CHECK_THROWS_AS(cgp::run_pipeline(m, Limits{}, 1, 0), cgp::InfeasibleError);
}

TEST_CASE("shifted geometric mean") {
  const std::vector<double> two = {0.5, 2.0};
  CHECK(cgp::shifted_geomean(two, 1.0) == doctest::Approx(std::sqrt(1.5 * 3.0) - 1.0));
  CHECK(cgp::shifted_geomean(two, 1.0) == doctest::Approx(1.1213).epsilon(1e-4));
  const std::vector<double> one = {3.7};
  CHECK(cgp::shifted_geomean(one, 0.0) == doctest::Approx(3.7));
  CHECK(cgp::shifted_geomean(one, 10.0) == doctest::Approx(3.7));
  const std::vector<double> same = {0.25, 0.25, 0.25};
  CHECK(cgp::shifted_geomean(same, 1.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(cgp::shifted_geomean(std::vector<double>{}, 1.0), std::invalid_argument);
}

}  // TEST_SUITE
