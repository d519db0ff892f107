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

// Command-line driver.
//
//   cgp presolve model.mps --threads 4 --seed 7 --out-model out.mps
//       --out-cuts out.cuts --stats-json stats.json [--limits limits.json]
//       [--time-limit 120]
//   cgp bench --threads 1,2,4,8 --seed 1 [--nb 2000 --cliques 5000 --p 0.01]
//
// Exit status: 0 on success, 2 when the model is proven infeasible, 1 on
// any other error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgp/bench.hpp"
#include "cgp/mps_io.hpp"
#include "cgp/pipeline.hpp"
#include "cgp/presolve_detect.hpp"

namespace {

cgp::Limits load_limits(const std::string& path, double time_limit) {
  cgp::Limits limits = path.empty() ? cgp::Limits{}
                                    : cgp::Limits::from_json(cgp::read_text_file(path));
  if (time_limit > 0.0) limits.time_limit_s = time_limit;
  limits.validate();
  return limits;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conflict graph presolve for mixed-integer programs"};
  app.require_subcommand(1);

  std::string model_path;
  std::string limits_path;
  std::string out_model;
  std::string out_cuts;
  std::string stats_json;
  std::size_t threads = 1;
  std::uint64_t seed = 0;
  double time_limit = 0.0;

  auto* presolve = app.add_subcommand("presolve", "Strengthen a model and emit cuts");
  presolve->add_option("model", model_path, "Input MPS file")->required()->check(CLI::ExistingFile);
  presolve->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  presolve->add_option("--seed", seed, "Shuffle and sampling seed");
  presolve->add_option("--time-limit", time_limit, "Seconds before pass-through")
      ->check(CLI::PositiveNumber);
  presolve->add_option("--limits", limits_path, "JSON file overriding limits")
      ->check(CLI::ExistingFile);
  presolve->add_option("--out-model", out_model, "Augmented MPS output");
  presolve->add_option("--out-cuts", out_cuts, "User cut pool output");
  presolve->add_option("--stats-json", stats_json, "Run statistics output");

  cgp::BenchConfig bench_cfg;
  std::string bench_csv;
  std::vector<std::size_t> bench_threads;
  bool no_cap = false;
  auto* bench = app.add_subcommand("bench", "Time the parallel stages on random cliques");
  bench->add_option("--threads", bench_threads, "Thread counts to sweep")->delimiter(',');
  bench->add_option("--seed", bench_cfg.seed, "Generator seed");
  bench->add_option("--nb", bench_cfg.num_binaries, "Binary variables");
  bench->add_option("--cliques", bench_cfg.num_cliques, "Cliques to draw");
  bench->add_option("--p", bench_cfg.membership_prob, "Membership probability");
  bench->add_option("--reps", bench_cfg.repetitions, "Repetitions per thread count");
  bench->add_option("--shift", bench_cfg.shift_s, "Geometric mean shift in seconds");
  bench->add_flag("--no-cap", no_cap, "Run thread counts above the host core count");
  bench->add_option("--limits", limits_path, "JSON file overriding limits")
      ->check(CLI::ExistingFile);
  bench->add_option("--csv", bench_csv, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests exit cleanly; every usage error maps to exit code 1.
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*presolve) {
      const cgp::Limits limits = load_limits(limits_path, time_limit);
      const cgp::PipelineResult result = cgp::run_pipeline(model_path, limits, threads, seed);
      if (!out_model.empty()) cgp::write_text_file(out_model, result.model_mps);
      if (!out_cuts.empty()) cgp::write_text_file(out_cuts, result.cuts);
      const std::string stats = result.stats.to_json();
      if (!stats_json.empty())
        cgp::write_text_file(stats_json, stats + "\n");
      else
        std::cout << stats << "\n";
      return 0;
    }
    if (!bench_threads.empty()) bench_cfg.threads = bench_threads;
    bench_cfg.cap_to_host = !no_cap;
    const cgp::BenchReport report = cgp::run_bench(bench_cfg, load_limits(limits_path, 0.0));
    std::cerr << "cliques " << report.cliques_generated << " (dropped "
              << report.cliques_dropped << "), pair expansions " << report.pair_expansions
              << ", extension checks " << report.extension_pair_checks
              << ", merge scans " << report.merge_subset_scans << ", outputs equal across k: "
              << (report.outputs_equal ? "yes" : "no") << "\n";
    for (std::size_t k : report.capped)
      std::cerr << "skipped k=" << k << ": host has " << report.host_threads
                << " hardware threads\n";
    if (bench_csv.empty())
      std::cout << report.to_csv();
    else
      cgp::write_text_file(bench_csv, report.to_csv());
    return report.outputs_equal ? 0 : 1;
  } catch (const cgp::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
