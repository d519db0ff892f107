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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>
#include <utility>
#include <vector>

#include "cgp/bench.hpp"
#include "cgp/clique_merge.hpp"
#include "cgp/conflict_graph.hpp"
#include "cgp/mps_io.hpp"
#include "cgp/pipeline.hpp"
#include "cgp/presolve_detect.hpp"

namespace py = pybind11;

namespace {

std::vector<cgp::Clique> to_cliques(const std::vector<std::vector<cgp::Node>>& lists) {
  std::vector<cgp::Clique> out;
  out.reserve(lists.size());
  for (const auto& nodes : lists) out.push_back(cgp::make_clique(nodes, cgp::CliqueSource::kOsp));
  return out;
}

std::vector<std::pair<cgp::Node, cgp::Node>> edges(const cgp::ConflictGraph& g) {
  std::vector<std::pair<cgp::Node, cgp::Node>> out;
  for (cgp::Node u = 0; u < g.num_nodes(); ++u)
    for (cgp::Node v : g.neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_cgpresolve, m) {
  m.doc() = "Parallel conflict-graph presolve";

  py::register_exception<cgp::InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
  py::register_exception<cgp::MpsError>(m, "MpsError", PyExc_ValueError);

  py::class_<cgp::MipModel>(m, "MipModel")
      .def_readonly("name", &cgp::MipModel::name)
      .def_readonly("maximize", &cgp::MipModel::maximize)
      .def_readonly("row_names", &cgp::MipModel::row_names)
      .def_readonly("rhs", &cgp::MipModel::rhs)
      .def_readonly("col_names", &cgp::MipModel::col_names)
      .def_readonly("objective", &cgp::MipModel::objective)
      .def_readonly("lower", &cgp::MipModel::lower)
      .def_readonly("upper", &cgp::MipModel::upper)
      .def_property_readonly("senses",
                             [](const cgp::MipModel& model) {
                               std::string s;
                               for (auto sense : model.senses) s += static_cast<char>(sense);
                               return s;
                             })
      .def_property_readonly("rows",
                             [](const cgp::MipModel& model) {
                               std::vector<std::vector<std::pair<std::int32_t, double>>> rows;
                               for (const auto& row : model.rows) {
                                 auto& out = rows.emplace_back();
                                 for (const auto& e : row) out.emplace_back(e.col, e.coef);
                               }
                               return rows;
                             })
      .def_property_readonly("num_rows", &cgp::MipModel::num_rows)
      .def_property_readonly("num_cols", &cgp::MipModel::num_cols)
      .def_property_readonly("nnz", &cgp::MipModel::nnz)
      .def("integer_columns", &cgp::MipModel::integer_columns)
      .def("binary_columns", &cgp::MipModel::binary_columns);

  m.def("parse_mps", &cgp::parse_mps, py::arg("text"));
  m.def("read_mps", &cgp::read_mps_file, py::arg("path"));
  m.def("write_mps", &cgp::write_mps, py::arg("model"));

  py::class_<cgp::Limits>(m, "Limits")
      .def(py::init<>())
      .def_readwrite("max_knapsack_vars", &cgp::Limits::max_knapsack_vars)
      .def_readwrite("max_clique_sample", &cgp::Limits::max_clique_sample)
      .def_readwrite("max_graph_nnz", &cgp::Limits::max_graph_nnz)
      .def_readwrite("per_thread_ext_nnz", &cgp::Limits::per_thread_ext_nnz)
      .def_readwrite("max_merge_cliques", &cgp::Limits::max_merge_cliques)
      .def_readwrite("time_limit_s", &cgp::Limits::time_limit_s)
      .def_static("from_json", &cgp::Limits::from_json, py::arg("text"))
      .def("to_json", &cgp::Limits::to_json);

  py::class_<cgp::PipelineResult>(m, "PipelineResult")
      .def_readonly("model", &cgp::PipelineResult::model)
      .def_readonly("model_mps", &cgp::PipelineResult::model_mps)
      .def_readonly("cuts", &cgp::PipelineResult::cuts)
      .def_property_readonly("stats_json",
                             [](const cgp::PipelineResult& r) { return r.stats.to_json(); });

  m.def(
      "presolve",
      [](const std::filesystem::path& path, const cgp::Limits& limits, std::size_t threads,
         std::uint64_t seed) {
        py::gil_scoped_release release;
        return cgp::run_pipeline(path, limits, threads, seed);
      },
      py::arg("path"), py::arg("limits") = cgp::Limits{}, py::arg("threads") = 1,
      py::arg("seed") = 0);
  m.def(
      "presolve_model",
      [](const cgp::MipModel& model, const cgp::Limits& limits, std::size_t threads,
         std::uint64_t seed) {
        py::gil_scoped_release release;
        return cgp::run_pipeline(model, limits, threads, seed);
      },
      py::arg("model"), py::arg("limits") = cgp::Limits{}, py::arg("threads") = 1,
      py::arg("seed") = 0);

  m.def(
      "conflict_edges",
      [](const std::vector<std::vector<cgp::Node>>& cliques, std::size_t num_binaries,
         std::size_t threads, std::uint64_t seed) {
        const auto qs = to_cliques(cliques);
        return edges(cgp::build_graph_parallel(qs, num_binaries, threads, seed));
      },
      py::arg("cliques"), py::arg("num_binaries"), py::arg("threads") = 1, py::arg("seed") = 0,
      "Undirected edges (u < v) of the conflict graph, complement edges included.");
  m.def(
      "merge_kept",
      [](const std::vector<std::vector<cgp::Node>>& cliques, std::size_t threads) {
        const auto qs = to_cliques(cliques);
        return cgp::merge_parallel(qs, threads).kept_index;
      },
      py::arg("cliques"), py::arg("threads") = 1,
      "Input indices of the cliques that survive domination removal.");
  m.def(
      "bernoulli_cliques",
      [](std::size_t num_binaries, std::size_t num_cliques, double p, std::uint64_t seed) {
        std::vector<std::vector<cgp::Node>> out;
        for (auto& q : cgp::bernoulli_cliques(num_binaries, num_cliques, p, seed).cliques)
          out.push_back(std::move(q.nodes));
        return out;
      },
      py::arg("num_binaries"), py::arg("num_cliques"), py::arg("p"), py::arg("seed") = 1);
  m.def("shifted_geomean",
        [](const std::vector<double>& times, double shift) {
          return cgp::shifted_geomean(times, shift);
        },
        py::arg("times"), py::arg("shift"));
}
