# Copyright 2026 The cgpresolve Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Parallel conflict-graph presolve for mixed integer programs."""

from ._cgpresolve import (
    InfeasibleError,
    Limits,
    MipModel,
    MpsError,
    PipelineResult,
    bernoulli_cliques,
    conflict_edges,
    merge_kept,
    parse_mps,
    presolve,
    presolve_model,
    read_mps,
    shifted_geomean,
    write_mps,
)

__all__ = [
    "InfeasibleError",
    "Limits",
    "MipModel",
    "MpsError",
    "PipelineResult",
    "bernoulli_cliques",
    "conflict_edges",
    "merge_kept",
    "parse_mps",
    "presolve",
    "presolve_model",
    "read_mps",
    "shifted_geomean",
    "write_mps",
]
