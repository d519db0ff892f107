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

import json
import math
import os
from pathlib import Path

import pytest

import cgpresolve as cgp

DATA = Path(os.environ.get("CGP_TEST_DATA_DIR", Path(__file__).resolve().parents[1] / "data"))


def test_small_mps_matches_highs():
    highspy = pytest.importorskip("highspy")
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.readModel(str(DATA / "small.mps"))
    lp = h.getLp()
    m = cgp.read_mps(DATA / "small.mps")

    assert (m.num_rows, m.num_cols) == (lp.num_row_, lp.num_col_)
    assert m.nnz == len(lp.a_matrix_.value_)
    assert m.objective == pytest.approx(list(lp.col_cost_))
    inf = highspy.kHighsInf
    for ours, theirs in zip(m.lower, lp.col_lower_):
        assert ours == (-math.inf if theirs <= -inf else theirs)
    for ours, theirs in zip(m.upper, lp.col_upper_):
        assert ours == (math.inf if theirs >= inf else theirs)
    integer = [j for j, t in enumerate(lp.integrality_) if t == highspy.HighsVarType.kInteger]
    assert m.integer_columns() == integer
    # HiGHS keeps ranged bounds per row; an equality or one-sided row pins one side.
    for i, sense in enumerate(m.senses):
        side = lp.row_upper_[i] if sense in "LE" else lp.row_lower_[i]
        assert m.rhs[i] == side
    assert m.senses == "LGE"


def test_packing_instance_pipeline():
    r = cgp.presolve(DATA / "packing.mps", threads=2, seed=3)
    assert r.cuts == "other_long 2 4\n"
    stats = json.loads(r.stats_json)
    assert stats["cliques"]["org_long"]["added"] == 1
    assert stats["cliques"]["osp_long"]["added"] == 1
    assert not any(stats["limit_flags"].values())
    assert r.model.num_rows == 3
    again = cgp.presolve(DATA / "packing.mps", threads=1, seed=3)
    assert (again.model_mps, again.cuts) == (r.model_mps, r.cuts)


def test_round_trip_and_errors():
    m = cgp.read_mps(DATA / "small.mps")
    back = cgp.parse_mps(cgp.write_mps(m))
    assert back.rows == m.rows and back.rhs == m.rhs
    with pytest.raises(cgp.InfeasibleError):
        cgp.presolve(DATA / "infeasible.mps")
    with pytest.raises(cgp.MpsError):
        cgp.parse_mps("NAME X\nROWS\n Q  BAD\nENDATA\n")


def test_limits_and_flags():
    limits = cgp.Limits.from_json('{"max_knapsack_vars": 3}')
    assert limits.max_knapsack_vars == 3 and limits.max_graph_nnz == 25_000_000
    r = cgp.presolve(DATA / "packing.mps", limits=limits)
    assert json.loads(r.stats_json)["limit_flags"]["max_knapsack_vars"]
    with pytest.raises(ValueError):
        cgp.Limits.from_json('{"unknown": 1}')


def test_graph_merge_and_geomean():
    edges = cgp.conflict_edges([[0, 1, 2]], num_binaries=3, threads=2)
    assert edges == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5)]
    assert cgp.merge_kept([[0, 1], [0, 1, 2], [0, 1]], threads=2) == [1]
    assert cgp.shifted_geomean([0.5, 2.0], 1.0) == pytest.approx(1.1213, abs=1e-4)
    cliques = cgp.bernoulli_cliques(200, 50, 0.05, seed=4)
    assert cliques == cgp.bernoulli_cliques(200, 50, 0.05, seed=4)
    assert all(len(c) >= 2 for c in cliques)
