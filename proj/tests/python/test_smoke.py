# Copyright 2026 The divtree Authors
#
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

import pytest

import divtree


def test_cube_is_a_kernel():
    inst = divtree.Instance(divtree.cube_like(8), p=0, q=0, k=4, ell=2)
    result = divtree.kernelize(inst)
    assert result.outcome == "reduced"
    assert result.instance == inst
    assert [a["rule"] for a in result.transcript] == ["R5"]


def test_long_cycle_contracts():
    inst = divtree.Instance(divtree.cycle(20), k=2, ell=1)
    result = divtree.kernelize(inst)
    assert result.instance.graph == divtree.cycle(3)
    assert sum(a["rule"] == "R1" for a in result.transcript) == 17
    assert divtree.solve(result.instance)[0] == "yes"


def test_nonterminal_pendant_is_no():
    g = divtree.Graph(4, [(1, 2), (2, 3), (1, 3), (3, 4)])
    result = divtree.kernelize(divtree.InstanceNT(g, [4]))
    assert result.outcome == "trivial-no"
    assert divtree.solve(divtree.InstanceNT(g, [4]))[0] == "no"


def test_witness_verifies():
    g = divtree.cube_like(64)
    result = divtree.kernelize(divtree.Instance(g, k=4, ell=2), witness=True)
    assert result.outcome == "trivial-yes"
    assert len(result.witness) == 2
    assert divtree.verify_family(result.reduced.graph, result.witness, k=4)
    assert json.loads(result.to_json())["outcome"] == "trivial-yes"


def test_solver_witness():
    answer, trees = divtree.solve(divtree.Instance(divtree.cycle(5), 2, 3, 2, 5))
    assert answer == "yes"
    assert len(trees) == 5


def test_errors_become_value_errors():
    with pytest.raises(ValueError):
        divtree.Graph(2, [(1, 1)])
    with pytest.raises(ValueError):
        divtree.Instance(divtree.cycle(4), k=0)
    with pytest.raises(ValueError):
        divtree.read_graph("2 1\n1 5\n")
