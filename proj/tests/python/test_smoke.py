# Copyright 2026 The upmax Authors
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

import pytest

import upmax

THREE_CONFLICTS = [[1], [2], [3], [4], [-1, -2, -3], [-4], [5], [-5, -2],
                   [-5, 2]]


def test_complementary_pair():
    result = upmax.solve(upmax.formula(1, [[1], [-1]]))
    assert result["optimum"] == 1
    assert result["status"] == "OPTIMUM"


def test_variants_agree_and_witness_attains_optimum():
    f = upmax.formula(5, THREE_CONFLICTS)
    for variant in upmax.VARIANTS:
        result = upmax.solve(f, variant=variant)
        assert result["optimum"] == 3
        assert f.cost(result["assignment"]) == 3


def test_lower_bound_and_oracle():
    f = upmax.formula(5, THREE_CONFLICTS)
    assert upmax.lower_bound(f) == 3
    cost, witness = upmax.brute_force_optimum(f)
    assert cost == 3
    assert f.cost(witness) == 3


def test_random_instances_match_oracle():
    for seed in range(10):
        f = upmax.random_max_ksat(12, 50, 2, seed)
        assert upmax.solve(f)["optimum"] == upmax.brute_force_optimum(f)[0]


def test_weighted_round_trip():
    f = upmax.formula(2, [([1], upmax.TOP), ([-1, 2], 3), ([], 2)])
    text = upmax.write_wcnf(f)
    assert text == "p wcnf 2 3 6\n6 1 0\n3 -1 2 0\n2 0\n"
    assert upmax.equivalent(f, upmax.parse_dimacs(text))


def test_mandatory_conflict():
    f = upmax.formula(1, [([1], upmax.TOP), ([-1], upmax.TOP)])
    assert upmax.solve(f)["status"] == "UNSATISFIABLE"


def test_generators():
    cut, edges = upmax.max_cut(5, 6, seed=1)
    assert cut.num_clauses == 2 * len(edges) == 12
    coloring, edges = upmax.three_coloring(5, 0.5, seed=2)
    assert coloring.num_variables == 15
    assert upmax.solve(coloring)["optimum"] == 0


def test_errors():
    with pytest.raises(upmax.ParseError):
        upmax.parse_dimacs("p cnf 1 1\n2 0\n")
    with pytest.raises(ValueError):
        upmax.Formula(2).add_clause([0])
    with pytest.raises(ValueError):
        upmax.solve(upmax.Formula(1), variant="3")
