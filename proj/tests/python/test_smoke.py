# Copyright 2026 The qaesolve Authors
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

import itertools
import math

import pytest

import qaesolve as qs


def brute_min(q):
    return min(q.energy(list(b)) for b in itertools.product((0, 1), repeat=q.num_vars))


def test_solve_matches_brute_force():
    q = qs.QuboProblem(4, [-1.0, 0.5, -2.0, 1.0], [(0, 1, 2.0), (1, 2, -1.5), (0, 3, 0.75)], 0.25)
    want = brute_min(q)
    for method in ("exact", "tabu", "decompose"):
        r = qs.solve(q, method=method, seed=1)
        assert r.energy == pytest.approx(want, abs=1e-12)
        assert q.energy(r.bits) == pytest.approx(r.energy, abs=1e-12)


def test_qubo_text_round_trip():
    q = qs.QuboProblem(3, [1.0, -2.0, 0.5], [(2, 0, 1.25)])
    assert qs.parse_qubo(qs.serialize_qubo(q)) == q
    with pytest.raises(ValueError):
        qs.parse_qubo("p qubo 0 2 1 0\n0 0 nope\n")


def test_build_qubo_objective():
    a = [[1.0, 0.5], [0.5, -1.0]]
    q = qs.build_qubo(a, 0.3, k_bits=3)
    assert q.num_vars == 6
    bits = [1, 1, 0, 0, 0, 1]
    v = qs.decode(bits, 3, 2)
    assert v == [0.75, -1.0]
    f = sum(a[i][j] * v[i] * v[j] for i in range(2) for j in range(2)) + 0.3 * sum(x * x for x in v)
    assert q.energy(bits) == pytest.approx(f, abs=1e-12)


def test_eigenpair_and_spectrum():
    a = [[2.0, -0.5, 0.1], [-0.5, 1.0, 0.3], [0.1, 0.3, -1.0]]
    ref = [p.value for p in qs.jacobi_eigen(a)]
    r = qs.solve_eigenpair(a, seed=3)
    assert r["value"] >= ref[0] - 1e-9
    assert abs(r["value"] - ref[0]) < 1e-3
    assert r["lambda_opt"] == pytest.approx(-r["value"], abs=1e-5)
    norm = math.sqrt(sum(x * x for x in r["unit_vector"]))
    assert norm == pytest.approx(1.0)

    states = qs.solve_spectrum(a, 2, seed=3)
    values = [s["value"] for s in states]
    assert values == sorted(values)
    assert values[1] == pytest.approx(ref[1], abs=1e-2 * (ref[-1] - ref[0]))


def test_transitions_and_helpers():
    assert qs.transitions([-1.0, 0.0], qs.HARTREE_TO_KCAL_MOL) == [627.509474]
    assert qs.gershgorin_bounds([[2.0, 1.0], [1.0, 2.0]]) == (1.0, 3.0)
    assert qs.residual_norm([1.0, 0.0], [-2.0, 0.0]) == 0.0
    with pytest.raises(ValueError):
        qs.transitions([1.0, 0.0])
