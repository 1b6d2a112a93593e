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

"""QUBO solvers and a QUBO-based eigensolver for symmetric matrices."""

from ._core import (
    ConvergenceError,
    EigenPair,
    QuboProblem,
    SolveResult,
    build_qubo,
    decode,
    deflate,
    energy,
    gershgorin_bounds,
    jacobi_eigen,
    parse_matrix,
    parse_qubo,
    rayleigh_quotient,
    residual_norm,
    serialize_matrix,
    serialize_qubo,
    solve,
    solve_eigenpair,
    solve_spectrum,
    transitions,
    HARTREE_TO_KCAL_MOL,
)

__all__ = [
    "ConvergenceError",
    "EigenPair",
    "QuboProblem",
    "SolveResult",
    "build_qubo",
    "decode",
    "deflate",
    "energy",
    "gershgorin_bounds",
    "jacobi_eigen",
    "parse_matrix",
    "parse_qubo",
    "rayleigh_quotient",
    "residual_norm",
    "serialize_matrix",
    "serialize_qubo",
    "solve",
    "solve_eigenpair",
    "solve_spectrum",
    "transitions",
    "HARTREE_TO_KCAL_MOL",
]
