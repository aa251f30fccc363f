# Copyright 2026 The Authors.
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

"""Circuit-set matroids, matroid homomorphisms and their decomposition."""

from ._mhom import (
    Matroid,
    MatroidError,
    all_homomorphisms,
    count_matroids,
    cycle_matroid,
    decompose,
    decomposition_precondition_failure,
    enumerate_matroids,
    is_circuit_injection,
    is_homeomorphism,
    is_homomorphism,
    isomorphic,
    named,
    series_quotient,
    subdivide,
    theorem1_outcome,
    uniform,
    verify_facts,
    verify_theorems,
)

__all__ = [
    "Matroid",
    "MatroidError",
    "all_homomorphisms",
    "count_matroids",
    "cycle_matroid",
    "decompose",
    "decomposition_precondition_failure",
    "enumerate_matroids",
    "is_circuit_injection",
    "is_homeomorphism",
    "is_homomorphism",
    "isomorphic",
    "named",
    "series_quotient",
    "subdivide",
    "theorem1_outcome",
    "uniform",
    "verify_facts",
    "verify_theorems",
]
