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

import json
import os
import pathlib

import pytest

import mhom

DATA = pathlib.Path(os.environ.get("MHOM_DATA_DIR", pathlib.Path(__file__).parents[2] / "data"))

COLLAPSE = {"a1": "x", "a2": "x", "b1": "y", "b2": "y", "c1": "z", "c2": "z"}
ONTO_U12 = {"a1": "x", "b1": "x", "c1": "x", "a2": "y", "b2": "y", "c2": "y"}


def load(name):
    return mhom.Matroid.from_json((DATA / name).read_text())


def test_matroid_properties():
    theta = load("theta.json")
    assert theta.name == "theta"
    assert len(theta) == 6
    assert theta.rank() == 4
    assert theta.corank() == 2
    assert theta.is_connected()
    assert theta.is_crk(2)
    assert theta.is_binary()
    assert theta.series_partition()["classes"] == [["a1", "a2"], ["b1", "b2"], ["c1", "c2"]]
    assert theta.in_series("a1", "a2")
    assert not theta.in_series("a1", "b1")
    assert theta == mhom.named("theta")
    assert not mhom.uniform(2, 4).is_binary()


def test_validation_errors_carry_kind():
    with pytest.raises(mhom.MatroidError) as info:
        mhom.Matroid(["a", "b", "c"], [["a", "b"], ["a", "b", "c"]])
    assert info.value.kind == "NotAntichain"
    with pytest.raises(mhom.MatroidError) as info:
        mhom.Matroid.from_json("{not json")
    assert info.value.kind == "ParseError"


def test_json_round_trip():
    u = mhom.uniform(1, 3)
    doc = json.loads(u.to_json())
    assert doc["circuits"] == [["e0", "e1"], ["e0", "e2"], ["e1", "e2"]]
    assert mhom.Matroid.from_json(u.to_json()) == u


def test_maps():
    theta, u13, u12 = load("theta.json"), load("u13.json"), load("u12.json")
    assert mhom.is_homomorphism(theta, u13, COLLAPSE)["holds"]
    assert mhom.is_homeomorphism(theta, u13, COLLAPSE)["holds"]
    verdict = mhom.is_homeomorphism(theta, u12, ONTO_U12)
    assert not verdict["holds"]
    assert verdict["failure"] == "PreimageNotCircuit"
    assert verdict["circuit"] == ["x", "y"]
    homs = mhom.all_homomorphisms(theta, u13)
    assert COLLAPSE in homs
    assert len(homs) == 6
    assert mhom.all_homomorphisms(mhom.uniform(2, 4), mhom.uniform(1, 3)) == []


def test_decompose():
    theta, u13, u12 = load("theta.json"), load("u13.json"), load("u12.json")
    d = mhom.decompose(theta, u13, COLLAPSE)
    assert d["H"] == u13
    assert d["g"] == COLLAPSE
    assert d["h"] == {"x": "x", "y": "y", "z": "z"}
    assert all(d["certificate"].values())
    assert mhom.decomposition_precondition_failure(theta, u12, ONTO_U12) == "target is a single circuit"
    with pytest.raises(mhom.MatroidError) as info:
        mhom.decompose(theta, u12, ONTO_U12)
    assert info.value.kind == "PreconditionViolated"
    assert mhom.theorem1_outcome(theta, u12, ONTO_U12) == "TargetIsSingleCircuit"


def test_constructions():
    m, f = mhom.subdivide(mhom.Matroid(["x", "y", "z"], [["x", "y"], ["x", "z"], ["y", "z"]]),
                          [["x1", "x2"], ["y"], ["z"]])
    assert m.circuits == [["x1", "x2", "y"], ["x1", "x2", "z"], ["y", "z"]]
    assert f["x2"] == "x"
    q, g = mhom.series_quotient(load("theta.json"))
    assert mhom.isomorphic(q, mhom.uniform(1, 3)) is not None
    assert mhom.isomorphic(mhom.uniform(1, 3), mhom.uniform(2, 3)) is None
    tri = mhom.cycle_matroid(3, [(0, 1), (1, 2), (2, 0)])
    assert tri.is_single_circuit()


def test_catalog_and_suites():
    assert [mhom.count_matroids(n) for n in range(1, 6)] == [2, 5, 16, 68, 406]
    assert len(mhom.enumerate_matroids(max_n=4, min_n=4, binary=False)) == 1
    assert all(m.is_crk(2) for m in mhom.enumerate_matroids(max_n=4, crk=2))
    facts = mhom.verify_facts(max_n=4)
    assert facts["passed"] and facts["checks_run"] > 0
    theorems = mhom.verify_theorems(max_n=4, targets_max_n=3)
    assert theorems["passed"]
    with pytest.raises(mhom.MatroidError) as info:
        mhom.verify_facts(max_n=9)
    assert info.value.kind == "SpecTooLarge"
