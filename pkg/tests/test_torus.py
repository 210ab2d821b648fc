import math

import pytest

from hsk.hadamard import build_system, enumerate_families, system_from_ac
from hsk.torus import torus_zero_search


def _exact_isolated(a, c):
    return [[complex(w) for w in cand.weights()]
            for cand in enumerate_families(a, c)
            if cand.family in ("b", "c", "d", "e")]


def test_grid_precondition():
    with pytest.raises(ValueError):
        torus_zero_search(system_from_ac(1, 1), grid_per_angle=8)
    with pytest.raises(ValueError):
        torus_zero_search(build_system(symbolic=True))


def test_search_a1c3(search_a1c3):
    assert len(search_a1c3.isolated) == 8
    assert len(search_a1c3.curves) == 0
    assert search_a1c3.match_isolated(_exact_isolated(1, 3), 1e-8)
    for sol in search_a1c3.isolated:
        assert sol.residual <= 1e-8


def test_search_a2c1(search_a2c1):
    assert len(search_a2c1.isolated) == 4
    assert len(search_a2c1.curves) == 1
    assert search_a2c1.match_isolated(_exact_isolated(2, 1), 1e-8)
    curve = search_a2c1.curves[0]
    assert curve.size > 100
    # the curve is (w, -w, 1): every sample has w2 = -w1 and w3 = 1
    for sample in curve.samples:
        w1, w2, w3 = sample.weights()
        assert abs(w2 + w1) < 1e-6
        assert abs(w3 - 1) < 1e-6


def test_search_a1c1(search_a1c1):
    assert len(search_a1c1.isolated) == 0
    assert len(search_a1c1.curves) == 1
    for sol in search_a1c1.isolated:
        assert abs(sol.w1 - sol.w2) <= 1e-4


def test_curve_tangent_evidence(search_a1c1):
    curve = search_a1c1.curves[0]
    assert len(curve.samples) >= 8
    # tangent of (t, t+pi, 0) is proportional to (1, 1, 0)
    for tang in curve.tangents:
        norm = math.sqrt(sum(v * v for v in tang))
        assert abs(norm - 1) < 1e-9
        assert abs(abs(tang[0]) - abs(tang[1])) < 0.05
        assert abs(tang[2]) < 0.05


def test_search_second_spectrum_empty(search_second_spectrum):
    assert len(search_second_spectrum.isolated) == 0
    assert len(search_second_spectrum.curves) == 0


def test_json_entries(search_a1c3):
    payload = search_a1c3.json_dict()
    assert payload["grid"] == 64
    assert len(payload["solutions"]) == 8
    for entry in payload["solutions"]:
        assert set(entry) == {"w1", "w2", "w3", "residual", "component"}
        assert entry["component"] == "isolated"
        for key in ("w1", "w2", "w3"):
            re, im = entry[key]
            assert abs(re * re + im * im - 1) < 1e-10
    assert payload["caveat"]


def test_json_curve_entries(search_a2c1):
    payload = search_a2c1.json_dict()
    comps = {entry["component"] for entry in payload["solutions"]}
    assert comps == {"isolated", "curve"}
    assert len(payload["curve_components"]) == 1
    assert payload["curve_components"][0]["size"] > 100


def test_smaller_grid_same_classification():
    result = torus_zero_search(system_from_ac(1, 3), grid_per_angle=24)
    assert len(result.isolated) == 8
    assert len(result.curves) == 0
