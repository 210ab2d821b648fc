import random
from fractions import Fraction

import pytest

from hsk.exactnum import GaussianRational, QuadExt, IMAG, QUAD_ONE
from hsk.hadamard import (HadamardCandidate, build_system, build_W,
                          check_common_zero, check_hadamard_matrix,
                          enumerate_families, family_b_weights,
                          nonexistence_check, system_from_ac)
from hsk.multipoly import parse_quadext
from hsk.qlinalg import ones
from hsk.schemes import quaternion_scheme, z4_scheme


I = QuadExt(1, IMAG)
ONE = QUAD_ONE
MINUS = QuadExt.from_scalar(-1)


def test_symbolic_build_shapes():
    system = build_system(symbolic=True)
    assert system.symbolic
    assert len(system.conditions) == 4
    assert system.conditions[2] == system.conditions[1].conj_coeffs()
    assert system.conditions[0].conj_coeffs() == system.conditions[0]
    assert system.conditions[3].conj_coeffs() == system.conditions[3]


def test_numeric_build_point_values():
    system = system_from_ac(1, 1)
    e0 = system.evaluate_split(ONE, ONE, ONE)[0]
    assert e0 == QuadExt.from_scalar(12)  # n(n-1) with n = 4


def test_check_common_zero_examples():
    sys11 = system_from_ac(1, 1)
    assert check_common_zero(sys11, (I, -I, ONE))
    assert not check_common_zero(sys11, (MINUS, MINUS, ONE))
    sys21 = system_from_ac(2, 1)
    w = parse_quadext("(3+4*i)/5")
    assert check_common_zero(sys21, (w, MINUS, -w))


def test_build_w_z4():
    W = build_W(z4_scheme(), (I, -I, ONE))
    assert [str(v) for v in W[0]] == ["1", "i", "1", "-i"]
    assert check_hadamard_matrix(W)


def test_all_ones_weights_give_J():
    W = build_W(z4_scheme(), (ONE, ONE, ONE))
    assert all(v == ONE for row in W for v in row)
    assert not check_hadamard_matrix(ones(4))


def test_quaternion_matrices():
    q8 = quaternion_scheme()
    wd = parse_quadext("(1+2*sqrt(2)*i)/3")
    W = build_W(q8, (wd, MINUS, ONE))
    assert all(v.is_unit_modulus() for row in W for v in row)
    assert check_hadamard_matrix(W)
    We = build_W(q8, (I, MINUS, -I))
    assert check_hadamard_matrix(We)


def test_build_w_rejects_wrong_shape():
    import numpy as np
    from hsk.schemes import AssociationScheme
    rel = np.array([[0, 1, 2], [2, 0, 1], [1, 2, 0]])
    with pytest.raises(ValueError):
        build_W(AssociationScheme(rel), (I, -I, ONE))


def _random_gaussian_unit(rng) -> QuadExt:
    m = rng.randint(1, 6)
    n = rng.randint(0, 5)
    if (m, n) == (0, 0):
        m = 1
    den = m * m + n * n
    return QuadExt(1, GaussianRational(Fraction(m * m - n * n, den),
                                       Fraction(2 * m * n, den)))


def test_unitarity_equals_common_zero_on_z4():
    # both routes must agree on at least a hundred random unit triples
    rng = random.Random(1234)
    scheme = z4_scheme()
    system = system_from_ac(1, 1)
    agreements = 0
    hits = 0
    for _ in range(120):
        ws = tuple(_random_gaussian_unit(rng) for _ in range(3))
        via_matrix = check_hadamard_matrix(build_W(scheme, ws))
        via_system = check_common_zero(system, ws)
        assert via_matrix == via_system
        agreements += 1
        hits += via_matrix
    assert agreements == 120
    # make the comparison non-vacuous: seed some known zeros
    for w in (I, parse_quadext("(3+4*i)/5")):
        assert check_hadamard_matrix(build_W(scheme, (w, -w, ONE)))
        assert check_common_zero(system, (w, -w, ONE))


def test_swap_closure_of_zeros():
    system = system_from_ac(1, 3)
    for cand in enumerate_families(1, 3):
        w1, w2, w3 = cand.weights()
        assert check_common_zero(system, (w2, w1, w3))


def test_family_b_weights_values():
    wp, wm = family_b_weights(2)
    assert wp == MINUS
    assert wm == parse_quadext("(3-4*i)/5")
    wp3, wm3 = family_b_weights(3)
    assert wp3 == parse_quadext("(-2-6*sqrt(3)+(-3+4*sqrt(3))*i)/13")
    assert wp3.m == 3  # sqrt(12) is stored as 2 sqrt(3)
    wp4, _ = family_b_weights(4)
    assert wp4.m == 6  # sqrt(24) is stored as 2 sqrt(6)


def test_enumerate_families_a2c1():
    result = enumerate_families(2, 1)
    tags = [c.family for c in result]
    assert tags.count("a") == 4
    assert tags.count("c") == 4
    assert sum(1 for c in result if "b" in c.also) == 2
    assert result.continuum is not None
    sys21 = system_from_ac(2, 1)
    for cand in result:
        assert check_common_zero(sys21, cand)


def test_enumerate_families_a1c3():
    result = enumerate_families(1, 3)
    assert len(result) == 8
    tags = sorted(c.family for c in result)
    assert tags == ["d"] * 4 + ["e"] * 4
    assert result.continuum is None


def test_enumerate_families_a3c1():
    result = enumerate_families(3, 1)
    bs = [c for c in result if c.family == "b"]
    assert len(bs) == 2
    for cand in bs:
        for w in cand.weights():
            assert w.is_unit_modulus()
        assert cand.w3 == cand.w1 * cand.w2
    sys31 = system_from_ac(3, 1)
    assert all(check_common_zero(sys31, c) for c in result)


def test_family_a_samples_include_both_quarter_turns():
    result = enumerate_families(1, 1, samples_for_family_a=2)
    ws = [c.w1 for c in result if c.family == "a"]
    assert I in ws and -I in ws


def test_degenerate_pair_note_at_a1():
    result = enumerate_families(1, 1)
    assert any("degenerates" in note for note in result.notes)
    assert all(c.family == "a" for c in result)


def test_family_branch_structure():
    # every candidate has w3 = 1 or w3 = w1 w2, and non-continuum
    # candidates satisfy w2 = -w1 or the pair polynomial
    for (a, c) in ((2, 1), (3, 1), (1, 3)):
        for cand in enumerate_families(a, c):
            w1, w2, w3 = cand.weights()
            assert w3 == ONE or w3 == w1 * w2
            if cand.family != "a":
                coeff = (2 * a - 1) * c - 1
                g_val = (w1 * w2 + 1) * 2 + (w1 + w2) * coeff
                assert w2 == -w1 or not g_val


def test_palindromic_quartics():
    from hsk.identities import _Workspace
    ws = _Workspace()
    for coeffs in (ws.f1_coeffs, ws.f2_coeffs):
        quartic = ws.palindromic_quartic(coeffs, ws.w1)
        seq = [quartic.coefficient_of("w1", k) for k in range(5)]
        assert seq[0] == seq[4]
        assert seq[1] == seq[3]


def test_nonexistence_case_ii():
    report = nonexistence_check("ii", 2, 1)
    assert report.nonexistent
    assert report.forced_weight == "w3 = -1"
    assert report.m1 == Fraction(1, 2)
    report = nonexistence_check("ii", 4, 3)
    assert report.nonexistent
    assert report.forced_weight is None
    assert any("> 2" in step for step in report.steps)


def test_nonexistence_case_iii():
    report = nonexistence_check("iii", 2, 1)
    assert report.nonexistent
    assert report.m1 == Fraction(8, 3)
    report = nonexistence_check("iii", 6, 4)
    assert report.nonexistent and report.forced_weight is None
    with pytest.raises(ValueError):
        nonexistence_check("i", 2, 1)
    with pytest.raises(ValueError):
        nonexistence_check("ii", 3, 1)
