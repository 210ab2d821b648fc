import random
from fractions import Fraction

import pytest

from hsk.exactnum import GaussianRational, QuadExt, RadicandMismatch, IMAG
from hsk.hadamard import build_system, system_from_ac, _template_rows
from hsk.multipoly import (ParseError, Polynomial, RingMismatch, VarRing,
                           parse_polynomial, standard_ring)


@pytest.fixture(scope="module")
def ring():
    return standard_ring()


@pytest.fixture(scope="module")
def gens(ring):
    return dict(zip(ring.names, ring.gens()))


@pytest.fixture(scope="module")
def symbolic_conditions():
    return build_system(symbolic=True).conditions


def test_difference_of_squares(gens):
    w1, w2 = gens["w1"], gens["w2"]
    assert (w1 + w2) * (w1 - w2) == w1 ** 2 - w2 ** 2


def test_pair_polynomial_coefficient(ring, gens):
    # with the clique parameter written as -s/2, the linear coefficient of
    # 2(w1 w2 + 1) + ((2a-1)c - 1)(w1 + w2) is (-s-1)c - 1
    s, c, w1, w2 = gens["s"], gens["c"], gens["w1"], gens["w2"]
    a = s * Fraction(-1, 2)
    g = 2 * (w1 * w2 + 1) + ((2 * a - 1) * c - 1) * (w1 + w2)
    assert g.coefficient_of("w1", 1).coefficient_of("w2", 0) == (-s - 1) * c - 1


def test_difference_of_conjugate_conditions(ring, gens, symbolic_conditions):
    w1, w2, w3, r, b = (gens[n] for n in ("w1", "w2", "w3", "r", "b"))
    i = ring.constant(IMAG)
    e = symbolic_conditions
    rhs = (-b * i * (w1 - w2)
           * ((r + 1) * (w3 ** 2 + w1 * w2)
              - (w1 * w2 + r * (w1 + w2) + 1) * w3))
    assert e[1] - e[2] == rhs


def test_conjugate_coefficients(ring, gens, symbolic_conditions):
    e = symbolic_conditions
    assert e[1].conj_coeffs() == e[2]
    assert e[1].conj_coeffs().conj_coeffs() == e[1]
    w1 = gens["w1"]
    i = ring.constant(IMAG)
    assert (i * w1).conj_coeffs() == -i * w1


def test_identity_substitution(ring, symbolic_conditions):
    f = symbolic_conditions[0]
    assert f.substitute(list(ring.gens())) == f


def test_specialization_examples(ring, gens, symbolic_conditions):
    # against the worked specializations: w2 -> -w1, w3 -> 1 with the
    # spectrum parameters collapses e1 to -2a(c-1)w1^2 once b^2 is
    # rewritten to 4a^2 c
    w1, s, b, c = (gens[n] for n in ("w1", "s", "b", "c"))
    a = s * Fraction(-1, 2)
    spec = {"k1": 2 * a * (2 * a - 1) * c, "k2": 2 * a - 1, "r": 0}
    e1 = symbolic_conditions[1].substitute_map(spec)
    eq17 = b * b - 4 * a * a * c
    collapsed = e1.substitute_map({"w2": -w1, "w3": 1}) + w1 ** 2 * eq17
    assert collapsed == -2 * a * (c - 1) * w1 ** 2
    # at (a, c) = (2, 1): w2 -> -1, w3 -> -w1 gives w1(5 w1^2 - 6 w1 + 5)
    arged = e1.substitute_map({"w2": -1, "w3": -w1, "s": -4, "b": 4, "c": 1})
    assert arged == w1 * (5 * w1 ** 2 - 6 * w1 + 5)


def test_evaluate_weight_triples():
    system = system_from_ac(1, 1)
    i = QuadExt(1, IMAG)
    one = QuadExt.from_scalar(1)
    minus = QuadExt.from_scalar(-1)
    vals = system.evaluate_split(i, -i, one)
    assert all(not v for v in vals)
    # independent numeric oracle for the first condition at (-1, -1, 1):
    # (1 + (k1/2)(w1+w2) + k2 w3)(w1w2w3 + (k1/2)(w1+w2)w3 + k2 w1w2) - n w1w2w3
    k1, k2, n = 2, 1, 4
    w1 = w2 = -1.0
    w3 = 1.0
    oracle = ((1 + k1 / 2 * (w1 + w2) + k2 * w3)
              * (w1 * w2 * w3 + k1 / 2 * (w1 + w2) * w3 + k2 * w1 * w2)
              - n * w1 * w2 * w3)
    assert oracle == -4.0
    e0 = system.evaluate_split(minus, minus, one)[0]
    assert e0 == QuadExt.from_scalar(-4)
    assert system.evaluate_split(one, one, one)[0] == QuadExt.from_scalar(12)


def test_evaluate_radicand_guard(ring, gens):
    f = gens["w1"] * gens["w2"]
    point = [QuadExt(2, 0, 1), QuadExt(3, 0, 1)] + [QuadExt.from_scalar(0)] * 7
    with pytest.raises(RadicandMismatch):
        f.evaluate(point)


def _random_poly(rng, ring, nvars=3, nterms=4):
    terms = {}
    for _ in range(nterms):
        exps = [0] * ring.arity
        for k in range(nvars):
            exps[k] = rng.randint(0, 2)
        coeff = GaussianRational(rng.randint(-4, 4), rng.randint(-4, 4))
        if coeff:
            terms[tuple(exps)] = coeff
    return Polynomial(ring, terms)


def test_substitute_is_ring_homomorphism(ring):
    rng = random.Random(20240812)
    for _ in range(60):
        f = _random_poly(rng, ring)
        g = _random_poly(rng, ring)
        images = list(ring.gens())
        images[0] = _random_poly(rng, ring)
        images[1] = ring.constant(rng.randint(-3, 3))
        assert (f * g).substitute(images) == \
            f.substitute(images) * g.substitute(images)
        assert (f + g).substitute(images) == \
            f.substitute(images) + g.substitute(images)


def test_evaluate_substitute_consistency(ring):
    rng = random.Random(31337)
    for _ in range(40):
        f = _random_poly(rng, ring)
        point = [QuadExt.from_scalar(rng.randint(-3, 3))
                 for _ in range(ring.arity)]
        direct = f.evaluate(point)
        constants = [ring.constant(v.gaussian_value()) for v in point]
        via_subst = f.substitute(constants)
        assert via_subst.is_constant()
        assert QuadExt(1, via_subst.constant_value()) == direct


def test_swap_symmetry(ring, gens, symbolic_conditions):
    e = symbolic_conditions
    swap = {"w1": gens["w2"], "w2": gens["w1"]}
    assert e[0].substitute_map(swap) == e[0]
    assert e[3].substitute_map(swap) == e[3]
    assert e[2].substitute_map(swap) == e[1]


def test_template_row_sums(ring, gens):
    rows = _template_rows(ring, gens["k1"], gens["k2"], gens["r"],
                          gens["s"], gens["b"])
    n = ring.one() + gens["k1"] + gens["k2"]
    assert sum(rows[0][1:], rows[0][0]) == n
    for row in rows[1:]:
        assert sum(row[1:], row[0]).is_zero()


def test_parser_example(ring):
    f = parse_polynomial("(3+4*i)*w1^2*c - 1/2*s", ring)
    w1, c, s = ring.var("w1"), ring.var("c"), ring.var("s")
    want = GaussianRational(3, 4) * w1 ** 2 * c - s * Fraction(1, 2)
    assert f == want
    assert parse_polynomial(str(f), ring) == f


def test_parser_roundtrip_random(ring):
    rng = random.Random(4242)
    for _ in range(40):
        f = _random_poly(rng, ring, nvars=5, nterms=5)
        assert parse_polynomial(str(f), ring) == f


def test_parser_errors(ring):
    with pytest.raises(ParseError):
        parse_polynomial("w1 +", ring)
    with pytest.raises(ParseError):
        parse_polynomial("q9 + 1", ring)
    with pytest.raises(ParseError):
        parse_polynomial("1 / w1", ring)
    with pytest.raises(ParseError):
        parse_polynomial("sqrt(2)*w1", ring)


def test_ring_mismatch(ring):
    other = VarRing(("x", "y"))
    with pytest.raises(RingMismatch):
        ring.var("w1") + other.var("x")


def test_reduce_power_and_reciprocal(ring, gens):
    b, s, c, w1, w2 = (gens[n] for n in ("b", "s", "c", "w1", "w2"))
    f = b ** 4 + b ** 3 + b + 1
    r = f.reduce_power("b", s * s * c)
    assert r.degree_in("b") == 1
    assert r == (s * s * c) ** 2 + b * (s * s * c) + b + 1
    g = w1 * w2 ** 2 + w2
    assert g.substitute_reciprocal("w2", "w1") == w1 + w1
