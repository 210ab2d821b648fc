import random
from fractions import Fraction

import mpmath
import pytest

from hsk.exactnum import (GaussianRational, QuadExt, RadicandMismatch,
                          embed_complex, square_free_split, IMAG, QUAD_ONE)
from hsk.multipoly import parse_quadext


def test_square_free_split():
    assert square_free_split(12) == (2, 3)
    assert square_free_split(1) == (1, 1)
    assert square_free_split(24) == (2, 6)
    assert square_free_split(49) == (7, 1)
    assert square_free_split(30) == (1, 30)
    with pytest.raises(ValueError):
        square_free_split(0)


def test_gaussian_basics():
    z = GaussianRational(Fraction(3, 5), Fraction(4, 5))
    assert z * z.conj() == GaussianRational(1)
    assert z * z.inverse() == GaussianRational(1)
    assert (z + 1) - 1 == z
    assert IMAG * IMAG == GaussianRational(-1)
    with pytest.raises(ZeroDivisionError):
        GaussianRational(0).inverse()


def test_sqrt3_squares_to_3():
    one = QuadExt(3, 1, 0)
    root3 = QuadExt(3, 0, 1)
    prod = one * root3
    assert prod == root3
    assert prod * prod == QuadExt.from_scalar(3)


def test_unit_weight_with_sqrt2():
    w = parse_quadext("(1+2*sqrt(2)*i)/3")
    assert w.conj() * w == QUAD_ONE
    assert w.is_unit_modulus()


def test_family_b_weight_modulus_at_a3():
    # oracle by hand: with x = -2 - 6*sqrt(3) and y = -3 + 4*sqrt(3) the
    # squared modulus is (x^2 + y^2)/169; rational part
    # (-2)^2 + (-3)^2 + 3*((-6)^2 + 4^2) = 169, radical part
    # 2*(-2)(-6) + 2*(-3)(4) = 0.
    rational_part = (-2) ** 2 + (-3) ** 2 + 3 * ((-6) ** 2 + 4 ** 2)
    radical_part = 2 * (-2) * (-6) + 2 * (-3) * 4
    assert (rational_part, radical_part) == (169, 0)
    w = parse_quadext("(-2-6*sqrt(3)+(-3+4*sqrt(3))*i)/13")
    assert w.abs2() == QUAD_ONE


def test_radicand_normalization():
    x = QuadExt(12, 0, 1)
    assert (x.m, x.b) == (3, GaussianRational(2))
    y = QuadExt(4, 5, 1)
    assert y.m == 1 and y.a == GaussianRational(7)
    z = QuadExt(24, 0, 1)
    assert (z.m, z.b) == (6, GaussianRational(2))


def test_radicand_mixing_rejected():
    a = QuadExt(2, 0, 1)
    b = QuadExt(3, 0, 1)
    with pytest.raises(RadicandMismatch):
        a * b
    # a trivial radical part may join any field
    c = QuadExt(2, 7, 0)
    assert (c + b).m == 3


def test_embed_examples():
    re, im = embed_complex(QuadExt(1, IMAG), 53)
    assert (float(re), float(im)) == (0.0, 1.0)
    re, im = embed_complex(parse_quadext("(3-4*i)/5"), 53)
    assert abs(float(re) - 0.6) < 1e-15
    assert abs(float(im) + 0.8) < 1e-15
    b = QuadExt(3, 0, 2)
    re, im = b.embed(53)
    assert abs(float(re) - 3.4641016151377544) < 1e-15
    assert float(im) == 0.0
    assert b * b == QuadExt.from_scalar(12)


def test_embed_precision_contract():
    x = parse_quadext("(-2-6*sqrt(3)+(-3+4*sqrt(3))*i)/13")
    re, im = x.embed(128)
    with mpmath.workprec(250):
        root = mpmath.sqrt(3)
        ref_re = (mpmath.mpf(-2) - 6 * root) / 13
        ref_im = (mpmath.mpf(-3) + 4 * root) / 13
        assert abs(mpmath.mpf(re) - ref_re) <= abs(ref_re) * mpmath.mpf(2) ** -120
        assert abs(mpmath.mpf(im) - ref_im) <= abs(ref_im) * mpmath.mpf(2) ** -120
    with pytest.raises(ValueError):
        x.embed(32)


def _random_quad(rng, m):
    def g():
        return GaussianRational(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                                Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
    return QuadExt(m, g(), g())


def test_field_axioms_random():
    rng = random.Random(20240811)
    for _ in range(300):
        m = rng.choice([1, 2, 3, 5, 6, 7])
        x, y, z = (_random_quad(rng, m) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        assert x.conj().conj() == x
        assert x.abs2().a.im == 0 and x.abs2().b.im == 0
        if x:
            assert x * x.inverse() == QUAD_ONE


def test_embed_is_multiplicative():
    rng = random.Random(7)
    for _ in range(60):
        m = rng.choice([1, 2, 3, 6])
        x, y = _random_quad(rng, m), _random_quad(rng, m)
        xr, xi = x.embed(80)
        yr, yi = y.embed(80)
        pr, pi = (x * y).embed(80)
        with mpmath.workprec(90):
            want_r = mpmath.mpf(xr) * yr - mpmath.mpf(xi) * yi
            want_i = mpmath.mpf(xr) * yi + mpmath.mpf(xi) * yr
            scale = max(1, abs(want_r), abs(want_i))
            assert abs(want_r - pr) <= scale * mpmath.mpf(2) ** -70
            assert abs(want_i - pi) <= scale * mpmath.mpf(2) ** -70


def test_division_verified_by_multiplying_back():
    rng = random.Random(99)
    for _ in range(200):
        m = rng.choice([1, 2, 3])
        x, y = _random_quad(rng, m), _random_quad(rng, m)
        if not y:
            continue
        assert (x / y) * y == x


def test_str_parse_roundtrip():
    rng = random.Random(5)
    for _ in range(50):
        m = rng.choice([1, 2, 3, 6])
        x = _random_quad(rng, m)
        assert parse_quadext(str(x)) == x
