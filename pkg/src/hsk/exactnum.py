"""Exact arithmetic: rationals, Gaussian rationals Q(i), and quadratic
extensions Q(i, sqrt(m)) with one radicand per value.

Radicands are kept square-free by construction (sqrt(12) is stored as
2*sqrt(3)), so equality is plain component comparison.  Mixing two
distinct non-trivial radicands raises instead of extending the field.
All values are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

import mpmath

Rational = Fraction

DEFAULT_PRECISION_BITS = 128


class RadicandMismatch(ValueError):
    """Two operands live in Q(i, sqrt(m)) for different square-free m."""


def square_free_split(n: int) -> tuple[int, int]:
    """Return (s, m) with n = s*s*m and m square-free."""
    if n <= 0:
        raise ValueError("radicand must be a positive integer")
    s, m, d, rest = 1, 1, 2, n
    while d * d <= rest:
        e = 0
        while rest % d == 0:
            rest //= d
            e += 1
        s *= d ** (e // 2)
        if e % 2:
            m *= d
        d += 1 if d == 2 else 2
    return s, m * rest


class GaussianRational:
    """Element re + im*i of the field Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE_G, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, QuadExt):
                return other == self
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        ims = "i" if self.im == 1 else ("-i" if self.im == -1 else f"{self.im}*i")
        if self.re == 0:
            return ims
        sep = "+" if self.im > 0 else ""
        return f"{self.re}{sep}{ims}"

    def __complex__(self):
        return float(self.re) + 1j * float(self.im)


ZERO_G = GaussianRational(0)
ONE_G = GaussianRational(1)
IMAG = GaussianRational(0, 1)

_ScalarLike = Union[int, Fraction, GaussianRational]


def as_gaussian(x: _ScalarLike) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")


class QuadExt:
    """Element a + b*sqrt(m) of Q(i, sqrt(m)), a and b Gaussian rationals.

    m is a square-free positive integer; for m == 1 the radical part is
    folded into a, so representations are canonical and equality is
    componentwise.
    """

    __slots__ = ("m", "a", "b")

    def __init__(self, m: int = 1, a=0, b=0):
        a = as_gaussian(a)
        b = as_gaussian(b)
        if b:
            s, m0 = square_free_split(m)
            if s != 1:
                b = b * s
            m = m0
            if m == 1:
                a, b = a + b, ZERO_G
        else:
            m, b = 1, ZERO_G
        self.m = m
        self.a = a
        self.b = b

    @classmethod
    def from_scalar(cls, x) -> "QuadExt":
        if isinstance(x, QuadExt):
            return x
        return cls(1, as_gaussian(x))

    @classmethod
    def sqrt_int(cls, n: int) -> "QuadExt":
        return cls(n, 0, 1)

    def _join(self, other: "QuadExt") -> int:
        if not self.b:
            return other.m
        if not other.b:
            return self.m
        if self.m == other.m:
            return self.m
        raise RadicandMismatch(
            f"mixed radicands sqrt({self.m}) and sqrt({other.m})")

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return QuadExt(1, as_gaussian(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self._join(o)
        return QuadExt(m, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self._join(o)
        return QuadExt(m, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self._join(o)
        return QuadExt(m,
                       self.a * o.a + self.b * o.b * m,
                       self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def radical_conj(self) -> "QuadExt":
        return QuadExt(self.m, self.a, -self.b)

    def inverse(self) -> "QuadExt":
        g = self.a * self.a - self.b * self.b * self.m
        if not g:
            raise ZeroDivisionError("inverse of zero in Q(i, sqrt(m))")
        gi = g.inverse()
        return QuadExt(self.m, self.a * gi, -self.b * gi)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return QuadExt(self.m, -self.a, -self.b)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = QUAD_ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "QuadExt":
        """Complex conjugation; sqrt(m) is real, so only a and b conjugate."""
        return QuadExt(self.m, self.a.conj(), self.b.conj())

    def abs2(self) -> "QuadExt":
        """|z|^2 = z * conj(z); lies in the real subfield."""
        return self * self.conj()

    def is_unit_modulus(self) -> bool:
        return self.abs2() == QUAD_ONE

    @property
    def is_gaussian(self) -> bool:
        return not self.b

    def gaussian_value(self) -> GaussianRational:
        if self.b:
            raise ValueError(f"{self} has a non-trivial radical part")
        return self.a

    def rational_value(self) -> Fraction:
        g = self.gaussian_value()
        if g.im != 0:
            raise ValueError(f"{self} is not real")
        return g.re

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.m == o.m and self.a == o.a and self.b == o.b

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.m, self.a, self.b))

    def embed(self, precision_bits: int = DEFAULT_PRECISION_BITS):
        """Embed with sqrt(m) > 0 as a pair of mpmath reals (re, im).

        The result carries ``precision_bits`` bits; relative error is below
        2**(1 - precision_bits).
        """
        if precision_bits < 53:
            raise ValueError("precision_bits must be at least 53")
        with mpmath.workprec(precision_bits + 16):
            root = mpmath.sqrt(self.m)
            re = _frac_to_mpf(self.a.re) + _frac_to_mpf(self.b.re) * root
            im = _frac_to_mpf(self.a.im) + _frac_to_mpf(self.b.im) * root
        with mpmath.workprec(precision_bits):
            return (+re, +im)

    def __complex__(self):
        re, im = self.embed(64)
        return float(re) + 1j * float(im)

    def __repr__(self):
        return f"QuadExt({self.m}, {self.a!r}, {self.b!r})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        re = _real_quad_str(self.a.re, self.b.re, self.m)
        im = _real_quad_str(self.a.im, self.b.im, self.m)
        if im == "0":
            return re
        if re == "0":
            return f"({im})*i"
        return f"({re})+({im})*i"


def _frac_to_mpf(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def _real_quad_str(p: Fraction, q: Fraction, m: int) -> str:
    if q == 0:
        return str(p)
    if q == 1:
        rad = f"sqrt({m})"
    elif q == -1:
        rad = f"-sqrt({m})"
    else:
        rad = f"{q}*sqrt({m})"
    if p == 0:
        return rad
    sep = "+" if q > 0 else ""
    return f"{p}{sep}{rad}"


QUAD_ZERO = QuadExt(1, 0)
QUAD_ONE = QuadExt(1, 1)
QUAD_I = QuadExt(1, IMAG)


def embed_complex(x: QuadExt, precision_bits: int = DEFAULT_PRECISION_BITS):
    """Certified embedding of x into (re, im) mpmath floats."""
    return QuadExt.from_scalar(x).embed(precision_bits)
