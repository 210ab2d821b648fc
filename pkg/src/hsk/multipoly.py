"""Sparse multivariate polynomials over Q(i) in a fixed named-variable ring.

Terms are stored as a map from exponent tuples to Gaussian-rational
coefficients; zero coefficients are never stored, so equality is term-map
equality.  Polynomials are immutable and safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .exactnum import (GaussianRational, QuadExt, RadicandMismatch, ZERO_G,
                       ONE_G, IMAG, as_gaussian)

ScalarLike = Union[int, Fraction, GaussianRational]

STANDARD_NAMES = ("w1", "w2", "w3", "k1", "k2", "r", "s", "b", "c")


class VarRing:
    """An ordered tuple of distinct variable names."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        self.names = names
        self._index = {n: k for k, n in enumerate(names)}

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no variable {name!r} in ring {self.names}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: ScalarLike) -> "Polynomial":
        g = as_gaussian(c)
        if not g:
            return self.zero()
        return Polynomial(self, {(0,) * self.arity: g})

    def var(self, name: str) -> "Polynomial":
        exps = [0] * self.arity
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): ONE_G})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(n) for n in self.names)

    def __eq__(self, other):
        return isinstance(other, VarRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarRing({self.names!r})"


def standard_ring() -> VarRing:
    """The canonical nine-variable ring (w1, w2, w3, k1, k2, r, s, b, c)."""
    return VarRing(STANDARD_NAMES)


class RingMismatch(ValueError):
    pass


class Polynomial:
    """Immutable sparse polynomial with Gaussian-rational coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: VarRing, terms: Mapping[tuple, GaussianRational]):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    # -- construction helpers ------------------------------------------------

    def _same_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatch(
                f"ring mismatch: {self.ring.names} vs {other.ring.names}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._same_ring(other)
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.ring.constant(other)
        return None

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            g = as_gaussian(other)
            if not g:
                return self.ring.zero()
            return Polynomial(self.ring,
                              {e: c * g for e, c in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(self.terms) > len(o.terms):
            f, g = o, self
        else:
            f, g = self, o
        out: dict = {}
        for e1, c1 in f.terms.items():
            for e2, c2 in g.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                v = out.get(e)
                if v is None:
                    out[e] = c
                else:
                    v = v + c
                    if v:
                        out[e] = v
                    else:
                        del out[e]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            g = as_gaussian(other)
            return self * g.inverse()
        if isinstance(other, Polynomial) and other.is_constant():
            return self * other.constant_value().inverse()
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out, base = self.ring.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates and views --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.ring.arity}

    def constant_value(self) -> GaussianRational:
        if self.is_zero():
            return ZERO_G
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms[(0,) * self.ring.arity]

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        k = self.ring.index(name)
        return max(e[k] for e in self.terms)

    def coefficient_of(self, name: str, power: int) -> "Polynomial":
        """Collect terms with the given exponent of one variable (removed)."""
        k = self.ring.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[k] == power:
                e2 = e[:k] + (0,) + e[k + 1:]
                out[e2] = out.get(e2, ZERO_G) + c
        return Polynomial(self.ring, out)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- homomorphisms ---------------------------------------------------------

    def conj_coeffs(self) -> "Polynomial":
        """Replace every coefficient by its Gaussian conjugate."""
        return Polynomial(self.ring,
                          {e: c.conj() for e, c in self.terms.items()})

    def substitute(self, images: Sequence) -> "Polynomial":
        """Apply the ring homomorphism sending variable k to images[k]."""
        if len(images) != self.ring.arity:
            raise ValueError(
                f"expected {self.ring.arity} images, got {len(images)}")
        imgs = []
        target = None
        for im in images:
            if isinstance(im, Polynomial):
                target = im.ring
        for im in images:
            if isinstance(im, Polynomial):
                imgs.append(im)
            else:
                ring = target if target is not None else self.ring
                imgs.append(ring.constant(im))
        ring = imgs[0].ring
        for p in imgs:
            if p.ring != ring:
                raise RingMismatch("images live in different rings")
        pows: list[dict[int, Polynomial]] = [dict() for _ in imgs]

        def power(k: int, e: int) -> Polynomial:
            cache = pows[k]
            got = cache.get(e)
            if got is None:
                got = imgs[k] ** e
                cache[e] = got
            return got

        out = ring.zero()
        for e, c in self.terms.items():
            t = ring.constant(c)
            for k, ek in enumerate(e):
                if ek:
                    t = t * power(k, ek)
            out = out + t
        return out

    def substitute_map(self, mapping: Mapping[str, Union["Polynomial", ScalarLike]]) -> "Polynomial":
        """Substitute by name; unmentioned variables map to themselves."""
        images: list = []
        for n in self.ring.names:
            images.append(mapping.get(n, self.ring.var(n)))
        return self.substitute(images)

    def evaluate(self, values: Sequence) -> QuadExt:
        """Exact evaluation at a point with QuadExt coordinates."""
        if len(values) != self.ring.arity:
            raise ValueError(
                f"expected {self.ring.arity} values, got {len(values)}")
        vals = [QuadExt.from_scalar(v) for v in values]
        m = 1
        for v in vals:
            if v.b:
                if m == 1:
                    m = v.m
                elif v.m != m:
                    raise RadicandMismatch(
                        f"evaluation point mixes sqrt({m}) and sqrt({v.m})")
        pows: list[dict[int, QuadExt]] = [dict() for _ in vals]

        def power(k: int, e: int) -> QuadExt:
            cache = pows[k]
            got = cache.get(e)
            if got is None:
                got = vals[k] ** e
                cache[e] = got
            return got

        out = QuadExt(1, 0)
        for e, c in self.terms.items():
            t = QuadExt(1, c)
            for k, ek in enumerate(e):
                if ek:
                    t = t * power(k, ek)
            out = out + t
        return out

    def reduce_power(self, name: str, square_value: "Polynomial") -> "Polynomial":
        """Rewrite var^(2q+r) as square_value^q * var^r (r in {0, 1})."""
        k = self.ring.index(name)
        sq = self._coerce(square_value)
        out = self.ring.zero()
        cache: dict[int, Polynomial] = {}
        for e, c in self.terms.items():
            q, rem = divmod(e[k], 2)
            base = Polynomial(self.ring, {e[:k] + (rem,) + e[k + 1:]: c})
            if q:
                p = cache.get(q)
                if p is None:
                    p = sq ** q
                    cache[q] = p
                base = base * p
            out = out + base
        return out

    def substitute_reciprocal(self, name: str, into: str,
                              clear_to: int | None = None) -> "Polynomial":
        """Return into^D * f with var `name` replaced by 1/`into`.

        D defaults to the degree of f in `name`, the least power clearing
        all denominators.
        """
        k = self.ring.index(name)
        j = self.ring.index(into)
        if k == j:
            raise ValueError("reciprocal substitution needs two variables")
        d = clear_to if clear_to is not None else max(
            (e[k] for e in self.terms), default=0)
        out = {}
        for e, c in self.terms.items():
            if e[k] > d:
                raise ValueError("clear_to is smaller than the degree")
            e2 = list(e)
            e2[j] = e[j] + d - e[k]
            e2[k] = 0
            e2 = tuple(e2)
            out[e2] = out.get(e2, ZERO_G) + c
        return Polynomial(self.ring, out)

    # -- printing ---------------------------------------------------------------

    def sorted_terms(self):
        """Terms in a stable order: by total degree, then exponents, descending."""
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (n if p == 1 else f"{n}^{p}")
                for n, p in zip(self.ring.names, e) if p)
            cs = str(c)
            plain = cs.lstrip("-")
            needs_parens = ("+" in plain) or ("-" in plain) or ("/" in plain and mono)
            if mono:
                if c == ONE_G:
                    term = mono
                elif c == -ONE_G:
                    term = f"-{mono}"
                elif needs_parens:
                    term = f"({cs})*{mono}"
                else:
                    term = f"{cs}*{mono}"
            else:
                term = f"({cs})" if needs_parens and parts else cs
            if parts and not term.startswith("-"):
                parts.append("+")
            parts.append(term)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


# -- parsing ---------------------------------------------------------------------


class ParseError(ValueError):
    pass


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.current = None
        self.advance()

    def advance(self):
        t = self.text
        n = len(t)
        p = self.pos
        while p < n and t[p].isspace():
            p += 1
        if p >= n:
            self.current = ("end", "")
            self.pos = p
            return
        ch = t[p]
        if ch.isdigit():
            q = p
            while q < n and t[q].isdigit():
                q += 1
            self.current = ("int", t[p:q])
            self.pos = q
            return
        if ch.isalpha() or ch == "_":
            q = p
            while q < n and (t[q].isalnum() or t[q] == "_"):
                q += 1
            self.current = ("name", t[p:q])
            self.pos = q
            return
        if ch in "+-*/^()":
            self.current = (ch, ch)
            self.pos = p + 1
            return
        raise ParseError(f"unexpected character {ch!r} at position {p}")

    def expect(self, kind: str):
        if self.current[0] != kind:
            raise ParseError(
                f"expected {kind!r}, found {self.current[1]!r} at {self.pos}")
        val = self.current[1]
        self.advance()
        return val


class _Parser:
    """Shared grammar for polynomial text and exact value text.

    expr   := term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' int)?
    atom   := int | 'i' | 'sqrt' '(' int ')' | name | '(' expr ')'
    """

    def __init__(self, text: str, ring: VarRing | None, allow_sqrt: bool):
        self.toks = _Tokenizer(text)
        self.ring = ring
        self.allow_sqrt = allow_sqrt

    def parse(self):
        v = self.expr()
        if self.toks.current[0] != "end":
            raise ParseError(f"trailing input {self.toks.current[1]!r}")
        return v

    def expr(self):
        v = self.term()
        while self.toks.current[0] in ("+", "-"):
            op = self.toks.current[0]
            self.toks.advance()
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self):
        v = self.unary()
        while self.toks.current[0] in ("*", "/"):
            op = self.toks.current[0]
            self.toks.advance()
            rhs = self.unary()
            if op == "*":
                v = v * rhs
            else:
                v = self._divide(v, rhs)
        return v

    def _divide(self, lhs, rhs):
        if self.ring is not None:
            if not (isinstance(rhs, Polynomial) and rhs.is_constant()):
                raise ParseError("division only by constants in polynomials")
            return lhs / rhs.constant_value()
        return lhs / rhs

    def unary(self):
        if self.toks.current[0] == "-":
            self.toks.advance()
            return -self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        if self.toks.current[0] == "^":
            self.toks.advance()
            k = int(self.toks.expect("int"))
            v = v ** k
        return v

    def atom(self):
        kind, val = self.toks.current
        if kind == "int":
            self.toks.advance()
            return self._const(int(val))
        if kind == "name":
            self.toks.advance()
            if val == "i":
                return self._const(IMAG)
            if val == "sqrt":
                if not self.allow_sqrt:
                    raise ParseError("sqrt is not allowed here")
                self.toks.expect("(")
                n = int(self.toks.expect("int"))
                self.toks.expect(")")
                return QuadExt.sqrt_int(n)
            if self.ring is None:
                raise ParseError(f"unknown symbol {val!r}")
            return self.ring.var(val)
        if kind == "(":
            self.toks.advance()
            v = self.expr()
            self.toks.expect(")")
            return v
        raise ParseError(f"unexpected token {val!r}")

    def _const(self, c):
        if self.ring is not None:
            return self.ring.constant(c)
        return QuadExt(1, as_gaussian(c))


def parse_polynomial(text: str, ring: VarRing) -> Polynomial:
    """Parse text like ``(3+4*i)*w1^2*c - 1/2*s`` into a ring element."""
    return _Parser(text, ring, allow_sqrt=False).parse()


def parse_quadext(text: str) -> QuadExt:
    """Parse an exact value like ``(1+2*sqrt(2)*i)/3``."""
    v = _Parser(text, None, allow_sqrt=True).parse()
    return QuadExt.from_scalar(v)
