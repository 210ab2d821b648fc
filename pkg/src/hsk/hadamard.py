"""Hadamard-condition polynomials for the 4x4 eigenmatrix template,
candidate weight triples, exact matrix verification, the classified
weight families, and the nonexistence arguments for the other spectra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactnum import (GaussianRational, QuadExt, QUAD_ONE, IMAG,
                       square_free_split, as_gaussian)
from .multipoly import Polynomial, VarRing, standard_ring
from .schemes import AssociationScheme, SchemeParameters, params_from_ac, song_case
from . import qlinalg

NUMERIC_NAMES = ("w1", "w2", "w3", "b")


def _template_rows(ring: VarRing, k1, k2, r, s, b):
    """The four eigenmatrix rows as ring elements; parameters may be ring
    variables or exact scalars."""
    one = ring.one()
    k1, k2, r, s, b = (one * v for v in (k1, k2, r, s, b))
    i_half = GaussianRational(0, Fraction(1, 2))
    half = Fraction(1, 2)
    row0 = [one, k1 * half, k1 * half, k2]
    row1 = [one, r * half + b * i_half, r * half - b * i_half, -(r + one)]
    row2 = [v.conj_coeffs() for v in row1]
    row3 = [one, s * half, s * half, -(s + one)]
    return [row0, row1, row2, row3]


def _condition_polys(ring: VarRing, rows, n) -> list[Polynomial]:
    w1, w2, w3 = (ring.var("w1"), ring.var("w2"), ring.var("w3"))
    weights = [ring.one(), w1, w2, w3]
    cofactor = [w1 * w2 * w3, w2 * w3, w1 * w3, w1 * w2]
    out = []
    for k in range(4):
        direct = ring.zero()
        recip = ring.zero()
        for j in range(4):
            direct = direct + rows[k][j] * weights[j]
            recip = recip + rows[k][j].conj_coeffs() * cofactor[j]
        out.append(direct * recip - n * cofactor[0])
    return out


class HadamardSystem:
    """The four polynomials whose common unit-modulus zeros are exactly the
    weight triples making W = A0 + w1 A1 + w2 A2 + w3 A3 Hadamard.

    A symbolic system lives in the nine-variable ring with the template
    parameters as variables.  A numeric system substitutes exact parameter
    values and lives in (w1, w2, w3, b) with b^2 already rewritten to its
    rational value, so every condition has degree at most one in b.
    """

    def __init__(self, ring: VarRing, conditions: Sequence[Polynomial],
                 params: SchemeParameters | dict | None = None,
                 b2: Fraction | None = None):
        self.ring = ring
        self.conditions = tuple(conditions)
        self.params = params
        self.b2 = b2

    @property
    def symbolic(self) -> bool:
        return self.b2 is None

    def n_value(self) -> int:
        if self.symbolic:
            raise ValueError("symbolic system has no numeric point count")
        p = self.params
        return p["k1"] + p["k2"] + 1 if isinstance(p, dict) else p.n

    def evaluate_split(self, w1: QuadExt, w2: QuadExt, w3: QuadExt):
        """Exact values determining the four conditions at a weight triple.

        Returns (e0, e3, A, B) where e1 = A + b*B and e2 = A - b*B; the
        four conditions vanish iff all four returned values are zero, which
        stays decidable even when the weights and b need different radicands.
        """
        if self.symbolic:
            raise ValueError("numeric system required")
        point3 = (w1, w2, w3)
        e0 = self.conditions[0].coefficient_of("b", 0)
        e3 = self.conditions[3].coefficient_of("b", 0)
        e1a = self.conditions[1].coefficient_of("b", 0)
        e1b = self.conditions[1].coefficient_of("b", 1)
        vals = []
        for poly in (e0, e3, e1a, e1b):
            images = [point3[0], point3[1], point3[2], 0]
            vals.append(poly.evaluate(images))
        return tuple(vals)


def build_system(params=None, symbolic: bool = False) -> HadamardSystem:
    """Build the condition polynomials.

    With ``symbolic=True`` the system is built over the canonical
    nine-variable ring; otherwise ``params`` must carry exact values for
    (k1, k2, r, s) and b^2 (a SchemeParameters, or a mapping with keys
    k1, k2, r, s, b2).
    """
    if symbolic:
        ring = standard_ring()
        k1, k2, r, s, b = (ring.var(n) for n in ("k1", "k2", "r", "s", "b"))
        rows = _template_rows(ring, k1, k2, r, s, b)
        n = ring.one() + k1 + k2
        return HadamardSystem(ring, _condition_polys(ring, rows, n))

    if params is None:
        raise ValueError("numeric build needs parameters")
    if isinstance(params, SchemeParameters):
        values = {"k1": params.k1, "k2": params.k2, "r": params.r,
                  "s": params.s, "b2": (params.b * params.b).rational_value()}
        keep = params
    else:
        values = dict(params)
        keep = values
    ring = VarRing(NUMERIC_NAMES)
    b = ring.var("b")
    rows = _template_rows(ring, values["k1"], values["k2"],
                          values["r"], values["s"], b)
    n = 1 + values["k1"] + values["k2"]
    b2 = Fraction(values["b2"])
    conds = [p.reduce_power("b", ring.constant(b2))
             for p in _condition_polys(ring, rows, n)]
    return HadamardSystem(ring, conds, params=keep, b2=b2)


def system_from_ac(a: int, c: int) -> HadamardSystem:
    return build_system(params_from_ac(a, c))


@dataclass(frozen=True)
class HadamardCandidate:
    """A weight triple with its provenance."""

    w1: QuadExt
    w2: QuadExt
    w3: QuadExt
    family: str  # one of a, b, c, d, e, custom
    a: int | None = None
    c: int | None = None
    also: tuple[str, ...] = ()
    note: str = ""

    def weights(self) -> tuple[QuadExt, QuadExt, QuadExt]:
        return (self.w1, self.w2, self.w3)

    def __str__(self):
        tags = "/".join((self.family,) + self.also)
        return f"[{tags}] ({self.w1}, {self.w2}, {self.w3})"


def check_common_zero(system: HadamardSystem, candidate) -> bool:
    """True iff all four conditions vanish exactly at the candidate."""
    if isinstance(candidate, HadamardCandidate):
        w1, w2, w3 = candidate.weights()
    else:
        w1, w2, w3 = (QuadExt.from_scalar(v) for v in candidate)
    return all(not v for v in system.evaluate_split(w1, w2, w3))


# -- matrices ------------------------------------------------------------------


def build_W(scheme: AssociationScheme, candidate) -> list[list[QuadExt]]:
    """Entrywise W = A0 + w1 A1 + w2 A2 + w3 A3 over the weights' field."""
    if isinstance(candidate, HadamardCandidate):
        ws = candidate.weights()
    else:
        ws = tuple(QuadExt.from_scalar(v) for v in candidate)
    if scheme.d != 3:
        raise ValueError(f"scheme has {scheme.d} classes, need 3")
    tmap = scheme.transpose_map()
    if tmap != [0, 2, 1, 3]:
        raise ValueError(
            f"scheme shape mismatch: transpose map {tmap}, need [0, 2, 1, 3]")
    lookup = (QUAD_ONE,) + ws
    rel = scheme.relation
    return [[lookup[rel[x, y]] for y in range(scheme.n)]
            for x in range(scheme.n)]


def check_hadamard_matrix(W: Sequence[Sequence[QuadExt]]) -> bool:
    """Exact check of unit-modulus entries and W conj(W)^T = n I."""
    n = len(W)
    rows = [[QuadExt.from_scalar(v) for v in row] for row in W]
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix must be square")
        for v in row:
            if not v.is_unit_modulus():
                return False
    product = qlinalg.mul(rows, qlinalg.conj_transpose(rows))
    return qlinalg.equal(product, qlinalg.identity(n, n))


# -- the classified families -----------------------------------------------------


_FAMILY_A_UNITS = (
    "i", "-i", "(3+4*i)/5", "(3-4*i)/5", "(4+3*i)/5", "(4-3*i)/5",
    "(5+12*i)/13", "(5-12*i)/13", "1", "(8+15*i)/17",
)


def _gaussian_unit(text: str) -> QuadExt:
    from .multipoly import parse_quadext
    return parse_quadext(text)


def family_b_weights(a: int) -> tuple[QuadExt, QuadExt]:
    """The conjugate-pair weights for the second infinite family at (a, 1)."""
    if a < 1:
        raise ValueError("a must be a positive integer")
    d = 2 * a * (a - 1)
    den = 2 * a * a - 2 * a + 1
    if d == 0:
        re = GaussianRational(Fraction(-(a - 1), den), Fraction(-a, den))
        w = QuadExt(1, re)
        return w, w
    sq, m = square_free_split(d)
    out = []
    for sign in (+1, -1):
        rational = GaussianRational(Fraction(-(a - 1), den), Fraction(-a, den))
        radical = GaussianRational(Fraction(-sign * a * sq, den),
                                   Fraction(sign * (a - 1) * sq, den))
        out.append(QuadExt(m, rational, radical))
    return tuple(out)


class EnumerationResult(Sequence):
    """Sequence of candidates plus the continuum description and notes."""

    def __init__(self, candidates, continuum: str | None, notes: list[str]):
        self._candidates = tuple(candidates)
        self.continuum = continuum
        self.notes = tuple(notes)

    def __getitem__(self, idx):
        return self._candidates[idx]

    def __len__(self):
        return len(self._candidates)

    def __repr__(self):
        return (f"EnumerationResult({len(self)} candidates, "
                f"continuum={self.continuum!r})")


def enumerate_families(a: int, c: int,
                       samples_for_family_a: int = 4) -> EnumerationResult:
    """All classified weight triples valid at (a, c), exactly.

    The one-parameter family is emitted as its defining relation plus
    exact sample points (always containing w = +/-i); the second infinite
    family needs a >= 2 since at a = 1 it degenerates to equal weights.
    Every emitted candidate is verified to be a common zero.
    """
    if a < 1 or c < 1:
        raise ValueError("a and c must be positive integers")
    system = system_from_ac(a, c)
    candidates: list[HadamardCandidate] = []
    notes: list[str] = []
    continuum = None
    minus_one = QuadExt.from_scalar(-1)
    one = QUAD_ONE

    if c == 1:
        continuum = "(w, -w, 1) for every |w| = 1"
        count = max(2, samples_for_family_a)
        for text in _FAMILY_A_UNITS[:count]:
            w = _gaussian_unit(text)
            candidates.append(HadamardCandidate(
                w1=w, w2=-w, w3=one, family="a", a=a, c=c,
                note=f"sample w = {text} of the one-parameter family"))
        if a == 1:
            wp, wm = family_b_weights(1)
            notes.append(
                "conjugate-pair family degenerates at a = 1 to the equal-"
                f"weight triple ({wp}, {wm}, {wp * wm}); excluded since the "
                "first two weights must differ")
        else:
            wp, wm = family_b_weights(a)
            pair = [(wp, wm), (wm, wp)]
            b_cands = [HadamardCandidate(
                w1=u, w2=v, w3=u * v, family="b", a=a, c=c) for u, v in pair]
            if a == 2:
                notes.append("conjugate-pair weights are Gaussian at a = 2 "
                             "and coincide with two isolated triples")
            else:
                candidates.extend(b_cands)
        if a == 2:
            iso = []
            for sign_text in ("(3+4*i)/5", "(3-4*i)/5"):
                w = _gaussian_unit(sign_text)
                iso.append(HadamardCandidate(
                    w1=w, w2=minus_one, w3=-w, family="c", a=a, c=c))
                iso.append(HadamardCandidate(
                    w1=minus_one, w2=w, w3=-w, family="c", a=a, c=c))
            wp, wm = family_b_weights(2)
            bset = {(wp, wm, wp * wm), (wm, wp, wm * wp)}
            for cand in iso:
                if cand.weights() in bset:
                    cand = HadamardCandidate(
                        w1=cand.w1, w2=cand.w2, w3=cand.w3, family="c",
                        a=a, c=c, also=("b",),
                        note="same triple as a conjugate-pair weight")
                candidates.append(cand)

    if (a, c) == (1, 3):
        for text in ("(1+2*sqrt(2)*i)/3", "(1-2*sqrt(2)*i)/3"):
            w = _gaussian_unit(text)
            candidates.append(HadamardCandidate(
                w1=w, w2=minus_one, w3=one, family="d", a=a, c=c))
            candidates.append(HadamardCandidate(
                w1=minus_one, w2=w, w3=one, family="d", a=a, c=c))
        for w in (QuadExt(1, IMAG), QuadExt(1, -IMAG)):
            candidates.append(HadamardCandidate(
                w1=w, w2=minus_one, w3=-w, family="e", a=a, c=c))
            candidates.append(HadamardCandidate(
                w1=minus_one, w2=w, w3=-w, family="e", a=a, c=c))

    for cand in candidates:
        for w in cand.weights():
            if not w.is_unit_modulus():
                raise AssertionError(f"non-unit weight emitted: {cand}")
        if cand.w1 == cand.w2:
            raise AssertionError(f"equal-weight candidate emitted: {cand}")
        if not check_common_zero(system, cand):
            raise AssertionError(f"candidate fails the conditions: {cand}")
    return EnumerationResult(candidates, continuum, notes)


# -- nonexistence for the other spectra -------------------------------------------


@dataclass
class NonexistenceReport:
    case: str
    k1: int
    k2: int
    params: dict
    steps: list[str]
    forced_weight: str | None
    m1: Fraction | None
    nonexistent: bool

    def __str__(self):
        head = (f"spectrum case ({self.case}), k1 = {self.k1}, "
                f"k2 = {self.k2}: ")
        return head + "; ".join(self.steps)


def nonexistence_check(case: str, k1: int, k2: int) -> NonexistenceReport:
    """Reproduce the nonexistence argument for the non-self-dual spectra.

    Case "ii": the last condition forces w3^2 + (k1+k2-1) w3 + 1 = 0; a
    unit-modulus root needs k1 + k2 = 3, and then the rank of the first
    non-trivial idempotent would be 1/2.  Case "iii": the forced quadratic
    in w2 has coefficient 2(k1+2k2)/(k1+2) >= 2 with equality only at
    k2 = 1, and then that rank would be k1(k1+2)/(k1+1), never integral.
    """
    if k1 <= 0 or k1 % 2:
        raise ValueError("k1 must be an even positive integer")
    if k2 <= 0:
        raise ValueError("k2 must be a positive integer")
    steps: list[str] = []
    if case == "ii":
        info = song_case(k1, k2, -(k2 + 1), 0)
        coeff = k1 + k2 - 1
        steps.append(f"any solution satisfies w3^2 + {coeff}*w3 + 1 = 0")
        if coeff > 2:
            steps.append(f"coefficient {coeff} > 2, so no root has modulus 1")
            return NonexistenceReport(case, k1, k2,
                                      {"r": -(k2 + 1), "s": 0,
                                       "b2": info.b2_expected},
                                      steps, None, None, True)
        steps.append("coefficient equals 2, forcing w3 = -1 and k1 + k2 = 3")
        steps.append(f"k1 even leaves (k1, k2) = (2, 1)")
        m1 = info.m1
        steps.append(f"rank of the first non-trivial idempotent would be "
                     f"{m1}, not an integer")
        return NonexistenceReport(case, k1, k2,
                                  {"r": -(k2 + 1), "s": 0,
                                   "b2": info.b2_expected},
                                  steps, "w3 = -1", m1, not info.m1_integral)
    if case == "iii":
        info = song_case(k1, k2, -1, k1)
        num, den = 2 * (k1 + 2 * k2), k1 + 2
        steps.append(f"with w1 = 1, any solution satisfies "
                     f"w2^2 + ({Fraction(num, den)})*w2 + 1 = 0")
        if num > 2 * den:
            steps.append(f"coefficient {Fraction(num, den)} > 2, "
                         "so no root has modulus 1")
            return NonexistenceReport(case, k1, k2,
                                      {"r": -1, "s": k1,
                                       "b2": info.b2_expected},
                                      steps, None, None, True)
        steps.append("coefficient equals 2, forcing w2 = -1 and k2 = 1")
        m1 = info.m1
        steps.append(f"rank of the first non-trivial idempotent would be "
                     f"{m1} = k1(k1+2)/(k1+1), not an integer")
        return NonexistenceReport(case, k1, k2,
                                  {"r": -1, "s": k1, "b2": info.b2_expected},
                                  steps, "w2 = -1", m1, not info.m1_integral)
    raise ValueError(f"case must be 'ii' or 'iii', got {case!r}")
