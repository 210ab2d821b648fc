"""The exact boolean checklist certifying the classification.

Every entry replays one assertion with this package's own polynomial
engine: the expansion of the four Hadamard conditions, their difference
factorizations, the swap symmetry, the fractional-rank exclusions, the
specializations along the two w3 branches, the quartic ideal memberships
with their resolvent discriminants, and the forced quadratics ruling out
the remaining spectra.  All checks run over the canonical nine-variable
ring; the ideal memberships pre-eliminate the linearly determined
variables before Buchberger as the engine expects.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import GaussianRational, IMAG
from .groebner import MonomialOrder, buchberger, eliminate_linear
from .hadamard import build_system
from .multipoly import Polynomial, standard_ring
from .schemes import multiplicity_m1

SUITE_ORDER_NAMES = ("w1", "w2", "w3", "b", "k1", "k2", "r", "s", "c")


@dataclass
class CheckResult:
    name: str
    ok: bool
    claim: str
    millis: float
    detail: str = ""

    def json_entry(self) -> dict:
        return {"check": self.name,
                "status": "pass" if self.ok else "fail",
                "paper_ref": self.claim,
                "millis": round(self.millis, 3),
                "detail": self.detail}


@dataclass
class IdentityReport:
    entries: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def passed(self) -> int:
        return sum(1 for e in self.entries if e.ok)

    def to_json(self, indent=2) -> str:
        return json.dumps({
            "checks": [e.json_entry() for e in self.entries],
            "passed": self.passed,
            "failed": len(self.entries) - self.passed,
        }, indent=indent)

    def to_text(self) -> str:
        lines = []
        for e in self.entries:
            status = "PASS" if e.ok else "FAIL"
            lines.append(f"{status}  {e.name}")
            if e.detail and not e.ok:
                lines.append(f"      {e.detail}")
        lines.append(f"{self.passed}/{len(self.entries)} checks passed")
        return "\n".join(lines)


class _Workspace:
    """Lazily shared symbolic objects for the whole suite."""

    def __init__(self):
        self.ring = standard_ring()
        (self.w1, self.w2, self.w3, self.k1, self.k2,
         self.r, self.s, self.b, self.c) = self.ring.gens()
        self.i = self.ring.constant(IMAG)
        self.order = MonomialOrder.degrevlex(self.ring, SUITE_ORDER_NAMES)
        self._cache: dict = {}

    def _get(self, key, builder):
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    # -- symbolic systems ------------------------------------------------------

    @property
    def conditions(self):
        return self._get("conditions",
                         lambda: build_system(symbolic=True).conditions)

    @property
    def n(self):
        return self.ring.one() + self.k1 + self.k2

    # half of -s plays the clique parameter; the specialized system follows
    @property
    def a(self):
        return self._get("a", lambda: self.s * Fraction(-1, 2))

    @property
    def K1(self):
        return self._get("K1", lambda: 2 * self.a * (2 * self.a - 1) * self.c)

    @property
    def K2(self):
        return self._get("K2", lambda: 2 * self.a - 1)

    @property
    def eq15(self):
        return self._get("eq15", lambda: self.K2 - self.k2)

    @property
    def eq16(self):
        return self._get("eq16", lambda: self.K1 - self.k1)

    @property
    def eq17(self):
        return self._get("eq17",
                         lambda: self.b * self.b - 4 * self.a * self.a * self.c)

    @property
    def L(self):
        return self._get("L", lambda: ((2 * self.a - 1) * self.c * self.c
                                       - 2 * (self.a + 1) * self.c - 1))

    def spec(self, f: Polynomial) -> Polynomial:
        """Specialize to the multipartite-fission spectrum: r -> 0 and the
        parametrized k1, k2."""
        return f.substitute_map({"k1": self.K1, "k2": self.K2, "r": 0})

    @property
    def specialized(self):
        return self._get("specialized",
                         lambda: tuple(self.spec(e) for e in self.conditions))

    @property
    def lem4_generator(self):
        def build():
            raw = (self.b * self.b * self.k2
                   - self.k1 * (self.k2 + 1))
            return self.spec(raw)
        return self._get("lem4", build)

    @property
    def g(self):
        return self._get("g", lambda: (2 * (self.w1 * self.w2 + 1)
                                       + ((2 * self.a - 1) * self.c - 1)
                                       * (self.w1 + self.w2)))

    def g1(self, inner_sign: int) -> Polynomial:
        """The cubic cofactor; inner_sign picks the contested coefficient
        a((2a-1)c + inner_sign) on (w1 + w2)."""
        return ((2 * self.a - 1) * (self.w1 * self.w2 + self.w3 ** 2)
                + (self.w1 * self.w2
                   + self.a * ((2 * self.a - 1) * self.c + inner_sign)
                   * (self.w1 + self.w2) + 1) * self.w3)

    @property
    def f1_coeffs(self):
        def build():
            a, c = self.a, self.c
            a0 = 2 * a * c
            a1 = 2 * (c - 1) * ((2 * a - 1) * c - 1)
            a2 = (4 * a * c * c * ((c - 1) * a - c)
                  + (c - 1) * (c * c + 2 * c + 5))
            return a0, a1, a2
        return self._get("f1", build)

    @property
    def f2_coeffs(self):
        def build():
            a, c = self.a, self.c
            b0 = (c + 1) * (4 * a * c * (a - 1) + c + 1)
            b1 = 4 * (a * (c - 1) + 2) * ((2 * a - 1) * c - 1)
            b2 = (2 * a * (2 * a - 1) ** 2 * c ** 3
                  - 2 * (2 * a - 1) * (2 * a * a - a + 1) * c * c
                  - 2 * (a - 2) * c - 2 * (5 * a - 9))
            return b0, b1, b2
        return self._get("f2", build)

    def palindromic_quartic(self, coeffs, var: Polynomial) -> Polynomial:
        c0, c1, c2 = coeffs
        return (c0 * var ** 4 + c1 * var ** 3 + c2 * var ** 2
                + c1 * var + c0)

    def branch_basis(self, branch: str):
        """Reduced Groebner basis for the specialized ideal joined with one
        w3 branch and g; the k's, w3, and even b powers are eliminated
        first, which the linear generators make exact."""
        def build():
            if branch == "one":
                branch_gen = self.w3 - 1
            else:
                branch_gen = self.w1 * self.w2 - self.w3
            gens = (list(self.specialized)
                    + [self.lem4_generator, self.eq15, self.eq16, self.eq17,
                       branch_gen, self.g])
            reduced, _ = eliminate_linear(gens, ["k2", "k1", "w3"])
            s2c = self.s * self.s * self.c
            reduced = [p.reduce_power("b", s2c) for p in reduced]
            stray = [p for p in reduced if p.degree_in("b") > 0]
            if stray:
                raise AssertionError(
                    "radical variable survived the parity reduction")
            unique = []
            for p in reduced:
                if p and p not in unique:
                    unique.append(p)
            return buchberger(unique, self.order)
        return self._get(("basis", branch), build)


def _eq(lhs: Polynomial, rhs: Polynomial):
    ok = lhs == rhs
    return ok, "" if ok else f"difference {lhs - rhs}"


def _expected_condition(ws: _Workspace, k: int) -> Polynomial:
    w1, w2, w3 = ws.w1, ws.w2, ws.w3
    k1, k2, r, s, b = ws.k1, ws.k2, ws.r, ws.s, ws.b
    i = ws.i
    n = ws.n
    half = Fraction(1, 2)
    if k == 0:
        return ((1 + k1 * half * (w1 + w2) + k2 * w3)
                * (w1 * w2 * w3 + k1 * half * (w1 + w2) * w3 + k2 * w1 * w2)
                - n * w1 * w2 * w3)
    if k in (1, 2):
        sign = 1 if k == 1 else -1
        u = (r + sign * b * i) * half
        v = (r - sign * b * i) * half
        return ((1 + u * w1 + v * w2 - (r + 1) * w3)
                * (w1 * w2 * w3 + (u * w1 + v * w2) * w3 - (r + 1) * w1 * w2)
                - n * w1 * w2 * w3)
    return ((1 + s * (w1 + w2) * half - (s + 1) * w3)
            * (w1 * w2 * w3 + s * (w1 + w2) * half * w3 - (s + 1) * w1 * w2)
            - n * w1 * w2 * w3)


# -- individual checks ----------------------------------------------------------


def _check_row_sums(ws: _Workspace):
    rows = build_system(symbolic=True)
    from .hadamard import _template_rows
    mat = _template_rows(ws.ring, ws.k1, ws.k2, ws.r, ws.s, ws.b)
    top = sum(mat[0][1:], mat[0][0])
    ok = top == ws.n
    details = []
    for idx in (1, 2, 3):
        total = sum(mat[idx][1:], mat[idx][0])
        if not total.is_zero():
            ok = False
            details.append(f"row {idx} sums to {total}")
    return ok, "; ".join(details)


def _check_expansion(k):
    def run(ws: _Workspace):
        return _eq(ws.conditions[k], _expected_condition(ws, k))
    return run


def _check_difference_e0_e3(ws: _Workspace):
    w1, w2, w3 = ws.w1, ws.w2, ws.w3
    k1, k2, s = ws.k1, ws.k2, ws.s
    c2 = (2 * (k1 * k2 + s * s + s) * (w1 + w2)
          + 4 * (k2 + s + 1) * w1 * w2)
    c1 = (k1 * k1 * (w1 + w2) ** 2
          + 2 * (k1 - s) * (w1 * w2 + 1) * (w1 + w2)
          - s * s * (w1 ** 2 + w2 ** 2)
          + 2 * (2 * k2 * k2 - 3 * s * s - 4 * s - 2) * w1 * w2)
    c0 = 2 * ((k1 * k2 + s * (s + 1)) * (w1 + w2)
              + 2 * (k2 + s + 1)) * w1 * w2
    lhs = 4 * (ws.conditions[0] - ws.conditions[3])
    return _eq(lhs, c2 * w3 ** 2 + c1 * w3 + c0)


def _check_difference_e1_e2(ws: _Workspace):
    w1, w2, w3, r, b = ws.w1, ws.w2, ws.w3, ws.r, ws.b
    rhs = (-b * ws.i * (w1 - w2)
           * ((r + 1) * (w3 ** 2 + w1 * w2)
              - (w1 * w2 + r * (w1 + w2) + 1) * w3))
    return _eq(ws.conditions[1] - ws.conditions[2], rhs)


def _check_swap(ws: _Workspace):
    swap = {"w1": ws.w2, "w2": ws.w1}
    swapped = [e.substitute_map(swap) for e in ws.conditions]
    want = [ws.conditions[0], ws.conditions[2],
            ws.conditions[1], ws.conditions[3]]
    ok = swapped == want
    return ok, "" if ok else "swap did not exchange the conjugate conditions"


def _check_fractional_rank(a, c, expect):
    def run(ws: _Workspace):
        m1 = multiplicity_m1(a, c)
        ok = m1 == Fraction(expect)
        return ok, f"m1({a},{c}) = {m1}"
    return run


def _check_specialized_e1_e2(ws: _Workspace):
    w1, w2, w3, b = ws.w1, ws.w2, ws.w3, ws.b
    rhs = b * ws.i * (w1 - w2) * (w3 - 1) * (w1 * w2 - w3)
    eS = ws.specialized
    return _eq(eS[1] - eS[2], rhs)


def _check_specialized_e0_e3(ws: _Workspace):
    eS = ws.specialized
    lead = ws.a * ((2 * ws.a - 1) * ws.c + 1) * (ws.w1 + ws.w2)
    lhs = eS[0] - eS[3]
    ok_minus = lhs == lead * ws.g1(-1)
    ok_plus = lhs == lead * ws.g1(+1)
    ok = ok_minus and not ok_plus
    detail = ("inner coefficient a((2a-1)c-1) verified; "
              "the a((2a-1)c+1) variant fails"
              if ok else
              f"variants: minus={ok_minus} plus={ok_plus}")
    return ok, detail


def _check_g1_at_one(ws: _Workspace):
    lhs = ws.a * ws.w1 * ws.w2 * ws.g
    rhs = ws.w1 * ws.w2 * ws.g1(-1).substitute_map({"w3": 1})
    return _eq(lhs, rhs)


def _check_g1_at_product(ws: _Workspace):
    lhs = ws.a * ws.w1 * ws.w2 * ws.g
    rhs = ws.g1(-1).substitute_map({"w3": ws.w1 * ws.w2})
    return _eq(lhs, rhs)


def _eq24(ws: _Workspace) -> Polynomial:
    t = (2 * ws.a - 1) * ws.c - 1
    return t * ws.w1 ** 2 + 4 * ws.w1 + t


def _eq25(ws: _Workspace) -> Polynomial:
    ac = ws.a * ws.c
    return (ac * ws.w1 ** 4
            + 2 * ((ws.a - 1) * ws.c + 1) * ws.w1 ** 2 + ac)


def _check_reciprocal_quadratic(ws: _Workspace):
    lhs = ws.g.substitute_reciprocal("w2", "w1")
    return _eq(lhs, _eq24(ws))


def _check_reciprocal_quartic(ws: _Workspace):
    eS1 = ws.specialized[1].substitute_map({"w3": 1})
    lhs = 4 * eS1.substitute_reciprocal("w2", "w1", clear_to=2)
    rhs = 2 * ws.s * _eq25(ws) - ws.eq17 * (ws.w1 ** 2 - 1) ** 2
    return _eq(lhs, rhs)


def _check_combination(ws: _Workspace):
    a, c, w1 = ws.a, ws.c, ws.w1
    cL = 2 * ((2 * a - 1) * c + 1) * ws.L
    c24 = (4 * a * c * w1 ** 3
           - a * c * (2 * a * c - c - 1) * w1 ** 2
           + (8 * a * c - 8 * c + 8) * w1
           - (2 * a * c - c - 1) * (a * c - 2 * c + 2))
    c25 = -((8 * a * c - 4 * c - 4) * w1
            - (2 * a * c - c + 3) * (2 * a * c - c - 5))
    return _eq(cL, c24 * _eq24(ws) + c25 * _eq25(ws))


def _check_negated_pair_forces_c1(ws: _Workspace):
    lhs = -2 * ws.a * (ws.c - 1) * ws.w1 ** 2
    sub = ws.specialized[1].substitute_map({"w2": -ws.w1, "w3": 1})
    return _eq(lhs, sub + ws.w1 ** 2 * ws.eq17)


def _check_negated_pair_product_branch(ws: _Workspace):
    w1 = ws.w1
    lhs = w1 ** 2 * (w1 ** 4 + 2 * ((ws.c - 1) * ws.a + 1) * w1 ** 2 + 1)
    sub = ws.specialized[1].substitute_map({"w2": -w1, "w3": -w1 ** 2})
    return _eq(lhs, sub - w1 ** 4 * ws.eq17)


def _check_g_at_minus_one(ws: _Workspace):
    lhs = ((2 * ws.a - 1) * ws.c - 3) * (ws.w1 - 1)
    return _eq(lhs, ws.g.substitute_map({"w2": -1}))


def _check_point_value(attr, subs, expect):
    def run(ws: _Workspace):
        poly = getattr(ws, attr).substitute_map(subs)
        return _eq(poly, ws.ring.constant(expect))
    return run


def _check_point_a2_square(ws: _Workspace):
    sub = ws.specialized[1].substitute_map(
        {"w2": -1, "w3": 1, "s": -4, "b": 4, "c": 1})
    return _eq(-4 * (ws.w1 - 1) ** 2, sub)


def _check_point_a2_quartic(ws: _Workspace):
    w1 = ws.w1
    sub = ws.specialized[1].substitute_map(
        {"w2": -1, "w3": -w1, "s": -4, "b": 4, "c": 1})
    return _eq(w1 * (5 * w1 ** 2 - 6 * w1 + 5), sub)


def _check_point_a1c3_one(ws: _Workspace):
    w1, b = ws.w1, ws.b
    quarter = Fraction(1, 4)
    lhs = (-(3 * w1 ** 2 - 2 * w1 + 3)
           - (b * b - 12) * (w1 + 1) ** 2 * quarter)
    sub = ws.specialized[1].substitute_map(
        {"w2": -1, "w3": 1, "s": -2, "c": 3})
    return _eq(lhs, sub)


def _check_point_a1c3_product(ws: _Workspace):
    w1, b = ws.w1, ws.b
    quarter = Fraction(1, 4)
    lhs = (4 * w1 * (w1 ** 2 + 1)
           + (b * b - 12) * w1 * (w1 + 1) ** 2 * quarter)
    sub = ws.specialized[1].substitute_map(
        {"w2": -1, "w3": -w1, "s": -2, "c": 3})
    return _eq(lhs, sub)


def _check_membership(branch, which):
    def run(ws: _Workspace):
        basis = ws.branch_basis(branch)
        var = ws.w1 if which == "w1" else ws.w2
        if branch == "one":
            quartic = ws.palindromic_quartic(ws.f1_coeffs, var)
            target = ws.s * quartic
        else:
            quartic = ws.palindromic_quartic(ws.f2_coeffs, var)
            target = var * (var * ((2 * ws.a - 1) * ws.c - 1) + 2) * quartic
        ok = basis.contains(target)
        return ok, f"basis size {len(basis)}"
    return run


def _check_discriminant_one(ws: _Workspace):
    a0, a1, a2 = ws.f1_coeffs
    disc = a1 * a1 - 4 * a0 * (-2 * a0 + a2)
    rhs = -4 * ((2 * ws.a - 1) * ws.c + 1) ** 2 * ws.L
    return _eq(disc, rhs)


def _check_discriminant_product(ws: _Workspace):
    b0, b1, b2 = ws.f2_coeffs
    disc = b1 * b1 - 4 * b0 * (-2 * b0 + b2)
    rhs = (-8 * ws.a * ((2 * ws.a - 1) * ws.c + 1) ** 2
           * ((2 * ws.a - 1) * ws.c + 2 * ws.a - 3) * ws.L)
    return _eq(disc, rhs)


def _check_second_spectrum(ws: _Workspace):
    w1, w2, w3, k1, k2 = ws.w1, ws.w2, ws.w3, ws.k1, ws.k2
    sub = ws.conditions[3].substitute_map({"r": -(k2 + 1), "s": 0})
    rhs = w1 * w2 * (w3 ** 2 + (k1 + k2 - 1) * w3 + 1)
    return _eq(-sub, rhs)


def _third_spectrum_conditions(ws: _Workspace):
    subs = {"r": -1, "s": ws.k1}
    return [e.substitute_map(subs) for e in ws.conditions]


def _check_third_spectrum_e0_e3(ws: _Workspace):
    w1, w2, w3, k1, k2 = ws.w1, ws.w2, ws.w3, ws.k1, ws.k2
    eq = _third_spectrum_conditions(ws)
    h1 = (k1 * (w1 + w2) * (w1 * w2 + w3 ** 2)
          - 2 * (k1 - k2 + 1) * w1 * w2 * w3
          + 2 * w1 * w2 * (w3 ** 2 + 1))
    return _eq(eq[0] - eq[3], (k1 + k2 + 1) * h1 * Fraction(1, 2))


def _check_third_spectrum_e1_e2(ws: _Workspace):
    w1, w2, w3, b = ws.w1, ws.w2, ws.w3, ws.b
    eq = _third_spectrum_conditions(ws)
    rhs = b * ws.i * w3 * (w1 - w2) * (w1 - 1) * (w2 - 1)
    return _eq(eq[1] - eq[2], rhs)


def _check_third_spectrum_quadratic(ws: _Workspace):
    w2, w3, k1, k2, b = ws.w2, ws.w3, ws.k1, ws.k2, ws.b
    eq1 = _third_spectrum_conditions(ws)[1]
    forced = w3 * ((k1 + 2) * w2 ** 2 + 2 * (k1 + 2 * k2) * w2 + (k1 + 2))
    subs = {"w1": ws.ring.one(), "k1": b * b - 1, "s": b * b - 1}
    return _eq(-4 * eq1.substitute_map(subs), forced.substitute_map(subs))


CHECKS = [
    ("template_row_sums",
     "eigenmatrix template rows sum to n, 0, 0, 0",
     _check_row_sums),
    ("condition_expansion_first",
     "generic product form of the first condition equals its expansion",
     _check_expansion(0)),
    ("condition_expansion_second",
     "generic product form of the second condition equals its expansion",
     _check_expansion(1)),
    ("condition_expansion_third",
     "generic product form of the third condition equals its expansion",
     _check_expansion(2)),
    ("condition_expansion_fourth",
     "generic product form of the fourth condition equals its expansion",
     _check_expansion(3)),
    ("difference_real_conditions",
     "4(e0-e3) collects into the displayed quadratic in w3",
     _check_difference_e0_e3),
    ("difference_conjugate_conditions",
     "e1-e2 factors through -b*i*(w1-w2) times a bilinear cofactor",
     _check_difference_e1_e2),
    ("swap_symmetry",
     "swapping w1 and w2 fixes e0, e3 and exchanges e1, e2",
     _check_swap),
    ("fractional_rank_a1_c2",
     "first idempotent rank is 3/2 at (a, c) = (1, 2), so no scheme",
     _check_fractional_rank(1, 2, "3/2")),
    ("fractional_rank_a1_c4",
     "first idempotent rank is 5/2 at (a, c) = (1, 4), so no scheme",
     _check_fractional_rank(1, 4, "5/2")),
    ("fractional_rank_a2_c2",
     "first idempotent rank is 21/2 at (a, c) = (2, 2), so no scheme",
     _check_fractional_rank(2, 2, "21/2")),
    ("specialized_difference_conjugates",
     "specialized e1-e2 equals b*i*(w1-w2)(w3-1)(w1*w2-w3)",
     _check_specialized_e1_e2),
    ("specialized_difference_reals",
     "specialized e0-e3 equals a((2a-1)c+1)(w1+w2) times the cubic cofactor",
     _check_specialized_e0_e3),
    ("cubic_cofactor_at_w3_one",
     "w1*w2 times the cofactor at w3 = 1 equals a*w1*w2*g",
     _check_g1_at_one),
    ("cubic_cofactor_at_w3_product",
     "the cofactor at w3 = w1*w2 equals a*w1*w2*g",
     _check_g1_at_product),
    ("reciprocal_pair_quadratic",
     "w1 * g(w1, 1/w1) is the palindromic quadratic in w1",
     _check_reciprocal_quadratic),
    ("reciprocal_pair_quartic",
     "4*w1^2 * e1(w1, 1/w1, 1) combines the palindromic quartic and the "
     "radical relation",
     _check_reciprocal_quartic),
    ("quartic_combination_hits_L",
     "an explicit cofactor pair combines the two reciprocal-pair relations "
     "into 2((2a-1)c+1)L",
     _check_combination),
    ("negated_pair_forces_c1",
     "with w2 = -w1, w3 = 1 the second condition collapses to -2a(c-1)w1^2",
     _check_negated_pair_forces_c1),
    ("negated_pair_product_branch",
     "with w2 = -w1, w3 = -w1^2 the second condition is a palindromic "
     "sextic with no unit roots beyond w3 = 1",
     _check_negated_pair_product_branch),
    ("g_pins_weight_minus_one",
     "g(w1, -1) = ((2a-1)c-3)(w1-1)",
     _check_g_at_minus_one),
    ("point_a2_degree_k1",
     "k1 = 12 at (a, c) = (2, 1)",
     _check_point_value("K1", {"s": -4, "c": 1}, 12)),
    ("point_a2_degree_k2",
     "k2 = 3 at (a, c) = (2, 1)",
     _check_point_value("K2", {"s": -4}, 3)),
    ("point_a2_w3_one_square",
     "at (2, 1), w2 = -1, w3 = 1 the second condition is -4(w1-1)^2",
     _check_point_a2_square),
    ("point_a2_w3_product_quartic",
     "at (2, 1), w2 = -1, w3 = -w1 the second condition is "
     "w1(5w1^2-6w1+5)",
     _check_point_a2_quartic),
    ("point_a1c3_degree_k1",
     "k1 = 6 at (a, c) = (1, 3)",
     _check_point_value("K1", {"s": -2, "c": 3}, 6)),
    ("point_a1c3_degree_k2",
     "k2 = 1 at (a, c) = (1, 3)",
     _check_point_value("K2", {"s": -2}, 1)),
    ("point_a1c3_w3_one",
     "at (1, 3), w2 = -1, w3 = 1 the second condition is -(3w1^2-2w1+3) "
     "up to the radical relation",
     _check_point_a1c3_one),
    ("point_a1c3_w3_product",
     "at (1, 3), w2 = -1, w3 = -w1 the second condition is 4w1(w1^2+1) "
     "up to the radical relation",
     _check_point_a1c3_product),
    ("quartic_membership_w3_one_w1",
     "s times the palindromic quartic in w1 lies in the branch ideal "
     "with w3 = 1 and g",
     _check_membership("one", "w1")),
    ("quartic_membership_w3_one_w2",
     "s times the palindromic quartic in w2 lies in the branch ideal "
     "with w3 = 1 and g",
     _check_membership("one", "w2")),
    ("resolvent_discriminant_w3_one",
     "the resolvent discriminant on the w3 = 1 branch is "
     "-4((2a-1)c+1)^2 L",
     _check_discriminant_one),
    ("quartic_membership_w3_product_w1",
     "w1(((2a-1)c-1)w1+2) times the palindromic quartic in w1 lies in the "
     "branch ideal with w3 = w1*w2 and g",
     _check_membership("product", "w1")),
    ("quartic_membership_w3_product_w2",
     "w2(((2a-1)c-1)w2+2) times the palindromic quartic in w2 lies in the "
     "branch ideal with w3 = w1*w2 and g",
     _check_membership("product", "w2")),
    ("resolvent_discriminant_w3_product",
     "the resolvent discriminant on the w3 = w1*w2 branch is "
     "-8a((2a-1)c+1)^2((2a-1)c+2a-3) L",
     _check_discriminant_product),
    ("second_spectrum_forced_quadratic",
     "in the non-self-dual multipartite spectrum -e3 factors as "
     "w1*w2*(w3^2+(k1+k2-1)w3+1)",
     _check_second_spectrum),
    ("third_spectrum_difference_reals",
     "in the union-of-cliques spectrum e0-e3 equals (k1+k2+1)/2 times h1",
     _check_third_spectrum_e0_e3),
    ("third_spectrum_difference_conjugates",
     "in the union-of-cliques spectrum e1-e2 equals "
     "b*i*w3(w1-w2)(w1-1)(w2-1)",
     _check_third_spectrum_e1_e2),
    ("third_spectrum_forced_quadratic",
     "with w1 = 1 the second condition forces the quadratic "
     "(k1+2)w2^2+2(k1+2k2)w2+(k1+2) in w2",
     _check_third_spectrum_quadratic),
]


def max_workers_from_env() -> int:
    raw = os.environ.get("HSK_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def verify_identity_suite(max_workers: int | None = None) -> IdentityReport:
    """Run every checklist entry; aggregation order is fixed regardless of
    any parallelism (capped by HSK_THREADS)."""
    ws = _Workspace()
    if max_workers is None:
        max_workers = max_workers_from_env()

    def run_one(item):
        name, claim, fn = item
        start = time.perf_counter()
        try:
            ok, detail = fn(ws)
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        millis = (time.perf_counter() - start) * 1000.0
        return CheckResult(name=name, ok=bool(ok), claim=claim,
                           millis=millis, detail=detail)

    if max_workers > 1:
        # shared lazy caches are primed first so worker threads only read
        ws.conditions, ws.specialized
        ws.branch_basis("one"), ws.branch_basis("product")
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            entries = list(pool.map(run_one, CHECKS))
    else:
        entries = [run_one(item) for item in CHECKS]
    return IdentityReport(entries=entries)
