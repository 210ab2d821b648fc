"""Buchberger's algorithm over Q(i), multivariate division, and ideal
membership.

Pair pruning uses the Gebauer-Moeller criteria; a configurable pair budget
guards against runaway computations and signals the caller to pre-eliminate
variables first (see :func:`eliminate_linear`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exactnum import ONE_G
from .multipoly import Polynomial, VarRing


class BudgetExceeded(RuntimeError):
    """The pair budget ran out; pre-eliminate variables and retry."""


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: 'degrevlex' or 'lex' over a variable permutation.

    ``permutation`` lists variable indices from strongest to weakest and
    defaults to the ring's declaration order.
    """

    kind: str = "degrevlex"
    permutation: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex"):
            raise ValueError(f"unknown order kind {self.kind!r}")

    def for_ring(self, ring: VarRing) -> "MonomialOrder":
        if self.permutation is not None:
            if sorted(self.permutation) != list(range(ring.arity)):
                raise ValueError("permutation does not match ring arity")
            return self
        return MonomialOrder(self.kind, tuple(range(ring.arity)))

    def key(self, exps: tuple[int, ...]):
        perm = self.permutation or range(len(exps))
        seq = tuple(exps[p] for p in perm)
        if self.kind == "lex":
            return seq
        return (sum(seq), tuple(-e for e in reversed(seq)))

    @classmethod
    def degrevlex(cls, ring: VarRing, names: Sequence[str] | None = None):
        perm = None if names is None else tuple(ring.index(n) for n in names)
        return cls("degrevlex", perm).for_ring(ring)

    @classmethod
    def lex(cls, ring: VarRing, names: Sequence[str] | None = None):
        perm = None if names is None else tuple(ring.index(n) for n in names)
        return cls("lex", perm).for_ring(ring)


def leading_term(f: Polynomial, order: MonomialOrder):
    """Return (monomial, coefficient) of the leading term of non-zero f."""
    lm = max(f.terms, key=order.key)
    return lm, f.terms[lm]


def _divides(m1: tuple, m2: tuple) -> bool:
    return all(a <= b for a, b in zip(m1, m2))


def _mono_lcm(m1: tuple, m2: tuple) -> tuple:
    return tuple(max(a, b) for a, b in zip(m1, m2))


def _mono_mul(m1: tuple, m2: tuple) -> tuple:
    return tuple(a + b for a, b in zip(m1, m2))


def _mono_sub(m1: tuple, m2: tuple) -> tuple:
    return tuple(a - b for a, b in zip(m1, m2))


def _term_times(f: Polynomial, mono: tuple, coeff) -> Polynomial:
    return Polynomial(f.ring,
                      {_mono_mul(e, mono): c * coeff
                       for e, c in f.terms.items()})


def normal_form(f: Polynomial, basis: Iterable[Polynomial],
                order: MonomialOrder) -> Polynomial:
    """Remainder of f under multivariate division by the basis.

    No term of the result is divisible by any basis leading monomial, and
    f minus the result lies in the ideal generated by the basis.
    """
    order = order.for_ring(f.ring)
    divisors = [(lm, c, g) for g in basis if not g.is_zero()
                for lm, c in (leading_term(g, order),)]
    work = dict(f.terms)
    remainder: dict = {}
    key = order.key
    while work:
        lm = max(work, key=key)
        lc = work.pop(lm)
        for glm, glc, g in divisors:
            if _divides(glm, lm):
                shift = _mono_sub(lm, glm)
                factor = lc / glc
                for e, c in g.terms.items():
                    e2 = _mono_mul(e, shift)
                    if e2 == lm:
                        continue
                    v = work.get(e2)
                    v = -c * factor if v is None else v - c * factor
                    if v:
                        work[e2] = v
                    elif e2 in work:
                        del work[e2]
                break
        else:
            remainder[lm] = lc
    return Polynomial(f.ring, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lmf, lcf = leading_term(f, order)
    lmg, lcg = leading_term(g, order)
    lcm = _mono_lcm(lmf, lmg)
    return (_term_times(f, _mono_sub(lcm, lmf), lcf.inverse())
            - _term_times(g, _mono_sub(lcm, lmg), lcg.inverse()))


def _monic(f: Polynomial, order: MonomialOrder) -> Polynomial:
    _, lc = leading_term(f, order)
    if lc == ONE_G:
        return f
    return f * lc.inverse()


def _update_pairs(G: list, lmG: list, P: set, f: Polynomial, lmf: tuple):
    """Gebauer-Moeller pair update when f joins the basis."""
    t = len(G)
    P_kept = {p for p in P
              if (not _divides(lmf, _mono_lcm(lmG[p[0]], lmG[p[1]]))
                  or _mono_lcm(lmG[p[0]], lmG[p[1]]) == _mono_lcm(lmG[p[0]], lmf)
                  or _mono_lcm(lmG[p[0]], lmG[p[1]]) == _mono_lcm(lmG[p[1]], lmf))}
    lcms: dict[tuple, list[int]] = {}
    for i in range(t):
        lcms.setdefault(_mono_lcm(lmG[i], lmf), []).append(i)
    minimal: list[tuple] = []
    for L in sorted(lcms, key=lambda m: (sum(m), m)):
        if all(not _divides(L2, L) for L2 in minimal):
            minimal.append(L)
    new_pairs = set()
    for L in minimal:
        if not any(_mono_lcm(lmG[i], lmf) == _mono_mul(lmG[i], lmf)
                   for i in lcms[L]):
            new_pairs.add((min(lcms[L]), t))
    G.append(f)
    lmG.append(lmf)
    return P_kept | new_pairs


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic generators, auto-reduced."""

    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool = True

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self.generators, self.order).is_zero()

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder,
               pair_budget: int = 200_000) -> GroebnerBasis:
    """Compute a reduced Groebner basis of the given generators."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("no non-zero generators")
    ring = gens[0].ring
    order = order.for_ring(ring)
    G: list[Polynomial] = []
    lmG: list[tuple] = []
    P: set[tuple[int, int]] = set()
    for g in gens:
        P = _update_pairs(G, lmG, P, _monic(g, order), leading_term(g, order)[0])
    processed = 0
    while P:
        pair = min(P, key=lambda p: order.key(_mono_lcm(lmG[p[0]], lmG[p[1]])))
        P.remove(pair)
        processed += 1
        if processed > pair_budget:
            raise BudgetExceeded(
                f"pair budget {pair_budget} exceeded with {len(P)} pairs left")
        i, j = pair
        sp = s_polynomial(G[i], G[j], order)
        if sp.is_zero():
            continue
        r = normal_form(sp, G, order)
        if not r.is_zero():
            P = _update_pairs(G, lmG, P, _monic(r, order),
                              leading_term(r, order)[0])
    # minimalize: drop generators whose leading monomial another one divides
    keep: list[Polynomial] = []
    for f in sorted(G, key=lambda h: order.key(leading_term(h, order)[0])):
        lmf = leading_term(f, order)[0]
        if all(not _divides(leading_term(g, order)[0], lmf) for g in keep):
            keep.append(f)
    # interreduce: fully reduce each against the others
    reduced = []
    for idx, f in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        r = normal_form(f, others, order)
        if not r.is_zero():
            reduced.append(_monic(r, order))
    reduced.sort(key=lambda h: order.key(leading_term(h, order)[0]))
    return GroebnerBasis(tuple(reduced), order)


def ideal_contains(f: Polynomial, gens, order: MonomialOrder | None = None,
                   pair_budget: int = 200_000) -> bool:
    """True iff f lies in the ideal generated by gens (a GB is computed
    unless one is passed in)."""
    if isinstance(gens, GroebnerBasis):
        return gens.contains(f)
    if order is None:
        order = MonomialOrder.degrevlex(f.ring)
    basis = buchberger(list(gens), order, pair_budget=pair_budget)
    return basis.contains(f)


def eliminate_linear(gens: Sequence[Polynomial],
                     variables: Sequence[str]) -> tuple[list[Polynomial], dict]:
    """Use generators linear in a variable (with constant coefficient and a
    coefficient-free remainder) as substitutions, removing that variable.

    Returns the substituted generator list (consumed generators dropped)
    and the substitution images applied, in order.  Membership of targets
    free of the eliminated variables is preserved exactly.
    """
    work = [g for g in gens if not g.is_zero()]
    applied: dict[str, Polynomial] = {}
    for name in variables:
        chosen = None
        for g in work:
            if g.degree_in(name) != 1:
                continue
            lead = g.coefficient_of(name, 1)
            rest = g.coefficient_of(name, 0)
            if lead.is_constant() and rest.degree_in(name) <= 0:
                image = rest * (-(lead.constant_value().inverse()))
                chosen = (g, image)
                break
        if chosen is None:
            continue
        g, image = chosen
        mapping = {name: image}
        work = [h.substitute_map(mapping) for h in work if h is not g]
        work = [h for h in work if not h.is_zero()]
        applied = {k: v.substitute_map(mapping) for k, v in applied.items()}
        applied[name] = image
    return work, applied
