"""Association schemes as concrete combinatorial objects.

Covers axiom verification with intersection numbers, exact Bose-Mesner
idempotents against a parametrized 4x4 eigenmatrix, the three-way spectrum
classification for nonsymmetric 3-class schemes, the (a, c) parameter
family, and constructions: Cayley schemes from groups, schemes read off a
Bush-type Hadamard matrix, and a text file format.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import qlinalg
from .exactnum import (GaussianRational, QuadExt, QUAD_ONE, IMAG, Rational)


class SchemeError(ValueError):
    pass


class SchemeFormatError(SchemeError):
    pass


class AssociationScheme:
    """A partition of X*X into d+1 relations given by an index matrix.

    relation[x][y] is the class of the pair (x, y); class 0 is the
    diagonal.  Immutable after construction.
    """

    def __init__(self, relation):
        rel = np.array(relation, dtype=np.int64)
        if rel.ndim != 2 or rel.shape[0] != rel.shape[1]:
            raise SchemeError("relation matrix must be square")
        if rel.min() < 0:
            raise SchemeError("relation indices must be non-negative")
        rel.setflags(write=False)
        self.relation = rel
        self.n = int(rel.shape[0])
        self.d = int(rel.max())

    def adjacency(self, j: int) -> np.ndarray:
        return (self.relation == j).astype(np.int64)

    @property
    def adjacencies(self) -> list[np.ndarray]:
        return [self.adjacency(j) for j in range(self.d + 1)]

    def transpose_map(self) -> list[int] | None:
        """j -> j' with A_j^T = A_{j'}, or None if some class has no mate."""
        adj = self.adjacencies
        out = []
        for j, A in enumerate(adj):
            mate = next((k for k, B in enumerate(adj)
                         if np.array_equal(A.T, B)), None)
            if mate is None:
                return None
            out.append(mate)
        return out

    def valencies(self) -> list[int] | None:
        out = []
        for A in self.adjacencies:
            sums = A.sum(axis=1)
            if not (sums == sums[0]).all():
                return None
            out.append(int(sums[0]))
        return out

    def __eq__(self, other):
        return (isinstance(other, AssociationScheme)
                and np.array_equal(self.relation, other.relation))

    def __hash__(self):
        return hash(self.relation.tobytes())

    def __repr__(self):
        return f"AssociationScheme(n={self.n}, d={self.d})"


@dataclass
class AxiomReport:
    ok: bool
    checks: list[tuple[str, bool, str]]
    intersection_numbers: np.ndarray | None = None
    valencies: list[int] | None = None
    transpose_map: list[int] | None = None

    def failures(self) -> list[str]:
        return [name for name, passed, _ in self.checks if not passed]


def verify_scheme_axioms(scheme: AssociationScheme) -> AxiomReport:
    """Check the defining axioms; on success report the structure constants."""
    checks: list[tuple[str, bool, str]] = []
    rel = scheme.relation
    n, d = scheme.n, scheme.d

    diag_ok = bool((np.diag(rel) == 0).all())
    off = rel[~np.eye(n, dtype=bool)]
    off_ok = bool((off >= 1).all()) if off.size else True
    checks.append(("identity_class_is_diagonal", diag_ok and off_ok,
                   "class 0 is exactly the diagonal"))

    used = sorted(set(int(v) for v in rel.ravel()))
    cover_ok = used == list(range(d + 1))
    checks.append(("classes_cover_all_pairs", cover_ok,
                   f"classes present: {used}"))

    tmap = scheme.transpose_map()
    checks.append(("transpose_closure", tmap is not None,
                   f"transpose map {tmap}"))

    vals = scheme.valencies()
    checks.append(("constant_valencies", vals is not None,
                   f"valencies {vals}"))

    pnums = None
    regular_ok = False
    commute_ok = False
    if diag_ok and off_ok and cover_ok:
        adj = scheme.adjacencies
        pnums = np.zeros((d + 1, d + 1, d + 1), dtype=np.int64)
        regular_ok = True
        commute_ok = True
        products = {}
        for i in range(d + 1):
            for j in range(d + 1):
                products[(i, j)] = adj[i] @ adj[j]
        for i in range(d + 1):
            for j in range(i, d + 1):
                if not np.array_equal(products[(i, j)], products[(j, i)]):
                    commute_ok = False
        for i in range(d + 1):
            for j in range(d + 1):
                M = products[(i, j)]
                for k in range(d + 1):
                    cells = M[rel == k]
                    if cells.size == 0:
                        continue
                    if not (cells == cells[0]).all():
                        regular_ok = False
                        break
                    pnums[i, j, k] = int(cells[0])
                if not regular_ok:
                    break
            if not regular_ok:
                break
    checks.append(("products_in_algebra", regular_ok,
                   "A_i A_j = sum_k p_ijk A_k with constant integer p_ijk"))
    checks.append(("commutative", commute_ok, "A_i A_j = A_j A_i"))

    ok = all(passed for _, passed, _ in checks)
    return AxiomReport(ok=ok, checks=checks,
                       intersection_numbers=pnums if ok else None,
                       valencies=vals, transpose_map=tmap)


# -- groups and Cayley schemes -------------------------------------------------


def cyclic_group(n: int) -> np.ndarray:
    """Multiplication table of Z_n (element k is the residue k)."""
    base = np.arange(n)
    return (base[:, None] + base[None, :]) % n


def quaternion_group() -> np.ndarray:
    """Multiplication table of Q8 in the order 1, -1, i, -i, j, -j, k, -k."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    index = {nm: k for k, nm in enumerate(names)}

    def split(nm):
        return (-1, nm[1:]) if nm.startswith("-") else (1, nm)

    def join(sign, letter):
        if letter == "1":
            return "1" if sign == 1 else "-1"
        return letter if sign == 1 else "-" + letter

    rule = {("1", "1"): (1, "1"),
            ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
            ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
            ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")}
    for x in "ijk":
        rule[("1", x)] = (1, x)
        rule[(x, "1")] = (1, x)

    table = np.zeros((8, 8), dtype=np.int64)
    for a in names:
        for b in names:
            sa, la = split(a)
            sb, lb = split(b)
            sp, lp = rule[(la, lb)]
            table[index[a], index[b]] = index[join(sa * sb * sp, lp)]
    return table


def _group_inverses(table: np.ndarray) -> list[int]:
    n = table.shape[0]
    e = next(k for k in range(n)
             if all(table[k, x] == x and table[x, k] == x for x in range(n)))
    inv = [int(np.where(table[x] == e)[0][0]) for x in range(n)]
    if any(table[x, inv[x]] != e for x in range(n)):
        raise SchemeError("not a group table")
    return inv


def cayley_scheme(table: np.ndarray,
                  partition: Sequence[Sequence[int]]) -> AssociationScheme:
    """Scheme with relation(x, y) = class of x^-1 y for a class partition.

    The partition lists the non-identity classes S_1..S_d; each class's
    inverse set must again be a class, and the axiom checker must accept
    the result (otherwise the partition is not a Schur ring).
    """
    table = np.asarray(table, dtype=np.int64)
    n = table.shape[0]
    inv = _group_inverses(table)
    identity = next(k for k in range(n) if inv[k] == k and table[k, k] == k)

    classes = [set(cl) for cl in partition]
    covered = set().union(*classes) if classes else set()
    if covered != set(range(n)) - {identity} or sum(map(len, classes)) != len(covered):
        raise SchemeError("partition must cover the non-identity elements once")
    for idx, cl in enumerate(classes):
        inv_set = {inv[x] for x in cl}
        if inv_set not in classes:
            raise SchemeError(
                f"inverse set of class {idx + 1} is not a class")

    class_of = {identity: 0}
    for idx, cl in enumerate(classes, start=1):
        for x in cl:
            class_of[x] = idx
    rel = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(n):
            rel[x, y] = class_of[table[inv[x], y]]
    scheme = AssociationScheme(rel)
    report = verify_scheme_axioms(scheme)
    if not report.ok:
        raise SchemeError(
            f"partition is not a Schur ring; failed axioms: {report.failures()}")
    return scheme


def z4_scheme() -> AssociationScheme:
    """The 4-point scheme from Z4 with classes {1}, {3}, {2}."""
    return cayley_scheme(cyclic_group(4), [[1], [3], [2]])


def quaternion_scheme() -> AssociationScheme:
    """The 8-point scheme from Q8 with classes {i,j,k}, {-i,-j,-k}, {-1}."""
    return cayley_scheme(quaternion_group(), [[2, 4, 6], [3, 5, 7], [1]])


# -- eigenmatrix template and parameters ----------------------------------------


@dataclass(frozen=True)
class EigenmatrixTemplate:
    """The parametrized first eigenmatrix of a nonsymmetric 3-class scheme.

    Rows: (1, k1/2, k1/2, k2), (1, (r+bi)/2, (r-bi)/2, -(r+1)), its
    conjugate, and (1, s/2, s/2, -(s+1)).
    """

    k1: int
    k2: int
    r: int
    s: int
    b: QuadExt

    def __post_init__(self):
        if self.k1 <= 0 or self.k1 % 2:
            raise ValueError("k1 must be an even positive integer")
        if self.k2 <= 0:
            raise ValueError("k2 must be a positive integer")
        b = QuadExt.from_scalar(self.b)
        if b.a.im != 0 or b.b.im != 0 or not b:
            raise ValueError("b must be a non-zero real value")
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return 1 + self.k1 + self.k2

    def b_squared(self) -> Fraction:
        return (self.b * self.b).rational_value()

    def matrix(self) -> list[list[QuadExt]]:
        half = Fraction(1, 2)
        bi2 = self.b * QuadExt(1, GaussianRational(0, half))
        r2 = QuadExt.from_scalar(Fraction(self.r, 2))
        row0 = [1, Fraction(self.k1, 2), Fraction(self.k1, 2), self.k2]
        row1 = [QUAD_ONE, r2 + bi2, r2 - bi2,
                QuadExt.from_scalar(-(self.r + 1))]
        row2 = [v.conj() for v in row1]
        row3 = [1, Fraction(self.s, 2), Fraction(self.s, 2), -(self.s + 1)]
        return qlinalg.from_rows([row0, row1, row2, row3])


@dataclass(frozen=True)
class SchemeParameters:
    """Derived spectrum data for the multipartite-fission family at (a, c)."""

    a: int
    c: int
    k1: int
    k2: int
    r: int
    s: int
    b: QuadExt
    n: int
    L: int
    m1: Fraction

    def template(self) -> EigenmatrixTemplate:
        return EigenmatrixTemplate(self.k1, self.k2, self.r, self.s, self.b)

    @property
    def m1_integral(self) -> bool:
        return self.m1.denominator == 1

    def multiplicities(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        m2 = self.n - 1 - 2 * self.m1
        return (Fraction(1), self.m1, self.m1, m2)


def multiplicity_m1(a: int, c: int) -> Fraction:
    """m1 = (k1+k2+1) k2 / (2 (k2+1)) for k1 = 2a(2a-1)c, k2 = 2a-1."""
    k1 = 2 * a * (2 * a - 1) * c
    k2 = 2 * a - 1
    return Fraction((k1 + k2 + 1) * k2, 2 * (k2 + 1))


def params_from_ac(a: int, c: int) -> SchemeParameters:
    """Exact parameters k1, k2, r, s, b, n and the quantity L at (a, c)."""
    if a < 1 or c < 1:
        raise ValueError("a and c must be positive integers")
    k1 = 2 * a * (2 * a - 1) * c
    k2 = 2 * a - 1
    L = (2 * a - 1) * c * c - 2 * (a + 1) * c - 1
    assert L != 0, "L = 0 is impossible for positive integers a, c"
    return SchemeParameters(a=a, c=c, k1=k1, k2=k2, r=0, s=-2 * a,
                            b=QuadExt(c, 0, 2 * a), n=1 + k1 + k2, L=L,
                            m1=multiplicity_m1(a, c))


@dataclass(frozen=True)
class SongCase:
    case: str  # "i", "ii", or "iii"
    m1: Fraction
    m1_integral: bool
    b2_expected: Fraction
    b2_mismatch: bool


def song_case(k1: int, k2: int, r: int, s: int,
              b2: Fraction | int | None = None) -> SongCase:
    """Classify template parameters into the three possible spectra.

    The case is decided by the (r, s) pattern; the implied b^2 is returned,
    and a supplied b^2 that disagrees is flagged rather than fatal.
    """
    n = 1 + k1 + k2
    if r == 0 and s == -(k2 + 1):
        case = "i"
        b2e = Fraction(k1 * (k2 + 1), k2)
        m1 = Fraction(n * k2, 2 * (k2 + 1))
    elif r == -(k2 + 1) and s == 0:
        case = "ii"
        b2e = Fraction((k2 + 1) * n)
        m1 = Fraction(k1, 2 * (k2 + 1))
    elif r == -1 and s == k1:
        case = "iii"
        b2e = Fraction(k1 + 1)
        m1 = Fraction(n * k1, k1 + 1)
    else:
        raise ValueError(
            f"(r, s) = ({r}, {s}) matches none of the three spectra for "
            f"(k1, k2) = ({k1}, {k2})")
    mismatch = b2 is not None and Fraction(b2) != b2e
    return SongCase(case=case, m1=m1, m1_integral=m1.denominator == 1,
                    b2_expected=b2e, b2_mismatch=mismatch)


# -- exact eigenmatrix verification ----------------------------------------------


@dataclass
class EigenReport:
    ok: bool
    checks: list[tuple[str, bool, str]]
    multiplicities: tuple | None = None

    def failures(self) -> list[str]:
        return [name for name, passed, _ in self.checks if not passed]


def verify_eigenmatrix(scheme: AssociationScheme,
                       template: EigenmatrixTemplate) -> EigenReport:
    """Rebuild the idempotents from the candidate eigenmatrix and check
    them exactly: E_k E_l = delta E_k, sum E_k = I, E_0 = J/n, and
    A_j E_k = P[k][j] E_k, with integral multiplicities from traces."""
    checks: list[tuple[str, bool, str]] = []
    axioms = verify_scheme_axioms(scheme)
    checks.append(("scheme_axioms", axioms.ok, f"failures {axioms.failures()}"))
    if not axioms.ok or scheme.d != 3 or scheme.n != template.n:
        if scheme.d != 3:
            checks.append(("three_classes", False, f"d = {scheme.d}"))
        if scheme.n != template.n:
            checks.append(("point_count", False,
                           f"n = {scheme.n}, template needs {template.n}"))
        return EigenReport(ok=False, checks=checks)

    n = scheme.n
    P = template.matrix()
    try:
        Pinv = qlinalg.invert(P)
    except qlinalg.SingularMatrix as exc:
        checks.append(("eigenmatrix_invertible", False, str(exc)))
        return EigenReport(ok=False, checks=checks)

    A = [qlinalg.from_rows(M.tolist()) for M in scheme.adjacencies]
    E = []
    for k in range(4):
        Ek = qlinalg.identity(n, 0)
        for j in range(4):
            if Pinv[j][k]:
                Ek = qlinalg.add(Ek, qlinalg.scale(A[j], Pinv[j][k]))
        E.append(Ek)

    checks.append(("rank_one_idempotent_is_J_over_n",
                   qlinalg.equal(E[0], qlinalg.ones(n, Fraction(1, n))),
                   "E_0 = J/n"))
    total = E[0]
    for Ek in E[1:]:
        total = qlinalg.add(total, Ek)
    checks.append(("idempotents_sum_to_identity",
                   qlinalg.equal(total, qlinalg.identity(n)), "sum E_k = I"))

    orth_ok = True
    for k in range(4):
        for l in range(k, 4):
            prod = qlinalg.mul(E[k], E[l])
            want = E[k] if k == l else qlinalg.identity(n, 0)
            if not qlinalg.equal(prod, want):
                orth_ok = False
    checks.append(("idempotents_orthogonal", orth_ok,
                   "E_k E_l = delta_kl E_k"))

    eig_ok = True
    detail = ""
    for j in range(4):
        for k in range(4):
            lhs = qlinalg.mul(A[j], E[k])
            rhs = qlinalg.scale(E[k], P[k][j])
            if not qlinalg.equal(lhs, rhs):
                eig_ok = False
                detail = f"A_{j} E_{k} != P[{k}][{j}] E_{k}"
                break
        if not eig_ok:
            break
    checks.append(("adjacency_eigenvalues_match", eig_ok,
                   detail or "A_j E_k = P[k][j] E_k"))

    mults = None
    if orth_ok and eig_ok:
        traces = [qlinalg.trace(Ek) for Ek in E]
        ints_ok = True
        vals = []
        for t in traces:
            try:
                v = t.rational_value()
            except ValueError:
                ints_ok = False
                break
            if v.denominator != 1 or v <= 0:
                ints_ok = False
                break
            vals.append(int(v))
        checks.append(("integral_multiplicities", ints_ok,
                       f"trace(E_k) = {vals if ints_ok else traces}"))
        if ints_ok:
            mults = tuple(vals)
            checks.append(("multiplicities_sum_to_n", sum(vals) == n,
                           f"sum {sum(vals)} vs n = {n}"))

    ok = all(passed for _, passed, _ in checks)
    return EigenReport(ok=ok, checks=checks, multiplicities=mults)


# -- Bush-type Hadamard construction ----------------------------------------------


class HadamardSeedError(ValueError):
    pass


class BushConstructionError(RuntimeError):
    pass


def _check_real_hadamard(H: np.ndarray) -> int:
    H = np.asarray(H, dtype=np.int64)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise HadamardSeedError("seed matrix must be square")
    m = H.shape[0]
    if not np.isin(H, (-1, 1)).all():
        raise HadamardSeedError("seed entries must be +1 or -1")
    if not np.array_equal(H @ H.T, m * np.eye(m, dtype=np.int64)):
        raise HadamardSeedError("seed matrix is not Hadamard: H H^T != m I")
    return m


def bush_type_from_hadamard(H) -> tuple[np.ndarray, AssociationScheme]:
    """Build a Bush-type Hadamard matrix of order (2a)^2 with skew
    off-diagonal blocks from a seed Hadamard matrix of order 2a, and read
    off the associated 3-class scheme.

    Blocks: K_ii = J; K_ij = sign(i, j) * h_u^T h_v built from the rows of
    the seed normalized to an all-ones first row, with u = j - i and
    v = i - j cyclically, so each block row and column uses every
    non-initial seed row exactly once.  Every claimed property is verified
    before returning.
    """
    H = np.asarray(H, dtype=np.int64)
    m = _check_real_hadamard(H)
    if m % 2:
        raise HadamardSeedError("seed order must be even")
    a = m // 2

    Hn = H * H[0]  # scale columns so the first row is all ones
    rows = [Hn[t] for t in range(m)]
    n = m * m
    K = np.zeros((n, n), dtype=np.int64)
    for bi in range(m):
        for bj in range(m):
            if bi == bj:
                block = np.ones((m, m), dtype=np.int64)
            else:
                u = (bj - bi) % m
                v = (bi - bj) % m
                sign = 1 if bi < bj else -1
                block = sign * np.outer(rows[u], rows[v])
            K[bi * m:(bi + 1) * m, bj * m:(bj + 1) * m] = block

    if not np.array_equal(K @ K.T, n * np.eye(n, dtype=np.int64)):
        raise BushConstructionError("K is not Hadamard")
    for bi in range(m):
        blk = K[bi * m:(bi + 1) * m, bi * m:(bi + 1) * m]
        if not (blk == 1).all():
            raise BushConstructionError("a diagonal block is not all-ones")
    for bi in range(m):
        for bj in range(bi + 1, m):
            Bij = K[bi * m:(bi + 1) * m, bj * m:(bj + 1) * m]
            Bji = K[bj * m:(bj + 1) * m, bi * m:(bi + 1) * m]
            if not np.array_equal(Bji, -Bij.T):
                raise BushConstructionError(
                    "off-diagonal blocks are not skew-paired")

    block_of = np.repeat(np.arange(m), m)
    same_block = block_of[:, None] == block_of[None, :]
    rel = np.where(K == 1, 1, 2)
    rel[same_block] = 3
    np.fill_diagonal(rel, 0)
    scheme = AssociationScheme(rel)

    report = verify_scheme_axioms(scheme)
    if not report.ok:
        raise BushConstructionError(
            f"derived relations fail the scheme axioms: {report.failures()}")
    eig = verify_eigenmatrix(scheme, params_from_ac(a, 1).template())
    if not eig.ok:
        raise BushConstructionError(
            f"derived scheme fails eigenmatrix verification: {eig.failures()}")
    return K, scheme


def sylvester_hadamard(order: int) -> np.ndarray:
    """The Sylvester Hadamard matrix for order a power of two."""
    if order < 1 or order & (order - 1):
        raise ValueError("order must be a power of two")
    H = np.array([[1]], dtype=np.int64)
    while H.shape[0] < order:
        H = np.block([[H, H], [H, -H]])
    return H


# -- isomorphism (small n) ---------------------------------------------------------


def schemes_isomorphic(s1: AssociationScheme, s2: AssociationScheme) -> bool:
    """Relabeling search; permitted only for n <= 16."""
    if s1.n != s2.n or s1.d != s2.d:
        return False
    n = s1.n
    if n > 16:
        raise SchemeError("isomorphism search is limited to n <= 16")
    r1, r2 = s1.relation, s2.relation
    image = [-1] * n
    used = [False] * n

    def place(x: int) -> bool:
        if x == n:
            return True
        for y in range(n):
            if used[y]:
                continue
            ok = True
            for z in range(x):
                if (r1[x, z] != r2[y, image[z]]
                        or r1[z, x] != r2[image[z], y]):
                    ok = False
                    break
            if ok:
                image[x] = y
                used[y] = True
                if place(x + 1):
                    return True
                used[y] = False
                image[x] = -1
        return False

    return place(0)


# -- file formats -------------------------------------------------------------------


def save_scheme(scheme: AssociationScheme, path) -> None:
    """Write the text format: ``n d`` then the relation matrix rows."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{scheme.n} {scheme.d}\n")
        for row in scheme.relation:
            fh.write(" ".join(str(int(v)) for v in row) + "\n")


def load_scheme(path) -> AssociationScheme:
    """Read the text format written by :func:`save_scheme`; ``#`` comments."""
    rows: list[list[int]] = []
    header: tuple[int, int] | None = None
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                values = [int(p) for p in parts]
            except ValueError:
                raise SchemeFormatError(
                    f"{path}:{lineno}: non-integer token") from None
            if header is None:
                if len(values) != 2:
                    raise SchemeFormatError(
                        f"{path}:{lineno}: header must be 'n d'")
                header = (values[0], values[1])
                continue
            n, d = header
            if len(values) != n:
                raise SchemeFormatError(
                    f"{path}:{lineno}: expected {n} entries, got {len(values)}")
            if any(v < 0 or v > d for v in values):
                raise SchemeFormatError(
                    f"{path}:{lineno}: relation index out of range [0, {d}]")
            rows.append(values)
    if header is None:
        raise SchemeFormatError(f"{path}: empty file")
    n, d = header
    if len(rows) != n:
        raise SchemeFormatError(
            f"{path}: expected {n} matrix rows, found {len(rows)}")
    scheme = AssociationScheme(rows)
    if scheme.d != d:
        raise SchemeFormatError(
            f"{path}: header says d = {d}, matrix uses d = {scheme.d}")
    return scheme


def load_hadamard_seed(path) -> np.ndarray:
    """Read a seed Hadamard matrix: line 1 is n, then n rows of entries
    from {+, -} or {1, -1}."""
    with open(path, "r", encoding="ascii") as fh:
        lines = [ln.split("#", 1)[0].strip() for ln in fh]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise HadamardSeedError(f"{path}: empty file")
    try:
        n = int(lines[0])
    except ValueError:
        raise HadamardSeedError(f"{path}:1: first line must be the order") from None
    if len(lines) != n + 1:
        raise HadamardSeedError(
            f"{path}: expected {n} matrix rows, found {len(lines) - 1}")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        if " " in line or "\t" in line:
            toks = line.split()
        else:
            toks = list(line)
        row = []
        for t in toks:
            if t in ("+", "1", "+1"):
                row.append(1)
            elif t in ("-", "-1"):
                row.append(-1)
            else:
                raise HadamardSeedError(f"{path}:{lineno}: bad entry {t!r}")
        if len(row) != n:
            raise HadamardSeedError(
                f"{path}:{lineno}: expected {n} entries, got {len(row)}")
        rows.append(row)
    return np.array(rows, dtype=np.int64)
