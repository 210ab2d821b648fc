"""Numerical search for unit-modulus common zeros of the four conditions.

Weights are parametrized as w_j = exp(i theta_j).  For the self-dual
fission spectrum (r = 0) the conjugate-difference factorization splits w3
into the two exact branches w3 = 1 and w3 = w1*w2, so the search runs
damped Gauss-Newton over two angles per branch.  For other spectra w3
seeds come from the quadratic that the conjugate difference forces, and
the iteration runs over all three angles.  Converged points are filtered
by residual and by the standing w1 != w2 assumption, then clustered;
components with spread are classified as one-parameter curves.

Grid coverage is the completeness argument, so it is heuristic by nature;
non-convergent seeds are dropped silently and the report carries a caveat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .hadamard import HadamardSystem

CAVEAT = ("grid seeding plus local refinement; coverage is heuristic and "
          "non-convergent seeds are dropped")


class _Compiled:
    """A condition polynomial with the radical parameter folded into
    complex coefficients, evaluable on arrays of weights."""

    def __init__(self, poly=None, b_value: float = 0.0, raw=None):
        if raw is not None:
            self.exps, self.coefs = raw
            return
        agg: dict[tuple, complex] = {}
        for e, cf in poly.terms.items():
            if len(e) == 4:
                d1, d2, d3, db = e
            else:
                d1, d2, d3 = e
                db = 0
            key = (d1, d2, d3)
            agg[key] = agg.get(key, 0j) + complex(cf) * (b_value ** db)
        keys = sorted(agg)
        self.exps = np.array(keys, dtype=np.int64).reshape(-1, 3)
        self.coefs = np.array([agg[k] for k in keys], dtype=complex)

    def evaluate(self, W1, W2, W3):
        P = (W1[..., None] ** self.exps[:, 0]
             * W2[..., None] ** self.exps[:, 1]
             * W3[..., None] ** self.exps[:, 2])
        return P @ self.coefs

    def diff(self, var: int) -> "_Compiled":
        keep = self.exps[:, var] > 0
        exps = self.exps[keep].copy()
        coefs = self.coefs[keep] * exps[:, var]
        exps[:, var] -= 1
        return _Compiled(raw=(exps, coefs))


def _weights(theta: np.ndarray, mode: str):
    W1 = np.exp(1j * theta[:, 0])
    W2 = np.exp(1j * theta[:, 1])
    if mode == "fixed_one":
        W3 = np.ones_like(W1)
    elif mode == "product":
        W3 = W1 * W2
    else:
        W3 = np.exp(1j * theta[:, 2])
    return W1, W2, W3


class _Problem:
    def __init__(self, polys: list[_Compiled], mode: str):
        self.polys = polys
        self.mode = mode
        self.nunk = 2 if mode in ("fixed_one", "product") else 3
        self.partials = [[p.diff(v) for v in range(3)] for p in polys]

    def residuals(self, theta):
        W1, W2, W3 = _weights(theta, self.mode)
        cols = []
        for p in self.polys:
            v = p.evaluate(W1, W2, W3)
            cols.append(v.real)
            cols.append(v.imag)
        return np.stack(cols, axis=1)

    def jacobian(self, theta):
        W1, W2, W3 = _weights(theta, self.mode)
        n = theta.shape[0]
        J = np.zeros((n, 2 * len(self.polys), self.nunk))
        for pi, parts in enumerate(self.partials):
            d1 = parts[0].evaluate(W1, W2, W3)
            d2 = parts[1].evaluate(W1, W2, W3)
            d3 = parts[2].evaluate(W1, W2, W3)
            if self.mode == "fixed_one":
                g = [1j * W1 * d1, 1j * W2 * d2]
            elif self.mode == "product":
                g = [1j * W1 * d1 + 1j * W3 * d3,
                     1j * W2 * d2 + 1j * W3 * d3]
            else:
                g = [1j * W1 * d1, 1j * W2 * d2, 1j * W3 * d3]
            for k, gv in enumerate(g):
                J[:, 2 * pi, k] = gv.real
                J[:, 2 * pi + 1, k] = gv.imag
        return J


def _gauss_newton(problem: _Problem, seeds: np.ndarray,
                  newton_tol: float, max_iter: int):
    theta = seeds.astype(float).copy()
    n, k = theta.shape
    eye = np.eye(k)
    last_step = np.full(n, np.inf)
    for _ in range(max_iter):
        F = problem.residuals(theta)
        J = problem.jacobian(theta)
        JTJ = np.einsum("nfk,nfl->nkl", J, J)
        JTF = np.einsum("nfk,nf->nk", J, F)
        ridge = (1e-14 * np.einsum("nkk->n", JTJ) + 1e-30)
        A = JTJ + ridge[:, None, None] * eye
        try:
            step = -np.linalg.solve(A, JTF[..., None])[..., 0]
        except np.linalg.LinAlgError:
            step = -np.einsum("nkl,nl->nk", np.linalg.pinv(A), JTF)
        norms = np.linalg.norm(step, axis=1, keepdims=True)
        big = norms[:, 0] > 0.5
        step[big] *= (0.5 / norms[big])
        base = (F * F).sum(axis=1)
        scale = np.ones(n)
        for _ in range(4):
            trial = problem.residuals(theta + scale[:, None] * step)
            worse = (trial * trial).sum(axis=1) > base + 1e-18
            if not worse.any():
                break
            scale = np.where(worse, scale * 0.5, scale)
        applied = scale[:, None] * step
        theta = theta + applied
        last_step = np.linalg.norm(applied, axis=1)
        if last_step.max() < newton_tol:
            break
    return np.mod(theta, 2 * math.pi), last_step


def _wrap(delta: np.ndarray) -> np.ndarray:
    return (delta + math.pi) % (2 * math.pi) - math.pi


def _torus_dist(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    return np.linalg.norm(_wrap(p[:, None, :] - q[None, :, :]), axis=2)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


@dataclass
class TorusSolution:
    angles: tuple[float, float, float]
    residual: float
    component: str = "isolated"

    @property
    def w1(self) -> complex:
        return complex(math.cos(self.angles[0]), math.sin(self.angles[0]))

    @property
    def w2(self) -> complex:
        return complex(math.cos(self.angles[1]), math.sin(self.angles[1]))

    @property
    def w3(self) -> complex:
        return complex(math.cos(self.angles[2]), math.sin(self.angles[2]))

    def weights(self):
        return (self.w1, self.w2, self.w3)

    def json_entry(self) -> dict:
        return {"w1": [self.w1.real, self.w1.imag],
                "w2": [self.w2.real, self.w2.imag],
                "w3": [self.w3.real, self.w3.imag],
                "residual": self.residual,
                "component": self.component}


@dataclass
class TorusCurve:
    size: int
    samples: list[TorusSolution]
    tangents: list[tuple[float, float, float]]


@dataclass
class TorusSolutionSet:
    isolated: list[TorusSolution]
    curves: list[TorusCurve]
    grid: int
    residual_tol: float
    caveat: str = CAVEAT

    def json_dict(self) -> dict:
        entries = [s.json_entry() for s in self.isolated]
        curve_info = []
        for curve in self.curves:
            entries.extend(s.json_entry() for s in curve.samples)
            curve_info.append({
                "size": curve.size,
                "tangents": [list(t) for t in curve.tangents],
            })
        return {"grid": self.grid, "residual_tol": self.residual_tol,
                "solutions": entries, "curve_components": curve_info,
                "caveat": self.caveat}

    def match_isolated(self, triples, tol: float) -> bool:
        """True iff reported isolated points and the given exact triples
        match one-to-one within tolerance."""
        want = [tuple(complex(w) for w in t) for t in triples]
        if len(want) != len(self.isolated):
            return False
        used = [False] * len(want)
        for sol in self.isolated:
            best, best_d = None, None
            for idx, trip in enumerate(want):
                if used[idx]:
                    continue
                d = max(abs(a - b) for a, b in zip(sol.weights(), trip))
                if best_d is None or d < best_d:
                    best, best_d = idx, d
            if best is None or best_d > tol:
                return False
            used[best] = True
        return all(used)


def _angle_grid(n: int):
    return np.arange(n) * (2 * math.pi / n)


def _quadratic_w3_seeds(r: int, theta12: np.ndarray):
    """Seed values of w3 from the quadratic the conjugate difference
    forces: (r+1) w3^2 - (w1 w2 + r(w1+w2) + 1) w3 + (r+1) w1 w2 = 0."""
    W1 = np.exp(1j * theta12[:, 0])
    W2 = np.exp(1j * theta12[:, 1])
    qa = complex(r + 1)
    qb = -(W1 * W2 + r * (W1 + W2) + 1)
    qc = (r + 1) * W1 * W2
    seeds = []
    if abs(qa) < 1e-15:
        ok = np.abs(qb) > 1e-12
        root = np.where(ok, -qc / np.where(ok, qb, 1.0), 1.0)
        seeds.append(root)
    else:
        disc = np.sqrt(qb * qb - 4 * qa * qc + 0j)
        seeds.append((-qb + disc) / (2 * qa))
        seeds.append((-qb - disc) / (2 * qa))
    seeds.append(np.ones_like(W1))
    seeds.append(W1 * W2)
    out = []
    for root in seeds:
        mag = np.abs(root)
        out.append(np.where(mag > 1e-9, np.angle(root), 0.0))
    return out


def torus_zero_search(system: HadamardSystem, grid_per_angle: int = 64,
                      newton_tol: float = 1e-12, residual_tol: float = 1e-8,
                      cluster_radius: float = 1e-6, separation: float = 1e-4,
                      max_iter: int = 80) -> TorusSolutionSet:
    """Grid-seeded damped Gauss-Newton search over the unit torus."""
    if system.symbolic:
        raise ValueError("torus search needs a numeric system")
    if grid_per_angle < 24:
        raise ValueError("grid_per_angle must be at least 24")
    params = system.params
    r = params["r"] if isinstance(params, dict) else params.r
    b_f = math.sqrt(float(system.b2))
    full = [_Compiled(e, b_f) for e in system.conditions]

    axis = _angle_grid(grid_per_angle)
    t1, t2 = np.meshgrid(axis, axis, indexing="ij")
    grid2 = np.stack([t1.ravel(), t2.ravel()], axis=1)

    accepted: list[np.ndarray] = []
    residuals: list[np.ndarray] = []

    def full_residual(theta3):
        W1 = np.exp(1j * theta3[:, 0])
        W2 = np.exp(1j * theta3[:, 1])
        W3 = np.exp(1j * theta3[:, 2])
        res = np.zeros(theta3.shape[0])
        for p in full:
            res = np.maximum(res, np.abs(p.evaluate(W1, W2, W3)))
        return res

    def take(theta3, steps):
        ok = steps < max(newton_tol * 1e3, 1e-9)
        theta3 = theta3[ok]
        if not theta3.size:
            return
        sep = np.abs(np.exp(1j * theta3[:, 0]) - np.exp(1j * theta3[:, 1]))
        theta3 = theta3[sep > separation]
        if not theta3.size:
            return
        res = full_residual(theta3)
        keep = res <= residual_tol
        if keep.any():
            accepted.append(theta3[keep])
            residuals.append(res[keep])

    if r == 0:
        for mode in ("fixed_one", "product"):
            branch = [_Compiled(system.conditions[k].substitute_map(
                {"w3": 1 if mode == "fixed_one" else
                 system.ring.var("w1") * system.ring.var("w2")}), b_f)
                for k in (1, 3)]
            problem = _Problem(branch, mode)
            theta, steps = _gauss_newton(problem, grid2, newton_tol, max_iter)
            if mode == "fixed_one":
                w3 = np.zeros(theta.shape[0])
            else:
                w3 = np.mod(theta[:, 0] + theta[:, 1], 2 * math.pi)
            take(np.column_stack([theta, w3]), steps)
    else:
        problem = _Problem(full, "free")
        for w3_angles in _quadratic_w3_seeds(r, grid2):
            seeds = np.column_stack([grid2, w3_angles])
            theta, steps = _gauss_newton(problem, seeds, newton_tol, max_iter)
            take(theta, steps)

    if accepted:
        points = np.concatenate(accepted, axis=0)
        point_res = np.concatenate(residuals, axis=0)
    else:
        points = np.zeros((0, 3))
        point_res = np.zeros(0)

    return _classify(points, point_res, grid_per_angle, residual_tol,
                     cluster_radius)


def _classify(points: np.ndarray, res: np.ndarray, grid: int,
              residual_tol: float, cluster_radius: float) -> TorusSolutionSet:
    n = points.shape[0]
    if n == 0:
        return TorusSolutionSet([], [], grid, residual_tol)
    link = max(4 * math.pi / grid, 0.05)
    uf = _UnionFind(n)
    chunk = 512
    for start in range(0, n, chunk):
        block = points[start:start + chunk]
        dists = _torus_dist(block, points)
        rows, cols = np.nonzero(dists <= link)
        for rr, cc in zip(rows.tolist(), cols.tolist()):
            uf.union(start + rr, cc)
    groups: dict[int, list[int]] = {}
    for idx in range(n):
        groups.setdefault(uf.find(idx), []).append(idx)

    isolated: list[TorusSolution] = []
    curves: list[TorusCurve] = []
    for members in groups.values():
        pts = points[members]
        rvals = res[members]
        anchor = pts[0:1]
        spread = float(_torus_dist(anchor, pts).max())
        if spread <= max(10 * cluster_radius, 1e-5):
            best = int(np.argmin(rvals))
            angle = tuple(float(v) for v in pts[best])
            isolated.append(TorusSolution(angle, float(rvals[best])))
        else:
            order = np.argsort(pts[:, 0] + 1e-9 * pts[:, 1])
            pts_sorted = pts[order]
            rv_sorted = rvals[order]
            count = min(12, len(members))
            picks = np.linspace(0, len(members) - 1, count).astype(int)
            samples = []
            tangents = []
            for pi in picks:
                angle = tuple(float(v) for v in pts_sorted[pi])
                samples.append(TorusSolution(angle, float(rv_sorted[pi]),
                                             component="curve"))
                other = pts_sorted[(pi + 1) % len(members)]
                t = _wrap(other - pts_sorted[pi])
                norm = np.linalg.norm(t)
                if norm > 0:
                    t = t / norm
                tangents.append(tuple(float(v) for v in t))
            curves.append(TorusCurve(size=len(members), samples=samples,
                                     tangents=tangents))

    isolated.sort(key=lambda s: tuple(round(a, 9) for a in s.angles))
    curves.sort(key=lambda cv: tuple(round(a, 9)
                                     for a in cv.samples[0].angles))
    return TorusSolutionSet(isolated, curves, grid, residual_tol)
