"""The product function phi, its polytopes, and concave maximization.

This is the one deliberately numerical module: the closed-form optima
involve sqrt(2), so everything runs on 64-bit floats with explicit
tolerances (1e-9 for optima, 1e-12 for feasibility).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cochar import Partition
from .errors import Infeasible, NegativeCoordinate, NoConvergence, QTooSmall

FEAS_TOL = 1e-12
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Polytope:
    """Constraint region for the concave maximization.

    gamma rows are (offset, coefficients): offset + sum_j coeffs[j] x_j >= 0.
    The continuous region optionally includes the ordering chain
    x_1 >= ... >= x_q >= 0 and the simplex equality sum x = 1.  theta_caps
    and r_cutoff only participate in the discrete membership test.
    """

    q: int
    gamma: tuple = ()
    include_ordering: bool = True
    include_simplex: bool = True
    theta_caps: tuple = ()      # pairs (i, cap), 1-based i with q < i <= r
    r_cutoff: int | None = None

    def halfspaces(self):
        """All inequality rows as (offset, coeffs) including the ordering chain."""
        rows = [(float(off), tuple(float(c) for c in coeffs)) for off, coeffs in self.gamma]
        if self.include_ordering:
            for i in range(self.q - 1):
                coeffs = [0.0] * self.q
                coeffs[i] = 1.0
                coeffs[i + 1] = -1.0
                rows.append((0.0, tuple(coeffs)))
            last = [0.0] * self.q
            last[self.q - 1] = 1.0
            rows.append((0.0, tuple(last)))
        else:
            for i in range(self.q):
                coeffs = [0.0] * self.q
                coeffs[i] = 1.0
                rows.append((0.0, tuple(coeffs)))
        return rows

    def violation(self, x) -> float:
        worst = 0.0
        for off, coeffs in self.halfspaces():
            worst = max(worst, -(off + sum(c * xi for c, xi in zip(coeffs, x))))
        if self.include_simplex:
            worst = max(worst, abs(sum(x) - 1.0))
        return worst

    def is_feasible(self, x, tol: float = FEAS_TOL) -> bool:
        return self.violation(x) <= tol

    def inflated(self, amount: float) -> "Polytope":
        """Relax every gamma offset by the given amount (finite-n slack)."""
        rows = tuple((float(off) + amount, coeffs) for off, coeffs in self.gamma)
        return Polytope(self.q, rows, self.include_ordering, self.include_simplex,
                        self.theta_caps, self.r_cutoff)


@dataclass
class OptimizationResult:
    point: tuple
    value: float
    method: str
    certified_gap: float = 0.0


def phi(alpha) -> float:
    """prod alpha_i^(-alpha_i) with the 0^0 = 1 convention."""
    total = 0.0
    for a in alpha:
        if a < 0:
            raise NegativeCoordinate(f"negative coordinate {a}")
        if a > 0:
            total -= a * math.log(a)
    return math.exp(total)


def lemma_max_polytope(q: int) -> Polytope:
    """Ordering + simplex + the pairing constraint x_{q-1} + x_q <= x_1."""
    coeffs = [0.0] * q
    coeffs[0] = 1.0
    coeffs[q - 2] = -1.0
    coeffs[q - 1] = -1.0
    return Polytope(q, ((0.0, tuple(coeffs)),))


def lemma_max_closed_form(q: int) -> OptimizationResult:
    """The exact maximizer on the pairing polytope and its value (q-3)+2*sqrt(2)."""
    if q < 4:
        raise QTooSmall("the closed form needs q >= 4")
    denom = 4.0 + (q - 3) * math.sqrt(2.0)
    point = [2.0 / denom]
    point += [math.sqrt(2.0) / denom] * (q - 3)
    point += [1.0 / denom, 1.0 / denom]
    value = (q - 3) + 2.0 * math.sqrt(2.0)
    return OptimizationResult(tuple(point), value, "closed_form")


def _project_simplex(x):
    """Euclidean projection onto {x >= 0, sum x = 1}."""
    n = len(x)
    u = np.sort(x)[::-1]
    css = np.cumsum(u) - 1.0
    ks = np.arange(1, n + 1)
    cond = u - css / ks > 0
    rho = int(np.nonzero(cond)[0][-1]) + 1
    theta = css[rho - 1] / rho
    return np.maximum(x - theta, 0.0)


class _Region:
    """Precomputed arrays for one polytope, for the hot numeric loops."""

    def __init__(self, poly: Polytope):
        self.poly = poly
        rows = poly.halfspaces()
        self.offsets = np.array([off for off, _ in rows])
        self.coeffs = np.array([c for _, c in rows])
        self.norms = (self.coeffs ** 2).sum(axis=1)
        self.simplex = poly.include_simplex

    def violation(self, y) -> float:
        worst = float(-(self.offsets + self.coeffs @ y).min()) if len(self.offsets) else 0.0
        if self.simplex:
            worst = max(worst, abs(float(y.sum()) - 1.0))
        return max(worst, 0.0)

    def project(self, x, rounds: int = 400, tol: float = FEAS_TOL):
        y = np.array(x, dtype=float)
        for _ in range(rounds):
            if self.simplex:
                y = _project_simplex(y)
            else:
                y = np.maximum(y, 0.0)
            resid = self.offsets + self.coeffs @ y
            bad = np.nonzero(resid < -tol)[0]
            if bad.size == 0:
                if self.violation(y) <= tol:
                    return y
                continue
            for i in bad:
                r = self.offsets[i] + float(self.coeffs[i] @ y)
                if r < 0:
                    y = y - (r / self.norms[i]) * self.coeffs[i]
        return y


def _grad(x):
    # gradient of -sum x ln x, clipped near the boundary
    safe = np.maximum(x, 1e-300)
    return -(np.log(safe) + 1.0)


def _log_value(x):
    safe = np.where(x > 0, x, 1.0)
    return float(-(x * np.log(safe)).sum())


def _snap(region: _Region, x, zero_tol: float = 1e-8):
    """Clip tiny coordinates to exact zero and renormalize the simplex sum."""
    y = np.where(np.abs(x) < zero_tol, 0.0, np.array(x, dtype=float))
    if region.simplex and y.sum() > 0:
        y = y / y.sum()
    return y


def _active_set_polish(region: _Region, x, iters: int = 60, eps: float = 1e-7):
    """Newton ascent on the face spanned by the active constraints.

    The concave objective restricted to an affine face is smooth, so a
    few Newton steps after the projected-gradient phase squeeze the last
    digits out of the optimum.  Coordinates pinned to zero by active
    constraints stay out of the Newton system (their contribution is the
    0 log 0 = 0 convention).
    """
    q = region.poly.q
    rows = []
    rhs = []
    if region.simplex:
        rows.append(np.ones(q))
        rhs.append(1.0)
    resid = region.offsets + region.coeffs @ x
    for i in np.nonzero(np.abs(resid) < eps)[0]:
        rows.append(region.coeffs[i])
        rhs.append(-region.offsets[i])
    a_eq = np.vstack(rows)
    b_eq = np.array(rhs)
    # particular solution and nullspace of the active equalities
    x0, *_ = np.linalg.lstsq(a_eq, b_eq, rcond=None)
    x0 = np.where(np.abs(x0) < 1e-13, 0.0, x0)
    _, s, vh = np.linalg.svd(a_eq)
    rank = int((s > 1e-10).sum())
    null = vh[rank:].T
    best = np.array(x, dtype=float)

    def better(cand):
        nonlocal best
        cand = np.where(np.abs(cand) < 1e-13, 0.0, cand)
        if (cand >= 0).all() and region.violation(cand) <= 1e-9 \
                and _log_value(cand) >= _log_value(best):
            best = cand

    if null.shape[1] == 0:
        better(x0)
        return best
    free = np.nonzero((np.abs(null).max(axis=1) > 1e-12) | (x0 > 1e-12))[0]
    z = null.T @ (np.array(x) - x0)
    for _ in range(iters):
        cur = x0 + null @ z
        if (cur[free] <= 0).any():
            break
        g = null[free].T @ _grad(cur[free])
        h = null[free].T @ (null[free] * (-1.0 / cur[free])[:, None])
        try:
            step = np.linalg.solve(h, -g)
        except np.linalg.LinAlgError:
            break
        t = 1.0
        for _ in range(40):
            cand = x0 + null @ (z + t * step)
            if (cand[free] > 0).all() and region.violation(cand) <= 1e-9 \
                    and _log_value(cand) >= _log_value(cur) - 1e-15:
                break
            t *= 0.5
        else:
            break
        z = z + t * step
        if float(np.abs(t * (null @ step)).max()) < 1e-15:
            break
    better(x0 + null @ z)
    return best


def maximize_phi(poly: Polytope, tolerance: float = DEFAULT_TOL, seed: int = 0,
                 starts: int = 16, max_iter: int = 400,
                 probes: int = 256) -> OptimizationResult:
    """Maximize phi by multi-start projected gradient ascent.

    The objective is concave and the region convex, so any local optimum
    is global; the gradient phase identifies the optimal face and an
    active-set Newton polish squeezes out the last digits.
    certified_gap reports the best improvement any sampled feasible probe
    point achieves over the returned value.
    """
    q = poly.q
    region = _Region(poly)
    rng = random.Random(seed)
    uniform = region.project(np.full(q, 1.0 / q))
    if region.violation(uniform) > 1e-9:
        raise Infeasible("no feasible point found from the uniform start")
    best_x, best_v = None, -math.inf
    loose = 1e-10
    for s in range(starts):
        if s == 0:
            x = uniform.copy()
        else:
            raw = np.array([rng.random() ** 2 for _ in range(q)])
            raw = raw / raw.sum()
            x = region.project(raw, rounds=60, tol=loose)
            if region.violation(x) > 1e-8:
                continue
        step = 0.25
        for _ in range(max_iter):
            g = _grad(x)
            gn = float(np.abs(g).max())
            y = region.project(x + step * g / max(gn, 1.0), rounds=40, tol=loose)
            if region.violation(y) > 1e-8:
                step *= 0.5
                continue
            if _log_value(y) < _log_value(x) - 1e-14:
                step *= 0.5
                if step < 1e-12:
                    break
                continue
            delta = float(np.abs(y - x).max())
            x = y
            step = min(step * 1.3, 0.5)
            if delta < 1e-8:
                break
        x = _active_set_polish(region, _snap(region, x))
        x = _active_set_polish(region, x)  # re-detect actives from the face point
        if region.violation(x) > FEAS_TOL:
            x = _snap(region, region.project(x))
        if region.violation(x) > FEAS_TOL:
            continue
        v = _log_value(x)
        if v > best_v:
            best_v, best_x = v, x
    if best_x is None:
        raise NoConvergence("no start produced a point feasible at 1e-12")
    value = math.exp(best_v)
    gap = 0.0
    for _ in range(probes):
        raw = np.array([rng.random() ** 2 for _ in range(q)])
        raw = raw / max(raw.sum(), 1e-12)
        p = region.project(raw, rounds=40, tol=loose)
        if region.violation(p) <= 1e-8:
            gap = max(gap, phi(tuple(p)) - value)
    if gap > tolerance:
        raise NoConvergence(f"a probe point beats the optimum by {gap}")
    return OptimizationResult(tuple(float(a) for a in best_x), value,
                              "projected_gradient+newton_polish", gap)


# -- discrete membership and the floor sequence ---------------------------------

def omega_n_membership(poly: Polytope, lam: Partition) -> bool:
    """Exact integer test of the discrete constraints on a partition."""
    q = poly.q
    for off, coeffs in poly.gamma:
        total = Fraction(off).limit_denominator(10 ** 9) if isinstance(off, float) else Fraction(off)
        for j, c in enumerate(coeffs, start=1):
            cf = Fraction(c).limit_denominator(10 ** 9) if isinstance(c, float) else Fraction(c)
            total += cf * lam.part(j)
        if total < 0:
            return False
    for i, cap in poly.theta_caps:
        if lam.part(i) > cap:
            return False
    if poly.r_cutoff is not None and lam.part(poly.r_cutoff + 1) > 0:
        return False
    return True


def witness_domain_polytope(variant: str) -> Polytope:
    """Discrete region where the witness construction runs without a
    surplus column: at most q parts and lambda_{q-1}+lambda_q <= lambda_1."""
    q = 7 if variant == "T1" else 6
    coeffs = [0] * q
    coeffs[0] = 1
    coeffs[q - 2] = -1
    coeffs[q - 1] = -1
    return Polytope(q, ((0, tuple(coeffs)),), r_cutoff=q)


def multiplicity_support_polytope(variant: str) -> Polytope:
    """Discrete region the nonzero multiplicities are confined to:
    lambda_{q-1}+lambda_q <= lambda_1 + 1 with at most q parts."""
    q = 7 if variant == "T1" else 6
    coeffs = [0] * q
    coeffs[0] = 1
    coeffs[q - 2] = -1
    coeffs[q - 1] = -1
    return Polytope(q, ((1, tuple(coeffs)),), r_cutoff=q)


def mu_sequence_detailed(alpha, n: int):
    """Floor-scale a feasible point to a partition of n.

    mu_i = floor(alpha_i n) for i >= 2 and mu_1 takes the remainder;
    when flooring breaks weak decrease the excess moves left one unit at
    a time, each move logged.
    """
    q = len(alpha)
    mu = [0] * q
    for i in range(1, q):
        mu[i] = math.floor(alpha[i] * n)
    mu[0] = n - sum(mu[1:])
    moves = []
    changed = True
    while changed:
        changed = False
        for i in range(q - 1):
            if mu[i] < mu[i + 1]:
                mu[i] += 1
                mu[i + 1] -= 1
                moves.append(i + 1)
                changed = True
    parts = tuple(p for p in mu if p > 0)
    return Partition(parts), moves


def mu_sequence(alpha, n: int) -> Partition:
    return mu_sequence_detailed(alpha, n)[0]


def bound_report(d: float, n_values, c_values=None, alpha=None):
    """Rows (n, d^n, c_n, hook lower bound) for the report tables.

    Purely descriptive: the growth constants in front of d^n are
    existential, so no ratio here claims convergence.
    """
    from .cochar import hook_dim
    rows = []
    c_map = dict(c_values or {})
    for n in n_values:
        row = {"n": n, "d_pow_n": d ** n, "c_n": c_map.get(n)}
        if alpha is not None:
            row["hook_lower"] = hook_dim(mu_sequence(alpha, n))
        else:
            row["hook_lower"] = None
        rows.append(row)
    return rows
