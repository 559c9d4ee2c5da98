"""Exact rational simplex for small dense systems.

Solves max c.x subject to A x <= b, x >= 0 in Fraction arithmetic with
Bland's anti cycling rule, so every run terminates and every answer is
exact.  Alongside the optimum it returns checkable certificates: dual
multipliers at an optimum, an improving ray when unbounded, and a Farkas
vector when infeasible.  Scale target is a few hundred rows by a few dozen
columns; everything is dense.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple


class SimplexResult(NamedTuple):
    status: str
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None
    dual: tuple[Fraction, ...] | None = None
    ray: tuple[Fraction, ...] | None = None
    farkas: tuple[Fraction, ...] | None = None


def _pivot(rows, obj, basis, r, j):
    piv = rows[r][j]
    rows[r] = [v / piv for v in rows[r]]
    pivot_row = rows[r]
    for i in range(len(rows)):
        if i != r and rows[i][j]:
            f = rows[i][j]
            rows[i] = [a - f * p for a, p in zip(rows[i], pivot_row)]
    if obj[j]:
        f = obj[j]
        for k in range(len(obj)):
            obj[k] -= f * pivot_row[k]
    basis[r] = j


def _recompute_obj(rows, basis, cost, width):
    # reduced costs for the current basis; rhs cell holds minus the value
    obj = list(cost) + [Fraction(0)]
    for r, var in enumerate(basis):
        f = obj[var]
        if f:
            for k in range(width):
                obj[k] -= f * rows[r][k]
    return obj


def _entering(obj, nvars):
    for j in range(nvars):
        if obj[j] > 0:
            return j
    return None


def _leaving(rows, basis, j):
    best = None
    for r in range(len(rows)):
        coef = rows[r][j]
        if coef > 0:
            ratio = rows[r][-1] / coef
            if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                best = (ratio, r)
    return None if best is None else best[1]


def _structural_ray(rows, basis, j, nstruct):
    ray = [Fraction(0)] * nstruct
    if j < nstruct:
        ray[j] = Fraction(1)
    for r, var in enumerate(basis):
        if var < nstruct and rows[r][j]:
            ray[var] = -rows[r][j]
    return tuple(ray)


def simplex_max(A, b, c) -> SimplexResult:
    """Maximize c.x over A x <= b, x >= 0. All data coerced to Fraction."""
    m = len(A)
    n = len(c)
    if any(len(row) != n for row in A) or len(b) != m:
        raise ValueError("inconsistent system dimensions")
    cost = [Fraction(v) for v in c]
    if m == 0:
        for j in range(n):
            if cost[j] > 0:
                ray = [Fraction(0)] * n
                ray[j] = Fraction(1)
                return SimplexResult("unbounded", ray=tuple(ray))
        zero = tuple(Fraction(0) for _ in range(n))
        return SimplexResult("optimal", value=Fraction(0), x=zero, dual=())

    nvars = n + m
    aux = nvars
    rows = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        row += [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        row.append(Fraction(-1))
        row.append(Fraction(b[i]))
        rows.append(row)
    basis = [n + i for i in range(m)]
    width = nvars + 2  # structural + slack + aux + rhs

    if any(rows[i][-1] < 0 for i in range(m)):
        # phase 1: drive the auxiliary variable to zero
        phase_cost = [Fraction(0)] * (nvars + 1)
        phase_cost[aux] = Fraction(-1)
        r0 = min(range(m), key=lambda i: (rows[i][-1], i))
        obj = _recompute_obj(rows, basis, phase_cost, width)
        _pivot(rows, obj, basis, r0, aux)
        while True:
            j = _entering(obj, nvars + 1)
            if j is None:
                break
            r = _leaving(rows, basis, j)
            if r is None:
                raise RuntimeError("phase 1 cannot be unbounded")
            _pivot(rows, obj, basis, r, j)
            if aux not in basis:
                break
        if aux in basis:
            r = basis.index(aux)
            if rows[r][-1] != 0:
                farkas = tuple(-obj[n + i] for i in range(m))
                return SimplexResult("infeasible", farkas=farkas)
            piv_col = next(k for k in range(nvars) if rows[r][k])
            _pivot(rows, obj, basis, r, piv_col)
    for row in rows:
        del row[aux]
    width -= 1

    obj = _recompute_obj(rows, basis, cost + [Fraction(0)] * m, width)
    while True:
        j = _entering(obj, nvars)
        if j is None:
            value = -obj[-1]
            x = [Fraction(0)] * n
            for r, var in enumerate(basis):
                if var < n:
                    x[var] = rows[r][-1]
            dual = tuple(-obj[n + i] for i in range(m))
            return SimplexResult("optimal", value=value, x=tuple(x), dual=dual)
        r = _leaving(rows, basis, j)
        if r is None:
            return SimplexResult("unbounded", ray=_structural_ray(rows, basis, j, n))
        _pivot(rows, obj, basis, r, j)
