"""Convex polytope of Chern ratios cut out by the generated inequalities.

Coordinates are the ratios c_q / c_1^n indexed by weight-n partitions q
other than the all-ones one, listed in ascending alphabet order.  After
specializing m, each inequality divides by c_1^n; c_1^n has sign (-1)^n for
general type and +1 for Fano, so rows are multiplied by that sign to keep
the >= 0 direction.  Bounds on each coordinate come from exact rational LP.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .inequalities import Inequality, generate_all, specialize
from .lp import simplex_max
from .mpoly import rational_content
from .partitions import Partition, enumerate_partitions
from .todd import chi_structure_sheaf_functional

GENERAL_TYPE = "general-type"
FANO = "fano"


def ratio_coordinates(n: int) -> list[Partition]:
    """Weight-n partitions except the all-ones one, ascending alphabet."""
    if n < 2:
        raise ValueError("dimension must be at least 2")
    ascending = list(reversed(enumerate_partitions(n)))
    return ascending[1:]


class RatioInequality(NamedTuple):
    n: int
    coeffs: tuple[Fraction, ...]  # aligned with ratio_coordinates(n)
    constant: Fraction

    def is_constant_only(self) -> bool:
        return not any(self.coeffs)


def _mode_sign(n: int, m_value: int, mode: str) -> int:
    if mode == GENERAL_TYPE:
        if m_value < 1:
            raise ValueError("general-type mode needs m >= 1")
        return -1 if n % 2 else 1
    if mode == FANO:
        if m_value > -1:
            raise ValueError("fano mode needs m <= -1")
        return 1
    raise ValueError(f"unknown mode {mode!r}")


def normalize_to_ratio(ineq: Inequality, m_value: int, mode: str) -> RatioInequality:
    """Divide a specialized inequality by c_1^n and fix the direction."""
    if ineq.m_value != m_value:
        raise ValueError("inequality must be specialized at the given m")
    sign = _mode_sign(ineq.n, m_value, mode)
    ones = Partition([1] * ineq.n)
    vals: dict[Partition, Fraction] = {}
    for mono, coeff in ineq.lhs.terms.items():
        if mono.line_power:
            raise ValueError("unexpected twist symbol in inequality")
        if not coeff.is_constant():
            raise ValueError("coefficients still symbolic, specialize first")
        vals[mono.parts] = coeff.constant_value()
    coords = ratio_coordinates(ineq.n)
    row = tuple(sign * vals.get(q, Fraction(0)) for q in coords)
    const = sign * vals.get(ones, Fraction(0))
    if not any(row) and const == 0:
        raise ValueError("degenerate inequality 0 >= 0")
    return RatioInequality(ineq.n, row, const)


def build_polytope(
    n: int, m_value: int, mode: str = GENERAL_TYPE, include_comparisons: bool = True
) -> list[RatioInequality]:
    """Specialize, normalize, and deduplicate every generated inequality.

    Rows touching no coordinate are dropped; such a row always has a
    nonnegative constant (a negative one would mean a sign bug upstream).
    Duplicates are detected up to positive scaling via content division.
    """
    rows: list[RatioInequality] = []
    seen = set()
    for ineq in generate_all(n, include_comparisons):
        ratio = normalize_to_ratio(specialize(ineq, m_value), m_value, mode)
        if ratio.is_constant_only():
            if ratio.constant < 0:
                raise RuntimeError("constant row with negative constant")
            continue
        vals = ratio.coeffs + (ratio.constant,)
        content = rational_content(vals)
        canon = tuple(v / content for v in vals)
        if canon in seen:
            continue
        seen.add(canon)
        rows.append(RatioInequality(n, canon[:-1], canon[-1]))
    return rows


class LpResult(NamedTuple):
    status: str
    value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None
    ray: tuple[Fraction, ...] | None = None
    farkas: tuple[Fraction, ...] | None = None


def lp_optimize(
    constraints: list[RatioInequality], objective, direction: str
) -> LpResult:
    """Optimize a linear functional of the ratio coordinates exactly.

    Coordinates are free, so each splits into a difference of two
    nonnegative variables before the simplex call.
    """
    if not constraints:
        raise ValueError("empty constraint system")
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
    k = len(constraints[0].coeffs)
    objective = tuple(Fraction(v) for v in objective)
    if len(objective) != k:
        raise ValueError("objective length does not match coordinate count")
    goal = objective if direction == "max" else tuple(-v for v in objective)
    matrix = []
    rhs = []
    for row in constraints:
        if len(row.coeffs) != k:
            raise ValueError("constraint rows use different coordinate spaces")
        matrix.append([-v for v in row.coeffs] + list(row.coeffs))
        rhs.append(row.constant)
    cost = list(goal) + [-v for v in goal]
    res = simplex_max(matrix, rhs, cost)
    if res.status == "optimal":
        point = tuple(res.x[q] - res.x[k + q] for q in range(k))
        value = res.value if direction == "max" else -res.value
        return LpResult("optimal", value=value, point=point)
    if res.status == "unbounded":
        ray = tuple(res.ray[q] - res.ray[k + q] for q in range(k))
        return LpResult("unbounded", ray=ray)
    return LpResult("infeasible", farkas=res.farkas)


class CoordinateBound(NamedTuple):
    partition: Partition
    minimum: Fraction | None
    maximum: Fraction | None
    min_status: str
    max_status: str
    min_ray: tuple[Fraction, ...] | None = None
    max_ray: tuple[Fraction, ...] | None = None


class BoundsCertificate(NamedTuple):
    n: int
    m_value: int
    mode: str
    coordinates: tuple[CoordinateBound, ...]
    bounded: bool


def boundedness_certificate(
    n: int, m_value: int, mode: str = GENERAL_TYPE, include_comparisons: bool = True
) -> BoundsCertificate:
    """Exact min and max of every ratio coordinate over the polytope."""
    rows = build_polytope(n, m_value, mode, include_comparisons)
    coords = ratio_coordinates(n)
    k = len(coords)
    bounds = []
    all_optimal = True
    for q in range(k):
        unit = tuple(Fraction(1) if j == q else Fraction(0) for j in range(k))
        low = lp_optimize(rows, unit, "min")
        high = lp_optimize(rows, unit, "max")
        if low.status != "optimal" or high.status != "optimal":
            all_optimal = False
        bounds.append(
            CoordinateBound(
                coords[q],
                low.value,
                high.value,
                low.status,
                high.status,
                low.ray,
                high.ray,
            )
        )
    return BoundsCertificate(n, m_value, mode, tuple(bounds), all_optimal)


class ChiBounds(NamedTuple):
    d1: Fraction | None
    d2: Fraction | None
    d3: Fraction | None
    d4: Fraction | None
    statuses: tuple[str, str, str, str]


def chi_bounds(
    n: int, m_value: int, mode: str = GENERAL_TYPE, include_comparisons: bool = True
) -> ChiBounds:
    """Bounds for the Euler number and the structure-sheaf characteristic.

    Both are measured against the n-th power of the (anti)canonical class;
    the conversion factor c_1^n / K^n is (-1)^n in both modes.  d1, d2 bound
    the top Chern class; d3, d4 bound the degree-n piece of the Todd class.
    """
    rows = build_polytope(n, m_value, mode, include_comparisons)
    coords = ratio_coordinates(n)
    sign = -1 if n % 2 else 1
    top = Partition([n])
    top_obj = tuple(Fraction(sign) if q == top else Fraction(0) for q in coords)

    todd_top = chi_structure_sheaf_functional(n)
    todd_vals: dict[Partition, Fraction] = {}
    for mono, coeff in todd_top.terms.items():
        todd_vals[mono.parts] = coeff.constant_value()
    ones = Partition([1] * n)
    todd_obj = tuple(sign * todd_vals.get(q, Fraction(0)) for q in coords)
    todd_shift = sign * todd_vals.get(ones, Fraction(0))

    runs = (
        lp_optimize(rows, top_obj, "min"),
        lp_optimize(rows, top_obj, "max"),
        lp_optimize(rows, todd_obj, "min"),
        lp_optimize(rows, todd_obj, "max"),
    )
    values = []
    for idx, res in enumerate(runs):
        if res.status != "optimal":
            values.append(None)
        elif idx < 2:
            values.append(res.value)
        else:
            values.append(res.value + todd_shift)
    return ChiBounds(
        values[0], values[1], values[2], values[3], tuple(r.status for r in runs)
    )
