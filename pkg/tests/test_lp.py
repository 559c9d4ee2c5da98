"""Exercises the exact simplex, validating every certificate it returns.

An optimal answer is accepted only with a matching dual proof, an
unbounded answer only with an improving ray, an infeasible answer only
with a Farkas vector, so the tests do not trust the solver's word.
"""

import random
from fractions import Fraction

import pytest

from chernbounds.lp import simplex_max

try:
    from scipy.optimize import linprog

    HAVE_SCIPY = True
except ImportError:
    HAVE_SCIPY = False


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def assert_optimal(A, b, c, res):
    assert res.status == "optimal"
    assert all(x >= 0 for x in res.x)
    for row, rhs in zip(A, b):
        assert _dot(row, res.x) <= rhs
    assert _dot(c, res.x) == res.value
    # dual feasibility plus matching objective is a complete proof
    y = res.dual
    assert all(v >= 0 for v in y)
    for j in range(len(c)):
        assert _dot(y, [row[j] for row in A]) >= c[j]
    assert _dot(y, b) == res.value


def assert_unbounded(A, b, c, res):
    assert res.status == "unbounded"
    r = res.ray
    assert all(v >= 0 for v in r)
    assert any(r)
    for row in A:
        assert _dot(row, r) <= 0
    assert _dot(c, r) > 0


def assert_infeasible(A, b, res):
    assert res.status == "infeasible"
    y = res.farkas
    assert all(v >= 0 for v in y)
    for j in range(len(A[0])):
        assert _dot(y, [row[j] for row in A]) >= 0
    assert _dot(y, b) < 0


def test_basic_optimal():
    A = [[1, 1], [1, 0]]
    b = [4, 3]
    c = [2, 1]
    res = simplex_max(A, b, c)
    assert res.value == 7
    assert res.x == (3, 1)
    assert_optimal(A, b, c, res)


def test_fractional_data():
    A = [[Fraction(1, 3), 1]]
    b = [Fraction(5, 7)]
    c = [1, 0]
    res = simplex_max(A, b, c)
    assert res.value == Fraction(15, 7)
    assert_optimal(A, b, c, res)


def test_negative_rhs_needs_phase_one():
    # x1 >= 1 encoded as -x1 <= -1
    A = [[-1, 0], [1, 1]]
    b = [-1, 3]
    c = [0, 1]
    res = simplex_max(A, b, c)
    assert res.value == 2
    assert_optimal(A, b, c, res)


def test_unbounded_with_ray():
    A = [[1, -1]]
    b = [1]
    c = [0, 1]
    res = simplex_max(A, b, c)
    assert_unbounded(A, b, c, res)


def test_unbounded_no_rows():
    res = simplex_max([], [], [1, -1])
    assert res.status == "unbounded"
    assert res.ray == (1, 0)


def test_optimal_no_rows():
    res = simplex_max([], [], [-1, -1])
    assert res.status == "optimal"
    assert res.value == 0


def test_infeasible_with_farkas():
    A = [[1, 1], [-1, -1]]
    b = [1, -3]
    c = [1, 0]
    res = simplex_max(A, b, c)
    assert_infeasible(A, b, res)


def test_equality_pair_pins_value():
    # x1 + x2 == 2 via two opposite rows
    A = [[1, 1], [-1, -1], [1, 0]]
    b = [2, -2, 1]
    c = [3, 1]
    res = simplex_max(A, b, c)
    assert res.value == 4
    assert_optimal(A, b, c, res)


def test_beale_degenerate_instance_terminates():
    # classic cycling example; Bland's rule must terminate
    A = [
        [Fraction(1, 4), -60, Fraction(-1, 25), 9],
        [Fraction(1, 2), -90, Fraction(-1, 50), 3],
        [0, 0, 1, 0],
    ]
    b = [0, 0, 1]
    c = [Fraction(3, 4), -150, Fraction(1, 50), -6]
    res = simplex_max(A, b, c)
    assert res.value == Fraction(1, 20)
    assert_optimal(A, b, c, res)


def test_klee_minty_3():
    A = [[1, 0, 0], [4, 1, 0], [8, 4, 1]]
    b = [5, 25, 125]
    c = [4, 2, 1]
    res = simplex_max(A, b, c)
    assert res.value == 125
    assert_optimal(A, b, c, res)


def test_random_instances_certified():
    rng = random.Random(1729)
    statuses = set()
    for _ in range(120):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        A = [[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(m)]
        b = [Fraction(rng.randint(-3, 6)) for _ in range(m)]
        c = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
        res = simplex_max(A, b, c)
        statuses.add(res.status)
        if res.status == "optimal":
            assert_optimal(A, b, c, res)
        elif res.status == "unbounded":
            assert_unbounded(A, b, c, res)
        else:
            assert_infeasible(A, b, res)
    # the sweep should hit all three outcomes
    assert statuses == {"optimal", "unbounded", "infeasible"}


@pytest.mark.skipif(not HAVE_SCIPY, reason="scipy not installed")
def test_matches_float_solver():
    rng = random.Random(4104)
    compared = 0
    for _ in range(60):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        A = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
        b = [rng.randint(-2, 6) for _ in range(m)]
        c = [rng.randint(-4, 4) for _ in range(n)]
        res = simplex_max(A, b, c)
        ref = linprog(
            [-v for v in c], A_ub=A, b_ub=b, bounds=[(0, None)] * n, method="highs"
        )
        if res.status == "optimal":
            assert ref.status == 0
            assert abs(float(res.value) + ref.fun) < 1e-9
            compared += 1
        elif res.status == "unbounded":
            assert ref.status == 3
        else:
            assert ref.status == 2
    assert compared > 10
