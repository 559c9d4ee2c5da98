"""Independent brute-force implementations used only as test oracles.

Nothing here is shared with the package under test: Schur polynomials
come from explicit semistandard tableaux, Todd classes from explicit
Chern roots, and hypersurface Chern numbers from the conormal sequence.
Slow but transparently correct.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb


# ---------------------------------------------------------------------------
# Schur polynomials via semistandard Young tableaux


def _rows_filling(width, floor, strict_above, max_entry):
    """Weakly increasing rows of given width, entry j > strict_above[j]."""
    if width == 0:
        yield ()
        return
    lo = max(floor, strict_above[0] + 1)
    for first in range(lo, max_entry + 1):
        for rest in _rows_filling(width - 1, first, strict_above[1:], max_entry):
            yield (first,) + rest


def _tableaux(shape, max_entry):
    if not shape:
        yield ()
        return
    width = shape[0]
    for row in _rows_filling(width, 1, (0,) * width, max_entry):
        for rest in _tableaux_below(shape[1:], row, max_entry):
            yield (row,) + rest


def _tableaux_below(shape, above, max_entry):
    if not shape:
        yield ()
        return
    width = shape[0]
    for row in _rows_filling(width, 1, above[:width], max_entry):
        for rest in _tableaux_below(shape[1:], row, max_entry):
            yield (row,) + rest


@lru_cache(maxsize=None)
def schur_monomials(shape, nvars):
    """Schur polynomial s_shape(x_1..x_nvars) as {exponent tuple: count}."""
    out = {}
    for tab in _tableaux(tuple(shape), nvars):
        content = [0] * nvars
        for row in tab:
            for entry in row:
                content[entry - 1] += 1
        key = tuple(content)
        out[key] = out.get(key, 0) + 1
    return out


def poly_mul(p, q):
    out = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def to_schur_basis(poly, nvars):
    """Expand a symmetric polynomial in the Schur basis by leading-term peel.

    The lex-leading exponent of a symmetric polynomial is a partition, and
    the leading monomial of s_lam is x^lam, so repeated subtraction
    terminates.  Raises if the input was not symmetric enough to peel.
    """
    work = {k: v for k, v in poly.items() if v}
    out = {}
    while work:
        lead = max(work)
        coeff = work[lead]
        shape = tuple(e for e in lead if e)
        if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
            raise ValueError(f"leading exponent {lead} is not a partition")
        out[shape] = coeff
        for key, val in schur_monomials(shape, nvars).items():
            work[key] = work.get(key, 0) - coeff * val
        work = {k: v for k, v in work.items() if v}
    return out


def schur_product(a, b, nvars):
    """Structure constants of s_a * s_b, computed monomial by monomial."""
    pa = schur_monomials(tuple(a), nvars)
    pb = schur_monomials(tuple(b), nvars)
    return to_schur_basis(poly_mul(pa, pb), nvars)


# ---------------------------------------------------------------------------
# Todd classes via explicit Chern roots


def _todd_series(order):
    """Coefficients of t / (1 - exp(-t)) through t^order."""
    # denominator (1 - exp(-t)) / t = sum (-1)^k t^k / (k+1)!
    den = [Fraction((-1) ** k, _factorial(k + 1)) for k in range(order + 1)]
    inv = [Fraction(1)]
    for k in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            acc += den[j] * inv[k - j]
        inv.append(-acc)
    return inv


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def _trunc_mul(p, q, order):
    out = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if sum(e) > order:
                continue
            out[e] = out.get(e, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def todd_class_from_roots(d):
    """Degree-d part of prod_i x_i/(1-exp(-x_i)) in d roots, as exponent dict."""
    series = _todd_series(d)
    zero = (0,) * d
    total = {zero: Fraction(1)}
    for i in range(d):
        factor = {}
        for k, coeff in enumerate(series):
            e = list(zero)
            e[i] = k
            factor[tuple(e)] = coeff
        total = _trunc_mul(total, factor, d)
    return {e: c for e, c in total.items() if sum(e) == d}


def elementary_symmetric(k, d):
    """e_k(x_1..x_d) as an exponent dict."""
    out = {}
    if k == 0:
        return {(0,) * d: Fraction(1)}
    for combo in _combinations(range(d), k):
        e = [0] * d
        for i in combo:
            e[i] = 1
        out[tuple(e)] = Fraction(1)
    return out


def _combinations(seq, k):
    seq = list(seq)
    if k == 0:
        yield ()
        return
    for i in range(len(seq) - k + 1):
        for rest in _combinations(seq[i + 1 :], k - 1):
            yield (seq[i],) + rest


def chern_poly_from_roots(poly, d):
    """Evaluate a degree-d ChernPoly at c_i = e_i(x_1..x_d); exponent dict."""
    zero = (0,) * d
    total = {}
    for mono, coeff in poly.terms.items():
        if mono.line_power:
            raise ValueError("line symbol has no root expansion")
        term = {zero: coeff.constant_value()}
        for part in mono.parts:
            term = _trunc_mul(term, elementary_symmetric(part, d), d)
        for e, c in term.items():
            total[e] = total.get(e, 0) + c
    return {e: c for e, c in total.items() if c}


# ---------------------------------------------------------------------------
# Chern numbers of hypersurfaces


def hypersurface_chern_numbers(n, degree):
    """Chern numbers of a smooth degree-d hypersurface in P^(n+1).

    c(X) = (1+H)^(n+2) / (1+dH) truncated past H^n, and H^n integrates
    to d on X.  Returns {partition: integer} for all partitions of n,
    plus the canonical multiplier under key "m" (K_X = (d-n-2) H).
    """
    alpha = []
    for p in range(n + 1):
        val = sum(comb(n + 2, i) * (-degree) ** (p - i) for i in range(p + 1))
        alpha.append(val)
    numbers = {}
    for lam in _partitions(n):
        prod_val = degree
        for part in lam:
            prod_val *= alpha[part]
        numbers[lam] = prod_val
    numbers["m"] = degree - n - 2
    return numbers


def _partitions(n, cap=None):
    if cap is None:
        cap = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Float LP cross-check

try:
    from scipy.optimize import linprog

    HAVE_SCIPY = True
except ImportError:  # pragma: no cover
    HAVE_SCIPY = False


def float_lp(constraints, objective, direction):
    """Solve max/min objective.x subject to coeffs.x + constant >= 0, x free.

    Returns (status, value) with float value; status in
    {"optimal", "unbounded", "infeasible"}.
    """
    a_ub = [[-float(v) for v in row.coeffs] for row in constraints]
    b_ub = [float(row.constant) for row in constraints]
    sign = -1.0 if direction == "max" else 1.0
    cost = [sign * float(v) for v in objective]
    res = linprog(
        cost,
        A_ub=a_ub,
        b_ub=b_ub,
        bounds=[(None, None)] * len(cost),
        method="highs",
    )
    if res.status == 0:
        return "optimal", sign * res.fun
    if res.status == 3:
        return "unbounded", None
    if res.status == 2:
        return "infeasible", None
    return f"scipy-{res.status}", None
