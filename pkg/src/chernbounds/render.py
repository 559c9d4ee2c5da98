"""Text, LaTeX, and JSON forms for every object the command line emits.

All three formats are deterministic: terms are ordered by monomial length
descending, then alphabet descending, and rationals are printed exactly
("p" or "p/q", never floats).  The JSON emitters return plain dicts; their
parse_* inverses rebuild the original objects, so emit/parse round-trips
are identities.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .chern import ChernPoly, Monomial, cmono
from .inequalities import Inequality, Provenance
from .mpoly import MPoly
from .partitions import Partition
from .polytope import BoundsCertificate, CoordinateBound, RatioInequality
from .schubert import SchubertExpr

_STYLES = {"x": ("c", ""), "s": ("c", "S"), "e": ("c", ""), "a": ("a", "")}


def _term_sort_key(mono: Monomial):
    return (-mono.parts.length, tuple(-p for p in mono.parts), mono.line_power)


def _sub(base: str, i: int, latex: bool) -> str:
    if latex:
        return f"{base}_{i}" if 0 <= i <= 9 else f"{base}_{{{i}}}"
    return f"{base}{i}"


def _exp(e: int, latex: bool) -> str:
    if e == 1:
        return ""
    if latex and e > 9:
        return f"^{{{e}}}"
    return f"^{e}"


def _frac_str(v: Fraction, latex: bool) -> str:
    if latex and v.denominator != 1:
        sign = "-" if v < 0 else ""
        return f"{sign}\\tfrac{{{abs(v.numerator)}}}{{{v.denominator}}}"
    return str(v)


def render_mpoly(p: MPoly, latex: bool = False) -> str:
    """Polynomial in m, powers descending, exact coefficients."""
    if not p:
        return "0"
    pieces = []
    first = True
    for e in range(p.degree, -1, -1):
        v = p.coeffs[e]
        if not v:
            continue
        mag = abs(v)
        var = "" if e == 0 else "m" + _exp(e, latex)
        if var and mag == 1:
            body = var
        elif var:
            coeff = _frac_str(mag, latex)
            if not latex and mag.denominator != 1:
                coeff = f"({coeff})"
            body = coeff + var
        else:
            body = _frac_str(mag, latex)
        if first:
            pieces.append(("-" if v < 0 else "") + body)
            first = False
        else:
            pieces.append((" - " if v < 0 else " + ") + body)
    return "".join(pieces)


def _monomial_str(mono: Monomial, variables: str, latex: bool) -> str:
    letter, suffix = _STYLES[variables]
    factors = []
    for i, e in sorted(Counter(mono.parts).items()):
        factors.append(_sub(letter, i, latex) + _exp(e, latex) + suffix)
    if mono.line_power:
        factors.append("L" + _exp(mono.line_power, latex))
    joiner = "" if latex else "*"
    return joiner.join(factors)


def _coeff_prefix(coeff: MPoly, latex: bool) -> tuple[int, str]:
    """Sign and body of a coefficient in front of a nonempty monomial."""
    nonzero = [v for v in coeff.coeffs if v]
    if len(nonzero) > 1:
        if all(v < 0 for v in nonzero):
            return -1, "(" + render_mpoly(-coeff, latex) + ")"
        return 1, "(" + render_mpoly(coeff, latex) + ")"
    v = nonzero[0]
    sign = -1 if v < 0 else 1
    body = render_mpoly(coeff if sign > 0 else -coeff, latex)
    if body == "1":
        return sign, ""
    if not latex and "/" in body:
        body = f"({body})"
    return sign, body


def render_chern(poly: ChernPoly, latex: bool = False) -> str:
    if not poly.terms:
        return "0"
    out = []
    first = True
    for mono in sorted(poly.terms, key=_term_sort_key):
        coeff = poly.terms[mono]
        ms = _monomial_str(mono, poly.variables, latex)
        if not ms:
            sign = 1
            body = render_mpoly(coeff, latex)
        else:
            sign, body = _coeff_prefix(coeff, latex)
            if body and not latex:
                body += "*"
            body += ms
        if first:
            out.append(("-" if sign < 0 else "") + body)
            first = False
        else:
            out.append((" - " if sign < 0 else " + ") + body)
    return "".join(out)


def render_schubert(expr: SchubertExpr, latex: bool = False) -> str:
    if expr.is_zero():
        return "0"
    out = []
    first = True
    for part in sorted(expr.terms, reverse=True):
        c = expr.terms[part]
        mag = abs(c)
        if not part:
            body = str(mag)
        else:
            inner = ",".join(str(p) for p in part)
            label = f"\\sigma_{{{inner}}}" if latex else f"s({inner})"
            if mag == 1:
                body = label
            elif latex:
                body = f"{mag}{label}"
            else:
                body = f"{mag}*{label}"
        if first:
            out.append(("-" if c < 0 else "") + body)
            first = False
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def coordinate_label(part: Partition, latex: bool = False) -> str:
    inner = ",".join(str(p) for p in part)
    return f"t_{{{inner}}}" if latex else f"t[{inner}]"


def render_ratio_row(row: RatioInequality, coords: list[Partition], latex: bool = False) -> str:
    pieces = []
    first = True
    for part, v in zip(coords, row.coeffs):
        if not v:
            continue
        mag = abs(v)
        body = coordinate_label(part, latex)
        if mag != 1:
            coeff = _frac_str(mag, latex)
            if not latex and mag.denominator != 1:
                coeff = f"({coeff})"
            body = coeff + ("" if latex else "*") + body
        if first:
            pieces.append(("-" if v < 0 else "") + body)
            first = False
        else:
            pieces.append((" - " if v < 0 else " + ") + body)
    if row.constant or first:
        v = row.constant
        body = _frac_str(abs(v), latex)
        if first:
            pieces.append(("-" if v < 0 else "") + body)
        else:
            pieces.append((" - " if v < 0 else " + ") + body)
    tail = " \\ge 0" if latex else " >= 0"
    return "".join(pieces) + tail


def describe_provenance(prov: Provenance) -> str:
    a = "(" + ",".join(str(p) for p in prov.a) + ")"
    if prov.b is not None:
        b = "(" + ",".join(str(p) for p in prov.b) + ")"
        return f"{prov.kind} {a} vs {b}"
    return f"{prov.kind} {a}"


def render_inequality(ineq: Inequality, latex: bool = False) -> str:
    if latex:
        return render_chern(ineq.lhs, latex=True) + " \\ge 0"
    return (
        render_chern(ineq.lhs)
        + " >= 0  ["
        + describe_provenance(ineq.provenance)
        + "]"
    )


# ---------------------------------------------------------------------------
# JSON emitters and their inverses


def schubert_to_json(expr: SchubertExpr) -> dict:
    terms = []
    for part in sorted(expr.terms, reverse=True):
        terms.append({"partition": list(part), "coeff": str(expr.terms[part])})
    return {"terms": terms}


def parse_schubert_json(data: dict) -> SchubertExpr:
    terms = {}
    for entry in data["terms"]:
        terms[Partition(entry["partition"])] = int(entry["coeff"])
    return SchubertExpr(terms)


def chern_to_json(poly: ChernPoly) -> dict:
    terms = []
    for mono in sorted(poly.terms, key=_term_sort_key):
        if mono.line_power:
            raise ValueError("twist symbol is not serializable")
        coeff = poly.terms[mono]
        terms.append(
            {
                "monomial": list(mono.parts),
                "coeff_m": [str(v) for v in coeff.coeffs],
            }
        )
    return {"degree": poly.degree, "terms": terms}


def parse_chern_json(data: dict, variables: str = "x") -> ChernPoly:
    out = ChernPoly.zero(variables)
    for entry in data["terms"]:
        coeff = MPoly(Fraction(v) for v in entry["coeff_m"])
        out = out + cmono(entry["monomial"], coeff, variables)
    return out


def provenance_to_json(prov: Provenance) -> dict:
    out = {"kind": prov.kind, "a": list(prov.a)}
    if prov.b is not None:
        out["b"] = list(prov.b)
    return out


def inequality_to_json(ineq: Inequality) -> dict:
    return {
        "n": ineq.n,
        "m": "symbolic" if ineq.m_value is None else ineq.m_value,
        "relation": ineq.relation,
        "provenance": provenance_to_json(ineq.provenance),
        "terms": chern_to_json(ineq.lhs)["terms"],
    }


def parse_inequality_json(data: dict) -> Inequality:
    prov = data["provenance"]
    provenance = Provenance(
        prov["kind"],
        Partition(prov["a"]),
        Partition(prov["b"]) if "b" in prov else None,
    )
    lhs = parse_chern_json({"degree": data["n"], "terms": data["terms"]}, "x")
    m_value = None if data["m"] == "symbolic" else int(data["m"])
    return Inequality(data["n"], lhs, provenance, m_value)


def hrep_to_json(n: int, m_value: int, mode: str, coords, rows) -> dict:
    return {
        "n": n,
        "m": m_value,
        "mode": mode,
        "coordinates": [list(q) for q in coords],
        "rows": [
            {"coeffs": [str(v) for v in row.coeffs], "constant": str(row.constant)}
            for row in rows
        ],
    }


def _bound_json(value, status, ray) -> dict:
    out = {"value": None if value is None else str(value), "status": status}
    if ray is not None:
        out["ray"] = [str(v) for v in ray]
    return out


def certificate_to_json(cert: BoundsCertificate) -> dict:
    coords = []
    for cb in cert.coordinates:
        entry = {
            "partition": list(cb.partition),
            "min": None if cb.minimum is None else str(cb.minimum),
            "max": None if cb.maximum is None else str(cb.maximum),
            "min_status": cb.min_status,
            "max_status": cb.max_status,
        }
        if cb.min_ray is not None:
            entry["min_ray"] = [str(v) for v in cb.min_ray]
        if cb.max_ray is not None:
            entry["max_ray"] = [str(v) for v in cb.max_ray]
        coords.append(entry)
    return {
        "n": cert.n,
        "m": cert.m_value,
        "mode": cert.mode,
        "coords": coords,
        "bounded": cert.bounded,
    }


def certificate_to_text(cert: BoundsCertificate) -> str:
    lines = [f"n={cert.n} m={cert.m_value} mode={cert.mode}"]
    for cb in cert.coordinates:
        label = coordinate_label(cb.partition)
        low = str(cb.minimum) if cb.min_status == "optimal" else cb.min_status
        high = str(cb.maximum) if cb.max_status == "optimal" else cb.max_status
        lines.append(f"{label} in [{low}, {high}]")
    lines.append(f"bounded: {'yes' if cert.bounded else 'no'}")
    return "\n".join(lines)


def certificate_to_latex(cert: BoundsCertificate) -> str:
    lines = ["\\begin{align*}"]
    body = []
    for cb in cert.coordinates:
        label = coordinate_label(cb.partition, latex=True)
        low = (
            _frac_str(cb.minimum, True)
            if cb.min_status == "optimal"
            else f"\\text{{{cb.min_status}}}"
        )
        high = (
            _frac_str(cb.maximum, True)
            if cb.max_status == "optimal"
            else f"\\text{{{cb.max_status}}}"
        )
        body.append(f"{low} &\\le {label} \\le {high}")
    lines.append(" \\\\\n".join(body))
    lines.append("\\end{align*}")
    return "\n".join(lines)
