"""Text rendering shared by the CLI and the verification reports.

Polynomial terms print in descending order; ideal generators print sorted by
(degree, exponents) ascending.  Variables are x2..xd by default; full-ring
values pass first_index=1.
"""

from __future__ import annotations

from fractions import Fraction

from .ideals import MonomialIdeal
from .order import GREVELEX, MonomialOrder
from .poly import Monomial, Polynomial, PolyMatrix, sort_key


def format_monomial(m: Monomial, first_index: int = 2) -> str:
    if m.degree == 0:
        return "1"
    parts = []
    for p, e in enumerate(m.exps):
        if e:
            name = "x%d" % (p + first_index)
            parts.append(name if e == 1 else "%s^%d" % (name, e))
    return "*".join(parts)


def _sign_split(c):
    if isinstance(c, Fraction) and c < 0:
        return "-", -c
    return "+", c


def format_polynomial(f: Polynomial, order: MonomialOrder = GREVELEX, first_index: int = 2) -> str:
    if f.is_zero():
        return "0"
    key = order.key
    out = []
    for m in sorted(f.terms, key=key, reverse=True):
        sign, mag = _sign_split(f.terms[m])
        if m.degree == 0:
            body = str(mag)
        elif mag == 1:
            body = format_monomial(m, first_index)
        else:
            body = "%s*%s" % (mag, format_monomial(m, first_index))
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append("%s %s" % (sign, body))
    return " ".join(out)


def format_ideal(ideal: MonomialIdeal, first_index: int = 2) -> str:
    if ideal.is_zero():
        return "0"
    return ", ".join(format_monomial(g, first_index) for g in sorted(ideal.gens, key=sort_key))


def format_matrix(matrix: PolyMatrix, order: MonomialOrder = GREVELEX, first_index: int = 1) -> str:
    rows = []
    for row in matrix.entries:
        rows.append("[" + ", ".join(format_polynomial(p, order, first_index) for p in row) + "]")
    return "\n".join(rows)
