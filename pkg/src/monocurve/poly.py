"""Sparse multivariate polynomials over the active coefficient field.

Monomials are exponent tuples; a polynomial is a map monomial -> nonzero
scalar.  Variable names are contextual: position ``p`` means x_{p+2} when
working modulo x_1 (the usual case) and x_{p+1} for full-ring polynomials.
"""

from __future__ import annotations

from math import gcd

from .scalars import active_field

# Exponents below this bound are packed into one int (8 bits per variable)
# so that divisibility is three integer operations.
_PACK_LIMIT = 128

_GUARDS: dict[int, int] = {}


def _guard(varcount: int) -> int:
    g = _GUARDS.get(varcount)
    if g is None:
        g = sum(0x80 << (8 * i) for i in range(varcount))
        _GUARDS[varcount] = g
    return g


class Monomial:
    """A monomial, i.e. a vector of non-negative exponents with cached degree."""

    __slots__ = ("exps", "degree", "packed")

    def __init__(self, exps):
        exps = tuple(exps)
        self.exps = exps
        self.degree = sum(exps)
        if all(0 <= e < _PACK_LIMIT for e in exps):
            p = 0
            for i, e in enumerate(exps):
                p |= e << (8 * i)
            self.packed = p
        else:
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent in %r" % (exps,))
            self.packed = None

    @classmethod
    def one(cls, varcount: int) -> "Monomial":
        return cls((0,) * varcount)

    @classmethod
    def variable(cls, index: int, varcount: int, power: int = 1) -> "Monomial":
        if not 0 <= index < varcount:
            raise ValueError("variable index %d out of range for %d variables" % (index, varcount))
        exps = [0] * varcount
        exps[index] = power
        return cls(exps)

    def _check(self, other: "Monomial") -> None:
        if len(self.exps) != len(other.exps):
            raise ValueError("variable count mismatch: %d vs %d" % (len(self.exps), len(other.exps)))

    @property
    def varcount(self) -> int:
        return len(self.exps)

    def is_constant(self) -> bool:
        return self.degree == 0

    def times(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(a + b for a, b in zip(self.exps, other.exps))

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        if self.packed is not None and other.packed is not None:
            g = _guard(len(self.exps))
            return ((other.packed | g) - self.packed) & g == g
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def quo(self, other: "Monomial") -> "Monomial":
        """Exact quotient self / other; other must divide self."""
        self._check(other)
        out = tuple(a - b for a, b in zip(self.exps, other.exps))
        if any(e < 0 for e in out):
            raise ValueError("%r does not divide %r" % (other.exps, self.exps))
        return Monomial(out)

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(min(a, b) for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(max(a, b) for a, b in zip(self.exps, other.exps))

    def coprime(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a == 0 or b == 0 for a, b in zip(self.exps, other.exps))

    def support(self):
        return tuple(i for i, e in enumerate(self.exps) if e)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return "Monomial%r" % (self.exps,)


def sort_key(m: Monomial):
    """Canonical listing key for generator sets and reports: degree, then lex."""
    return (m.degree, m.exps)


class Polynomial:
    """A finite map monomial -> nonzero coefficient over the active field."""

    __slots__ = ("terms", "varcount")

    def __init__(self, terms: dict, varcount: int):
        self.terms = {m: c for m, c in terms.items() if c}
        self.varcount = varcount

    @classmethod
    def zero(cls, varcount: int) -> "Polynomial":
        return cls({}, varcount)

    @classmethod
    def constant(cls, c, varcount: int) -> "Polynomial":
        c = active_field().coerce(c)
        return cls({Monomial.one(varcount): c}, varcount)

    @classmethod
    def variable(cls, index: int, varcount: int) -> "Polynomial":
        return cls({Monomial.variable(index, varcount): active_field().one}, varcount)

    @classmethod
    def from_int_terms(cls, int_terms: dict, varcount: int) -> "Polynomial":
        """Build from {exponent tuple: integer coefficient} via the active field."""
        field = active_field()
        return cls({Monomial(e): field.coerce(c) for e, c in int_terms.items()}, varcount)

    def _check(self, other: "Polynomial") -> None:
        if self.varcount != other.varcount:
            raise ValueError("variable count mismatch: %d vs %d" % (self.varcount, other.varcount))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.varcount == other.varcount
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.varcount, frozenset(self.terms.items())))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(out, self.varcount)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()}, self.varcount)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = -c
            else:
                s = s - c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(out, self.varcount)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.times(m2)
                s = out.get(m)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(out, self.varcount)

    def mul_term(self, m: Monomial, c) -> "Polynomial":
        """Multiply by the single term c*m."""
        if not c:
            return Polynomial.zero(self.varcount)
        return Polynomial({mm.times(m): cc * c for mm, cc in self.terms.items()}, self.varcount)

    def scale(self, c) -> "Polynomial":
        if not c:
            return Polynomial.zero(self.varcount)
        return Polynomial({m: cc * c for m, cc in self.terms.items()}, self.varcount)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((m.degree for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {m.degree for m in self.terms}
        return len(degrees) <= 1

    def monomials(self):
        return list(self.terms)

    def __repr__(self):
        if not self.terms:
            return "Polynomial(0)"
        items = ", ".join(
            "%r: %s" % (m.exps, c) for m, c in sorted(self.terms.items(), key=lambda t: sort_key(t[0]))
        )
        return "Polynomial{%s}" % items


class PolyMatrix:
    """A square matrix of polynomials with an exact memoized determinant."""

    __slots__ = ("entries", "size", "varcount")

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        size = len(entries)
        if any(len(row) != size for row in entries):
            raise ValueError("matrix is not square")
        if size == 0:
            raise ValueError("empty matrix")
        varcounts = {p.varcount for row in entries for p in row}
        if len(varcounts) != 1:
            raise ValueError("mixed variable counts in matrix entries")
        self.entries = entries
        self.size = size
        self.varcount = varcounts.pop()

    def submatrix(self, rows, cols) -> "PolyMatrix":
        return PolyMatrix([[self.entries[r][c] for c in cols] for r in rows])

    def swap_rows(self, i: int, j: int) -> "PolyMatrix":
        rows = list(range(self.size))
        rows[i], rows[j] = rows[j], rows[i]
        return self.submatrix(rows, range(self.size))

    def det(self) -> Polynomial:
        """Cofactor expansion memoized on column subsets (the row prefix is implied)."""
        memo: dict = {}
        n = self.size

        def minor(cols: tuple) -> Polynomial:
            hit = memo.get(cols)
            if hit is not None:
                return hit
            row = n - len(cols)
            if len(cols) == 1:
                out = self.entries[row][cols[0]]
            else:
                out = Polynomial.zero(self.varcount)
                sign = 1
                for k, c in enumerate(cols):
                    entry = self.entries[row][c]
                    if entry:
                        rest = minor(cols[:k] + cols[k + 1 :])
                        term = entry * rest
                        out = out + term if sign > 0 else out - term
                    sign = -sign
            memo[cols] = out
            return out

        return minor(tuple(range(n)))


def determinant(matrix: PolyMatrix) -> Polynomial:
    return matrix.det()


def substitute_parametrization(f: Polynomial, d: int, m: int) -> Polynomial:
    """Evaluate a full-ring polynomial on the curve x_i = t^(d + (i-1)m).

    The result is collected as a univariate polynomial in t; callers test it
    against zero for membership sanity checks.
    """
    if gcd(d, m) != 1:
        raise ValueError("d and m must be coprime, got d=%d m=%d" % (d, m))
    if f.varcount != d:
        raise ValueError("expected a polynomial in the full set of %d variables" % d)
    weights = [d + i * m for i in range(d)]
    out: dict = {}
    for mono, c in f.terms.items():
        t = sum(e * w for e, w in zip(mono.exps, weights))
        key = Monomial((t,))
        s = out.get(key)
        s = c if s is None else s + c
        if s:
            out[key] = s
        elif key in out:
            del out[key]
    return Polynomial(out, 1)
