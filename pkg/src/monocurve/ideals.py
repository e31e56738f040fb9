"""Monomial ideals in T': minimal generators, sum/product/colon, membership,
the Artinian test, staircase lengths and Hilbert functions.

Generators are always stored minimal and sorted by (degree, exponents), so
two equal ideals are structurally identical and every report is
deterministic.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .poly import Monomial, _guard, sort_key


def minimal_generators(monomials) -> tuple:
    """Minimalize: drop every monomial divisible by another; idempotent."""
    out: list[Monomial] = []
    packed: list = []
    guard = None
    for m in sorted(set(monomials), key=sort_key):
        if m.degree == 0:
            return (m,)  # unit ideal
        mp = m.packed
        if guard is None:
            guard = _guard(len(m.exps))
        redundant = False
        if mp is not None:
            for i, gp in enumerate(packed):
                if gp is not None:
                    if ((mp | guard) - gp) & guard == guard:
                        redundant = True
                        break
                elif out[i].divides(m):
                    redundant = True
                    break
        else:
            redundant = any(g.divides(m) for g in out)
        if not redundant:
            out.append(m)
            packed.append(mp)
    return tuple(out)


def monomials_of_degree(varcount: int, degree: int):
    """All exponent tuples of the given total degree, lexicographically."""
    if varcount == 0:
        if degree == 0:
            yield ()
        return
    if varcount == 1:
        yield (degree,)
        return
    for e in range(degree, -1, -1):
        for rest in monomials_of_degree(varcount - 1, degree - e):
            yield (e,) + rest


class MonomialIdeal:
    """A monomial ideal given by its minimal generating set.

    The zero ideal is the empty generator set; the unit ideal is generated by
    the constant monomial.
    """

    __slots__ = ("gens", "varcount", "_packs", "_guard")

    def __init__(self, monomials, varcount: int, _trusted_minimal: bool = False):
        monomials = list(monomials)
        for m in monomials:
            if m.varcount != varcount:
                raise ValueError("generator has %d variables, ideal has %d" % (m.varcount, varcount))
        if _trusted_minimal:
            gens = tuple(sorted(monomials, key=sort_key))
        else:
            gens = minimal_generators(monomials)
        self.gens = gens
        self.varcount = varcount
        self._packs = tuple(g.packed for g in gens)
        self._guard = _guard(varcount)

    @classmethod
    def zero(cls, varcount: int) -> "MonomialIdeal":
        return cls((), varcount, _trusted_minimal=True)

    @classmethod
    def unit(cls, varcount: int) -> "MonomialIdeal":
        return cls((Monomial.one(varcount),), varcount, _trusted_minimal=True)

    @classmethod
    def from_exponents(cls, exps_list, varcount: int) -> "MonomialIdeal":
        return cls([Monomial(e) for e in exps_list], varcount)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return bool(self.gens) and self.gens[0].degree == 0

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.varcount == other.varcount
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.varcount, self.gens))

    def __repr__(self):
        return "MonomialIdeal[%s]" % ", ".join("x^%r" % (g.exps,) for g in self.gens)

    # -- membership -----------------------------------------------------

    def contains(self, m: Monomial) -> bool:
        """Monomial membership: some generator divides m."""
        mp = m.packed
        if mp is not None:
            guard = self._guard
            deg = m.degree
            for g, gp in zip(self.gens, self._packs):
                if g.degree > deg:
                    return False  # gens sorted by degree
                if gp is not None and ((mp | guard) - gp) & guard == guard:
                    return True
            return False
        return any(g.divides(m) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "MonomialIdeal") -> None:
        if self.varcount != other.varcount:
            raise ValueError("variable count mismatch: %d vs %d" % (self.varcount, other.varcount))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.gens + other.gens, self.varcount)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return MonomialIdeal.zero(self.varcount)
        prods = {a.times(b) for a in self.gens for b in other.gens}
        return MonomialIdeal(prods, self.varcount)

    def power(self, k: int) -> "MonomialIdeal":
        """k-th power; the empty product is the unit ideal."""
        if k < 0:
            raise ValueError("negative ideal power")
        if k == 0:
            return MonomialIdeal.unit(self.varcount)
        if self.is_zero():
            return MonomialIdeal.zero(self.varcount)
        prods = set()
        for combo in combinations_with_replacement(self.gens, k):
            m = combo[0]
            for g in combo[1:]:
                m = m.times(g)
            prods.add(m)
        return MonomialIdeal(prods, self.varcount)

    def scale(self, m: Monomial) -> "MonomialIdeal":
        """The ideal m * I; scaling preserves minimality."""
        if m.varcount != self.varcount:
            raise ValueError("variable count mismatch")
        return MonomialIdeal([g.times(m) for g in self.gens], self.varcount, _trusted_minimal=True)

    def colon_mon(self, m: Monomial) -> "MonomialIdeal":
        """(I : m), generated by g / gcd(g, m)."""
        if m.varcount != self.varcount:
            raise ValueError("variable count mismatch")
        return MonomialIdeal([g.quo(g.gcd(m)) for g in self.gens], self.varcount)

    def colon(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """(I : J) as the intersection of (I : g) over generators g of J."""
        self._check(other)
        if other.is_zero():
            raise ValueError("colon by the zero ideal")
        result = None
        for g in other.gens:
            piece = self.colon_mon(g)
            result = piece if result is None else result.intersect(piece)
        return result

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return MonomialIdeal.zero(self.varcount)
        return MonomialIdeal({a.lcm(b) for a in self.gens for b in other.gens}, self.varcount)

    # -- Artinian structure ----------------------------------------------

    def is_artinian(self) -> bool:
        """True iff every variable has a pure power among the generators."""
        for v in range(self.varcount):
            if not any(all(e == 0 for i, e in enumerate(g.exps) if i != v) for g in self.gens):
                return False
        return True

    def _next_level(self, level):
        nxt = set()
        varcount = self.varcount
        for m in level:
            exps = m.exps
            for v in range(varcount):
                nxt.add(Monomial(exps[:v] + (exps[v] + 1,) + exps[v + 1 :]))
        return [m for m in nxt if not self.contains(m)]

    def length_quotient(self) -> int:
        """Number of monomials outside the ideal (the staircase length)."""
        if not self.is_artinian():
            raise ValueError("length of a non-Artinian quotient is infinite")
        count = 0
        level = [Monomial.one(self.varcount)]
        if self.contains(level[0]):
            return 0
        while level:
            count += len(level)
            level = self._next_level(level)
        return count

    def hilbert_function(self, max_degree: int) -> list[int]:
        """Counts of standard monomials in degrees 0..max_degree."""
        out = []
        level = [Monomial.one(self.varcount)]
        if self.contains(level[0]):
            level = []
        for _ in range(max_degree + 1):
            out.append(len(level))
            level = self._next_level(level)
        return out

    def max_standard_degree(self) -> int:
        """Largest degree carrying a standard monomial; -1 for the unit ideal."""
        if not self.is_artinian():
            raise ValueError("staircase of a non-Artinian ideal is unbounded")
        level = [Monomial.one(self.varcount)]
        if self.contains(level[0]):
            return -1
        deg = -1
        while level:
            deg += 1
            level = self._next_level(level)
        return deg


def monomials_between(inner: MonomialIdeal, outer: MonomialIdeal) -> list[Monomial]:
    """Monomials lying in `outer` but not in `inner`; `inner` must be Artinian.

    Enumerates degree by degree and stops at the first degree fully contained
    in `inner`.
    """
    if not inner.is_artinian():
        raise ValueError("difference against a non-Artinian ideal is infinite")
    varcount = outer.varcount
    out = []
    degree = 0
    while True:
        full = True
        for exps in monomials_of_degree(varcount, degree):
            m = Monomial(exps)
            if inner.contains(m):
                continue
            full = False
            if outer.contains(m):
                out.append(m)
        if full:
            return out
        degree += 1
