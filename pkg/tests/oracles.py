"""Independent reference implementations the tests check the engine against.

Nothing here shares an algorithm with the package: determinants come from
the permutation sum, staircase lengths from degree-capped enumeration, the
order from a literal transcription of its definition, and membership in
products of variable-range powers from Hall's condition.
"""

from itertools import combinations, permutations

from monocurve.ideals import monomials_of_degree
from monocurve.poly import Polynomial


def leibniz_determinant(matrix) -> Polynomial:
    """Sum over permutations of signed entry products."""
    n = matrix.size
    det = Polynomial.zero(matrix.varcount)
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = None
        for r in range(n):
            e = matrix.entries[r][perm[r]]
            term = e if term is None else term * e
        det = det + term if sign > 0 else det - term
    return det


def divides_tuple(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def staircase_count(gen_exps, varcount: int) -> int:
    """Monomials of degree <= sum(generator degrees) outside the ideal."""
    cap = sum(sum(g) for g in gen_exps)
    count = 0
    for degree in range(cap + 1):
        for exps in monomials_of_degree(varcount, degree):
            if not any(divides_tuple(g, exps) for g in gen_exps):
                count += 1
    return count


def grevelex_greater(a, b) -> bool:
    """Literal definition: higher degree wins; at equal degree the tuple whose
    difference has a negative left-most nonzero entry is the larger."""
    da, db = sum(a), sum(b)
    if da != db:
        return da > db
    for x, y in zip(a, b):
        if x != y:
            return x - y < 0
    return False


# -- factored products of variable-range powers -----------------------------
#
# A "term" is (fixed, blocks): a fixed exponent tuple times a product of
# ideals (x_lo..x_hi)^deg, encoded as (lo_pos, hi_pos, deg) over positions.


def block_member(exps, fixed, blocks) -> bool:
    """Is x^exps in fixed * prod(blocks)?  Hall's condition on every subset."""
    rem = [e - f for e, f in zip(exps, fixed)]
    if any(r < 0 for r in rem):
        return False
    for size in range(1, len(blocks) + 1):
        for subset in combinations(blocks, size):
            demand = sum(b[2] for b in subset)
            positions = set()
            for lo, hi, _ in subset:
                positions.update(range(lo, hi + 1))
            if demand > sum(rem[p] for p in positions):
                return False
    return True


def term_member(exps, terms) -> bool:
    return any(block_member(exps, fixed, blocks) for fixed, blocks in terms)


def block_generators(varcount: int, fixed, blocks):
    """All products of one degree-deg monomial per block, times the fixed part."""
    gens = [tuple(fixed)]
    for lo, hi, deg in blocks:
        width = hi - lo + 1
        grown = []
        for base in gens:
            for part in monomials_of_degree(width, deg):
                exps = list(base)
                for off, e in enumerate(part):
                    exps[lo + off] += e
                grown.append(tuple(exps))
        gens = grown
    return set(gens)


def terms_equal(varcount: int, lhs_terms, rhs_terms) -> bool:
    """Ideal equality of two sums of factored terms, by mutual membership of
    every generator."""
    for fixed, blocks in lhs_terms:
        for g in block_generators(varcount, fixed, blocks):
            if not term_member(g, rhs_terms):
                return False
    for fixed, blocks in rhs_terms:
        for g in block_generators(varcount, fixed, blocks):
            if not term_member(g, lhs_terms):
                return False
    return True
