import random
from math import comb

import pytest

from monocurve.curve import (
    ColonWitness,
    CurveParams,
    algorithm1,
    antidiagonal_product,
    build_matrix,
    cal_I,
    cal_J,
    colon_witness,
    compositions,
    f_poly,
    full_minors,
    in_ideal_family,
    lambda_set,
    mono_I,
    mono_J,
    pure_powers,
    range_monomials,
    s_set,
    weight,
)
from monocurve.ideals import MonomialIdeal
from monocurve.order import leading_monomial
from monocurve.poly import Monomial, Polynomial


def exps_of(p: Polynomial):
    return {m.exps: c for m, c in p.terms.items()}


# -- parameters and the matrix -------------------------------------------------

def test_params_validation():
    with pytest.raises(ValueError):
        CurveParams(1)
    with pytest.raises(ValueError):
        CurveParams(4, 2)  # not coprime
    assert CurveParams(3, 2).exponents == (3, 5, 7)


def test_matrix_d3_mod_x1():
    X = build_matrix(CurveParams(3), mod_x1=True)
    want = [
        [None, (1, 0), (0, 1)],
        [(1, 0), (0, 1), None],
        [(0, 1), None, None],
    ]
    for i in range(3):
        for j in range(3):
            entry = X.entries[i][j]
            if want[i][j] is None:
                assert entry.is_zero()
            else:
                assert exps_of(entry) == {want[i][j]: 1}


def test_matrix_d2_mod_x1():
    X = build_matrix(CurveParams(2), mod_x1=True)
    assert X.entries[0][0].is_zero() and X.entries[1][1].is_zero()
    assert exps_of(X.entries[0][1]) == {(1,): 1}
    assert exps_of(X.entries[1][0]) == {(1,): 1}


def test_matrix_wrap_entries_full_ring():
    X = build_matrix(CurveParams(3, 1), mod_x1=False)
    assert exps_of(X.entries[1][2]) == {(2, 0, 0): 1}   # x1^m * x1 = x1^2
    assert exps_of(X.entries[2][2]) == {(1, 1, 0): 1}   # x1^m * x2
    X5 = build_matrix(CurveParams(5, 2), mod_x1=False)
    assert exps_of(X5.entries[4][3]) == {(2, 0, 1, 0, 0): 1}  # x1^2 * x3


# -- f polynomials ---------------------------------------------------------------

def test_f1_d3():
    assert exps_of(f_poly(3, 1)) == {(2, 0): -1}


def test_f2_d4_leading_monomial():
    assert leading_monomial(f_poly(4, 2)) == Monomial((0, 3, 0))


def test_f_top_leading_monomial_is_pure_power():
    for d in range(2, 7):
        lm = leading_monomial(f_poly(d, d - 1))
        assert lm == Monomial.variable(d - 2, d - 1, d)


def test_f_leading_monomials_are_pure_powers():
    # LM(f_i) = x_{i+1}^{i+1}: the whole chain used with the pure-power sums
    for d in range(2, 7):
        for i in range(1, d):
            assert leading_monomial(f_poly(d, i)) == Monomial.variable(i - 1, d - 1, i + 1)


def test_f_poly_range_errors():
    with pytest.raises(ValueError):
        f_poly(3, 0)
    with pytest.raises(ValueError):
        f_poly(3, 3)


# -- determinantal ideals ----------------------------------------------------------

def test_cal_J_counts():
    assert len(cal_J(3, 1).gens) == 3          # C(3,2) column pairs
    for d in range(2, 6):
        assert len(cal_J(d, d - 1).gens) == 1  # principal
        assert cal_J(d, d - 1).gens[0] == f_poly(d, d - 1)


def test_cal_I_small():
    assert [g for g in cal_I(3, 1).gens] == list(cal_J(3, 1).gens)
    unit = cal_I(3, 0)
    assert len(unit.gens) == 1 and unit.gens[0].degree() == 0


def test_cal_I_generator_counts():
    # compositions of 4 with parts weighted 1..3: J1^4, J1^2 J2, J2^2, J1 J3
    counts = {
        (4, 0, 0): comb(6 + 4 - 1, 4),
        (2, 1, 0): comb(6 + 2 - 1, 2) * 4,
        (0, 2, 0): comb(4 + 2 - 1, 2),
        (1, 0, 1): 6 * 1,
    }
    assert len(cal_I(4, 4).gens) == sum(counts.values())


def test_full_minors_vanish_under_substitution():
    from monocurve.poly import substitute_parametrization

    for d, m in ((3, 1), (4, 3)):
        for i in range(1, d):
            for g in full_minors(CurveParams(d, m), i):
                assert substitute_parametrization(g, d, m).is_zero()


# -- monomial side ------------------------------------------------------------------

def test_mono_J_examples():
    assert {g.exps for g in mono_J(3, 2).gens} == {(0, 3)}
    got = {g.exps for g in mono_J(4, 2).gens}
    assert got == {(0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3)}


def test_mono_J_equals_antidiagonal_shadow():
    from itertools import combinations

    for d in range(2, 7):
        X = build_matrix(CurveParams(d), mod_x1=True)
        for i in range(1, d):
            prods = [
                antidiagonal_product(X.submatrix(range(i + 1), cols))
                for cols in combinations(range(d), i + 1)
            ]
            assert MonomialIdeal(prods, d - 1) == mono_J(d, i)


def test_mono_I_examples():
    assert {g.exps for g in mono_I(3, 2).gens} == {(4, 0), (3, 1), (2, 2), (0, 3)}
    assert mono_I(5, 0).is_unit()
    assert mono_I(4, -2).is_unit()


def test_mono_I_matches_generic_construction():
    # oracle: the straightforward sum of products of mono_J powers
    for d in range(2, 6):
        for n in range(1, 6):
            total = MonomialIdeal.zero(d - 1)
            for a in compositions(d, n):
                term = MonomialIdeal.unit(d - 1)
                for i, ai in enumerate(a, start=1):
                    if ai:
                        term = term * mono_J(d, i).power(ai)
                total = total + term
            assert total == mono_I(d, n), (d, n)


def test_in_ideal_family_matches_generator_divisibility():
    rng = random.Random(99)
    for _ in range(400):
        d = rng.randint(2, 6)
        n = rng.randint(1, 7)
        v = d - 1
        m = Monomial(tuple(rng.randint(0, 4) for _ in range(v)))
        assert in_ideal_family(d, n, m) == mono_I(d, n).contains(m)


def test_pure_powers_list():
    assert [m.exps for m in pure_powers(4, 3)] == [(2, 0, 0), (0, 3, 0)]
    assert pure_powers(4, 1) == []


# -- compositions, lambda sets, S sets -------------------------------------------------

def test_compositions_colex_order():
    assert compositions(3, 4) == ((4, 0), (2, 1), (0, 2))
    assert all(weight(a) == 4 for a in compositions(3, 4))


def test_lambda_examples():
    assert lambda_set(3, 1, 2) == [(2,)]
    assert lambda_set(3, 2, 2) == [(0, 1)]
    assert lambda_set(3, 2, 4) == [(2, 1), (0, 2)]
    assert lambda_set(4, 3, 2) == []


def test_s_set_examples():
    assert {m.exps for m in s_set(3, (2,))} == {(3, 0)}
    assert {m.exps for m in s_set(3, (0, 1))} == {(0, 1)}
    assert {m.exps for m in s_set(3, (1, 1))} == {(2, 1), (1, 2)}


def test_s_set_rejects_zero_tail():
    with pytest.raises(ValueError):
        s_set(3, (1, 0))


def test_s_degree_law_and_membership():
    # every element of S(a) * M_{j+1,d}^j has the degree of the block product's
    # minimal generators and lies in that product, outside its shift by the
    # maximal ideal
    for d in range(2, 6):
        for n in range(2, 7):
            for j in range(1, d):
                for a in lambda_set(d, j, n - 1):
                    block = MonomialIdeal.unit(d - 1)
                    for i, ai in enumerate(a, start=1):
                        if ai:
                            block = block * mono_J(d, i).power(ai)
                    mindeg = min(g.degree for g in block.gens)
                    for s in s_set(d, a):
                        for mu in range_monomials(d, j + 1, d, j):
                            m = s.times(mu)
                            assert m.degree == mindeg
                            assert block.contains(m)


def test_s_count_small():
    counts = {
        j: sum(len(s_set(3, a)) for a in lambda_set(3, j, 2)) for j in (1, 2)
    }
    assert counts == {1: 1, 2: 1}  # C(1,0), C(1,1)


# -- algorithm 1 and colon witnesses ----------------------------------------------------

def test_algorithm1_zero_block_propagates():
    q, r, c = algorithm1({3: 0, 4: 0}, 5, 0, k=3)
    assert (q[4], r[4]) == (0, 0) and (q[3], r[3]) == (0, 0)
    assert c == 0 and (q[2], r[2]) == (0, r[3])


def test_algorithm1_congruence_step():
    q, r, c = algorithm1({2: 5, 3: 0, 4: 0, 5: 0}, 6, 5, k=2)
    assert (q[2], r[2]) == (2, 1)
    assert c == 0 and (q[1], r[1]) == (0, r[2])


def test_algorithm1_positive_c():
    # b = {2:0, 3:1}, i=4, total valuation 5 through b_1 -> g=4, c=3
    q, r, c = algorithm1({2: 0, 3: 1}, 4, 4, k=2)
    assert c == 3
    assert (q[3], r[3]) == (1, 3)
    assert r[2] == 3
    assert (q[1], r[1]) == (0, 0)  # c - r_2 = 0 = 2*0 - 0


def test_algorithm1_empty_b_requires_k():
    with pytest.raises(ValueError):
        algorithm1({}, 3, 2)
    q, r, c = algorithm1({}, 3, 2, k=3)
    assert c == 2 and (q[2], r[2]) == (1, 1)


def test_colon_witness_identity_branch():
    mons = [Monomial((0, 2)), Monomial((0, 0))]
    w = colon_witness(3, mons, (1, 0), 2)
    assert w.aprime == (1, 0)
    assert w.mprime[1] == mons[0]
    assert w.leftover.degree == 0 and w.g == 0


def test_colon_witness_worked_example():
    w = colon_witness(3, [Monomial((3, 1)), Monomial((0, 0))], (2, 0), 2)
    assert w.aprime == (1, 0)
    assert w.mprime[1].exps == (1, 1)
    assert w.leftover.degree == 0
    assert w.g == 2


def test_colon_witness_randomized():
    # the witness verifies its own claims; here we also confirm the colon
    # quotient lands in the deeper family ideal
    rng = random.Random(4)
    for _ in range(300):
        d = rng.randint(2, 6)
        n = rng.randint(1, 8)
        comps = compositions(d, n)
        a = comps[rng.randrange(len(comps))]
        mons = []
        for j in range(1, d):
            if a[j - 1] == 0:
                mons.append(Monomial.one(d - 1))
            else:
                opts = range_monomials(d, j + 1, d, (j + 1) * a[j - 1])
                mons.append(opts[rng.randrange(len(opts))])
        i = rng.randint(2, d)
        w = colon_witness(d, mons, a, i)
        assert isinstance(w, ColonWitness)
        for j in range(1, i):
            assert w.mprime[j].degree == (j + 1) * w.aprime[j - 1]
        total = Monomial.one(d - 1)
        for m in mons:
            total = total.times(m)
        quot = total.quo(total.gcd(Monomial.variable(i - 2, d - 1, i)))
        assert in_ideal_family(d, n - i + 1, quot)


def test_colon_witness_input_validation():
    with pytest.raises(ValueError):
        colon_witness(3, [Monomial((1, 1))], (1,), 2)  # wrong lengths
    with pytest.raises(ValueError):
        colon_witness(3, [Monomial((1, 0)), Monomial((0, 0))], (1, 0), 2)  # bad degree
    with pytest.raises(ValueError):
        # block for j=2 may not use x2
        colon_witness(3, [Monomial((0, 2)), Monomial((1, 2))], (1, 1), 2)
