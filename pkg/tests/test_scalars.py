from fractions import Fraction

import pytest

from monocurve.scalars import (
    DEFAULT_PRIME,
    GFElement,
    PrimeField,
    RATIONALS,
    active_field,
    field_from_spec,
    is_prime,
    using_field,
)


def test_gf_basic_arithmetic():
    p = 7
    a, b = GFElement(3, p), GFElement(5, p)
    assert a + b == 1
    assert a - b == 5
    assert a * b == 1
    assert (a / b).val == (3 * pow(5, p - 2, p)) % p
    assert -a == 4
    assert bool(GFElement(0, p)) is False


def test_gf_int_interop():
    a = GFElement(3, 7)
    assert a + 11 == 0
    assert 2 * a == 6
    assert 1 / a == GFElement(5, 7)


def test_gf_mixed_primes_rejected():
    with pytest.raises(ValueError):
        GFElement(1, 7) + GFElement(1, 11)


def test_gf_fraction_mixing_rejected():
    with pytest.raises(TypeError):
        GFElement(1, 7) + Fraction(1, 2)


def test_prime_field_validation():
    with pytest.raises(ValueError):
        PrimeField(2)
    with pytest.raises(ValueError):
        PrimeField(32001)  # 3 * 10667
    assert PrimeField().p == DEFAULT_PRIME


def test_prime_field_coerces_fractions():
    f = PrimeField(13)
    assert f.coerce(Fraction(1, 2)) == GFElement(7, 13)


def test_is_prime_small():
    primes = [n for n in range(2, 40) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def test_field_from_spec():
    assert field_from_spec("rational") is RATIONALS
    assert field_from_spec("fp").p == DEFAULT_PRIME
    assert field_from_spec("fp:101").p == 101
    with pytest.raises(ValueError):
        field_from_spec("float")


def test_using_field_restores():
    assert active_field() is RATIONALS
    with using_field(PrimeField(101)) as f:
        assert active_field() is f
    assert active_field() is RATIONALS
