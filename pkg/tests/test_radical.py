from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coxmut.radical import RadicalScalar, RadicandMismatchError, squarefree_decomposition


@given(st.integers(min_value=0, max_value=10_000))
def test_squarefree_decomposition(n):
    q, r = squarefree_decomposition(n)
    assert q * q * r == n or (n == 0 and q == 0)
    # r squarefree
    for p in range(2, 40):
        assert r % (p * p) != 0


def test_sqrt_int_examples():
    assert RadicalScalar.sqrt_int(4) == RadicalScalar(Fraction(2), 1)
    assert RadicalScalar.sqrt_int(12) == RadicalScalar(Fraction(2), 3)
    assert RadicalScalar.sqrt_int(1) == RadicalScalar(Fraction(1), 1)
    assert RadicalScalar.sqrt_int(0).is_zero()


def test_addition_requires_matching_radicands():
    a = RadicalScalar.sqrt_int(2)
    b = RadicalScalar.sqrt_int(3)
    with pytest.raises(RadicandMismatchError):
        _ = a + b
    assert (a + RadicalScalar.zero()) == a
    assert (RadicalScalar.zero() + b) == b


def test_mutation_rule_arithmetic():
    # the weight-(3,3,4) triangle: sqrt(9) - sqrt(4) = 1
    s = RadicalScalar.sqrt_int(3 * 3) - RadicalScalar.sqrt_int(4)
    assert s.square() == 1
    # sqrt(c)+sqrt(d) = sqrt(ab) with irrational parts: (2,2,4): sqrt(4)-sqrt(4)=0
    z = RadicalScalar.sqrt_int(2 * 2) - RadicalScalar.sqrt_int(4)
    assert z.is_zero()


@given(st.integers(min_value=1, max_value=400), st.integers(min_value=1, max_value=400))
def test_product_is_exact(a, b):
    x = RadicalScalar.sqrt_int(a) * RadicalScalar.sqrt_int(b)
    assert x.square() == a * b


def test_squaring_yields_rational():
    x = RadicalScalar(Fraction(3, 2), 5)
    assert x.square() == Fraction(45, 4)


def test_zero_normalizes_radicand():
    assert RadicalScalar(Fraction(0), 7).radicand == 1
