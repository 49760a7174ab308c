from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coxmut import build_reflection_rep, evaluate_word
from coxmut.quadfield import QuadraticFieldElement as QFE
from coxmut.reflection import (
    IntegerReflectionRep,
    is_identity,
    matrix_order,
    qfe_matmul,
)

qfe_values = st.builds(
    QFE,
    *(st.fractions(max_denominator=6) for _ in range(4)),
)


@given(qfe_values, qfe_values, qfe_values)
def test_field_axioms_spot(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a * QFE.one() == a
    assert (a - a).is_zero()


def test_cos_values():
    assert QFE.cos_pi_over(2).is_zero()
    assert QFE.cos_pi_over(3) == QFE(Fraction(1, 2))
    two = QFE.from_rational(2)
    # (2cos(pi/4))^2 = 2 and (2cos(pi/6))^2 = 3
    assert QFE.cos_pi_over(4).scale(2) * QFE.cos_pi_over(4).scale(2) == two
    assert QFE.cos_pi_over(6).scale(2) * QFE.cos_pi_over(6).scale(2) == QFE.from_rational(3)
    with pytest.raises(ValueError):
        QFE.cos_pi_over(5)


def test_rank_one():
    rep = build_reflection_rep([[1]])
    assert rep.generator(1)[0][0] == QFE.from_rational(-1)


def test_a2_defining_relation():
    rep = build_reflection_rep([[1, 3], [3, 1]])
    assert is_identity(evaluate_word(rep, (1, 2) * 3))
    assert is_identity(evaluate_word(rep, (1, 1)))
    # braid consequence
    assert evaluate_word(rep, (1, 2, 1)) == evaluate_word(rep, (2, 1, 2))


def test_empty_word_is_identity():
    rep = build_reflection_rep([[1, 4], [4, 1]])
    assert is_identity(evaluate_word(rep, ()))


def test_affine_g2_relations_hold_and_element_infinite():
    m = [[1, 6, 2], [6, 1, 3], [2, 3, 1]]
    rep = build_reflection_rep(m)
    for i in range(1, 4):
        assert is_identity(evaluate_word(rep, (i, i)))
    assert is_identity(evaluate_word(rep, (1, 2) * 6))
    assert is_identity(evaluate_word(rep, (2, 3) * 3))
    assert is_identity(evaluate_word(rep, (1, 3) * 2))
    # pair products close at their exponents, while the Coxeter element of
    # the affine group has infinite order: no power up to 48 is the identity
    assert matrix_order(rep, (1, 2), 48) == 6
    assert matrix_order(rep, (1, 2, 3), 48) is None


def test_rejects_exponent_outside_field():
    with pytest.raises(ValueError):
        build_reflection_rep([[1, 5], [5, 1]])


def test_integer_backend_agrees_with_tits_form():
    m = [[1, 3, 4], [3, 1, 2], [4, 2, 1]]
    qfe_rep = build_reflection_rep(m)
    prod = {2: 0, 3: 1, 4: 2, 6: 3}
    cartan = [
        [2 if i == j else -(1 if i < j else prod[m[i][j]]) if prod[m[i][j]] else 0
         for j in range(3)]
        for i in range(3)
    ]
    # fix asymmetric split: a_ij * a_ji = 4cos^2(pi/m_ij)
    for i in range(3):
        for j in range(3):
            if i < j and prod[m[i][j]]:
                cartan[i][j] = -1
                cartan[j][i] = -prod[m[i][j]]
    int_rep = IntegerReflectionRep(cartan)
    words = [(1, 2) * 3, (1, 3) * 4, (2, 3) * 4, (1, 2, 3) * 5, (1, 2, 1, 3) * 7]
    for word in words:
        assert is_identity(evaluate_word(qfe_rep, word)) == int_rep.is_identity_word(word)
