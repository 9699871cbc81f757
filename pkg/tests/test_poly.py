from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mhpoly.errors import NotRoundError
from mhpoly.poly import (
    ONE,
    X,
    ZERO,
    Polynomial,
    TuvExpansion,
    TuvTerm,
    add,
    evaluate,
    expand_tuv,
    mul,
    power,
    scale,
    substitute_sign,
)

from conftest import from_sympy

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(rationals, max_size=6).map(Polynomial)


def P(*cs):
    return Polynomial(cs)


def test_normalization():
    assert P(1, 0, 0).coeffs == (1,)
    assert P(0, 0) == ZERO
    assert ZERO.degree == -1
    assert P(3, 0, 1).degree == 2


def test_add_examples(x):
    p = P(1, 2, 3)
    assert add(ZERO, p) == p
    assert add(1 + X, 1 - X) == P(2)
    expected = from_sympy((1 + x) ** 2 / 8 + (1 - x) ** 2 / 8)
    got = add(power(1 + X, 2).scale(Fraction(1, 8)), power(1 - X, 2).scale(Fraction(1, 8)))
    assert got == expected == P(Fraction(1, 4), 0, Fraction(1, 4))


def test_mul_examples():
    p = P(2, -1, 5)
    assert mul(ONE, p) == p
    assert mul(1 - X, 1 + X) == P(1, 0, -1)
    assert mul(P(1, 0, -1), P(1, 0, 1)) == P(1, 0, 0, 0, -1)


def test_pow_examples(x):
    assert power(1 + X, 0) == ONE
    assert power(1 + X, 2) == P(1, 2, 1)
    assert power(P(1, 0, -1), 3) == from_sympy((1 - x**2) ** 3) == P(1, 0, -3, 0, 3, 0, -1)
    with pytest.raises(ValueError):
        power(X, -1)


def test_scale_examples():
    p = P(1, 2)
    assert scale(p, 1) == p
    assert scale(P(2, 0, 2), Fraction(1, 2)) == P(1, 0, 1)
    assert scale(P(3, 0, 1), Fraction(1, 4)) == P(Fraction(3, 4), 0, Fraction(1, 4))


def test_substitute_sign_examples():
    assert substitute_sign(1 + X) == 1 - X
    assert substitute_sign(P(1, 0, 1)) == P(1, 0, 1)


def test_eval_examples():
    assert evaluate(1 + X, -1) == 0
    assert evaluate(1 + X, 0) == 1
    assert evaluate(P(1, 0, 3), 1) == 4


def test_expand_tuv_examples():
    assert expand_tuv(ONE).terms == (TuvTerm(0, 0, 0, 1),)
    # C minus the origin: h^{0,0,0} = h^{1,1,1} = 1
    assert expand_tuv(1 + X).terms == (TuvTerm(0, 0, 0, 1), TuvTerm(1, 1, 1, 1))
    with pytest.raises(NotRoundError):
        expand_tuv(P(Fraction(3, 4), 0, Fraction(1, 4)))
    with pytest.raises(NotRoundError):
        expand_tuv(1 - X)


def test_tuv_format():
    assert expand_tuv(P(1, 0, 2)).format() == "1 + 2*t^2u^2v^2"
    assert expand_tuv(1 + X).format() == "1 + tuv"


def test_formatting():
    assert str(P(1, 0, 1)) == "1 + x^2"
    assert str(P(Fraction(3, 4), 0, Fraction(1, 4))) == "3/4 + 1/4*x^2"
    assert str(P(0, -1, 2)) == "-x + 2*x^2"
    assert str(ZERO) == "0"


def test_divmod():
    q, r = P(1, 0, 0, 0, -1).divmod(1 - X)
    assert r == ZERO
    assert q * (1 - X) == P(1, 0, 0, 0, -1)
    with pytest.raises(ZeroDivisionError):
        X.divmod(ZERO)


def test_immutable():
    p = P(1, 2)
    with pytest.raises(AttributeError):
        p.coeffs = (3,)


@given(polys, polys, polys)
def test_ring_axioms(p, q, s):
    assert (p + q) + s == p + (q + s)
    assert p + q == q + p
    assert (p * q) * s == p * (q * s)
    assert p * q == q * p
    assert p * (q + s) == p * q + p * s
    assert p - p == ZERO


@given(polys)
def test_no_drift(p):
    acc = ZERO
    for _ in range(7):
        acc = acc + p.scale(Fraction(1, 7))
    assert acc == p


@given(polys, polys, rationals)
def test_substitute_and_eval(p, q, c):
    assert substitute_sign(substitute_sign(p)) == p
    assert evaluate(add(p, q), c) == evaluate(p, c) + evaluate(q, c)
    assert evaluate(substitute_sign(p), c) == evaluate(p, -c)


@given(st.lists(st.integers(0, 50), max_size=8))
def test_expand_tuv_roundtrip(cs):
    p = Polynomial(cs)
    exp = expand_tuv(p)
    assert all(t.p == t.q == t.k for t in exp.terms)
    assert exp.to_polynomial() == p


def test_tuv_expansion_rejects_non_round():
    with pytest.raises(NotRoundError):
        TuvExpansion((TuvTerm(1, 1, 0, 1),)).to_polynomial()
