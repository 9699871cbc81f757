import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from mhpoly.errors import ResourceCapError
from mhpoly.partitions import (
    SignedPartition,
    centralizer_order_bn,
    centralizer_order_dn,
    enumerate_even_signed_partitions,
    enumerate_signed_partitions,
    is_split_class,
)
from mhpoly.poly import Polynomial
from mhpoly.signedperm import (
    SignedPerm,
    action_matrix,
    centralizer_order_bruteforce,
    char_det_closed,
    char_det_matrix,
    class_label,
    compose,
    conjugacy_classes_bruteforce,
    conjugate,
    cycle_products,
    enumerate_bn,
    enumerate_dn,
    invert,
    matmul,
    standard_representative,
)

from conftest import X_SYM, from_sympy

E = SignedPerm.parse
S = SignedPartition.parse


@st.composite
def signed_perms(draw, n=None):
    n = draw(st.integers(1, 8)) if n is None else n
    perm = draw(st.permutations(range(n)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedPerm(tuple(signs), tuple(perm))


@st.composite
def same_size(draw, k, max_n=8):
    n = draw(st.integers(1, max_n))
    return [draw(signed_perms(n)) for _ in range(k)]


def test_parse_and_format():
    w = E("[1,-1,-1,1,1,-1;(145)(26)]")
    assert w.perm == (3, 5, 2, 4, 0, 1)
    assert str(w) == "[1,-1,-1,1,1,-1;(145)(26)]"
    assert str(SignedPerm.identity(2)) == "[1,1;e]"
    assert E("[1,1,1,1,1,1,1,1,1,1;(1,10)]").perm[0] == 9


def test_compose_examples():
    b = E("[1,-1;(12)]")
    assert compose(SignedPerm.identity(2), b) == b
    assert compose(E("[-1,1;e]"), E("[-1,1;e]")) == E("[1,1;e]")
    assert compose(b, b) == E("[-1,-1;e]")
    with pytest.raises(ValueError):
        compose(SignedPerm.identity(2), SignedPerm.identity(3))


def test_invert_examples():
    assert invert(SignedPerm.identity(3)) == SignedPerm.identity(3)
    assert invert(E("[-1,1;e]")) == E("[-1,1;e]")
    a = E("[1,-1;(12)]")
    assert invert(a) == E("[-1,1;(12)]")
    assert compose(a, invert(a)) == SignedPerm.identity(2)


def test_enumeration():
    assert enumerate_bn(1) == [E("[1;e]"), E("[-1;e]")]
    assert len(enumerate_bn(2)) == 8
    assert set(enumerate_dn(2)) == {E("[1,1;e]"), E("[-1,-1;e]"), E("[1,1;(12)]"), E("[-1,-1;(12)]")}
    for n in range(1, 6):
        bn = enumerate_bn(n)
        assert len(set(bn)) == len(bn) == 2**n * sympy.factorial(n)
        assert len(enumerate_dn(n)) == len(bn) // 2
    with pytest.raises(ResourceCapError):
        enumerate_bn(9)
    with pytest.raises(ResourceCapError):
        enumerate_bn(4, cap=3)


def test_cycle_products_examples():
    assert sorted(cycle_products(SignedPerm.identity(2))) == [(1, 1), (1, 1)]
    assert sorted(cycle_products(E("[1,-1,-1,1,1,-1;(145)(26)]"))) == [(1, -1), (2, 1), (3, 1)]
    assert cycle_products(E("[1,-1;(12)]")) == [(2, -1)]


def test_class_label_examples():
    assert class_label(E("[1,-1,-1,1,1,-1;(145)(26)]")) == S("[1b 2 3]")
    assert class_label(E("[-1,1;e]")) == S("[1 1b]")
    assert class_label(E("[1,-1;(12)]")) == S("[2b]")


def test_standard_representative_examples():
    assert standard_representative(S("[1^2]")) == E("[1,1;e]")
    assert standard_representative(S("[2b]")) == E("[-1,1;(12)]")
    assert standard_representative(S("[1b]")) == E("[-1;e]")


@pytest.mark.parametrize("n", range(1, 8))
def test_standard_representative_has_its_label(n):
    for lam in enumerate_signed_partitions(n):
        assert class_label(standard_representative(lam)) == lam


def test_action_matrix_examples():
    assert action_matrix(SignedPerm.identity(3)) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert action_matrix(E("[-1;e]")) == ((-1,),)
    assert action_matrix(E("[1,1;(12)]")) == ((0, 1), (1, 0))


def test_char_det_closed_examples():
    for n in range(1, 6):
        assert char_det_closed(S(f"[1^{n}]")) == Polynomial((1, 1)) ** n
    assert char_det_closed(S("[2]")) == Polynomial((1, 0, -1))
    assert char_det_closed(S("[2b]")) == Polynomial((1, 0, 1))


def test_char_det_matrix_examples():
    assert char_det_matrix(((1, 0), (0, 1))) == Polynomial((1, 2, 1))
    assert char_det_matrix(action_matrix(E("[1,-1;(12)]"))) == Polynomial((1, 0, 1))


def sympy_det(m):
    n = len(m)
    return from_sympy((sympy.eye(n) + X_SYM * sympy.Matrix(m)).det())


def test_char_det_matrix_against_sympy():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 5)
        m = tuple(tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(n))
        assert char_det_matrix(m) == sympy_det(m)
    # zero pivots force row swaps
    m = ((0, 1, 0), (1, 0, 0), (0, 0, 0))
    assert char_det_matrix(m) == sympy_det(m)


def test_centralizer_bruteforce_examples():
    assert centralizer_order_bruteforce(SignedPerm.identity(2), "bn") == 8
    assert centralizer_order_bruteforce(E("[-1,1;e]"), "bn") == 4
    assert centralizer_order_bruteforce(E("[1,1;(12)]"), "dn") == 4


def test_classes_b1_b2_d2():
    b1 = conjugacy_classes_bruteforce("bn", 1)
    assert len(b1) == 2 and all(c.size == 1 for c in b1)
    b2 = conjugacy_classes_bruteforce("bn", 2)
    assert len(b2) == 5
    d2 = conjugacy_classes_bruteforce("dn", 2)
    assert len(d2) == 4
    two = [c for c in d2 if c.label == S("[2]")]
    assert len(two) == 2 and all(c.split and c.size == 1 for c in two)
    assert two[0].representative != two[1].representative


@given(same_size(3))
def test_group_axioms(elts):
    a, b, c = elts
    e = SignedPerm.identity(a.n)
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a, invert(a)) == e == compose(invert(a), a)
    assert compose(e, a) == a == compose(a, e)


@given(same_size(2, max_n=7))
def test_conjugation_invariance(elts):
    g, a = elts
    assert class_label(conjugate(g, a)) == class_label(a)


@given(same_size(2, max_n=7))
def test_action_matrix_homomorphism(elts):
    a, b = elts
    assert action_matrix(compose(a, b)) == matmul(action_matrix(a), action_matrix(b))


@given(signed_perms())
def test_dn_membership(a):
    prod = 1
    for s in a.signs:
        prod *= s
    assert a.is_even() == (prod == 1) == class_label(a).is_even()


@pytest.mark.parametrize("n", range(1, 6))
def test_labels_complete(n):
    bn = conjugacy_classes_bruteforce("bn", n)
    assert sorted(c.label for c in bn) == sorted(enumerate_signed_partitions(n))
    dn = conjugacy_classes_bruteforce("dn", n)
    even = enumerate_even_signed_partitions(n)
    assert len(dn) == len(even) + sum(1 for l in even if is_split_class(l))
    # split flag from the formula agrees with orbits: split labels occur twice
    for lam in even:
        copies = [c for c in dn if c.label == lam]
        assert len(copies) == (2 if is_split_class(lam) else 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_class_equation_bruteforce(n):
    for group in ("bn", "dn"):
        classes = conjugacy_classes_bruteforce(group, n)
        order = 2**n * int(sympy.factorial(n)) // (1 if group == "bn" else 2)
        assert sum(c.size for c in classes) == order


@pytest.mark.parametrize("n", range(1, 6))
def test_centralizer_formula_vs_bruteforce(n):
    for lam in enumerate_signed_partitions(n):
        w = standard_representative(lam)
        assert centralizer_order_bruteforce(w, "bn") == centralizer_order_bn(lam)
    for lam in enumerate_even_signed_partitions(n):
        w = standard_representative(lam)
        assert centralizer_order_bruteforce(w, "dn") == centralizer_order_dn(lam)


@pytest.mark.parametrize("n", range(1, 6))
def test_determinant_lemma_exhaustive(n):
    for w in enumerate_bn(n):
        assert char_det_matrix(action_matrix(w)) == char_det_closed(class_label(w))


@settings(max_examples=200, deadline=None)
@given(st.integers(6, 7).flatmap(signed_perms))
def test_determinant_lemma_random(w):
    assert char_det_matrix(action_matrix(w)) == char_det_closed(class_label(w))
