"""Alternating forms, the CE differential, wedge, nondegeneracy, primitives."""

import random
from fractions import Fraction

import pytest

from liecas.ceforms import (
    AltForm,
    FormError,
    basis_form,
    ce_d,
    find_primitive,
    form_gram,
    gram_to_form,
    is_closed,
    is_nondegenerate,
    wedge,
    wedge_power,
)
from liecas.liealg import build_algebra
from liecas.linalg import Matrix


AFF2_BRACKETS = {
    (1, 2): {2: 2},
    (1, 3): {3: -2},
    (1, 4): {4: 1},
    (1, 5): {5: -1},
    (2, 3): {1: 1},
    (2, 5): {4: 1},
    (3, 4): {5: 1},
    (4, 6): {4: 1},
    (5, 6): {5: 1},
}


@pytest.fixture(scope="module")
def aff2():
    return build_algebra(6, AFF2_BRACKETS)


def form(dim, coeffs, degree=2):
    return AltForm.make(degree, dim, coeffs)


def test_d_of_degree_one_on_aff1(aff1):
    # d e^2 (x, y) = -e^2([x, y]) gives -e^{12}
    d = ce_d(aff1, basis_form(1, 2, (2,)))
    assert d == form(2, {(1, 2): -1})


def test_d_of_degree_one_on_sl2(sl2):
    d = ce_d(sl2, basis_form(1, 3, (1,)))
    assert d == form(3, {(1, 3): 2})


def test_aff2_symplectic_form_is_closed(aff2):
    omega = form(6, {(1, 2): 1, (1, 5): 1, (3, 4): -1, (5, 6): -1})
    assert is_closed(aff2, omega)
    assert is_nondegenerate(omega)


def test_dd_is_zero_on_basis_forms(aff2, sl2):
    for g in (aff2, sl2):
        for i in range(1, g.dim + 1):
            assert ce_d(g, ce_d(g, basis_form(1, g.dim, (i,)))).is_zero()
        for i in range(1, g.dim + 1):
            for j in range(i + 1, g.dim + 1):
                assert ce_d(g, ce_d(g, basis_form(2, g.dim, (i, j)))).is_zero()


def test_wedge_basics():
    e1 = basis_form(1, 4, (1,))
    e2 = basis_form(1, 4, (2,))
    assert wedge(e1, e2) == form(4, {(1, 2): 1})
    e12 = form(4, {(1, 2): 1})
    assert wedge(e12, e12).is_zero()
    mixed = form(4, {(1, 2): 1, (3, 4): 1})
    assert wedge(mixed, mixed) == AltForm.make(4, 4, {(1, 2, 3, 4): 2})


def test_wedge_graded_commutativity_randomized():
    rng = random.Random(42)
    for _ in range(20):
        ka = rng.choice([1, 2])
        kb = rng.choice([1, 2, 3])
        dim = 5
        a = AltForm.make(
            ka,
            dim,
            {
                tuple(sorted(rng.sample(range(1, dim + 1), ka))): Fraction(rng.randint(-4, 4))
                for _ in range(2)
            },
        )
        b = AltForm.make(
            kb,
            dim,
            {
                tuple(sorted(rng.sample(range(1, dim + 1), kb))): Fraction(rng.randint(-4, 4))
                for _ in range(2)
            },
        )
        sign = (-1) ** (ka * kb)
        assert wedge(a, b) == wedge(b, a).scale(sign)


def test_d_is_a_derivation_randomized(aff2):
    rng = random.Random(17)
    g = aff2
    for _ in range(10):
        a = AltForm.make(
            1, 6, {(rng.randint(1, 6),): Fraction(rng.randint(-3, 3)) for _ in range(2)}
        )
        b = AltForm.make(
            1, 6, {(rng.randint(1, 6),): Fraction(rng.randint(-3, 3)) for _ in range(2)}
        )
        lhs = ce_d(g, wedge(a, b))
        rhs = wedge(ce_d(g, a), b) + wedge(a, ce_d(g, b)).scale(-1)
        assert lhs == rhs


def test_fourth_wedge_power_of_pairing_form():
    omega0 = form(8, {(1, 5): 1, (2, 6): 1, (3, 7): 1, (4, 8): 1})
    top = wedge_power(omega0, 4)
    # independent count: 4! matchings contribute with identical positive sign
    assert top == AltForm.make(8, 8, {tuple(range(1, 9)): 24})


def test_gram_roundtrip_and_nondegeneracy():
    omega = form(8, {(1, 5): 1, (2, 6): 1, (3, 7): 1, (4, 8): -2})
    G = form_gram(omega)
    assert gram_to_form(G) == omega
    assert is_nondegenerate(omega)
    degenerate = form(8, {(1, 5): 1})
    assert not is_nondegenerate(degenerate)
    odd = form(3, {(1, 2): 1})
    assert not is_nondegenerate(odd)


def test_find_primitive(aff1, abelian2, aff2):
    omega = form(2, {(1, 2): 1})
    assert find_primitive(abelian2, omega) is None
    beta = find_primitive(aff1, omega)
    assert beta == AltForm.make(1, 2, {(2,): -1})
    not_closed = form(6, {(2, 4): 1})
    assert not is_closed(aff2, not_closed)
    with pytest.raises(FormError):
        find_primitive(aff2, not_closed)


def test_alt_form_eval_is_alternating():
    omega = form(4, {(1, 2): 1, (3, 4): 2})
    assert omega.eval([[1, 0, 0, 0], [0, 1, 0, 0]]) == 1
    assert omega.eval([[0, 1, 0, 0], [1, 0, 0, 0]]) == -1
    assert omega.eval([[1, 0, 0, 0], [1, 0, 0, 0]]).is_zero()
