"""Homomorphism checking, transport, pullbacks, symplectomorphism."""

import random
from fractions import Fraction

import pytest

from liecas.ceforms import AltForm, is_closed
from liecas.liealg import LieError, build_algebra, center, is_unimodular
from liecas.linalg import Matrix
from liecas.morphism import LinMap, check_homomorphism, is_symplectomorphism, pullback_form, transport


def test_identity_is_a_homomorphism(sl2):
    ident = LinMap(Matrix.identity(3))
    assert check_homomorphism(ident, sl2, sl2) == []


def test_scaled_map_fails_on_sl2(sl2):
    phi = LinMap(Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 2]]))
    defects = check_homomorphism(phi, sl2, sl2)
    assert defects and defects[0][0] == (1, 2)


def test_transport_by_identity(sl2):
    assert transport(sl2, LinMap(Matrix.identity(3))).c == sl2.c


def test_transport_preserves_structure(aff1):
    phi = LinMap(Matrix([[1, 1], [0, 1]]))
    moved = transport(aff1, phi)
    assert moved.jacobi_defects() == []
    assert is_unimodular(moved) == is_unimodular(aff1)
    assert center(moved).dim == center(aff1).dim
    assert check_homomorphism(phi, aff1, moved) == []


def test_transport_requires_invertible(aff1):
    with pytest.raises(LieError):
        transport(aff1, LinMap(Matrix([[1, 0], [0, 0]])))


def test_pullback_identity():
    omega = AltForm.make(2, 4, {(1, 2): 1, (3, 4): -2})
    assert pullback_form(LinMap(Matrix.identity(4)), omega) == omega


def test_pullback_functoriality_randomized():
    rng = random.Random(23)
    for _ in range(10):
        A = Matrix([[Fraction(rng.randint(-3, 3)) for _ in range(4)] for _ in range(4)])
        B = Matrix([[Fraction(rng.randint(-3, 3)) for _ in range(4)] for _ in range(4)])
        omega = AltForm.make(
            2,
            4,
            {
                (1, 2): Fraction(rng.randint(-3, 3)),
                (1, 4): Fraction(rng.randint(-3, 3)),
                (2, 3): Fraction(rng.randint(-3, 3)),
                (3, 4): Fraction(rng.randint(-3, 3)),
            },
        )
        phi, psi = LinMap(A), LinMap(B)
        lhs = pullback_form(phi.compose(psi), omega)
        rhs = pullback_form(psi, pullback_form(phi, omega))
        assert lhs == rhs


def test_symplectomorphism_on_aff1(aff1):
    omega = AltForm.make(2, 2, {(1, 2): 1})
    ident = LinMap(Matrix.identity(2))
    assert is_symplectomorphism(ident, (aff1, omega), (aff1, omega))
    # e2 -> 2e2 is an automorphism of aff(R) but scales omega
    phi = LinMap(Matrix([[1, 0], [0, 2]]))
    assert check_homomorphism(phi, aff1, aff1) == []
    assert not is_symplectomorphism(phi, (aff1, omega), (aff1, omega))


def test_transported_closed_form_stays_closed(aff1):
    omega = AltForm.make(2, 2, {(1, 2): 1})
    phi = LinMap(Matrix([[2, 1], [1, 1]]))
    moved = transport(aff1, phi)
    pushed = pullback_form(phi.inverse(), omega)
    assert is_closed(moved, pushed)
