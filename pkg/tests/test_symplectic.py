"""Cocycle families, H^2, the index, Kirillov corank, ideal classification."""

from fractions import Fraction

import pytest

from liecas.ceforms import AltForm, ce_d, is_closed
from liecas.liealg import Subspace, build_algebra
from liecas.symplectic import (
    classify_ideal,
    deterministic_functionals,
    generic_nondegeneracy,
    h2_dim,
    kirillov_corank,
    lie_index,
    two_cocycle_family,
)

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


def test_two_cocycle_family_abelian(abelian2):
    fam = two_cocycle_family(abelian2)
    assert fam.dim == 1
    assert fam.basis[0] == AltForm.make(2, 2, {(1, 2): 1})
    assert fam.symbols == ("a12",)


def test_family_members_are_closed(aff2):
    fam = two_cocycle_family(aff2)
    for b in fam.basis:
        assert is_closed(aff2, b)
    # the general member is closed symbolically in the family symbols
    assert ce_d(aff2, fam.general).is_zero()


def test_family_membership_solver(aff2):
    fam = two_cocycle_family(aff2)
    omega = AltForm.make(2, 6, {(1, 2): 1, (1, 5): 1, (3, 4): -1, (5, 6): -1})
    coords = fam.coordinates_of(omega)
    assert coords is not None
    assert fam.member(coords) == omega
    not_member = AltForm.make(2, 6, {(2, 4): 1})
    assert fam.coordinates_of(not_member) is None


def test_h2_dims(abelian2, sl2):
    assert h2_dim(abelian2) == 1
    assert h2_dim(sl2) == 0


def test_generic_nondegeneracy_of_pairing_form(abelian2):
    fam = two_cocycle_family(abelian2)
    pf = generic_nondegeneracy(fam)
    # the 2-dim abelian family a12*e12 has Pfaffian a12
    assert str(pf) == "a12"


def test_lie_index_values(sl2, aff1, aff2):
    assert lie_index(aff1) == 0
    assert lie_index(sl2) == 1
    assert lie_index(aff2) == 0


def test_kirillov_corank(aff1, sl2):
    assert kirillov_corank(aff1, [0, 0]) == 2
    assert kirillov_corank(aff1, [0, 1]) == 0
    # index lower-bounds the corank; sl2 attains it at a generic functional
    coranks = [kirillov_corank(sl2, f) for f in deterministic_functionals(sl2)]
    assert all(c >= 1 for c in coranks)
    assert 1 in coranks


def test_classify_ideal_on_aff2(aff2):
    omega = AltForm.make(2, 6, {(1, 2): 1, (1, 5): 1, (3, 4): -1, (5, 6): -1})
    J = Subspace.span(6, [[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0]])
    cls = classify_ideal(aff2, omega, J)
    assert cls.is_ideal
    assert cls.isotropic
    assert not cls.lagrangian
    assert not cls.symplectic
    assert not cls.normal
    assert cls.orthogonal.dim == 4


def test_classify_zero_ideal(aff2):
    omega = AltForm.make(2, 6, {(1, 2): 1, (1, 5): 1, (3, 4): -1, (5, 6): -1})
    J = Subspace.span(6, [])
    cls = classify_ideal(aff2, omega, J)
    assert cls.is_ideal and cls.isotropic and cls.normal
    assert not cls.lagrangian and not cls.symplectic
