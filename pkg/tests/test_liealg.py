"""Lie algebra construction, validation, predicates and sums."""

import pytest

from liecas.liealg import (
    LieError,
    Subspace,
    build_algebra,
    center,
    derived,
    direct_sum,
    is_unimodular,
    semidirect,
)
from liecas.linalg import Matrix
from liecas.scalars import var


def test_sl2_and_so3_are_valid(sl2, so3):
    assert sl2.jacobi_defects() == []
    assert so3.jacobi_defects() == []


def test_jacobi_violation_reports_triple_and_defect():
    with pytest.raises(LieError) as err:
        build_algebra(3, {(1, 2): {1: 1}, (1, 3): {2: 1}})
    msg = str(err.value)
    assert "(1,2,3)" in msg
    assert "e2" in msg


def test_duplicate_and_bad_indices_rejected():
    with pytest.raises(LieError):
        build_algebra(2, {(1, 1): {2: 1}})
    with pytest.raises(LieError):
        build_algebra(2, {(2, 1): {2: 1}})
    with pytest.raises(LieError):
        build_algebra(2, {(1, 3): {2: 1}})


def test_parametric_jacobi_checked_symbolically():
    p = var("p")
    g = build_algebra(3, {(1, 2): {2: p}, (1, 3): {3: -p}}, params=("p",))
    assert g.jacobi_defects() == []


def test_unimodularity(so3, aff1):
    assert is_unimodular(so3)
    assert not is_unimodular(aff1)  # tr ad e1 = 1


def test_center(so3, abelian2):
    assert center(so3).dim == 0
    assert center(abelian2).dim == 2
    sum_alg = direct_sum(so3, build_algebra(1, {}))
    assert center(sum_alg).dim == 1


def test_derived(sl2, aff1, abelian2):
    assert derived(abelian2).dim == 0
    assert derived(sl2).dim == 3
    d = derived(aff1)
    assert d.dim == 1 and d.contains([0, 1])


def test_direct_sum_center_additivity(so3, aff1, abelian2):
    for g1 in (so3, abelian2):
        for g2 in (aff1, abelian2):
            s = direct_sum(g1, g2)
            assert center(s).dim == center(g1).dim + center(g2).dim


def test_semidirect_zero_action_equals_direct_sum(sl2, abelian2):
    zero = [Matrix.zero(2, 2) for _ in range(3)]
    assert semidirect(sl2, abelian2, zero).c == direct_sum(sl2, abelian2).c


def test_semidirect_invalid_action_reports():
    g = build_algebra(2, {(1, 2): {2: 1}})
    ideal = build_algebra(1, {})
    # e1 acts by 1, e2 acts by 1: [e1,e2] = e2 forces act([e1,e2]) = [act(e1), act(e2)] = 0 != act(e2)
    bad = [Matrix([[1]]), Matrix([[1]])]
    with pytest.raises(LieError):
        semidirect(g, ideal, bad)


def test_semidirect_valid_action(aff1):
    # aff(R) acting on R: e1 acts by identity, e2 by zero
    ideal = build_algebra(1, {})
    g = semidirect(aff1, ideal, [Matrix([[1]]), Matrix([[0]])])
    assert g.dim == 3
    assert g.bracket_basis(1, 3) == {3: g.bracket_basis(1, 3)[3]}


def test_specialize_evaluates_parameters():
    from fractions import Fraction

    p = var("p")
    g = build_algebra(2, {(1, 2): {2: p}}, params=("p",))
    g0 = g.specialize({"p": Fraction(0)})
    assert g0.c == {}
    g2 = g.specialize({"p": Fraction(2)})
    assert g2.bracket_basis(1, 2)[2] == 2


def test_subspace_membership_and_equality():
    s = Subspace.span(3, [[1, 0, 1], [0, 1, 0]])
    assert s.dim == 2
    assert s.contains([2, 3, 2])
    assert not s.contains([1, 0, 0])
    t = Subspace.span(3, [[1, 1, 1], [1, -1, 1]])
    assert s == t
