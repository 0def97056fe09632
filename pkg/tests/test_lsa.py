"""Left-symmetric algebra validation and the small construction examples.

Table-specific LSA families are exercised in test_dataset / acceptance; this
file covers the operations on hand-computable inputs.
"""

import pytest

from liecas.ceforms import AltForm
from liecas.liealg import Subspace, build_algebra
from liecas.linalg import Matrix
from liecas.lsa import (
    LSAError,
    build_lsa,
    lagrangian_reduction,
    lsa_from_cocycle,
    lsa_from_symplectic,
    right_identity,
    trace_checks,
)
from liecas.extension import Representation


def test_symmetric_product_over_nonabelian_bracket_rejected():
    # x.y = y.x forces zero commutator; declare e1.e2 = e2.e1 = e3 plus a
    # deliberately asymmetric pair elsewhere to break left-symmetry
    with pytest.raises(LSAError):
        build_lsa(
            3,
            {
                (1, 2): {3: 1},
                (2, 1): {3: 1},
                (1, 3): {1: 1},
            },
        )


def test_zero_product_is_valid_lsa():
    a = build_lsa(2, {})
    assert a.commutator.c == {}
    assert a.is_associative()


def test_lsa_from_symplectic_on_aff1(aff1):
    omega = AltForm.make(2, 2, {(1, 2): 1})
    a = lsa_from_symplectic(aff1, omega)
    assert a.product_basis(1, 1) == {1: a.product_basis(1, 1)[1]}
    assert a.product_basis(1, 1)[1] == -1
    assert a.product_basis(2, 1)[2] == -1
    assert a.product_basis(1, 2) == {}
    assert a.product_basis(2, 2) == {}
    assert a.commutator.c == aff1.c


def test_lsa_from_symplectic_on_abelian(abelian2):
    omega = AltForm.make(2, 2, {(1, 2): 1})
    a = lsa_from_symplectic(abelian2, omega)
    assert a.prod == {}


def test_lsa_from_symplectic_rejects_degenerate(aff1):
    with pytest.raises(LSAError):
        lsa_from_symplectic(aff1, AltForm.make(2, 2, {}))


def test_right_identity_of_symplectic_aff1(aff1):
    omega = AltForm.make(2, 2, {(1, 2): 1})
    a = lsa_from_symplectic(aff1, omega)
    # R(e2) = 0 here, so the identities form the family -e1 + t*e2
    ident = right_identity(a)
    assert ident is not None and not ident.unique
    assert ident.vector[0] == -1 and ident.vector[1].is_zero()
    assert len(ident.homogeneous) == 1 and ident.homogeneous[0][1] == 1
    assert a.right_of(ident.vector) == Matrix.identity(2)


def test_right_identity_can_be_absent():
    a = build_lsa(2, {})
    assert right_identity(a) is None


def test_lsa_from_cocycle_identity_recovers_left_action(aff1):
    omega = AltForm.make(2, 2, {(1, 2): 1})
    a = lsa_from_symplectic(aff1, omega)
    rho = Representation.make(a.commutator, [a.left_matrix(1), a.left_matrix(2)])
    again = lsa_from_cocycle(rho, Matrix.identity(2))
    assert again.prod == a.prod


def test_lsa_from_cocycle_rejects_singular(aff1):
    omega = AltForm.make(2, 2, {(1, 2): 1})
    a = lsa_from_symplectic(aff1, omega)
    rho = Representation.make(a.commutator, [a.left_matrix(1), a.left_matrix(2)])
    # phi(e1) = e2, phi(e2) = 0 satisfies the cocycle law but is singular
    with pytest.raises(LSAError, match="singular"):
        lsa_from_cocycle(rho, Matrix([[0, 0], [1, 0]]))


def test_lsa_from_cocycle_rejects_noncocycle(sl2):
    zero = [Matrix.zero(3, 3) for _ in range(3)]
    rho = Representation.make(sl2, zero)
    # phi = Id fails phi([x,y]) = 0 for the zero representation
    with pytest.raises(LSAError, match="cocycle"):
        lsa_from_cocycle(rho, Matrix.identity(3))


def test_lagrangian_reduction_on_direct_sum_of_aff1():
    # aff(R) + aff(R) carries the exact symplectic form d(e^2 + e^4);
    # span(e2, e4) is a Lagrangian ideal with abelian quotient
    g = build_algebra(4, {(1, 2): {2: 1}, (3, 4): {4: 1}})
    omega = AltForm.make(2, 4, {(1, 2): -1, (3, 4): -1})
    J = Subspace.span(4, [[0, 1, 0, 0], [0, 0, 0, 1]])
    reduced = lagrangian_reduction(g, omega, J)
    assert reduced.dim == 2
    assert reduced.commutator.c == {}
    assert reduced.product_basis(1, 1) == {1: reduced.product_basis(1, 1)[1]}
    assert reduced.product_basis(1, 1)[1] == -1
    assert reduced.product_basis(2, 2)[2] == -1
    bad = Subspace.span(4, [[1, 0, 0, 0], [0, 0, 1, 0]])  # not an ideal, not isotropic
    with pytest.raises(LSAError):
        lagrangian_reduction(g, omega, bad)


def test_trace_checks_zero_product():
    a = build_lsa(3, {})
    report = trace_checks(a, [])
    assert report.ok
    assert report.identity_trace is None
