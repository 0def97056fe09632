"""Linear maps between algebras: homomorphism checks, transport, pullbacks.

A LinMap holds the matrix whose columns are the images of the source basis
vectors in target coordinates.  Pullback of a 2-form along the map with
matrix A is Gram-conjugation A^T G A.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ceforms import AltForm, form_gram, gram_to_form
from .liealg import LieAlgebra, LieError, build_algebra
from .linalg import Matrix, Vector, det_bareiss, invert, vec_is_zero, vec_sub
from .scalars import RatFunc, ScalarLike, scalar


@dataclass(frozen=True)
class LinMap:
    """Linear map by its matrix (columns = images of the source basis)."""

    matrix: Matrix

    @staticmethod
    def from_images(source_dim: int, target_dim: int, images) -> "LinMap":
        """Build from a {source index -> {target index -> coeff}} description (1-based)."""
        cols = []
        for j in range(1, source_dim + 1):
            img = images.get(j, {})
            cols.append([RatFunc.of(img.get(k, 0)) for k in range(1, target_dim + 1)])
        return LinMap(Matrix([[cols[j][k] for j in range(source_dim)] for k in range(target_dim)]))

    @property
    def source_dim(self) -> int:
        return self.matrix.cols

    @property
    def target_dim(self) -> int:
        return self.matrix.rows

    def apply(self, v: Sequence[ScalarLike]) -> Vector:
        return self.matrix.apply(v)

    def determinant(self) -> RatFunc:
        return det_bareiss(self.matrix)

    def is_invertible(self) -> bool:
        return self.matrix.is_square() and not self.determinant().is_zero()

    def inverse(self) -> "LinMap":
        return LinMap(invert(self.matrix))

    def compose(self, inner: "LinMap") -> "LinMap":
        """self after inner."""
        return LinMap(self.matrix * inner.matrix)

    def subs(self, assignment) -> "LinMap":
        return LinMap(self.matrix.subs(assignment))


def check_homomorphism(phi: LinMap, g1: LieAlgebra, g2: LieAlgebra) -> list[tuple[tuple[int, int], Vector]]:
    """Defects phi([e_i,e_j]) - [phi e_i, phi e_j]; empty iff phi is a homomorphism."""
    if phi.source_dim != g1.dim or phi.target_dim != g2.dim:
        raise LieError("dimension mismatch")
    defects = []
    unit = [tuple(scalar(1 if t == s else 0) for t in range(g1.dim)) for s in range(g1.dim)]
    images = [phi.apply(unit[s]) for s in range(g1.dim)]
    for i in range(1, g1.dim + 1):
        for j in range(i + 1, g1.dim + 1):
            lhontop = phi.apply(g1._coeffs_to_vec(g1.bracket_basis(i, j)))
            rhs = g2.bracket(images[i - 1], images[j - 1])
            diff = vec_sub(lhontop, rhs)
            if not vec_is_zero(diff):
                defects.append(((i, j), diff))
    return defects


def transport(g: LieAlgebra, phi: LinMap) -> LieAlgebra:
    """Express the bracket of g in the target basis of an invertible phi.

    By construction phi becomes an isomorphism g -> transport(g, phi).
    """
    if not phi.is_invertible():
        raise LieError("transport wants an invertible map")
    if phi.source_dim != g.dim:
        raise LieError("dimension mismatch")
    inv = phi.inverse()
    n = g.dim
    unit = [tuple(scalar(1 if t == s else 0) for t in range(n)) for s in range(n)]
    pre = [inv.apply(unit[s]) for s in range(n)]
    brackets = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            val = phi.apply(g.bracket(pre[i - 1], pre[j - 1]))
            coeffs = {k + 1: val[k] for k in range(n) if not val[k].is_zero()}
            if coeffs:
                brackets[(i, j)] = coeffs
    return build_algebra(n, brackets, params=g.params, labels=g.labels)


def pullback_form(phi: LinMap, omega: AltForm) -> AltForm:
    """(phi^* omega)(x, y) = omega(phi x, phi y)."""
    if omega.degree != 2:
        raise LieError("pullback_form implemented for 2-forms")
    if phi.target_dim != omega.dim:
        raise LieError("dimension mismatch")
    A = phi.matrix
    G = form_gram(omega)
    return gram_to_form(A.transpose() * G * A)


def is_symplectomorphism(
    phi: LinMap,
    pair1: tuple[LieAlgebra, AltForm],
    pair2: tuple[LieAlgebra, AltForm],
) -> bool:
    """True iff phi is a Lie isomorphism with phi^* omega_2 = omega_1 exactly."""
    g1, omega1 = pair1
    g2, omega2 = pair2
    if not phi.is_invertible():
        return False
    if check_homomorphism(phi, g1, g2):
        return False
    return pullback_form(phi, omega2) == omega1
