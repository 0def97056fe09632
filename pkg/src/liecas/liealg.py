"""Lie algebras by structure constants, with symbolic parameters.

Structure constants are stored sparsely for i < j only (1-based basis
indices); the bracket accessor extends by antisymmetry, so an asymmetric
tensor is unrepresentable.  The Jacobi identity is verified symbolically in
the declared parameters at construction unless explicitly deferred.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import Matrix, Vector, kernel_basis, rref, vec_add, vec_is_zero, vector
from .scalars import RatFunc, ScalarError, ScalarLike, scalar

Coeffs = dict[int, RatFunc]  # sparse vector: 1-based basis index -> coefficient


class LieError(ValueError):
    """Structural failure: Jacobi violation, bad indices, invalid action."""


def _clean_coeffs(raw: Mapping[int, ScalarLike], dim: int) -> Coeffs:
    out: Coeffs = {}
    for k, v in raw.items():
        if not 1 <= k <= dim:
            raise LieError(f"basis index {k} out of range 1..{dim}")
        c = RatFunc.of(v)
        if not c.is_zero():
            out[k] = c
    return out


@dataclass(frozen=True)
class Subspace:
    """Subspace of an ambient coordinate space, held as canonical rref rows."""

    ambient: int
    basis: tuple[Vector, ...]

    @staticmethod
    def span(ambient: int, vectors: Sequence[Sequence[ScalarLike]]) -> "Subspace":
        return Subspace(ambient, tuple(rref(vectors, ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[ScalarLike]) -> bool:
        vv = list(vector(v))
        for row in self.basis:
            lead = next(i for i, x in enumerate(row) if not x.is_zero())
            if not vv[lead].is_zero():
                f = vv[lead]
                vv = [a - f * b for a, b in zip(vv, row)]
        return all(x.is_zero() for x in vv)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    __hash__ = None


@dataclass(frozen=True)
class LieAlgebra:
    """Finite-dimensional Lie algebra over Q(params) by structure constants."""

    dim: int
    params: tuple[str, ...]
    c: Mapping[tuple[int, int], Coeffs]
    labels: tuple[str, ...]

    def label(self, i: int) -> str:
        return self.labels[i - 1]

    def bracket_basis(self, i: int, j: int) -> Coeffs:
        """[e_i, e_j] as a sparse coefficient map (antisymmetric extension)."""
        if i == j:
            return {}
        if i < j:
            return dict(self.c.get((i, j), {}))
        return {k: -v for k, v in self.c.get((j, i), {}).items()}

    def bracket(self, u: Sequence[ScalarLike], v: Sequence[ScalarLike]) -> Vector:
        """Bilinear extension of the bracket to coordinate vectors."""
        uu = vector(u)
        vv = vector(v)
        out = [scalar(0)] * self.dim
        for (i, j), coeffs in self.c.items():
            f = uu[i - 1] * vv[j - 1] - uu[j - 1] * vv[i - 1]
            if f.is_zero():
                continue
            for k, val in coeffs.items():
                out[k - 1] = out[k - 1] + f * val
        return tuple(out)

    def ad(self, i: int) -> Matrix:
        """Matrix of ad(e_i): column j holds [e_i, e_j]."""
        cols = []
        for j in range(1, self.dim + 1):
            coeffs = self.bracket_basis(i, j)
            cols.append([coeffs.get(k, scalar(0)) for k in range(1, self.dim + 1)])
        return Matrix([[cols[j][k] for j in range(self.dim)] for k in range(self.dim)])

    def jacobi_defects(self) -> list[tuple[tuple[int, int, int], Vector]]:
        """Nonzero cyclic-sum defects [(triple, defect-vector)], empty iff Jacobi holds."""
        defects = []
        basis = [tuple(scalar(1 if t == s else 0) for t in range(self.dim)) for s in range(self.dim)]
        for i in range(1, self.dim + 1):
            for j in range(i + 1, self.dim + 1):
                for k in range(j + 1, self.dim + 1):
                    term1 = self.bracket(self._coeffs_to_vec(self.bracket_basis(i, j)), basis[k - 1])
                    term2 = self.bracket(self._coeffs_to_vec(self.bracket_basis(j, k)), basis[i - 1])
                    term3 = self.bracket(self._coeffs_to_vec(self.bracket_basis(k, i)), basis[j - 1])
                    total = vec_add(vec_add(term1, term2), term3)
                    if not vec_is_zero(total):
                        defects.append(((i, j, k), total))
        return defects

    def _coeffs_to_vec(self, coeffs: Coeffs) -> Vector:
        return tuple(coeffs.get(k, scalar(0)) for k in range(1, self.dim + 1))

    def specialize(self, assignment: Mapping[str, Fraction]) -> "LieAlgebra":
        """Evaluate parameters at rational values (revalidates Jacobi)."""
        remaining = tuple(p for p in self.params if p not in assignment)
        return self.substitute_params(assignment, remaining)

    def substitute_params(
        self, assignment: Mapping[str, ScalarLike], new_params: Sequence[str]
    ) -> "LieAlgebra":
        """Substitute arbitrary scalars (e.g. rational functions) for parameters."""
        new_c = {}
        for key, coeffs in self.c.items():
            sub = {k: v.subs(assignment) for k, v in coeffs.items()}
            sub = {k: v for k, v in sub.items() if not v.is_zero()}
            if sub:
                new_c[key] = sub
        return build_algebra(self.dim, new_c, params=tuple(new_params), labels=self.labels)

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, params={list(self.params)})"


def build_algebra(
    dim: int,
    brackets: Mapping[tuple[int, int], Mapping[int, ScalarLike]],
    params: Sequence[str] = (),
    labels: Sequence[str] | None = None,
    check: bool = True,
) -> LieAlgebra:
    """Validate and construct a Lie algebra from sparse structure constants.

    ``brackets`` maps (i, j) with i < j to the coefficient map of [e_i, e_j].
    Jacobi is verified symbolically in the parameters unless check=False.
    """
    if dim < 1:
        raise LieError("dimension must be positive")
    c: dict[tuple[int, int], Coeffs] = {}
    for (i, j), raw in brackets.items():
        if i == j:
            raise LieError(f"bracket ({i},{i}) not allowed: [e_i, e_i] = 0")
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise LieError(f"bracket ({i},{j}) out of range 1..{dim}")
        if i > j:
            raise LieError(f"bracket ({i},{j}) must be given with i < j")
        if (i, j) in c:
            raise LieError(f"duplicate bracket entry ({i},{j})")
        coeffs = _clean_coeffs(raw, dim)
        if coeffs:
            c[(i, j)] = coeffs
    if labels is None:
        labels = tuple(f"e{k}" for k in range(1, dim + 1))
    else:
        labels = tuple(labels)
        if len(labels) != dim:
            raise LieError("labels must match the dimension")
    g = LieAlgebra(dim=dim, params=tuple(params), c=c, labels=labels)
    if check:
        defects = g.jacobi_defects()
        if defects:
            (i, j, k), vec = defects[0]
            parts = " + ".join(
                f"({x})*{labels[t]}" for t, x in enumerate(vec) if not x.is_zero()
            )
            raise LieError(
                f"Jacobi identity fails on triple ({i},{j},{k}); defect {parts}"
                + (f" and {len(defects) - 1} more" if len(defects) > 1 else "")
            )
    return g


def is_unimodular(g: LieAlgebra) -> bool:
    """True iff tr(ad e_i) = 0 as a polynomial for every basis element."""
    return all(g.ad(i).trace().is_zero() for i in range(1, g.dim + 1))


def center(g: LieAlgebra) -> Subspace:
    """Generic center {x : [x, e_i] = 0 for all i} over Q(params)."""
    rows = []
    for i in range(1, g.dim + 1):
        ad = g.ad(i)
        for k in range(g.dim):
            # row of the stacked system: coefficient of e_k in [x, e_i] = -[e_i, x]
            rows.append([-ad.entries[k][j] for j in range(g.dim)])
    basis = kernel_basis(Matrix(rows))
    return Subspace.span(g.dim, basis)


def derived(g: LieAlgebra) -> Subspace:
    """Derived subalgebra [g, g] as the span of all basis bracket values."""
    vectors = [g._coeffs_to_vec(coeffs) for coeffs in g.c.values()]
    if not vectors:
        return Subspace.span(g.dim, [])
    return Subspace.span(g.dim, vectors)


def direct_sum(g1: LieAlgebra, g2: LieAlgebra) -> LieAlgebra:
    """Direct sum with block brackets (second summand shifted)."""
    n1 = g1.dim
    brackets: dict[tuple[int, int], Coeffs] = {}
    for (i, j), coeffs in g1.c.items():
        brackets[(i, j)] = dict(coeffs)
    for (i, j), coeffs in g2.c.items():
        brackets[(i + n1, j + n1)] = {k + n1: v for k, v in coeffs.items()}
    params = tuple(dict.fromkeys(g1.params + g2.params))
    labels = tuple(g1.labels) + tuple(f"e{n1 + k}" for k in range(1, g2.dim + 1))
    return build_algebra(n1 + g2.dim, brackets, params=params, labels=labels)


def semidirect(
    g_act: LieAlgebra,
    ideal_alg: LieAlgebra,
    action: Sequence[Matrix],
) -> LieAlgebra:
    """Semidirect sum g_act acting on ideal_alg by the given matrices.

    ``action[i]`` is the derivation by which e_{i+1} of g_act acts on the
    ideal.  Validity of the action is enforced through the Jacobi check of
    the combined algebra.
    """
    n1, n2 = g_act.dim, ideal_alg.dim
    if len(action) != n1 or any(m.rows != n2 or m.cols != n2 for m in action):
        raise LieError("action needs one n2 x n2 matrix per acting basis element")
    brackets: dict[tuple[int, int], Coeffs] = {}
    for (i, j), coeffs in g_act.c.items():
        brackets[(i, j)] = dict(coeffs)
    for (i, j), coeffs in ideal_alg.c.items():
        brackets[(i + n1, j + n1)] = {k + n1: v for k, v in coeffs.items()}
    for i in range(1, n1 + 1):
        m = action[i - 1]
        for j in range(1, n2 + 1):
            col = {k + n1: m.entries[k - 1][j - 1] for k in range(1, n2 + 1)}
            col = {k: v for k, v in col.items() if not v.is_zero()}
            if col:
                brackets[(i, j + n1)] = col
    params = tuple(dict.fromkeys(g_act.params + ideal_alg.params))
    try:
        return build_algebra(n1 + n2, brackets, params=params)
    except LieError as exc:
        raise LieError(f"invalid action: {exc}") from exc
