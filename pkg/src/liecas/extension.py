"""Dual representations, Lagrangian extensions h + h*, restricted cohomology.

For an LSA (h, .) the dual representation acts by rho(x)xi = -xi o L(x), so
the matrix of rho(e_i) is minus the transpose of L(e_i).  The extension
g = h + h* carries [x, y] = [x, y]_h + alpha(x, y), [x, xi] = rho(x)xi and
abelian h*, together with the canonical pairing form
omega0 = f^{1,n+1} + ... + f^{n,2n}.

Cochain spaces are explicit coordinate spaces: C^1 = n x n matrices
(column i = phi(e_i) in dual coordinates), C^2 = maps (pair, component) ->
coefficient; every dimension claim reduces to a rank computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .ceforms import AltForm, is_closed
from .liealg import Coeffs, LieAlgebra, LieError, Subspace, build_algebra
from .linalg import Matrix, Vector, kernel_basis, rank_bareiss, vec_is_zero, vec_sub, vector
from .lsa import LSA, LSAError
from .scalars import RatFunc, ScalarLike, scalar


class ExtensionError(ValueError):
    """Invalid cocycle or extension input."""


@dataclass(frozen=True)
class Representation:
    """Matrices of a Lie algebra representation, validated at construction."""

    algebra: LieAlgebra
    matrices: tuple[Matrix, ...]

    @staticmethod
    def make(algebra: LieAlgebra, matrices: Sequence[Matrix]) -> "Representation":
        if len(matrices) != algebra.dim:
            raise ExtensionError("one matrix per basis element required")
        m = matrices[0].rows
        if any(mat.rows != m or mat.cols != m for mat in matrices):
            raise ExtensionError("representation matrices must be square of equal size")
        for i in range(1, algebra.dim + 1):
            for j in range(i + 1, algebra.dim + 1):
                lhs = matrices[i - 1] * matrices[j - 1] - matrices[j - 1] * matrices[i - 1]
                rhs = Matrix.zero(m, m)
                for k, v in algebra.bracket_basis(i, j).items():
                    rhs = rhs + matrices[k - 1].scale(v)
                if lhs != rhs:
                    raise ExtensionError(f"rho([e{i}, e{j}]) != [rho(e{i}), rho(e{j})]")
        return Representation(algebra=algebra, matrices=tuple(matrices))

    @property
    def module_dim(self) -> int:
        return self.matrices[0].rows


def dual_rep(a: LSA) -> Representation:
    """rho(x)xi = -xi o L(x): matrices are minus the transposes of L(e_i)."""
    mats = [a.left_matrix(i).transpose().scale(-1) for i in range(1, a.dim + 1)]
    return Representation.make(a.commutator, mats)


@dataclass(frozen=True)
class Cocycle2:
    """2-cochain alpha on h with values in h* coordinates: alpha(e_i, e_j) = sum_k a_ij^k e^k."""

    dim: int
    entries: Mapping[tuple[int, int], Coeffs]  # (i, j) with i < j -> {k: coeff}

    @staticmethod
    def make(dim: int, entries: Mapping[tuple[int, int], Mapping[int, ScalarLike]]) -> "Cocycle2":
        clean = {}
        for (i, j), raw in entries.items():
            if not (1 <= i < j <= dim):
                raise ExtensionError(f"cochain key ({i},{j}) must satisfy 1 <= i < j <= {dim}")
            coeffs = {}
            for k, v in raw.items():
                if not 1 <= k <= dim:
                    raise ExtensionError(f"component {k} out of range 1..{dim}")
                c = RatFunc.of(v)
                if not c.is_zero():
                    coeffs[k] = c
            if coeffs:
                clean[(i, j)] = coeffs
        return Cocycle2(dim=dim, entries=clean)

    @staticmethod
    def zero(dim: int) -> "Cocycle2":
        return Cocycle2(dim=dim, entries={})

    def value(self, i: int, j: int) -> Vector:
        """alpha(e_i, e_j) as a dual-coordinate vector (antisymmetric extension)."""
        if i == j:
            return tuple(scalar(0) for _ in range(self.dim))
        key = (i, j) if i < j else (j, i)
        sign = 1 if i < j else -1
        coeffs = self.entries.get(key, {})
        return tuple(sign * coeffs.get(k, scalar(0)) for k in range(1, self.dim + 1))

    def cyclic_defects(self) -> list[tuple[tuple[int, int, int], RatFunc]]:
        """Nonzero values of alpha(x,y)(z) + alpha(y,z)(x) + alpha(z,x)(y) on basis triples."""
        out = []
        for i, j, k in combinations(range(1, self.dim + 1), 3):
            total = (
                self.value(i, j)[k - 1]
                + self.value(j, k)[i - 1]
                + self.value(k, i)[j - 1]
            )
            if not total.is_zero():
                out.append(((i, j, k), total))
        return out

    def is_lagrangian(self) -> bool:
        return not self.cyclic_defects()


@dataclass(frozen=True)
class ExtensionResult:
    """Total algebra h + h* with the canonical pairing form and index bookkeeping."""

    total: LieAlgebra
    omega0: AltForm
    h_range: tuple[int, ...]
    hstar_range: tuple[int, ...]
    omega0_closed: bool


def canonical_pairing_form(n: int) -> AltForm:
    return AltForm.make(2, 2 * n, {(i, n + i): 1 for i in range(1, n + 1)})


def lagrangian_extension(a: LSA, alpha: Cocycle2 | None = None) -> ExtensionResult:
    """Extension of h by h* twisted by the dual representation and alpha.

    alpha must lie in Z^2_rho (otherwise Jacobi of the total algebra fails
    and the witness triple is reported).  omega0 is attached and is closed
    exactly when alpha satisfies the cyclic (Lagrangian) condition.
    """
    n = a.dim
    if alpha is None:
        alpha = Cocycle2.zero(n)
    if alpha.dim != n:
        raise ExtensionError("cocycle dimension mismatch")
    rho = dual_rep(a)
    h = a.commutator
    brackets: dict[tuple[int, int], Coeffs] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            coeffs: Coeffs = dict(h.bracket_basis(i, j))
            for k, v in zip(range(n + 1, 2 * n + 1), alpha.value(i, j)):
                if not v.is_zero():
                    coeffs[k] = v
            if coeffs:
                brackets[(i, j)] = coeffs
    for i in range(1, n + 1):
        m = rho.matrices[i - 1]
        for j in range(1, n + 1):
            col = m.col(j - 1)
            coeffs = {n + k + 1: col[k] for k in range(n) if not col[k].is_zero()}
            if coeffs:
                brackets[(i, n + j)] = coeffs
    try:
        total = build_algebra(2 * n, brackets, params=a.params)
    except LieError as exc:
        raise ExtensionError(f"alpha is not a rho-cocycle: {exc}") from exc
    omega0 = canonical_pairing_form(n)
    return ExtensionResult(
        total=total,
        omega0=omega0,
        h_range=tuple(range(1, n + 1)),
        hstar_range=tuple(range(n + 1, 2 * n + 1)),
        omega0_closed=is_closed(total, omega0),
    )


def coboundary_1(a: LSA, phi: Matrix) -> Cocycle2:
    """(d_rho phi)(x, y) = rho(x)phi(y) - rho(y)phi(x) - phi([x, y]).

    phi is given by its matrix: column i = phi(e_i) in dual coordinates.
    """
    n = a.dim
    if phi.rows != n or phi.cols != n:
        raise ExtensionError("phi must be an n x n matrix")
    rho = dual_rep(a)
    h = a.commutator
    entries = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v = vec_sub(
                rho.matrices[i - 1].apply(phi.col(j - 1)),
                rho.matrices[j - 1].apply(phi.col(i - 1)),
            )
            v = vec_sub(v, phi.apply(h._coeffs_to_vec(h.bracket_basis(i, j))))
            coeffs = {k + 1: v[k] for k in range(n) if not v[k].is_zero()}
            if coeffs:
                entries[(i, j)] = coeffs
    return Cocycle2(dim=n, entries=entries)


# -- coordinate spaces for the cohomology report -----------------------------


def _c2_index(pairs: list[tuple[int, int]], n: int):
    index = {}
    pos = 0
    for p in pairs:
        for k in range(1, n + 1):
            index[(p, k)] = pos
            pos += 1
    return index


def _d2_matrix_rho(a: LSA) -> tuple[Matrix, list[tuple[int, int]]]:
    """CE differential C^2(h, h*) -> C^3(h, h*) in coordinates."""
    n = a.dim
    rho = dual_rep(a)
    h = a.commutator
    pairs = list(combinations(range(1, n + 1), 2))
    triples = list(combinations(range(1, n + 1), 3))
    idx = _c2_index(pairs, n)
    rows = []
    for (x, y, z) in triples:
        for comp in range(1, n + 1):
            row = [scalar(0)] * (len(pairs) * n)

            def add_rho(xi: int, pair: tuple[int, int], sign: int):
                p, flip = (pair, 1) if pair[0] < pair[1] else ((pair[1], pair[0]), -1)
                if p[0] == p[1]:
                    return
                m = rho.matrices[xi - 1]
                for k in range(1, n + 1):
                    c = m.entries[comp - 1][k - 1]
                    if not c.is_zero():
                        row[idx[(p, k)]] = row[idx[(p, k)]] + c * (sign * flip)

            def add_alpha(vec_coeffs: Coeffs, other: int, sign: int):
                for b, c in vec_coeffs.items():
                    pair, flip = ((b, other), 1) if b < other else ((other, b), -1)
                    if b == other:
                        continue
                    row[idx[(pair, comp)]] = row[idx[(pair, comp)]] + c * (sign * flip)

            # rho(x)a(y,z) - rho(y)a(x,z) + rho(z)a(x,y)
            add_rho(x, (y, z), 1)
            add_rho(y, (x, z), -1)
            add_rho(z, (x, y), 1)
            # - a([x,y],z) + a([x,z],y) - a([y,z],x)
            add_alpha(h.bracket_basis(x, y), z, -1)
            add_alpha(h.bracket_basis(x, z), y, 1)
            add_alpha(h.bracket_basis(y, z), x, -1)
            rows.append(row)
    return Matrix(rows), pairs


def _d1_matrix_rho(a: LSA) -> Matrix:
    """CE differential C^1(h, h*) -> C^2(h, h*); C^1 columns are flattened (col, row)."""
    n = a.dim
    rho = dual_rep(a)
    h = a.commutator
    pairs = list(combinations(range(1, n + 1), 2))
    rows = []
    for (i, j) in pairs:
        for comp in range(1, n + 1):
            row = [scalar(0)] * (n * n)
            # rho(e_i)phi(e_j): phi(e_j) = column j -> unknowns (j, k)
            mi = rho.matrices[i - 1]
            mj = rho.matrices[j - 1]
            for k in range(1, n + 1):
                c = mi.entries[comp - 1][k - 1]
                if not c.is_zero():
                    row[(j - 1) * n + (k - 1)] = row[(j - 1) * n + (k - 1)] + c
                c = mj.entries[comp - 1][k - 1]
                if not c.is_zero():
                    row[(i - 1) * n + (k - 1)] = row[(i - 1) * n + (k - 1)] - c
            for b, c in h.bracket_basis(i, j).items():
                row[(b - 1) * n + (comp - 1)] = row[(b - 1) * n + (comp - 1)] - c
            rows.append(row)
    return Matrix(rows)


def _sym_rows(a: LSA) -> Matrix:
    """Linear conditions cutting C^2_L (the cyclic condition) out of C^2."""
    n = a.dim
    pairs = list(combinations(range(1, n + 1), 2))
    idx = _c2_index(pairs, n)
    rows = []
    for (i, j, k) in combinations(range(1, n + 1), 3):
        row = [scalar(0)] * (len(pairs) * n)
        row[idx[((i, j), k)]] = row[idx[((i, j), k)]] + 1
        row[idx[((j, k), i)]] = row[idx[((j, k), i)]] + 1
        row[idx[((i, k), j)]] = row[idx[((i, k), j)]] - 1
        rows.append(row)
    return Matrix(rows)


def _c1l_basis(n: int) -> list[list[RatFunc]]:
    """Basis of symmetric-valued 1-cochains as flattened C^1 vectors."""
    out = []
    for i in range(n):
        for j in range(i, n):
            v = [scalar(0)] * (n * n)
            v[i * n + j] = scalar(1)
            if i != j:
                v[j * n + i] = scalar(1)
            out.append(v)
    return out


@dataclass(frozen=True)
class CohomologyReport:
    """All seven dimensions of the ordinary and restricted extension cohomology."""

    z2_rho: int
    b2_rho: int
    h2_rho: int
    z2_l_rho: int  # C^2_L intersect Z^2_rho
    b2_l_rho: int
    h2_l_rho: int
    kappa_l: int
    delicate_pivots: tuple[str, ...]


def lagrangian_cocycle_space(a: LSA) -> tuple[list[Vector], list[tuple[int, int]]]:
    """Basis of Z^2_{L,rho} = C^2_L intersect Z^2_rho, in C^2 coordinates."""
    D2, pairs = _d2_matrix_rho(a)
    S = _sym_rows(a)
    stacked = Matrix(list(D2.entries) + list(S.entries))
    return kernel_basis(stacked), pairs


def cocycle_from_vector(a: LSA, vec: Sequence[ScalarLike], pairs) -> Cocycle2:
    n = a.dim
    entries: dict[tuple[int, int], dict[int, ScalarLike]] = {}
    pos = 0
    for p in pairs:
        for k in range(1, n + 1):
            v = RatFunc.of(vec[pos])
            pos += 1
            if not v.is_zero():
                entries.setdefault(p, {})[k] = v
    return Cocycle2.make(n, entries)


def extension_cohomology(a: LSA) -> CohomologyReport:
    """Dimension report for Z^2_rho, B^2_rho, H^2_rho, Z^2_{L,rho}, B^2_{L,rho},
    H^2_{L,rho} and the kernel kappa_L of the natural map to H^2_rho."""
    n = a.dim
    D2, _ = _d2_matrix_rho(a)
    D1 = _d1_matrix_rho(a)
    c2_dim = n * n * (n - 1) // 2
    rank_d2, piv2 = rank_bareiss(D2, with_pivots=True)
    z2 = c2_dim - rank_d2
    b2, piv1 = rank_bareiss(D1, with_pivots=True)
    S = _sym_rows(a)
    stacked = Matrix(list(D2.entries) + list(S.entries))
    z2l = c2_dim - rank_bareiss(stacked)
    # B^2_{L,rho} = d1(C^1_L): restrict d1 to the symmetric basis
    sym = _c1l_basis(n)
    d1_sym_cols = [D1.apply(v) for v in sym]
    D1_sym = Matrix([[col[r] for col in d1_sym_cols] for r in range(D1.rows)])
    b2l = rank_bareiss(D1_sym)
    # kappa_L: dim(B^2_rho intersect Z^2_{L,rho}) - b2l, via dim(A+B) = rank of stacked spans
    z2l_vectors = kernel_basis(stacked)
    b2_cols = [D1.col(j) for j in range(D1.cols)]
    joint = Matrix([list(v) for v in b2_cols] + [list(v) for v in z2l_vectors])
    dim_sum = rank_bareiss(joint)
    inter = b2 + z2l - dim_sum
    pivots = tuple(
        sorted({str(p) for p in piv1 + piv2 if not p.is_const()})
    )
    return CohomologyReport(
        z2_rho=z2,
        b2_rho=b2,
        h2_rho=z2 - b2,
        z2_l_rho=z2l,
        b2_l_rho=b2l,
        h2_l_rho=z2l - b2l,
        kappa_l=inter - b2l,
        delicate_pivots=pivots,
    )
