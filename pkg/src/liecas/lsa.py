"""Left-symmetric (pre-Lie) algebras and the constructions that produce them.

An LSA stores the full product tensor e_i . e_j = sum_k p_ij^k e_k (1-based).
Validation checks the associator symmetry (x,y,z) = (y,x,z), cross-checks the
equivalent condition [L(x), L(y)] = L([x,y]), and verifies that the induced
commutator bracket satisfies Jacobi.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Mapping, Sequence

from .ceforms import AltForm, form_gram, is_closed
from .liealg import Coeffs, LieAlgebra, LieError, Subspace, build_algebra, _clean_coeffs
from .linalg import Matrix, Vector, invert, rank_bareiss, solve_linear, vec_is_zero, vec_sub, vector
from .scalars import RatFunc, ScalarLike, scalar
from .symplectic import classify_ideal

if TYPE_CHECKING:  # pragma: no cover
    from .extension import Representation


class LSAError(ValueError):
    """Left-symmetry violation or invalid construction input."""


@dataclass(frozen=True)
class LSA:
    """Left-symmetric algebra by its product tensor."""

    dim: int
    params: tuple[str, ...]
    prod: Mapping[tuple[int, int], Coeffs]
    commutator: LieAlgebra

    def product_basis(self, i: int, j: int) -> Coeffs:
        return dict(self.prod.get((i, j), {}))

    def product(self, u: Sequence[ScalarLike], v: Sequence[ScalarLike]) -> Vector:
        uu = vector(u)
        vv = vector(v)
        out = [scalar(0)] * self.dim
        for (i, j), coeffs in self.prod.items():
            f = uu[i - 1] * vv[j - 1]
            if f.is_zero():
                continue
            for k, val in coeffs.items():
                out[k - 1] = out[k - 1] + f * val
        return tuple(out)

    def left_matrix(self, i: int) -> Matrix:
        """L(e_i): column j holds e_i . e_j."""
        n = self.dim
        cols = [self.product_basis(i, j) for j in range(1, n + 1)]
        return Matrix([[cols[j].get(k + 1, scalar(0)) for j in range(n)] for k in range(n)])

    def right_matrix(self, i: int) -> Matrix:
        """R(e_i): column j holds e_j . e_i."""
        n = self.dim
        cols = [self.product_basis(j, i) for j in range(1, n + 1)]
        return Matrix([[cols[j].get(k + 1, scalar(0)) for j in range(n)] for k in range(n)])

    def left_of(self, x: Sequence[ScalarLike]) -> Matrix:
        xs = vector(x)
        out = Matrix.zero(self.dim, self.dim)
        for i in range(1, self.dim + 1):
            if not xs[i - 1].is_zero():
                out = out + self.left_matrix(i).scale(xs[i - 1])
        return out

    def right_of(self, x: Sequence[ScalarLike]) -> Matrix:
        xs = vector(x)
        out = Matrix.zero(self.dim, self.dim)
        for i in range(1, self.dim + 1):
            if not xs[i - 1].is_zero():
                out = out + self.right_matrix(i).scale(xs[i - 1])
        return out

    def associator_defects(self) -> list[tuple[tuple[int, int, int], Vector]]:
        """(e_i,e_j,e_k) - (e_j,e_i,e_k) for i < j; empty iff left-symmetric."""
        n = self.dim
        unit = [tuple(scalar(1 if t == s else 0) for t in range(n)) for s in range(n)]
        defects = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(1, n + 1):
                    lhs = self._associator(unit[i - 1], unit[j - 1], unit[k - 1])
                    rhs = self._associator(unit[j - 1], unit[i - 1], unit[k - 1])
                    diff = vec_sub(lhs, rhs)
                    if not vec_is_zero(diff):
                        defects.append(((i, j, k), diff))
        return defects

    def _associator(self, x: Vector, y: Vector, z: Vector) -> Vector:
        return vec_sub(self.product(self.product(x, y), z), self.product(x, self.product(y, z)))

    def is_associative(self) -> bool:
        n = self.dim
        unit = [tuple(scalar(1 if t == s else 0) for t in range(n)) for s in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if not vec_is_zero(self._associator(unit[i], unit[j], unit[k])):
                        return False
        return True

    def specialize(self, assignment) -> "LSA":
        products = {}
        for key, coeffs in self.prod.items():
            sub = {k: v.subs(assignment) for k, v in coeffs.items()}
            sub = {k: v for k, v in sub.items() if not v.is_zero()}
            if sub:
                products[key] = sub
        remaining = tuple(p for p in self.params if p not in assignment)
        return build_lsa(self.dim, products, params=remaining)

    def __repr__(self) -> str:
        return f"LSA(dim={self.dim}, params={list(self.params)})"


def build_lsa(
    dim: int,
    products: Mapping[tuple[int, int], Mapping[int, ScalarLike]],
    params: Sequence[str] = (),
    check: bool = True,
) -> LSA:
    """Validate and construct an LSA from its product tensor.

    Checks associator symmetry, the equivalent L-homomorphism condition
    [L(x), L(y)] = L([x, y]), and Jacobi for the commutator bracket.
    """
    prod: dict[tuple[int, int], Coeffs] = {}
    for (i, j), raw in products.items():
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise LSAError(f"product ({i},{j}) out of range 1..{dim}")
        coeffs = _clean_coeffs(raw, dim)
        if coeffs:
            prod[(i, j)] = coeffs
    brackets: dict[tuple[int, int], Coeffs] = {}
    for i in range(1, dim + 1):
        for j in range(i + 1, dim + 1):
            fwd = prod.get((i, j), {})
            bwd = prod.get((j, i), {})
            diff = {k: fwd.get(k, scalar(0)) - bwd.get(k, scalar(0)) for k in set(fwd) | set(bwd)}
            diff = {k: v for k, v in diff.items() if not v.is_zero()}
            if diff:
                brackets[(i, j)] = diff
    try:
        commutator = build_algebra(dim, brackets, params=params, check=check)
    except LieError as exc:
        raise LSAError(f"commutator bracket is not a Lie bracket: {exc}") from exc
    a = LSA(dim=dim, params=tuple(params), prod=prod, commutator=commutator)
    if check:
        defects = a.associator_defects()
        if defects:
            (i, j, k), vec = defects[0]
            parts = " + ".join(f"({x})*e{t + 1}" for t, x in enumerate(vec) if not x.is_zero())
            raise LSAError(
                f"associator symmetry fails on triple ({i},{j},{k}); defect {parts}"
            )
        for i in range(1, dim + 1):
            for j in range(i + 1, dim + 1):
                li, lj = a.left_matrix(i), a.left_matrix(j)
                lhs = li * lj - lj * li
                rhs = Matrix.zero(dim, dim)
                for k, v in commutator.bracket_basis(i, j).items():
                    rhs = rhs + a.left_matrix(k).scale(v)
                if lhs != rhs:
                    raise LSAError(f"[L(e{i}), L(e{j})] != L([e{i}, e{j}])")
    return a


@dataclass(frozen=True)
class RightIdentity:
    """Solution record for R(e) = Id: a particular vector plus the solution family."""

    vector: Vector
    homogeneous: tuple[Vector, ...]

    @property
    def unique(self) -> bool:
        return not self.homogeneous


def right_identity(a: LSA) -> RightIdentity | None:
    """Solve R(e) = Id; None when no right identity exists."""
    n = a.dim
    rows = []
    rhs = []
    for i in range(1, n + 1):
        cols = [a.product_basis(i, j) for j in range(1, n + 1)]
        for k in range(1, n + 1):
            rows.append([cols[j - 1].get(k, scalar(0)) for j in range(1, n + 1)])
            rhs.append(scalar(1) if k == i else scalar(0))
    sol = solve_linear(Matrix(rows), rhs)
    if sol is None:
        return None
    particular, kernel = sol
    return RightIdentity(vector=particular, homogeneous=tuple(kernel))


def lsa_from_symplectic(g: LieAlgebra, omega: AltForm) -> LSA:
    """The product defined by omega(x.y, z) = -omega(y, [x, z]).

    Requires omega closed and nondegenerate; the commutator of the result
    equals the bracket of g (asserted).
    """
    if not is_closed(g, omega):
        raise LSAError("form is not closed")
    G = form_gram(omega)
    if rank_bareiss(G) != g.dim:
        raise LSAError("form is degenerate")
    n = g.dim
    Ginv_t = invert(G.transpose())
    unit = [tuple(scalar(1 if t == s else 0) for t in range(n)) for s in range(n)]
    products = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rhs = []
            for k in range(1, n + 1):
                rhs.append(-omega.eval([unit[j - 1], g.bracket(unit[i - 1], unit[k - 1])]))
            p = Ginv_t.apply(rhs)
            coeffs = {k + 1: p[k] for k in range(n) if not p[k].is_zero()}
            if coeffs:
                products[(i, j)] = coeffs
    a = build_lsa(n, products, params=g.params)
    if a.commutator.c != g.c:
        for key in set(a.commutator.c) | set(g.c):
            lhs = a.commutator.c.get(key, {})
            rhs2 = g.c.get(key, {})
            keys = set(lhs) | set(rhs2)
            if any(not (lhs.get(k, scalar(0)) - rhs2.get(k, scalar(0))).is_zero() for k in keys):
                raise LSAError("commutator of the induced product differs from the bracket")
    return a


def _complement_indices(J: Subspace) -> list[int]:
    """Deterministic complement: lowest-index standard vectors completing J."""
    pivots = set()
    for row in J.basis:
        pivots.add(next(i for i, x in enumerate(row) if not x.is_zero()))
    return [i for i in range(J.ambient) if i not in pivots]


def lagrangian_reduction(g: LieAlgebra, omega: AltForm, J: Subspace) -> LSA:
    """Left-symmetric product on g/J from omega_h(x.y, a) = -omega(y, [x, a]).

    J must be a Lagrangian ideal.  The quotient basis is the deterministic
    complement of J by standard basis vectors (lowest indices first).
    """
    if not is_closed(g, omega):
        raise LSAError("form is not closed")
    if rank_bareiss(form_gram(omega)) != g.dim:
        raise LSAError("form is degenerate")
    cls = classify_ideal(g, omega, J)
    if not (cls.is_ideal and cls.lagrangian):
        raise LSAError("subspace is not a Lagrangian ideal")
    comp = _complement_indices(J)
    m = len(comp)
    if m != g.dim // 2:
        raise LSAError("complement size mismatch")
    unit = [tuple(scalar(1 if t == s else 0) for t in range(g.dim)) for s in range(g.dim)]
    comp_vecs = [unit[i] for i in comp]
    # pairing matrix: row l, column k holds omega(c_k, b_l); invertible since J is Lagrangian
    P = Matrix([[omega.eval([c, b]) for c in comp_vecs] for b in J.basis])
    if rank_bareiss(P) != m:
        raise LSAError("pairing between the complement and J is degenerate")
    products = {}
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            rhs = []
            for b in J.basis:
                rhs.append(-omega.eval([comp_vecs[j - 1], g.bracket(comp_vecs[i - 1], b)]))
            sol = solve_linear(P, rhs)
            if sol is None:  # pragma: no cover - P is invertible
                raise LSAError("reduction system inconsistent")
            pvec = sol[0]
            coeffs = {k + 1: pvec[k] for k in range(m) if not pvec[k].is_zero()}
            if coeffs:
                products[(i, j)] = coeffs
    return build_lsa(m, products, params=g.params)


def lsa_from_cocycle(rho: "Representation", phi) -> LSA:
    """Product x*y = phi^{-1}(rho(x) phi(y)) from a bijective 1-cocycle.

    phi (a LinMap or plain Matrix) must satisfy the 1-cocycle law
    phi([x,y]) = rho(x)phi(y) - rho(y)phi(x) and be invertible; when an
    element e with phi(x) = rho(x)phi(e) exists it is exposed through
    right_identity of the result.
    """
    from .linalg import det_bareiss
    from .morphism import LinMap

    if isinstance(phi, Matrix):
        phi = LinMap(phi)
    g = rho.algebra
    n = g.dim
    if phi.matrix.rows != n or phi.matrix.cols != n:
        raise LSAError("cocycle map must be square of the algebra dimension")
    A = phi.matrix
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            lhs = A.apply(g._coeffs_to_vec(g.bracket_basis(i, j)))
            rhs = vec_sub(
                rho.matrices[i - 1].apply(A.col(j - 1)),
                rho.matrices[j - 1].apply(A.col(i - 1)),
            )
            if not vec_is_zero(vec_sub(lhs, rhs)):
                raise LSAError(f"1-cocycle law fails on pair ({i},{j})")
    if det_bareiss(A).is_zero():
        raise LSAError("phi is singular (det(phi) = 0)")
    Ainv = invert(A)
    products = {}
    for i in range(1, n + 1):
        Li = Ainv * rho.matrices[i - 1] * A
        for j in range(1, n + 1):
            col = Li.col(j - 1)
            coeffs = {k + 1: col[k] for k in range(n) if not col[k].is_zero()}
            if coeffs:
                products[(i, j)] = coeffs
    return build_lsa(n, products, params=g.params)


@dataclass(frozen=True)
class TraceReport:
    simple_traces: tuple[tuple[int, RatFunc], ...]
    identity_trace: RatFunc | None
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def trace_checks(a: LSA, simple_part: Sequence[int]) -> TraceReport:
    """tr R(s) = 0 on the simple part; tr R(e) = dim for the right identity.

    The indicated indices must span a subalgebra with [s, s] = s (checked).
    """
    g = a.commutator
    span = Subspace.span(
        g.dim,
        [tuple(scalar(1 if t == s - 1 else 0) for t in range(g.dim)) for s in simple_part],
    )
    der_vectors = []
    for i in simple_part:
        for j in simple_part:
            if i < j:
                der_vectors.append(g._coeffs_to_vec(g.bracket_basis(i, j)))
    der = Subspace.span(g.dim, der_vectors)
    failures = []
    if der.basis != span.basis:
        failures.append("indices do not span a subalgebra with [s, s] = s")
    traces = []
    for i in simple_part:
        t = a.right_matrix(i).trace()
        traces.append((i, t))
        if not t.is_zero():
            failures.append(f"tr R(e{i}) = {t} != 0")
    ident = right_identity(a)
    identity_trace = None
    if ident is not None:
        identity_trace = a.right_of(ident.vector).trace()
        if identity_trace != a.dim:
            failures.append(f"tr R(e) = {identity_trace} != {a.dim}")
    return TraceReport(
        simple_traces=tuple(traces),
        identity_trace=identity_trace,
        failures=tuple(failures),
    )
