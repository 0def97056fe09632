"""Two-cocycle families, H^2, the Lie algebra index, and ideal classification.

The space Z^2 of closed 2-forms is the kernel of the CE differential on
Lambda^2 g*; its basis elements are combined into a general element whose
coefficients are fresh family symbols a_ij, named after the lexicographically
smallest index pair in each kernel vector's support (the echelon pivot).
The index is dim g minus the fraction-free rank of the bracket matrix
M_g[i][j] = [e_i, e_j] expanded in fresh symbols x_1..x_n; index 0 means
Frobenius.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .ceforms import AltForm, basis_form, ce_d, form_gram
from .liealg import LieAlgebra, LieError, Subspace
from .linalg import Matrix, kernel_basis, pfaffian, rank_bareiss, solve_linear
from .scalars import MPoly, RatFunc, ScalarError, ScalarLike, scalar


@dataclass(frozen=True)
class CocycleFamily:
    """Basis of Z^2(g) plus the general symbolic member."""

    algebra: LieAlgebra
    basis: tuple[AltForm, ...]
    symbols: tuple[str, ...]
    general: AltForm

    @property
    def dim(self) -> int:
        return len(self.basis)

    def member(self, coefficients: Sequence[ScalarLike]) -> AltForm:
        if len(coefficients) != len(self.basis):
            raise LieError("coefficient count must match the family dimension")
        out = AltForm.make(2, self.algebra.dim, {})
        for c, b in zip(coefficients, self.basis):
            out = out + b.scale(c)
        return out

    def coordinates_of(self, omega: AltForm):
        """Solve omega = sum c_m basis_m; None when omega is outside the span."""
        pairs = list(combinations(range(1, self.algebra.dim + 1), 2))
        M = Matrix([[b.coeff(p) for b in self.basis] for p in pairs])
        rhs = [omega.coeff(p) for p in pairs]
        sol = solve_linear(M, rhs)
        if sol is None:
            return None
        return sol[0]


def _d2_matrix(g: LieAlgebra) -> tuple[Matrix, list[tuple[int, int]]]:
    n = g.dim
    pairs = list(combinations(range(1, n + 1), 2))
    triples = list(combinations(range(1, n + 1), 3))
    if not triples:
        return Matrix([[0] * len(pairs)]), pairs
    cols = []
    for p in pairs:
        d = ce_d(g, basis_form(2, n, p))
        cols.append([d.coeff(t) for t in triples])
    M = Matrix([[cols[c][r] for c in range(len(pairs))] for r in range(len(triples))])
    return M, pairs


def _d1_matrix(g: LieAlgebra) -> Matrix:
    n = g.dim
    pairs = list(combinations(range(1, n + 1), 2))
    cols = []
    for i in range(1, n + 1):
        d = ce_d(g, basis_form(1, n, (i,)))
        cols.append([d.coeff(p) for p in pairs])
    return Matrix([[cols[c][r] for c in range(n)] for r in range(len(pairs))])


def two_cocycle_family(g: LieAlgebra) -> CocycleFamily:
    """Echelon-normalized basis of Z^2(g) with auto-named family symbols."""
    M, pairs = _d2_matrix(g)
    vectors = kernel_basis(M)
    basis = []
    symbols = []
    for v in vectors:
        form = AltForm.make(2, g.dim, {pairs[t]: v[t] for t in range(len(pairs))})
        support = sorted(form.coeffs)
        i, j = support[0]
        name = f"a{i}{j}"
        basis.append(form)
        symbols.append(name)
    if len(set(symbols)) != len(symbols):  # pragma: no cover - echelon pivots are distinct
        raise LieError("family symbol collision")
    clash = set(symbols) & set(g.params)
    if clash:
        raise LieError(f"family symbols collide with algebra parameters: {sorted(clash)}")
    general = AltForm.make(2, g.dim, {})
    for name, b in zip(symbols, basis):
        general = general + b.scale(MPoly.variable(name))
    return CocycleFamily(algebra=g, basis=tuple(basis), symbols=tuple(symbols), general=general)


def h2_dim(g: LieAlgebra) -> int:
    """dim Z^2 - dim B^2 over Q(params)."""
    n = g.dim
    n_pairs = n * (n - 1) // 2
    M2, _ = _d2_matrix(g)
    z2 = n_pairs - rank_bareiss(M2)
    b2 = rank_bareiss(_d1_matrix(g))
    return z2 - b2


def generic_nondegeneracy(fam: CocycleFamily) -> RatFunc:
    """Pfaffian of the general member's Gram matrix, in family symbols and params.

    The family contains a symplectic form iff this value is nonzero.
    """
    if fam.algebra.dim % 2 != 0:
        raise LieError("generic nondegeneracy wants an even-dimensional algebra")
    return pfaffian(form_gram(fam.general))


def index_matrix(g: LieAlgebra) -> Matrix:
    """The bracket matrix M_g[i][j] = [e_i, e_j] in fresh symbols x_1..x_n."""
    n = g.dim
    xs = [MPoly.variable(f"x{k}") for k in range(1, n + 1)]
    if any(f"x{k}" in g.params for k in range(1, n + 1)):
        raise LieError("algebra parameters collide with index symbols x1..xn")
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            coeffs = g.bracket_basis(i, j)
            entry = scalar(0)
            for k, v in coeffs.items():
                entry = entry + v * xs[k - 1]
            row.append(entry)
        rows.append(row)
    return Matrix(rows)


def lie_index(g: LieAlgebra) -> int:
    """dim g - rank of M_g over the fraction field; 0 iff Frobenius."""
    return g.dim - rank_bareiss(index_matrix(g))


def kirillov_corank(g: LieAlgebra, f: Sequence[ScalarLike]) -> int:
    """Corank of the evaluated Kirillov form B_f(x, y) = f([x, y])."""
    if len(f) != g.dim:
        raise LieError("functional must have dim-g entries")
    fv = [RatFunc.of(x) for x in f]
    n = g.dim
    rows = [[scalar(0) for _ in range(n)] for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            val = scalar(0)
            for k, v in g.bracket_basis(i, j).items():
                val = val + v * fv[k - 1]
            rows[i - 1][j - 1] = val
            rows[j - 1][i - 1] = -val
    return n - rank_bareiss(Matrix(rows))


@dataclass(frozen=True)
class IdealClassification:
    is_ideal: bool
    isotropic: bool
    lagrangian: bool
    symplectic: bool
    normal: bool
    orthogonal: Subspace


def _is_ideal(g: LieAlgebra, space: Subspace) -> bool:
    for b in space.basis:
        for i in range(1, g.dim + 1):
            unit = tuple(scalar(1 if t == i - 1 else 0) for t in range(g.dim))
            if not space.contains(g.bracket(unit, b)):
                return False
    return True


def classify_ideal(g: LieAlgebra, omega: AltForm, J: Subspace) -> IdealClassification:
    """Classify J relative to (g, omega): ideal / isotropic / Lagrangian / symplectic / normal.

    ``normal`` means the omega-orthogonal J^perp is itself an ideal.  The
    symplectic flag records whether omega restricts nondegenerately to J.
    """
    if omega.dim != g.dim or J.ambient != g.dim:
        raise LieError("dimension mismatch")
    G = form_gram(omega)
    rows = [list(G.apply(b)) for b in J.basis]
    if rows:
        orth_vectors = kernel_basis(Matrix(rows))
    else:
        orth_vectors = [
            tuple(scalar(1 if t == s else 0) for t in range(g.dim)) for s in range(g.dim)
        ]
    orth = Subspace.span(g.dim, orth_vectors)
    isotropic = orth.contains_space(J)
    lagrangian = isotropic and g.dim % 2 == 0 and J.dim == g.dim // 2
    if J.dim:
        B = Matrix([[omega.eval([a, b]) for b in J.basis] for a in J.basis])
        symplectic = rank_bareiss(B) == J.dim
    else:
        symplectic = False
    return IdealClassification(
        is_ideal=_is_ideal(g, J),
        isotropic=isotropic,
        lagrangian=lagrangian,
        symplectic=symplectic,
        normal=_is_ideal(g, orth),
        orthogonal=orth,
    )


def deterministic_functionals(g: LieAlgebra, count: int = 20) -> list[list[Fraction]]:
    """Deterministic pseudo-random rational covectors for the corank oracle."""
    out = []
    state = 1
    for _ in range(count):
        f = []
        for _ in range(g.dim):
            state = (1103515245 * state + 12345) % (1 << 31)
            num = (state % 19) - 9
            state = (1103515245 * state + 12345) % (1 << 31)
            den = (state % 4) + 1
            f.append(Fraction(num, den))
        out.append(f)
    return out
