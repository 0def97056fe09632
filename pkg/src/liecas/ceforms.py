"""Alternating forms on the dual, wedge products, and the CE differential.

An AltForm of degree k on an n-dimensional algebra is a sparse map from
strictly increasing 1-based index tuples to scalars.  The differential used
in every degree is

    (d a)(x_0, ..., x_k) = sum_{i<j} (-1)^{i+j} a([x_i, x_j], ..., ^x_i, ..., ^x_j, ...),

which gives d xi (x, y) = -xi([x, y]) in degree one and, in degree two, the
negative of the cyclic sum omega([x,y],z) + omega([y,z],x) + omega([z,x],y);
closedness is the same condition either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .liealg import LieAlgebra
from .linalg import Matrix, rank_bareiss, solve_linear
from .scalars import RatFunc, ScalarError, ScalarLike, scalar

IndexTuple = tuple[int, ...]


class FormError(ValueError):
    """Malformed alternating-form input."""


def _sort_with_sign(indices: Sequence[int]) -> tuple[IndexTuple, int]:
    """Sort an index tuple, returning (sorted, permutation sign); 0 on repeats."""
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return tuple(idx), 0
    return tuple(idx), sign


@dataclass(frozen=True)
class AltForm:
    """Alternating k-form: sparse map from increasing index tuples to scalars."""

    degree: int
    dim: int
    coeffs: Mapping[IndexTuple, RatFunc]

    @staticmethod
    def make(degree: int, dim: int, coeffs: Mapping[Sequence[int], ScalarLike]) -> "AltForm":
        clean: dict[IndexTuple, RatFunc] = {}
        for key, val in coeffs.items():
            key = tuple(key)
            if len(key) != degree:
                raise FormError(f"key {key} does not have degree {degree}")
            if any(not 1 <= i <= dim for i in key):
                raise FormError(f"key {key} out of range 1..{dim}")
            if any(a >= b for a, b in zip(key, key[1:])):
                raise FormError(f"key {key} must be strictly increasing")
            c = RatFunc.of(val)
            if not c.is_zero():
                clean[key] = c
        return AltForm(degree, dim, clean)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, indices: Sequence[int]) -> RatFunc:
        """Coefficient at an arbitrary index tuple, with alternation sign."""
        key, sign = _sort_with_sign(indices)
        if sign == 0:
            return scalar(0)
        base = self.coeffs.get(key)
        if base is None:
            return scalar(0)
        return base if sign == 1 else -base

    def __add__(self, other: "AltForm") -> "AltForm":
        if (self.degree, self.dim) != (other.degree, other.dim):
            raise FormError("degree/dimension mismatch")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, scalar(0)) + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return AltForm(self.degree, self.dim, out)

    def __neg__(self) -> "AltForm":
        return AltForm(self.degree, self.dim, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "AltForm") -> "AltForm":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "AltForm":
        c = RatFunc.of(c)
        if c.is_zero():
            return AltForm(self.degree, self.dim, {})
        return AltForm(self.degree, self.dim, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, AltForm):
            return NotImplemented
        if (self.degree, self.dim) != (other.degree, other.dim):
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        return all(
            (self.coeffs.get(k, scalar(0)) - other.coeffs.get(k, scalar(0))).is_zero()
            for k in keys
        )

    __hash__ = None

    def subs(self, assignment) -> "AltForm":
        return AltForm.make(
            self.degree, self.dim, {k: v.subs(assignment) for k, v in self.coeffs.items()}
        )

    def eval(self, vectors: Sequence[Sequence[ScalarLike]]) -> RatFunc:
        """Evaluate on coordinate vectors (multilinear alternating extension)."""
        if len(vectors) != self.degree:
            raise FormError("wrong number of arguments")
        vecs = [[RatFunc.of(x) for x in v] for v in vectors]
        total = scalar(0)
        for key, c in self.coeffs.items():
            # antisymmetrized product: det of the submatrix picked by key
            sub = Matrix([[vecs[r][i - 1] for i in key] for r in range(self.degree)])
            from .linalg import det_bareiss

            d = det_bareiss(sub)
            if not d.is_zero():
                total = total + c * d
        return total

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for key in sorted(self.coeffs):
            pieces.append(f"({self.coeffs[key]})*e{'^e'.join(str(i) for i in key)}")
        return " + ".join(pieces)


def basis_form(degree: int, dim: int, indices: Sequence[int]) -> AltForm:
    return AltForm.make(degree, dim, {tuple(indices): 1})


def wedge(a: AltForm, b: AltForm) -> AltForm:
    """Exterior product with shuffle signs."""
    if a.dim != b.dim:
        raise FormError("dimension mismatch")
    out: dict[IndexTuple, RatFunc] = {}
    for ka, va in a.coeffs.items():
        for kb, vb in b.coeffs.items():
            key, sign = _sort_with_sign(ka + kb)
            if sign == 0:
                continue
            c = va * vb * sign
            s = out.get(key, scalar(0)) + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return AltForm(a.degree + b.degree, a.dim, out)


def wedge_power(a: AltForm, k: int) -> AltForm:
    out = AltForm.make(0, a.dim, {(): 1})
    for _ in range(k):
        out = wedge(out, a)
    return out


def ce_d(g: LieAlgebra, a: AltForm) -> AltForm:
    """Chevalley-Eilenberg differential of a k-form (see module docstring)."""
    if a.dim != g.dim:
        raise FormError(f"form on dim {a.dim} but algebra has dim {g.dim}")
    k = a.degree
    out: dict[IndexTuple, RatFunc] = {}
    for key in combinations(range(1, g.dim + 1), k + 1):
        total = scalar(0)
        for ai, bi in combinations(range(k + 1), 2):
            xi, xj = key[ai], key[bi]
            rest = tuple(key[t] for t in range(k + 1) if t not in (ai, bi))
            coeffs = g.bracket_basis(xi, xj)
            if not coeffs:
                continue
            sign = (-1) ** (ai + bi)
            acc = scalar(0)
            for comp, cval in coeffs.items():
                f = a.coeff((comp,) + rest)
                if not f.is_zero():
                    acc = acc + cval * f
            if not acc.is_zero():
                total = total + acc * sign
        if not total.is_zero():
            out[key] = total
    return AltForm(k + 1, g.dim, out)


def is_closed(g: LieAlgebra, a: AltForm) -> bool:
    return ce_d(g, a).is_zero()


def form_gram(omega: AltForm) -> Matrix:
    """Skew Gram matrix G with G[i][j] = omega(e_{i+1}, e_{j+1})."""
    if omega.degree != 2:
        raise FormError("form_gram wants a 2-form")
    n = omega.dim
    rows = [[scalar(0) for _ in range(n)] for _ in range(n)]
    for (i, j), c in omega.coeffs.items():
        rows[i - 1][j - 1] = c
        rows[j - 1][i - 1] = -c
    return Matrix(rows)


def gram_to_form(G: Matrix) -> AltForm:
    """Inverse of form_gram on skew matrices (upper triangle read off)."""
    n = G.rows
    coeffs = {}
    for i in range(n):
        for j in range(i + 1, n):
            if not G.entries[i][j].is_zero():
                coeffs[(i + 1, j + 1)] = G.entries[i][j]
    return AltForm.make(2, n, coeffs)


def is_nondegenerate(omega: AltForm) -> bool:
    """Generic nondegeneracy over Q(params): full rank of the Gram matrix."""
    if omega.dim % 2 != 0:
        return False
    return rank_bareiss(form_gram(omega)) == omega.dim


def find_primitive(g: LieAlgebra, omega: AltForm) -> AltForm | None:
    """A 1-form beta with d(beta) = omega, or None when omega is not exact.

    The input must be closed.  The echelon-canonical solution is returned
    (free coefficients set to zero) for reproducibility.
    """
    if not is_closed(g, omega):
        raise FormError("find_primitive wants a closed form")
    if omega.degree != 2:
        raise FormError("find_primitive wants a 2-form")
    n = g.dim
    pairs = list(combinations(range(1, n + 1), 2))
    cols = []
    for i in range(1, n + 1):
        d_ei = ce_d(g, basis_form(1, n, (i,)))
        cols.append([d_ei.coeff(p) for p in pairs])
    M = Matrix([[cols[j][r] for j in range(n)] for r in range(len(pairs))])
    rhs = [omega.coeff(p) for p in pairs]
    sol = solve_linear(M, rhs)
    if sol is None:
        return None
    particular, _ = sol
    return AltForm.make(1, n, {(i + 1,): particular[i] for i in range(n)})
