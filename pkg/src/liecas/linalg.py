"""Exact linear algebra over polynomials and rational functions.

Rank, kernel and determinant computations clear denominators row by row and
then run Bareiss fraction-free elimination, so no step ever divides by a
polynomial that is not an exact factor.  The pivot policy is deterministic:
within the current column, the first nonzero constant entry wins, otherwise
the nonzero entry of lowest total degree (earliest row on ties).

Vectors are plain tuples of RatFunc; matrices are dense (the dimensions in
this package never exceed ~70x28).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import MPoly, RatFunc, ScalarError, ScalarLike, scalar

Vector = tuple[RatFunc, ...]


class Matrix:
    """Immutable dense matrix of RatFunc entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[ScalarLike]]):
        grid = tuple(tuple(RatFunc.of(x) for x in row) for row in entries)
        if grid and any(len(row) != len(grid[0]) for row in grid):
            raise ScalarError("ragged matrix")
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", len(grid[0]) if grid else 0)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix([[0] * cols for _ in range(rows)])

    def __getitem__(self, idx: tuple[int, int]) -> RatFunc:
        return self.entries[idx[0]][idx[1]]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def transpose(self) -> "Matrix":
        return Matrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(
            self.entries[i][j] == other.entries[i][j]
            for i in range(self.rows)
            for j in range(self.cols)
        )

    __hash__ = None

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ScalarError("shape mismatch")
        return Matrix(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, c: ScalarLike) -> "Matrix":
        c = RatFunc.of(c)
        return Matrix([[c * x for x in row] for row in self.entries])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ScalarError("shape mismatch")
        return Matrix(
            [
                [
                    sum(
                        (self.entries[i][k] * other.entries[k][j] for k in range(self.cols)),
                        scalar(0),
                    )
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ]
        )

    def apply(self, v: Sequence[ScalarLike]) -> Vector:
        if len(v) != self.cols:
            raise ScalarError("shape mismatch")
        vv = [RatFunc.of(x) for x in v]
        return tuple(
            sum((self.entries[i][j] * vv[j] for j in range(self.cols)), scalar(0))
            for i in range(self.rows)
        )

    def subs(self, mapping) -> "Matrix":
        return Matrix([[x.subs(mapping) for x in row] for row in self.entries])

    def trace(self) -> RatFunc:
        if not self.is_square():
            raise ScalarError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), scalar(0))

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"


# -- fraction-free machinery -------------------------------------------------


def _clear_row(row: Sequence[RatFunc]) -> list[MPoly]:
    """Scale one row by its distinct denominators until every entry is polynomial."""
    scaled = list(row)
    for _ in range(len(row) + 1):
        dens: list[MPoly] = []
        for x in scaled:
            if not x.is_poly() and not any(d == x.den for d in dens):
                dens.append(x.den)
        if not dens:
            return [x.as_mpoly() for x in scaled]
        for d in dens:
            scaled = [v * d for v in scaled]
    raise ScalarError("failed to clear row denominators")


def _cleared_grid(M: Matrix) -> list[list[MPoly]]:
    """Row-scale a RatFunc matrix into an MPoly grid (kernel/rank preserved)."""
    return [_clear_row(row) for row in M.entries]


def _pick_pivot(grid: list[list[MPoly]], start_row: int, col: int) -> int | None:
    """Deterministic pivot choice: first nonzero constant, else lowest total degree."""
    best = None
    best_deg = None
    for i in range(start_row, len(grid)):
        e = grid[i][col]
        if e.is_zero():
            continue
        if e.is_const():
            return i
        d = e.total_degree()
        if best is None or d < best_deg:
            best, best_deg = i, d
    return best


def _exact(p: MPoly, q: MPoly) -> MPoly:
    out = p.exact_div(q)
    if out is None:
        raise ScalarError("fraction-free elimination lost exact divisibility")
    return out


def _ff_echelon(grid: list[list[MPoly]], stop_col: int | None = None):
    """In-place fraction-free row echelon.

    Returns (pivots, sign) where pivots is a list of (row, col, pivot_poly)
    and sign tracks row swaps.  Columns >= stop_col are carried along but
    never used as pivots (for augmented systems).
    """
    m = len(grid)
    n = len(grid[0]) if m else 0
    if stop_col is None:
        stop_col = n
    pivots: list[tuple[int, int, MPoly]] = []
    sign = 1
    prev = MPoly.const(1)
    r = 0
    for c in range(stop_col):
        if r >= m:
            break
        i = _pick_pivot(grid, r, c)
        if i is None:
            continue
        if i != r:
            grid[i], grid[r] = grid[r], grid[i]
            sign = -sign
        piv = grid[r][c]
        for i2 in range(r + 1, m):
            if all(grid[i2][j].is_zero() for j in range(c, n)):
                continue
            head = grid[i2][c]
            for j in range(n):
                if j < c:
                    continue
                val = piv * grid[i2][j] - head * grid[r][j]
                grid[i2][j] = _exact(val, prev)
        pivots.append((r, c, piv))
        prev = piv
        r += 1
    return pivots, sign


def rank_bareiss(M: Matrix, with_pivots: bool = False):
    """Rank over the fraction field, by fraction-free elimination."""
    if M.rows == 0 or M.cols == 0:
        return (0, []) if with_pivots else 0
    grid = _cleared_grid(M)
    pivots, _ = _ff_echelon(grid)
    if with_pivots:
        return len(pivots), [p for _, _, p in pivots]
    return len(pivots)


def det_bareiss(M: Matrix) -> RatFunc:
    """Exact determinant (fraction-free after clearing row denominators)."""
    if not M.is_square():
        raise ScalarError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return scalar(1)
    scale = scalar(1)
    grid: list[list[MPoly]] = []
    for row in M.entries:
        scaled = list(row)
        for _ in range(n + 1):
            dens = []
            for x in scaled:
                if not x.is_poly() and not any(d == x.den for d in dens):
                    dens.append(x.den)
            if not dens:
                break
            for d in dens:
                scaled = [v * d for v in scaled]
                scale = scale * d
        grid.append([v.as_mpoly() for v in scaled])
    pivots, sign = _ff_echelon(grid)
    if len(pivots) < n:
        return scalar(0)
    det = RatFunc.of(pivots[-1][2]) * sign
    return det / scale


def kernel_basis(M: Matrix) -> list[Vector]:
    """Basis of the right kernel {v : Mv = 0}, echelon-normalized.

    Each basis vector carries a 1 in its free coordinate and zeroes in the
    other free coordinates; entries are RatFunc.
    """
    n = M.cols
    if M.rows == 0:
        return [tuple(scalar(1 if j == f else 0) for j in range(n)) for f in range(n)]
    grid = _cleared_grid(M)
    pivots, _ = _ff_echelon(grid)
    pivot_cols = [c for _, c, _ in pivots]
    free_cols = [c for c in range(n) if c not in pivot_cols]
    basis: list[Vector] = []
    for f in free_cols:
        v: list[RatFunc] = [scalar(0)] * n
        v[f] = scalar(1)
        for r, c, piv in reversed(pivots):
            s = scalar(0)
            for j in range(c + 1, n):
                if not v[j].is_zero() and not grid[r][j].is_zero():
                    s = s + RatFunc.of(grid[r][j]) * v[j]
            v[c] = -s / RatFunc.of(piv)
        basis.append(tuple(v))
    return basis


def solve_linear(M: Matrix, b: Sequence[ScalarLike]):
    """Solve Mx = b exactly.

    Returns (particular, kernel) with the free variables of the particular
    solution set to zero, or None when the system is inconsistent.
    """
    if len(b) != M.rows:
        raise ScalarError("shape mismatch")
    n = M.cols
    aug = Matrix([list(M.entries[i]) + [b[i]] for i in range(M.rows)]) if M.rows else None
    if M.rows == 0:
        return tuple(scalar(0) for _ in range(n)), kernel_basis(M)
    grid = _cleared_grid(aug)
    pivots, _ = _ff_echelon(grid, stop_col=n)
    pivot_rows = {r for r, _, _ in pivots}
    for i in range(len(grid)):
        if i not in pivot_rows and not grid[i][n].is_zero():
            return None
    v: list[RatFunc] = [scalar(0)] * n
    for r, c, piv in reversed(pivots):
        s = RatFunc.of(grid[r][n])
        for j in range(c + 1, n):
            if not v[j].is_zero() and not grid[r][j].is_zero():
                s = s - RatFunc.of(grid[r][j]) * v[j]
        v[c] = s / RatFunc.of(piv)
    return tuple(v), kernel_basis(M)


def invert(M: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan over the fraction field."""
    if not M.is_square():
        raise ScalarError("inverse of a non-square matrix")
    n = M.rows
    work = [list(M.entries[i]) + [scalar(1 if j == i else 0) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv_row = None
        for i in range(c, n):
            if not work[i][c].is_zero():
                piv_row = i
                break
        if piv_row is None:
            raise ScalarError("matrix is singular")
        work[c], work[piv_row] = work[piv_row], work[c]
        inv_piv = work[c][c].inverse()
        work[c] = [x * inv_piv for x in work[c]]
        for i in range(n):
            if i == c or work[i][c].is_zero():
                continue
            f = work[i][c]
            work[i] = [a - f * b for a, b in zip(work[i], work[c])]
    return Matrix([row[n:] for row in work])


def char_poly(M: Matrix) -> MPoly:
    """Characteristic polynomial det(X*I - M) in the reserved variable X_charpoly."""
    from .scalars import CHARPOLY_VAR

    if not M.is_square():
        raise ScalarError("char_poly of a non-square matrix")
    X = MPoly.variable(CHARPOLY_VAR)
    n = M.rows
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            a = M.entries[i][j]
            if not a.is_poly():
                raise ScalarError("char_poly wants polynomial entries")
            row.append((X if i == j else 0) - a.as_mpoly())
        entries.append(row)
    det = det_bareiss(Matrix(entries))
    return det.as_mpoly()


def pfaffian(M: Matrix) -> RatFunc:
    """Pfaffian of a skew-symmetric even-dimensional matrix.

    Computed by recursive expansion along the first row; Pf(M)^2 = det(M).
    """
    n = M.rows
    if not M.is_square():
        raise ScalarError("pfaffian of a non-square matrix")
    if n % 2 != 0:
        raise ScalarError("pfaffian needs even dimension")
    for i in range(n):
        if not M.entries[i][i].is_zero():
            raise ScalarError("matrix is not skew-symmetric")
        for j in range(i + 1, n):
            if not (M.entries[i][j] + M.entries[j][i]).is_zero():
                raise ScalarError("matrix is not skew-symmetric")

    def pf(indices: tuple[int, ...]) -> RatFunc:
        if not indices:
            return scalar(1)
        first = indices[0]
        rest = indices[1:]
        total = scalar(0)
        for pos, j in enumerate(rest):
            a = M.entries[first][j]
            if a.is_zero():
                continue
            sub = rest[:pos] + rest[pos + 1:]
            term = a * pf(sub)
            total = total + term if pos % 2 == 0 else total - term
        return total

    return pf(tuple(range(n)))


def gram_rank(M: Matrix) -> int:
    return rank_bareiss(M)


def vector(values: Iterable[ScalarLike]) -> Vector:
    return tuple(RatFunc.of(x) for x in values)


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))

def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c: ScalarLike, a: Vector) -> Vector:
    c = RatFunc.of(c)
    return tuple(c * x for x in a)


def vec_is_zero(a: Vector) -> bool:
    return all(x.is_zero() for x in a)


def rref(vectors: Sequence[Sequence[ScalarLike]], width: int) -> list[Vector]:
    """Reduced row echelon form of a list of vectors (field operations).

    Returns the nonzero rows; canonical, so two spans are equal iff their
    rref lists are equal entrywise.
    """
    rows = [list(vector(v)) for v in vectors]
    r = 0
    for c in range(width):
        piv = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r] if not vec_is_zero(tuple(row))]
