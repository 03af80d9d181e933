"""Exact integer and rational linear algebra.

Everything here works on plain nested sequences of ``int`` or
:class:`fractions.Fraction`; nothing is ever converted to floating point.
Matrix sizes in this package are tiny (a few dozen columns at most), so the
algorithms are the textbook ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Number = int | Fraction
IntMatrix = list[list[int]]
RationalVector = tuple[Fraction, ...]


def _ncols(m: Sequence[Sequence[Number]], cols: int | None) -> int:
    if cols is not None:
        return cols
    if not m:
        raise ValueError("cannot infer the column count of an empty matrix")
    return len(m[0])


def _check_rectangular(m: Sequence[Sequence[Number]]) -> None:
    if m and any(len(row) != len(m[0]) for row in m):
        raise ValueError("matrix rows have different lengths")


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence[Number]], cols: int | None = None) -> list[list[Number]]:
    n = _ncols(m, cols) if m else (cols or 0)
    return [[row[j] for row in m] for j in range(n)]


def mat_mul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> list[list[Number]]:
    if a and b and len(a[0]) != len(b):
        raise ValueError("shape mismatch in matrix product")
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Sequence[Sequence[Number]], v: Sequence[Number]) -> list[Number]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def rref(m: Sequence[Sequence[Number]], cols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals.

    Returns the nonzero rows of the echelon form together with the pivot
    column of each row.
    """
    _check_rectangular(m)
    n = _ncols(m, cols) if m else (cols or 0)
    rows = [[Fraction(x) for x in row] for row in m]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rational_rank(m: Sequence[Sequence[Number]]) -> int:
    """Rank of ``m`` over the rationals."""
    if not m:
        return 0
    return len(rref(m)[1])


def kernel_basis(m: Sequence[Sequence[Number]], cols: int | None = None) -> list[RationalVector]:
    """Basis of the rational null space ``{v : m v = 0}``.

    Each basis vector has a 1 in one free column and zeros in the other
    free columns, so the basis is canonical for a given matrix.
    """
    n = _ncols(m, cols) if m else (cols or 0)
    rows, pivots = rref(m, n) if m else ([], [])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve_unique(m: Sequence[Sequence[Number]], b: Sequence[Number], cols: int | None = None) -> RationalVector | None:
    """Solve ``m y = b`` when ``m`` has full column rank.

    Returns ``None`` if the system is inconsistent.  Raises ``ValueError``
    when the columns of ``m`` are dependent (the solution would not be
    unique).
    """
    n = _ncols(m, cols) if m else (cols or 0)
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    rows, pivots = rref(aug, n + 1) if aug else ([], [])
    if n in pivots:
        return None
    if len(pivots) != n:
        raise ValueError("columns are linearly dependent")
    y = [Fraction(0)] * n
    for row, p in zip(rows, pivots):
        y[p] = row[n]
    return tuple(y)


def affine_dimension(points: Sequence[Sequence[Number]]) -> int:
    """Dimension of the affine hull of a finite point set (-1 if empty)."""
    if not points:
        return -1
    base = points[0]
    diffs = [[Fraction(x) - y for x, y in zip(p, base)] for p in points[1:]]
    return rational_rank(diffs) if diffs else 0


def det(m: Sequence[Sequence[Number]]) -> Fraction:
    """Determinant by exact elimination."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            result = -result
        result *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result


@dataclass(frozen=True)
class SmithForm:
    """``left @ matrix @ right == diagonal`` with unimodular transforms."""

    factors: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]
    diagonal: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return sum(1 for f in self.factors if f != 0)


def smith_normal_form(m: Sequence[Sequence[int]], cols: int | None = None) -> SmithForm:
    """Smith normal form of an integer matrix with both transforms.

    ``factors`` has ``min(rows, cols)`` entries: the nonzero invariant
    factors in divisibility order followed by zeros.
    """
    _check_rectangular(m)
    nrows = len(m)
    ncols = _ncols(m, cols) if m else (cols or 0)
    a = [[int(x) for x in row] for row in m]
    u = identity(nrows)
    v = identity(ncols)

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, k: int) -> None:
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst: int, src: int, k: int) -> None:
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    t = 0
    while t < min(nrows, ncols):
        entries = [(abs(a[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, nrows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility: the pivot must divide the rest of the block
            bad = next(
                ((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    factors = tuple(a[i][i] for i in range(min(nrows, ncols)))
    return SmithForm(
        factors=factors,
        left=tuple(map(tuple, u)),
        right=tuple(map(tuple, v)),
        diagonal=tuple(map(tuple, a)),
    )


def lattice_member(v: Sequence[int], generators: Sequence[Sequence[int]]) -> bool:
    """Whether ``v`` lies in the integer span of ``generators``."""
    if any(len(g) != len(v) for g in generators):
        raise ValueError("generator dimension does not match the vector")
    if not generators:
        return all(x == 0 for x in v)
    g = transpose(generators)  # generators as columns
    snf = smith_normal_form(g, len(generators))
    uv = mat_vec(snf.left, v)
    for i, target in enumerate(uv):
        s = snf.factors[i] if i < len(snf.factors) else 0
        if s == 0:
            if target != 0:
                return False
        elif target % s:
            return False
    return True


def primitive(v: Sequence[int]) -> bool:
    """Whether an integer vector is nonzero with coprime entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def clear_denominators(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Smallest positive integer multiple of a rational vector."""
    lcm = 1
    for x in v:
        d = Fraction(x).denominator
        lcm = lcm * d // gcd(lcm, d)
    return tuple(int(x * lcm) for x in v)
