"""Exact two-phase simplex with Bland's rule, used only as a test oracle.

Solves ``min c.k`` subject to ``A k = b`` and ``k >= 0`` over the rationals
and returns an optimal basic feasible solution, or ``None`` if infeasible.
"""

from fractions import Fraction


def _pivot(tab, basis, row, col):
    p = tab[row][col]
    tab[row] = [v / p for v in tab[row]]
    for r in range(len(tab)):
        if r != row and tab[r][col]:
            f = tab[r][col]
            tab[r] = [a - f * b for a, b in zip(tab[r], tab[row])]
    basis[row] = col


def _run(tab, basis, cost, allowed):
    # tab rows: constraints with rhs last; cost: objective over all columns
    m = len(tab)
    while True:
        reduced = []
        for j in allowed:
            z = sum(cost[basis[i]] * tab[i][j] for i in range(m))
            reduced.append((cost[j] - z, j))
        entering = next((j for r, j in sorted(reduced, key=lambda t: t[1]) if r < 0), None)
        if entering is None:
            return True
        ratios = [(tab[i][-1] / tab[i][entering], basis[i], i) for i in range(m) if tab[i][entering] > 0]
        if not ratios:
            return False  # unbounded
        _, _, row = min(ratios)
        _pivot(tab, basis, row, entering)


def solve(A, b, c):
    m, n = len(A), len(c)
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]
    tab = [A[i] + [Fraction(int(i == k)) for k in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    phase1 = [Fraction(0)] * n + [Fraction(1)] * m
    _run(tab, basis, phase1, range(n + m))
    if sum(tab[i][-1] for i in range(m) if basis[i] >= n):
        return None
    # drive remaining artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tab[i][j]), None)
            if col is not None:
                _pivot(tab, basis, i, col)
    keep = [i for i in range(m) if basis[i] < n]
    tab = [tab[i][:n] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    cost = [Fraction(v) for v in c]
    if not _run(tab, basis, cost, range(n)):
        raise ValueError("objective is unbounded")
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        x[j] = tab[i][-1]
    return tuple(x)
