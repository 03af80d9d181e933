"""Basic cycles for a class ``x`` and the cells they span.

Work in the coefficient space ``Q^M`` of a multicurve.  A nonnegative vector
``k`` represents ``x`` when ``k`` minus the reference cycle lies in the span
of the borrowing relations.  The basic cycles are the representatives with
strictly positive coefficients on a linearly independent set of curves, and
they are exactly the vertices of the polyhedron of nonnegative
representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exactlinalg import affine_dimension, kernel_basis, rational_rank, rref, solve_unique, transpose
from .multicurve import (
    InconsistentReference,
    RelationPresentation,
    Structure,
    as_presentation,
)


class InfeasibleClass(ValueError):
    """``x`` has no nonnegative representative supported on the multicurve."""


class NotAdmissible(ValueError):
    """Some curve never appears in a basic cycle for ``x``."""


@dataclass(frozen=True, order=True)
class Cycle:
    """A nonnegative rational combination of oriented curves."""

    curves: tuple[str, ...]
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(k) for k in self.coefficients)
        if len(coeffs) != len(self.curves):
            raise ValueError("one coefficient per curve is required")
        if any(k < 0 for k in coeffs):
            raise ValueError("cycle coefficients must be nonnegative")
        object.__setattr__(self, "curves", tuple(self.curves))
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_mapping(cls, curves: Sequence[str], coeffs: Mapping[str, Fraction | int | str]) -> "Cycle":
        unknown = set(coeffs) - set(curves)
        if unknown:
            raise KeyError(f"unknown curves {sorted(unknown)}")
        return cls(tuple(curves), tuple(Fraction(coeffs.get(c, 0)) for c in curves))

    def __getitem__(self, curve: str) -> Fraction:
        return self.coefficients[self.curves.index(curve)]

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(c for c, k in zip(self.curves, self.coefficients) if k)

    @property
    def support_indices(self) -> tuple[int, ...]:
        return tuple(i for i, k in enumerate(self.coefficients) if k)

    @property
    def integral(self) -> bool:
        return all(k.denominator == 1 for k in self.coefficients)

    def as_dict(self) -> dict[str, Fraction]:
        return {c: k for c, k in zip(self.curves, self.coefficients) if k}

    def label(self) -> str:
        parts = []
        for c, k in zip(self.curves, self.coefficients):
            if k:
                parts.append(c if k == 1 else f"{k}{c}" if k.denominator == 1 else f"({k}){c}")
        return "+".join(parts) or "0"

    def __str__(self) -> str:
        return self.label()


def _reference(m: Structure, x) -> RelationPresentation:
    pres = as_presentation(m, x)
    if pres.reference is None:
        raise InconsistentReference("a reference cycle for x is required")
    q = pres.quotient
    if all(v == 0 for v in q.class_of(pres.reference)):
        raise InconsistentReference("x must be a nontrivial homology class")
    return pres


def _solve_on(phi: list[list[int]], target: Sequence[int], subset: Sequence[int]) -> tuple[Fraction, ...] | None:
    cols = [[row[i] for i in subset] for row in phi]
    return solve_unique(cols, target, len(subset))


def enumerate_basic_cycles(m: Structure, x=None) -> list[Cycle]:
    """All basic cycles for ``x`` supported in ``m``.

    Subsets of curves with independent classes are tried in turn; each
    one determines at most one representative, which is kept when all of its
    coefficients are positive.  The result is sorted and may be empty when
    ``x`` has no nonnegative representative.
    """
    return list(_basic_cycles(_reference(m, x)))


# presentations are immutable, so repeated queries on one multicurve share work
@lru_cache(maxsize=1024)
def _basic_cycles(pres: RelationPresentation) -> tuple[Cycle, ...]:
    q = pres.quotient
    phi = q.matrix()
    target = q.class_of(pres.reference)
    n = len(pres.curves)
    found: set[tuple[Fraction, ...]] = set()
    for size in range(1, q.D + 1):
        for subset in combinations(range(n), size):
            cols = [[row[i] for i in subset] for row in phi]
            if rational_rank(cols) != size:
                continue
            y = _solve_on(phi, target, subset)
            if y is None or any(v <= 0 for v in y):
                continue
            k = [Fraction(0)] * n
            for i, v in zip(subset, y):
                k[i] = v
            found.add(tuple(k))
    return tuple(sorted(Cycle(pres.curves, k) for k in found))


def is_admissible(m: Structure, x=None) -> bool:
    """Whether every curve appears in the support of some basic cycle for ``x``.

    Raises :class:`InfeasibleClass` when there are no basic cycles at all.
    """
    pres = _reference(m, x)
    cycles = enumerate_basic_cycles(pres)
    if not cycles:
        raise InfeasibleClass("x has no nonnegative representative on this multicurve")
    covered = {i for c in cycles for i in c.support_indices}
    return len(covered) == len(pres.curves)


def recession_rays(m: Structure) -> list[tuple[Fraction, ...]]:
    """Extreme nonnegative relations, i.e. directions in which the set of
    nonnegative representatives is unbounded (normalised, sorted)."""
    pres = as_presentation(m)
    q = pres.quotient
    phi = q.matrix()
    n = len(pres.curves)
    rays: set[tuple[Fraction, ...]] = set()
    for size in range(1, min(n, q.D + 1) + 1):
        for subset in combinations(range(n), size):
            cols = [[row[i] for i in subset] for row in phi]
            if rational_rank(cols) != size - 1:
                continue
            # 1-dimensional kernel: a ray when it is sign-definite on the subset
            (v,) = kernel_basis(cols, size)
            if all(t > 0 for t in v) or all(t < 0 for t in v):
                scale = v[0]
                d = [Fraction(0)] * n
                for i, t in zip(subset, v):
                    d[i] = t / scale
                rays.add(tuple(d))
    return sorted(rays)


@dataclass(frozen=True)
class CellPolytope:
    """The cell spanned by the basic cycles for ``x`` on a multicurve."""

    curves: tuple[str, ...]
    dimension: int
    vertices: tuple[Cycle, ...]
    edges: tuple[tuple[int, int], ...]
    bounded: bool = True

    @property
    def is_empty(self) -> bool:
        return not self.vertices


def _active_constraint_edges(phi: list[list[int]], vertices: Sequence[Cycle]) -> list[tuple[int, int]]:
    # u, w span an edge when the smallest face containing both is 1-dimensional:
    # the curves positive at the midpoint carry a 1-dimensional space of relations.
    out = []
    for i, j in combinations(range(len(vertices)), 2):
        free = sorted(set(vertices[i].support_indices) | set(vertices[j].support_indices))
        cols = [[row[t] for t in free] for row in phi]
        if len(free) - rational_rank(cols) == 1:
            out.append((i, j))
    return out


def _affine_coordinates(points: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    base = points[0]
    diffs = [[p - b for p, b in zip(pt, base)] for pt in points]
    basis, _ = rref(diffs[1:]) if len(points) > 1 else ([], [])
    if not basis:
        return [() for _ in points]
    cols = transpose(basis)
    return [solve_unique(cols, d, len(basis)) for d in diffs]


def hull_facets(points: Sequence[Sequence[Fraction]]) -> list[frozenset[int]]:
    """Vertex sets of the facets of the convex hull of ``points``, computed
    inside their affine hull."""
    coords = _affine_coordinates(points)
    dim = len(coords[0])
    facets: set[frozenset[int]] = set()
    if dim == 0:
        return []
    for subset in combinations(range(len(points)), dim):
        base = coords[subset[0]]
        rows = [[a - b for a, b in zip(coords[t], base)] for t in subset[1:]]
        normal = kernel_basis(rows, dim)
        if len(normal) != 1:
            continue
        n = normal[0]
        level = sum(a * b for a, b in zip(n, base))
        values = [sum(a * b for a, b in zip(n, c)) - level for c in coords]
        if all(v >= 0 for v in values) or all(v <= 0 for v in values):
            facets.add(frozenset(i for i, v in enumerate(values) if v == 0))
    return sorted(facets, key=sorted)


def _hull_edges(vertices: Sequence[Cycle]) -> list[tuple[int, int]]:
    # u, w span an edge when the facets through both meet only in u and w
    facets = hull_facets([v.coefficients for v in vertices])
    everything = frozenset(range(len(vertices)))
    out = []
    for i, j in combinations(range(len(vertices)), 2):
        face = everything
        for f in facets:
            if i in f and j in f:
                face = face & f
        if face == {i, j}:
            out.append((i, j))
    return out


def cell_polytope(m: Structure, x=None) -> CellPolytope:
    """Vertices, dimension and edge graph of the cell for ``x``.

    The cell is the convex hull of the basic cycles.  ``bounded`` records
    whether it is the whole set of nonnegative representatives.

    An infeasible ``x`` gives an empty cell of dimension -1; a feasible but
    non-admissible multicurve raises :class:`NotAdmissible`.
    """
    return _cell(_reference(m, x))


@lru_cache(maxsize=1024)
def _cell(pres: RelationPresentation) -> CellPolytope:
    vertices = _basic_cycles(pres)
    if not vertices:
        return CellPolytope(pres.curves, -1, (), ())
    covered = {i for c in vertices for i in c.support_indices}
    if len(covered) != len(pres.curves):
        missing = [pres.curves[i] for i in range(len(pres.curves)) if i not in covered]
        raise NotAdmissible(f"curves {missing} are in no basic cycle for x")
    dim = affine_dimension([v.coefficients for v in vertices])
    bounded = not recession_rays(pres)
    if bounded:
        edges = _active_constraint_edges(pres.quotient.matrix(), vertices)
    else:
        # the active-constraint test can miss edges of the hull of the vertices
        # when the set of nonnegative representatives is unbounded
        edges = _hull_edges(vertices)
    return CellPolytope(pres.curves, dim, tuple(vertices), tuple(edges), bounded)


def vertex_coordinates(cell: CellPolytope, curves: Iterable[str]) -> list[tuple[Fraction, ...]]:
    """Project each vertex of ``cell`` onto its coefficients on ``curves``."""
    curves = list(curves)
    unknown = [c for c in curves if c not in cell.curves]
    if unknown:
        raise KeyError(f"unknown curves {unknown}")
    return [tuple(v[c] for c in curves) for v in cell.vertices]


def edge_cycle(cell: CellPolytope) -> list[int] | None:
    """Vertex order around a 2-dimensional cell, or ``None`` if the edge graph
    is not a single cycle through every vertex."""
    n = len(cell.vertices)
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for i, j in cell.edges:
        adj[i].append(j)
        adj[j].append(i)
    if n < 3 or any(len(a) != 2 for a in adj.values()):
        return None
    order = [0]
    prev, cur = None, 0
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt == 0:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order if len(order) == n else None
