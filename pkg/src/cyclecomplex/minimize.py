"""Shortest representatives of ``x`` for positive lengths on the curves.

Length is linear on nonnegative cycles, so its minimum over the cell is
attained on a face; that face (the borrowing cell) is found by comparing the
lengths of the basic cycles exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .cellpoly import Cycle, InfeasibleClass, NotAdmissible, cell_polytope, is_admissible
from .exactlinalg import affine_dimension
from .multicurve import Structure, as_presentation


class PropertyViolation(AssertionError):
    """Two independent computations of the same quantity disagree."""


class LengthAssignment(Mapping[str, Fraction]):
    """Positive rational length for each curve."""

    def __init__(self, lengths: Mapping[str, Fraction | int | str]):
        values = {c: Fraction(v) for c, v in lengths.items()}
        bad = sorted(c for c, v in values.items() if v <= 0)
        if bad:
            raise ValueError(f"lengths must be positive (curves {bad})")
        self._values = values

    @classmethod
    def of(cls, curves: Sequence[str], values: Sequence[Fraction | int | str]) -> "LengthAssignment":
        return cls(dict(zip(curves, values)))

    def __getitem__(self, curve: str) -> Fraction:
        return self._values[curve]

    def __iter__(self):
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __repr__(self) -> str:
        inner = ", ".join(f"{c}: {v}" for c, v in self._values.items())
        return f"LengthAssignment({{{inner}}})"

    def covers(self, curves: Sequence[str]) -> None:
        missing = [c for c in curves if c not in self._values]
        if missing:
            raise KeyError(f"no length for curves {missing}")


def cycle_length(c: Cycle, lengths: Mapping[str, Fraction]) -> Fraction:
    """Weighted sum of absolute coefficients."""
    total = Fraction(0)
    for curve, k in zip(c.curves, c.coefficients):
        if k:
            if curve not in lengths:
                raise KeyError(f"no length for curve {curve!r}")
            total += abs(k) * lengths[curve]
    return total


@dataclass(frozen=True)
class MinimizingFace:
    curves: tuple[str, ...]
    vertices: tuple[Cycle, ...]
    dimension: int
    value: Fraction
    multicurve: tuple[str, ...]
    edges: tuple[tuple[int, int], ...] = ()


def _checked_cell(m: Structure, x, lengths: LengthAssignment):
    pres = as_presentation(m, x)
    lengths.covers(pres.curves)
    cell = cell_polytope(pres)
    if cell.is_empty:
        raise InfeasibleClass("x has no nonnegative representative on this multicurve")
    return pres, cell


def minimal_face(m: Structure, x, lengths: LengthAssignment) -> MinimizingFace:
    """The face of the cell on which length is minimal."""
    pres, cell = _checked_cell(m, x, lengths)
    values = [cycle_length(v, lengths) for v in cell.vertices]
    best = min(values)
    keep = [i for i, v in enumerate(values) if v == best]
    index = {old: new for new, old in enumerate(keep)}
    vertices = tuple(cell.vertices[i] for i in keep)
    support = {c for v in vertices for c in v.support}
    return MinimizingFace(
        curves=pres.curves,
        vertices=vertices,
        dimension=affine_dimension([v.coefficients for v in vertices]),
        value=best,
        multicurve=tuple(c for c in pres.curves if c in support),
        edges=tuple((index[i], index[j]) for i, j in cell.edges if i in index and j in index),
    )


def length_balance(m: Structure, x, lengths: LengthAssignment) -> tuple[bool, bool]:
    """Both sides of the balance criterion.

    The first entry says every subsurface relation has zero weighted length;
    the second that all positive cycles have the same length, which needs
    the basic cycles to share one length and the set of positive
    representatives to be bounded (along an unbounded direction length grows).
    """
    pres = as_presentation(m, x)
    lengths.covers(pres.curves)
    if not is_admissible(pres):
        raise NotAdmissible("the multicurve is not admissible for x")
    by_relations = all(
        sum(v * lengths[c] for c, v in zip(pres.curves, row)) == 0 for row in pres.relations
    )
    _, cell = _checked_cell(pres, None, lengths)
    by_vertices = cell.bounded and len({cycle_length(v, lengths) for v in cell.vertices}) == 1
    return by_relations, by_vertices


def is_length_balanced(m: Structure, x, lengths: LengthAssignment) -> bool:
    """Whether all positive cycles for ``x`` on ``m`` have the same length."""
    by_relations, by_vertices = length_balance(m, x, lengths)
    if by_relations != by_vertices:
        raise PropertyViolation(
            f"relation balance ({by_relations}) disagrees with vertex lengths ({by_vertices})"
        )
    return by_relations
