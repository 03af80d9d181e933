"""Moving weight along a borrowing relation.

A relation ``sum r_i [c_i] = 0`` is given as a signed vector ``r``.  The
curves with ``r_i > 0`` form the increasing side and those with ``r_i < 0``
the decreasing side, so a move of size ``delta`` sends ``k`` to
``k + delta * r``.  With ``L1`` and ``L2`` the weighted lengths of the two
sides, the length changes by exactly ``-delta * (L2 - L1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .cellpoly import Cycle
from .exactlinalg import kernel_basis, rational_rank
from .minimize import LengthAssignment, cycle_length
from .multicurve import Structure, as_presentation

EQUAL = "equal-length"
SHORTER = "strictly-shorter"
LONGER = "strictly-longer"


class BorrowError(ValueError):
    pass


@dataclass(frozen=True)
class BorrowingMove:
    relation: tuple[Fraction, ...]
    delta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "relation", tuple(Fraction(v) for v in self.relation))
        object.__setattr__(self, "delta", Fraction(self.delta))
        if self.delta < 0:
            raise BorrowError("delta must be nonnegative")

    def increasing(self) -> list[int]:
        return [i for i, v in enumerate(self.relation) if v > 0]

    def decreasing(self) -> list[int]:
        return [i for i, v in enumerate(self.relation) if v < 0]


def max_delta(c: Cycle, relation: Sequence[Fraction]) -> Fraction | None:
    """Largest admissible step: ``min k_i / v_i`` over the decreasing side
    (``None`` when nothing decreases)."""
    ratios = [c.coefficients[i] / -v for i, v in enumerate(relation) if v < 0]
    return min(ratios) if ratios else None


def _check_relation(m: Structure, c: Cycle, relation: Sequence[Fraction]) -> None:
    pres = as_presentation(m)
    if tuple(pres.curves) != tuple(c.curves):
        raise BorrowError("cycle and multicurve have different curves")
    if len(relation) != len(c.curves):
        raise BorrowError("relation must have one entry per curve")
    rows = [list(r) for r in pres.relations]
    if rows:
        in_span = rational_rank(rows + [list(relation)]) == rational_rank(rows)
    else:
        in_span = not any(relation)
    if not in_span:
        raise BorrowError("vector is not a borrowing relation of this multicurve")


def apply_borrow(m: Structure, c: Cycle, move: BorrowingMove) -> Cycle:
    """The cycle ``c + delta * relation``; it represents the same class as ``c``."""
    _check_relation(m, c, move.relation)
    limit = max_delta(c, move.relation)
    if limit is not None and move.delta > limit:
        raise BorrowError(f"delta {move.delta} exceeds the limit {limit}")
    return Cycle(c.curves, tuple(k + move.delta * v for k, v in zip(c.coefficients, move.relation)))


@dataclass(frozen=True)
class BorrowEffect:
    L1: Fraction
    L2: Fraction
    classification: str
    length_before: Fraction
    length_after: Fraction


def side_lengths(relation: Sequence[Fraction], lengths: LengthAssignment, curves: Sequence[str]) -> tuple[Fraction, Fraction]:
    L1 = sum((v * lengths[c] for c, v in zip(curves, relation) if v > 0), Fraction(0))
    L2 = sum((-v * lengths[c] for c, v in zip(curves, relation) if v < 0), Fraction(0))
    return L1, L2


def length_effect(m: Structure, c: Cycle, move: BorrowingMove, lengths: LengthAssignment) -> BorrowEffect:
    """Side lengths of the relation and the resulting change in length.

    The classification compares the two sides, so it describes every
    positive step along the relation.
    """
    after = apply_borrow(m, c, move)
    L1, L2 = side_lengths(move.relation, lengths, c.curves)
    kind = EQUAL if L1 == L2 else SHORTER if L1 < L2 else LONGER
    return BorrowEffect(L1, L2, kind, cycle_length(c, lengths), cycle_length(after, lengths))


def _support_relation(phi: list[list[int]], support: Sequence[int], n: int) -> tuple[Fraction, ...] | None:
    cols = [[row[i] for i in support] for row in phi]
    basis = kernel_basis(cols, len(support))
    if not basis:
        return None
    r = [Fraction(0)] * n
    for i, v in zip(support, basis[0]):
        r[i] = v
    return tuple(r)


def _direction(c: Cycle, r: tuple[Fraction, ...], lengths: LengthAssignment) -> tuple[tuple[Fraction, ...], Fraction]:
    neg = tuple(-v for v in r)
    L1, L2 = side_lengths(r, lengths, c.curves)
    if L1 < L2:
        return r, max_delta(c, r)
    if L2 < L1:
        return neg, max_delta(c, neg)
    # tie: the direction reaching a zero coefficient first, then the one
    # that zeroes the alphabetically first curve
    options = []
    for d in (r, neg):
        step = max_delta(c, d)
        zeroed = min(c.curves[i] for i, v in enumerate(d) if v < 0 and c.coefficients[i] / -v == step)
        options.append((step, zeroed, d))
    step, _, d = min(options, key=lambda t: (t[0], t[1]))
    return d, step


def borrow_path(m: Structure, c: Cycle, lengths: LengthAssignment) -> Iterator[tuple[Cycle, BorrowingMove]]:
    """Successive borrowing moves taking ``c`` to a basic cycle.

    Each move is chosen not to increase length and drives at least one
    coefficient to zero, so there are at most ``|M|`` of them.
    """
    pres = as_presentation(m)
    if tuple(pres.curves) != tuple(c.curves):
        raise BorrowError("cycle and multicurve have different curves")
    phi = pres.quotient.matrix()
    n = len(c.curves)
    if not any(c.coefficients):
        raise BorrowError("the zero cycle cannot be reduced")
    while True:
        r = _support_relation(phi, c.support_indices, n)
        if r is None:
            return
        d, step = _direction(c, r, lengths)
        move = BorrowingMove(d, step)
        c = Cycle(c.curves, tuple(k + step * v for k, v in zip(c.coefficients, d)))
        yield c, move


def reduce_to_basic(m: Structure, c: Cycle, lengths: LengthAssignment) -> Cycle:
    """A basic cycle in the class of ``c`` that is no longer than ``c``."""
    out = c
    for out, _ in borrow_path(m, c, lengths):
        pass
    return out
