"""Oriented multicurves modelled by their dual graphs.

A multicurve ``M`` on the closed surface ``S_g`` is recorded by the dual
graph of ``S - M``: one vertex per complementary component (decorated by its
genus) and one edge per curve.  A curve runs from its *tail* component to its
*head* component; the component at the head sees the curve as a positively
oriented boundary.  Cutting along ``M`` gives one relation per component,

    sum(curves with head at v) - sum(curves with tail at v) = 0,

and these generate every relation among the curve classes.  With this
convention a cobounding pair ``a: u -> v``, ``b: v -> u`` gives ``[a] = [b]``.

When only the relations are known (no dual graph), use a
:class:`RelationPresentation`; statistics that need the graph are then
reported as unavailable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .exactlinalg import IntMatrix, lattice_member, smith_normal_form


class InvalidMulticurve(ValueError):
    """Raised when an operation needs a valid multicurve and gets another."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__("; ".join(c.message for c in report.failures()) or "invalid multicurve")


class InconsistentReference(ValueError):
    """The reference cycle for ``x`` does not fit the curves."""


@dataclass(frozen=True)
class Component:
    id: str
    genus: int


@dataclass(frozen=True)
class Curve:
    id: str
    tail: str
    head: str

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class MulticurveType:
    """Topological type of an oriented multicurve in ``S_g``."""

    surface_genus: int
    components: tuple[Component, ...]
    curves: tuple[Curve, ...]
    nonseparating: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "curves", tuple(self.curves))

    @classmethod
    def build(
        cls,
        surface_genus: int,
        components: Mapping[str, int] | Iterable[tuple[str, int]],
        curves: Iterable[tuple[str, str, str]],
        nonseparating: bool = True,
    ) -> "MulticurveType":
        """Shorthand: ``components`` maps id to genus, curves are ``(id, tail, head)``."""
        items = components.items() if isinstance(components, Mapping) else components
        return cls(
            surface_genus,
            tuple(Component(i, g) for i, g in items),
            tuple(Curve(*c) for c in curves),
            nonseparating,
        )

    @property
    def curve_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.curves)

    @property
    def component_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.components)

    def degree(self, component: str) -> int:
        return sum((c.tail == component) + (c.head == component) for c in self.curves)

    def euler_characteristic(self, component: Component) -> int:
        return 2 - 2 * component.genus - self.degree(component.id)

    @property
    def N(self) -> int:
        return len(self.components)

    @property
    def P(self) -> int:
        return sum(1 for c in self.components if c.genus > 0)

    @property
    def Z(self) -> int:
        return sum(1 for c in self.components if c.genus == 0)

    def reversed(self, curve_ids: Iterable[str]) -> "MulticurveType":
        """Copy with the orientation of the given curves flipped."""
        flip = set(curve_ids)
        curves = tuple(Curve(c.id, c.head, c.tail) if c.id in flip else c for c in self.curves)
        return MulticurveType(self.surface_genus, self.components, curves, self.nonseparating)


@dataclass(frozen=True)
class RelationPresentation:
    """Curves, integer borrowing relations and a reference cycle for ``x``.

    ``relations[r][i]`` is the coefficient of curve ``i`` in relation ``r``;
    ``reference`` is an integer cycle whose class is ``x``.
    """

    curves: tuple[str, ...]
    relations: tuple[tuple[int, ...], ...]
    reference: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "curves", tuple(self.curves))
        object.__setattr__(self, "relations", tuple(tuple(int(v) for v in r) for r in self.relations))
        if self.reference is not None:
            object.__setattr__(self, "reference", tuple(int(v) for v in self.reference))
        n = len(self.curves)
        if len(set(self.curves)) != n:
            raise ValueError("duplicate curve ids")
        if any(len(r) != n for r in self.relations):
            raise ValueError("relation rows must have one entry per curve")
        if self.reference is not None and len(self.reference) != n:
            raise InconsistentReference("reference cycle must have one entry per curve")

    @property
    def curve_ids(self) -> tuple[str, ...]:
        return self.curves

    def with_reference(self, reference: Sequence[int] | Mapping[str, int] | None) -> "RelationPresentation":
        if reference is None:
            return self
        return RelationPresentation(self.curves, self.relations, reference_vector(self.curves, reference))

    @cached_property
    def quotient(self) -> "HomologyQuotient":
        return HomologyQuotient.from_relations(self.curves, self.relations)


Structure = MulticurveType | RelationPresentation


def reference_vector(curves: Sequence[str], x: Sequence[int] | Mapping[str, int]) -> tuple[int, ...]:
    """Turn ``x`` given by curve id or by position into a coefficient tuple."""
    if isinstance(x, Mapping):
        unknown = set(x) - set(curves)
        if unknown:
            raise InconsistentReference(f"unknown curve ids in reference: {sorted(unknown)}")
        return tuple(int(x.get(c, 0)) for c in curves)
    x = tuple(int(v) for v in x)
    if len(x) != len(curves):
        raise InconsistentReference("reference cycle must have one entry per curve")
    return x


# -- validation --------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    message: str = ""


@dataclass
class ValidationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def add(self, name: str, ok: bool, message: str = "") -> None:
        self.checks.append(Check(name, ok, "" if ok else message))

    def __bool__(self) -> bool:
        return self.ok


def _connected(nodes: Sequence[str], edges: Sequence[tuple[str, str]]) -> bool:
    if not nodes:
        return False
    adj: dict[str, set[str]] = {n: set() for n in nodes}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(nodes)


def bridges(m: MulticurveType) -> list[str]:
    """Curves whose removal disconnects the dual graph (separating curves)."""
    nodes = m.component_ids
    ends = [(c.tail, c.head) for c in m.curves]
    out = []
    for i, c in enumerate(m.curves):
        if c.is_loop:
            continue
        if not _connected(nodes, ends[:i] + ends[i + 1:]):
            out.append(c.id)
    return out


def validate(m: MulticurveType) -> ValidationReport:
    """Check every structural invariant of a multicurve type.

    Failures are collected in the report; nothing is raised.
    """
    report = ValidationReport()
    comp_ids = m.component_ids
    report.add("surface genus", m.surface_genus >= 0, f"surface genus {m.surface_genus} is negative")
    report.add("nonempty", bool(m.curves), "a multicurve has at least one curve")
    report.add("unique component ids", len(set(comp_ids)) == len(comp_ids), "duplicate component ids")
    report.add("unique curve ids", len(set(m.curve_ids)) == len(m.curve_ids), "duplicate curve ids")
    report.add(
        "component genus",
        all(c.genus >= 0 for c in m.components),
        "component genus must be nonnegative",
    )
    missing = sorted({e for c in m.curves for e in (c.tail, c.head)} - set(comp_ids))
    report.add("components exist", not missing, f"curves reference unknown components {missing}")
    if missing:
        return report
    report.add(
        "connected",
        _connected(comp_ids, [(c.tail, c.head) for c in m.curves]),
        "dual graph is not connected",
    )
    bad = [c.id for c in m.components if m.euler_characteristic(c) >= 0]
    report.add(
        "negative euler characteristic",
        not bad,
        f"components {bad} have nonnegative Euler characteristic (disk, annulus or sphere)",
    )
    total = sum(m.euler_characteristic(c) for c in m.components)
    report.add(
        "euler characteristic sum",
        total == 2 - 2 * m.surface_genus,
        f"Euler characteristics sum to {total}, expected {2 - 2 * m.surface_genus}",
    )
    if m.nonseparating:
        sep = bridges(m) if report.ok else []
        report.add("nonseparating", not sep, f"curves {sep} are separating (bridges of the dual graph)")
    return report


def require_valid(m: MulticurveType) -> None:
    report = validate(m)
    if not report.ok:
        raise InvalidMulticurve(report)


def relation_matrix(m: MulticurveType) -> IntMatrix:
    """One subsurface borrowing relation per component (head minus tail)."""
    require_valid(m)
    rows = []
    for comp in m.components:
        row = []
        for c in m.curves:
            row.append((c.head == comp.id) - (c.tail == comp.id))
        rows.append(row)
    return rows


def as_presentation(m: Structure, x: Sequence[int] | Mapping[str, int] | None = None) -> RelationPresentation:
    """Relation presentation of a structure, optionally replacing its reference."""
    if isinstance(m, RelationPresentation):
        return m.with_reference(x)
    rows = relation_matrix(m)
    ref = reference_vector(m.curve_ids, x) if x is not None else None
    return RelationPresentation(m.curve_ids, tuple(map(tuple, rows)), ref)


# -- homology of curve classes -----------------------------------------------


@dataclass(frozen=True)
class HomologyQuotient:
    """The curve lattice modulo the relation lattice.

    ``coordinates[i]`` is the class of curve ``i`` in a basis of the
    (torsion-free) quotient, so two integer cycles are homologous exactly
    when their coordinate images agree.
    """

    curves: tuple[str, ...]
    relations: tuple[tuple[int, ...], ...]
    factors: tuple[int, ...]
    rank: int
    coordinates: tuple[tuple[int, ...], ...]

    @classmethod
    def from_relations(cls, curves: Sequence[str], relations: Sequence[Sequence[int]]) -> "HomologyQuotient":
        n = len(curves)
        snf = smith_normal_form(relations, n)
        r = snf.rank
        torsion = [f for f in snf.factors[:r] if f != 1]
        if torsion:
            raise ValueError(f"relation lattice is not saturated (torsion factors {torsion})")
        coords = tuple(tuple(row[r:]) for row in snf.right)
        return cls(tuple(curves), tuple(map(tuple, relations)), snf.factors, r, coords)

    @property
    def D(self) -> int:
        return len(self.curves) - self.rank

    def class_of(self, cycle: Sequence) -> tuple:
        """Coordinates of the class of a (rational or integer) cycle."""
        return tuple(
            sum(k * self.coordinates[i][j] for i, k in enumerate(cycle))
            for j in range(self.D)
        )

    def matrix(self) -> list[list[int]]:
        """Classes of the curves as the columns of a ``D x |M|`` matrix."""
        return [[self.coordinates[i][j] for i in range(len(self.curves))] for j in range(self.D)]

    def homologous(self, i: int, j: int, up_to_sign: bool = True) -> bool:
        """Whether curves ``i`` and ``j`` are homologous, via lattice membership."""
        n = len(self.curves)
        diff = [0] * n
        diff[i] += 1
        diff[j] -= 1
        if lattice_member(diff, self.relations):
            return True
        if up_to_sign:
            total = [0] * n
            total[i] += 1
            total[j] += 1
            return lattice_member(total, self.relations)
        return False

    def classes(self) -> list[list[int]]:
        """Partition of curve indices into homologous (up to sign) blocks."""
        blocks: list[list[int]] = []
        for i in range(len(self.curves)):
            for block in blocks:
                if self.homologous(block[0], i):
                    block.append(i)
                    break
            else:
                blocks.append([i])
        return blocks


def quotient(m: Structure) -> HomologyQuotient:
    return as_presentation(m).quotient


@dataclass(frozen=True)
class Stats:
    curves: int
    D: int
    C: int
    BP: int
    B: int
    N: int | None = None
    P: int | None = None
    Z: int | None = None
    sum_component_genus: int | None = None

    def as_dict(self) -> dict[str, int | None]:
        return {
            "|M|": self.curves,
            "D": self.D,
            "N": self.N,
            "P": self.P,
            "Z": self.Z,
            "C": self.C,
            "BP": self.BP,
            "B": self.B,
        }


def stats(m: Structure) -> Stats:
    """Homological statistics of a multicurve or relation presentation.

    Curves are grouped into classes up to sign because the orientation of a
    multicurve does not change which curves are homologous.
    """
    q = quotient(m)
    n = len(q.curves)
    C = len(q.classes())
    base = dict(curves=n, D=q.D, C=C, BP=n - C, B=n - q.D)
    if isinstance(m, MulticurveType):
        return Stats(
            **base,
            N=m.N,
            P=m.P,
            Z=m.Z,
            sum_component_genus=sum(c.genus for c in m.components),
        )
    return Stats(**base)
