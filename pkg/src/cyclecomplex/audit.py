"""Dimension bookkeeping over all multicurve types in small genus.

Types are enumerated as connected, bridgeless multigraphs whose vertices carry
a genus and have negative Euler characteristic, with total Euler
characteristic ``2 - 2g``.  Every such graph is audited, whether or not it is
realised by a multicurve in the complex; for inequalities a superset is the
conservative choice.
"""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass, field
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

from .cellpoly import cell_polytope
from .multicurve import InvalidMulticurve, MulticurveType, ValidationReport, bridges, stats, validate

TORELLI_CD = "3g-5"
JOHNSON_CD = "2g-3"
MAX_ABELIAN_RANK = "2g-3"


# -- enumeration ---------------------------------------------------------------

Matrix = tuple[tuple[int, ...], ...]


def _partitions(total: int, parts: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Nonincreasing tuples of ``parts`` nonnegative ints summing to ``total``."""
    if largest is None:
        largest = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, largest), -1, -1):
        if first * parts < total:
            break
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _degree_sequences(genera: Sequence[int], total: int, multi: bool) -> Iterator[tuple[int, ...]]:
    """Degree vectors with the given sum, one per vertex, nonincreasing within
    runs of equal genus, each large enough for negative Euler characteristic."""
    n = len(genera)

    def rec(i: int, remaining: int, cap: int | None) -> Iterator[tuple[int, ...]]:
        if i == n:
            if remaining == 0:
                yield ()
            return
        low = max(3 - 2 * genera[i], 2)
        if i > 0 and genera[i] == genera[i - 1] and cap is not None:
            high = min(remaining, cap)
        else:
            high = remaining
        for d in range(high, low - 1, -1):
            if n == 1 and d % 2:
                continue
            for rest in rec(i + 1, remaining - d, d):
                yield (d,) + rest

    yield from rec(0, total, None)


def _fill(degrees: Sequence[int]) -> Iterator[list[list[int]]]:
    """Symmetric multiplicity matrices (loops on the diagonal count twice)."""
    n = len(degrees)
    a = [[0] * n for _ in range(n)]
    rem = list(degrees)
    cells = [(i, j) for i in range(n) for j in range(i, n)]

    def rec(t: int) -> Iterator[list[list[int]]]:
        if t == len(cells):
            if not any(rem):
                yield [row[:] for row in a]
            return
        i, j = cells[t]
        last_in_row = j == n - 1
        if i == j:
            options = range(rem[i] // 2, -1, -1)
        else:
            options = range(min(rem[i], rem[j]), -1, -1)
        for k in options:
            used = 2 * k if i == j else k
            if i != j and last_in_row and rem[i] - k != 0:
                continue
            if i == j and n == 1 and rem[i] - used != 0:
                continue
            a[i][j] = a[j][i] = k
            rem[i] -= used
            if i != j:
                rem[j] -= k
            yield from rec(t + 1)
            rem[i] += used
            if i != j:
                rem[j] += k
            a[i][j] = a[j][i] = 0

    yield from rec(0)


def _blocks(labels: Sequence) -> list[list[int]]:
    blocks: list[list[int]] = []
    for i, lab in enumerate(labels):
        if blocks and labels[blocks[-1][0]] == lab:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    return blocks


def _block_permutations(labels: Sequence) -> Iterator[list[int]]:
    blocks = _blocks(labels)
    for choice in product(*(permutations(b) for b in blocks)):
        yield [v for part in choice for v in part]


def _canonical(labels: Sequence, a: Sequence[Sequence[int]]) -> tuple:
    """Smallest encoding of ``a`` over relabellings that keep ``labels`` sorted."""
    n = len(labels)
    best = None
    for perm in _block_permutations(labels):
        code = tuple(a[perm[i]][perm[j]] for i in range(n) for j in range(n))
        if best is None or code < best:
            best = code
    return (tuple(labels), best)


def _connected_bridgeless(a: Sequence[Sequence[int]]) -> bool:
    n = len(a)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) for _ in range(a[i][j])]

    def connected(es) -> bool:
        adj = {i: set() for i in range(n)}
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        seen, stack = {0}, [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n

    if not connected(edges):
        return False
    return all(a[i][j] > 1 or connected(edges[:t] + edges[t + 1:]) for t, (i, j) in enumerate(edges))


@dataclass(frozen=True)
class TypeKey:
    """Canonical description of an unoriented type."""

    genera: tuple[int, ...]
    matrix: Matrix

    def encode(self) -> str:
        rows = ";".join(",".join(map(str, r)) for r in self.matrix)
        return f"g={','.join(map(str, self.genera))}|{rows}"


def _to_type(g: int, genera: Sequence[int], a: Sequence[Sequence[int]]) -> MulticurveType:
    comps = {f"v{i}": gi for i, gi in enumerate(genera)}
    curves = []
    n = len(genera)
    for i in range(n):
        for j in range(i, n):
            for _ in range(a[i][j]):
                curves.append((f"c{len(curves)}", f"v{i}", f"v{j}"))
    return MulticurveType.build(g, comps, curves)


def type_key(m: MulticurveType) -> TypeKey:
    """Canonical key of the unoriented dual graph of ``m``."""
    ids = m.component_ids
    idx = {c: i for i, c in enumerate(ids)}
    n = len(ids)
    a = [[0] * n for _ in range(n)]
    for c in m.curves:
        i, j = idx[c.tail], idx[c.head]
        a[i][j] += 1
        if i != j:
            a[j][i] += 1
    genera = [c.genus for c in m.components]
    degrees = [2 * a[i][i] + sum(a[i][j] for j in range(n) if j != i) for i in range(n)]
    order = sorted(range(n), key=lambda i: (-genera[i], -degrees[i]))
    labels = [(genera[i], degrees[i]) for i in order]
    b = [[a[order[i]][order[j]] for j in range(n)] for i in range(n)]
    labs, code = _canonical(labels, b)
    best = [list(code[i * n:(i + 1) * n]) for i in range(n)]
    return TypeKey(tuple(l[0] for l in labs), tuple(map(tuple, best)))


def enumerate_types(g: int, max_curves: int | None = None, min_curves: int = 1) -> Iterator[MulticurveType]:
    """All unoriented multicurve types in ``S_g`` with at most ``max_curves`` curves.

    Types are produced once per isomorphism class, in a fixed order (by
    curve count, component count, then canonical key).  Curves carry a
    default orientation from lower to higher component index; use
    :func:`orientation_classes` for the others.
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    if max_curves is None:
        max_curves = 3 * g - 3
    for E in range(max(1, min_curves), max_curves + 1):
        for N in range(1, 2 * g - 1):
            D = E - N + 1
            if D < 1 or D > g:
                continue
            seen: dict[tuple, MulticurveType] = {}
            for genera in _partitions(g - D, N):
                for degrees in _degree_sequences(genera, 2 * E, N > 1):
                    labels = list(zip(genera, degrees))
                    for a in _fill(degrees):
                        if not _connected_bridgeless(a):
                            continue
                        key = _canonical(labels, a)
                        if key in seen:
                            continue
                        n = len(genera)
                        code = key[1]
                        canon = [list(code[i * n:(i + 1) * n]) for i in range(n)]
                        seen[key] = _to_type(g, genera, canon)
            for key in sorted(seen):
                yield seen[key]


def orientation_classes(m: MulticurveType) -> Iterator[MulticurveType]:
    """Orientations of ``m`` up to isomorphism and global reversal.

    Loops are left as they are; reversing a loop only renames its class.
    """
    ids = m.component_ids
    idx = {c: i for i, c in enumerate(ids)}
    n = len(ids)
    mult: dict[tuple[int, int], int] = {}
    loops = [0] * n
    for c in m.curves:
        i, j = idx[c.tail], idx[c.head]
        if i == j:
            loops[i] += 1
        else:
            key = (min(i, j), max(i, j))
            mult[key] = mult.get(key, 0) + 1
    pairs = sorted(mult)
    genera = [c.genus for c in m.components]
    degrees = [m.degree(c) for c in ids]
    labels = list(zip(genera, degrees))
    order = sorted(range(n), key=lambda i: labels[i])
    sorted_labels = [labels[i] for i in order]
    pos = {v: p for p, v in enumerate(order)}
    seen = set()
    for choice in product(*(range(mult[p] + 1) for p in pairs)):
        out = [[0] * n for _ in range(n)]
        for (i, j), forward in zip(pairs, choice):
            out[pos[i]][pos[j]] += forward
            out[pos[j]][pos[i]] += mult[(i, j)] - forward
        for i in range(n):
            out[pos[i]][pos[i]] = loops[i]
        reverse = [[out[j][i] for j in range(n)] for i in range(n)]
        key = min(_canonical(sorted_labels, out), _canonical(sorted_labels, reverse))
        if key in seen:
            continue
        seen.add(key)
        curves = []
        for (i, j), forward in zip(pairs, choice):
            for t in range(mult[(i, j)]):
                tail, head = (i, j) if t < forward else (j, i)
                curves.append((ids[tail], ids[head]))
        for i in range(n):
            curves.extend([(ids[i], ids[i])] * loops[i])
        yield MulticurveType.build(
            m.surface_genus,
            [(c.id, c.genus) for c in m.components],
            [(f"c{t}", tail, head) for t, (tail, head) in enumerate(curves)],
            m.nonseparating,
        )


def strongly_connected(m: MulticurveType) -> bool:
    ids = m.component_ids

    def reach(forward: bool) -> set[str]:
        seen, stack = {ids[0]}, [ids[0]]
        while stack:
            u = stack.pop()
            for c in m.curves:
                a, b = (c.tail, c.head) if forward else (c.head, c.tail)
                if a == u and b not in seen:
                    seen.add(b)
                    stack.append(b)
        return seen

    return len(reach(True)) == len(ids) == len(reach(False))


def robbins_orientation(m: MulticurveType) -> MulticurveType:
    """A strongly connected orientation of a bridgeless type.

    Depth-first search tree edges point away from the root and every other
    edge points back towards the root side.
    """
    if bridges(m):
        raise ValueError("a graph with bridges has no strongly connected orientation")
    ids = m.component_ids
    depth: dict[str, int] = {ids[0]: 0}
    oriented: dict[str, tuple[str, str]] = {}

    def dfs(u: str) -> None:
        for c in m.curves:
            if c.id in oriented or u not in (c.tail, c.head):
                continue
            v = c.head if c.tail == u else c.tail
            if v not in depth:
                depth[v] = depth[u] + 1
                oriented[c.id] = (u, v)
                dfs(v)
            else:
                oriented[c.id] = (u, v) if depth[u] >= depth[v] else (v, u)

    dfs(ids[0])
    return MulticurveType.build(
        m.surface_genus,
        [(c.id, c.genus) for c in m.components],
        [(c.id, *oriented[c.id]) for c in m.curves],
        m.nonseparating,
    )


# -- ledgers -------------------------------------------------------------------


@dataclass(frozen=True)
class DimensionLedger:
    g: int
    curves: int
    D: int
    N: int
    P: int
    Z: int
    C: int
    BP: int
    B: int
    sum_component_genus: int
    sum_degrees: int
    torelli_component_bound: int
    torelli_bound: int
    johnson_component_bound: int
    johnson_bound: int
    key: str = ""

    @property
    def torelli_budget(self) -> int:
        return self.torelli_bound + self.B

    @property
    def johnson_budget(self) -> int:
        return self.johnson_bound + self.B

    @property
    def bpdp_ok(self) -> bool:
        return self.BP + 2 <= self.D + self.P

    @property
    def bpdp_equality(self) -> bool:
        return self.BP + 2 == self.D + self.P

    @property
    def torelli_budget_ok(self) -> bool:
        return self.torelli_budget <= 3 * self.g - 5

    @property
    def johnson_budget_ok(self) -> bool:
        return self.johnson_budget == 2 * self.g - 3

    def identity_failures(self) -> list[str]:
        """Structural identities that fail for this ledger (expected: none)."""
        out = []
        if self.N - 1 != self.curves - self.D:
            out.append("N-1 != |M|-D")
        if self.D != self.g - self.sum_component_genus:
            out.append("D != g - sum g_i")
        if self.sum_degrees != 2 * self.curves:
            out.append("sum p_i != 2|M|")
        if self.torelli_component_bound != self.torelli_bound:
            out.append("torelli component sum != 3g-3-P-|M|+BP")
        if self.johnson_component_bound != self.johnson_bound:
            out.append("johnson component sum != 2g-3+D-|M|")
        # the torelli budget is exactly the bpdp inequality rearranged
        if (3 * self.g - 5) - self.torelli_budget != (self.D + self.P) - (self.BP + 2):
            out.append("torelli budget and bpdp differ")
        return out


def ledger(m: MulticurveType) -> DimensionLedger:
    """Every quantity in the stabilizer dimension count for ``m``."""
    report = validate(m)
    if not report.ok:
        raise InvalidMulticurve(report)
    s = stats(m)
    g = m.surface_genus
    degrees = {c.id: m.degree(c.id) for c in m.components}
    torelli_parts = sum(
        (3 * c.genus + degrees[c.id] - 4) if c.genus > 0 else (degrees[c.id] - 3) for c in m.components
    )
    johnson_parts = sum(
        (2 * c.genus + degrees[c.id] - 3) if c.genus > 0 else (degrees[c.id] - 3) for c in m.components
    )
    return DimensionLedger(
        g=g,
        curves=s.curves,
        D=s.D,
        N=s.N,
        P=s.P,
        Z=s.Z,
        C=s.C,
        BP=s.BP,
        B=s.B,
        sum_component_genus=s.sum_component_genus,
        sum_degrees=sum(degrees.values()),
        torelli_component_bound=torelli_parts + s.BP,
        torelli_bound=3 * g - 3 - s.P - s.curves + s.BP,
        johnson_component_bound=johnson_parts,
        johnson_bound=2 * g - 3 + s.D - s.curves,
        key=type_key(m).encode(),
    )


@dataclass
class Violation:
    ledger: DimensionLedger
    problems: list[str]


@dataclass
class AuditReport:
    g: int
    max_curves: int
    ledgers: list[DimensionLedger] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)
    excluded: list[tuple[MulticurveType, ValidationReport]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def equality_cases(self) -> list[DimensionLedger]:
        return [l for l in self.ledgers if l.bpdp_equality]

    def summary(self) -> dict[str, object]:
        return {
            "g": self.g,
            "max_curves": self.max_curves,
            "types": len(self.ledgers),
            "violations": len(self.violations),
            "excluded": len(self.excluded),
            "bpdp_equality_cases": len(self.equality_cases),
            "torelli_cd": TORELLI_CD,
            "johnson_cd": JOHNSON_CD,
            "max_abelian_rank": MAX_ABELIAN_RANK,
            "universe": "all bridgeless decorated dual graphs (superset of realised types)",
        }


def audit_types(g: int, types: Iterable[MulticurveType], max_curves: int = 0) -> AuditReport:
    """Ledger and check every valid type; invalid ones are set aside."""
    report = AuditReport(g, max_curves)
    for m in types:
        check = validate(m)
        if not check.ok:
            report.excluded.append((m, check))
            continue
        led = ledger(m)
        problems = led.identity_failures()
        if not led.bpdp_ok:
            problems.append("BP+2 > D+P")
        if not led.torelli_budget_ok:
            problems.append("torelli budget exceeds 3g-5")
        if not led.johnson_budget_ok:
            problems.append("johnson budget differs from 2g-3")
        report.ledgers.append(led)
        if problems:
            report.violations.append(Violation(led, problems))
    return report


def verify_inequalities(g: int, max_curves: int | None = None) -> AuditReport:
    """Audit every enumerated type in genus ``g``."""
    if max_curves is None:
        max_curves = 3 * g - 3
    return audit_types(g, enumerate_types(g, max_curves), max_curves)


def complex_dimension(g: int, max_curves: int | None = None) -> int:
    """Largest cell dimension among types admitting an admissible orientation.

    The upper bound is read off every enumerated type; the maximum is then
    certified by building an actual cell of that dimension.
    """
    if max_curves is None:
        max_curves = 3 * g - 3
    by_B: dict[int, MulticurveType] = {}
    for m in enumerate_types(g, max_curves):
        B = m.N - 1
        by_B.setdefault(B, m)
    for B in sorted(by_B, reverse=True):
        oriented = robbins_orientation(by_B[B])
        x = {c: 1 for c in oriented.curve_ids}
        cell = cell_polytope(oriented, x)
        if cell.dimension == B:
            return B
    raise RuntimeError("no admissible type found")


CSV_HEADER = (
    "g", "|M|", "D", "N", "P", "Z", "C", "BP", "B",
    "torelli_bound", "johnson_bound", "bpdp_ok", "torelli_budget_ok", "johnson_budget_ok",
    "bpdp_equality", "type",
)


def to_csv(report: AuditReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for l in sorted(report.ledgers, key=lambda l: (l.curves, l.N, l.key)):
        w.writerow([
            l.g, l.curves, l.D, l.N, l.P, l.Z, l.C, l.BP, l.B,
            l.torelli_bound, l.johnson_bound,
            int(l.bpdp_ok), int(l.torelli_budget_ok), int(l.johnson_budget_ok),
            int(l.bpdp_equality), l.key,
        ])
    return buf.getvalue()


def ledger_dict(l: DimensionLedger) -> dict[str, object]:
    out = asdict(l)
    out.update(
        torelli_budget=l.torelli_budget,
        johnson_budget=l.johnson_budget,
        bpdp_ok=l.bpdp_ok,
        torelli_budget_ok=l.torelli_budget_ok,
        johnson_budget_ok=l.johnson_budget_ok,
    )
    return out
