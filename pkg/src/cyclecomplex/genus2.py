"""Genus-2 homology splittings and the quotient tree of the cycle complex.

Homology of ``S_2`` is ``Z^4`` in a symplectic basis ``([a], [a'], [b], [b'])``
with ``J(a, a') = J(b, b') = 1``; the class ``x`` is ``[a]``.

Each isotropic plane through ``x`` contributes a tree.  Its vertices are the
distinguished vertex (a single curve in the class ``x``, weight 1) and
unordered bases ``{A, B}`` of the plane with ``pA + qB = x`` for positive
``p, q`` (weight ``p + q``).  A vertex with ``p > q`` hangs below
``{A, A + B}`` with weights ``(p - q, q)``; descending to the root is the
subtractive Euclidean algorithm on ``(p, q)``.  The whole quotient glues these
trees at the distinguished vertex.  Since infinitely many weight-2 vertices
hang below the root, trees are truncated by a weight bound and a bound on
the coordinates of the classes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Sequence

from .exactlinalg import det, primitive, rational_rank

Vec = tuple[int, ...]

A, A_DUAL, B, B_DUAL = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)


def pairing(u: Sequence[int], v: Sequence[int]) -> int:
    """Algebraic intersection form on ``H_1(S_2)``."""
    return u[0] * v[1] - u[1] * v[0] + u[2] * v[3] - u[3] * v[2]


def det2(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _add(*vs: Sequence[int], scale: Sequence[int] | None = None) -> Vec:
    scale = scale or [1] * len(vs)
    return tuple(sum(k * v[i] for k, v in zip(scale, vs)) for i in range(len(vs[0])))


# -- splittings ----------------------------------------------------------------


@dataclass(frozen=True)
class Splitting:
    """``H_1 = V1 (+) V2`` with ``V1`` containing ``[a]`` and ``V2`` containing ``[b]``."""

    index: int
    first: tuple[Vec, Vec]
    second: tuple[Vec, Vec]

    def violations(self) -> list[str]:
        out = []
        if any(pairing(u, v) for u in self.first for v in self.second):
            out.append("summands are not orthogonal")
        if abs(pairing(*self.first)) != 1:
            out.append("form on the first summand is not unimodular")
        if abs(pairing(*self.second)) != 1:
            out.append("form on the second summand is not unimodular")
        if abs(det([*self.first, *self.second])) != 1:
            out.append("summands do not span the lattice")
        if rational_rank([*self.first, A]) != 2:
            out.append("x does not lie in the first summand")
        return out


def splitting_from_index(k: int) -> Splitting:
    """The splitting ``<[a], [a'] + k[b]> (+) <[b], [b'] + k[a]>``."""
    s = Splitting(
        k,
        (A, _add(A_DUAL, B, scale=[1, k])),
        (B, _add(B_DUAL, A, scale=[1, k])),
    )
    problems = s.violations()
    if problems:
        raise AssertionError(f"splitting {k}: {problems}")
    return s


def splitting_certificate(k: int, l: int) -> int:
    """Determinant of ``[a'] + k[b]`` and ``[a'] + l[b]`` in the basis ``([a'], [b])``."""
    return det2((1, k), (1, l))


@dataclass(frozen=True)
class SplittingLine:
    indices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]  # (k, l, certificate)


def splitting_line(bound: int) -> SplittingLine:
    """Splittings with ``|k| <= bound``; two are adjacent when their
    certificate determinant is a unit."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    ks = tuple(range(-bound, bound + 1))
    edges = []
    for i, k in enumerate(ks):
        for l in ks[i + 1:]:
            d = splitting_certificate(k, l)
            if abs(d) == 1:
                edges.append((k, l, d))
    return SplittingLine(ks, tuple(edges))


# -- plane trees ---------------------------------------------------------------


@dataclass(frozen=True, order=True)
class QuotientTreeNode:
    """Distinguished vertex (``classes == ()``) or a weighted basis pair."""

    weight: int
    classes: tuple[Vec, ...] = ()
    weights: tuple[int, ...] = ()

    @property
    def kind(self) -> str:
        return "pair" if self.classes else "distinguished"

    @property
    def is_root(self) -> bool:
        return not self.classes

    @staticmethod
    def pair(A: Vec, p: int, B: Vec, q: int) -> "QuotientTreeNode":
        (A, p), (B, q) = sorted([(tuple(A), p), (tuple(B), q)])
        return QuotientTreeNode(p + q, (A, B), (p, q))

    def label(self) -> str:
        if self.is_root:
            return "x"
        (A, B), (p, q) = self.classes, self.weights
        return f"w={self.weight}: {p}*{A} + {q}*{B}"


ROOT = QuotientTreeNode(1)


def parent(node: QuotientTreeNode) -> QuotientTreeNode:
    """The unique neighbour of smaller weight."""
    if node.is_root:
        raise ValueError("the distinguished vertex has no parent")
    (A, B), (p, q) = node.classes, node.weights
    if p == q:
        return ROOT
    if p < q:
        A, B, p, q = B, A, q, p
    return QuotientTreeNode.pair(A, p - q, _add(A, B), q)


def children(node: QuotientTreeNode, x: Vec, coord_bound: int) -> Iterator[QuotientTreeNode]:
    """Neighbours of larger weight whose classes lie in the coordinate box."""
    if node.is_root:
        C = coord_bound
        for u in range(-C, C + 1):
            for v in range(-C, C + 1):
                A = (u, v)
                Bv = (x[0] - u, x[1] - v)
                if abs(det2(A, x)) == 1 and max(map(abs, Bv)) <= C and A < Bv:
                    yield QuotientTreeNode.pair(A, 1, Bv, 1)
        return
    (A, B), (p, q) = node.classes, node.weights
    for P, s, Q, t in ((A, p, B, q), (B, q, A, p)):
        new = _add(Q, P, scale=[1, -1])
        if max(map(abs, new)) <= coord_bound:
            yield QuotientTreeNode.pair(P, s + t, new, t)


@dataclass
class QuotientTree:
    x: Vec
    weight_bound: int
    coord_bound: int
    parents: dict[QuotientTreeNode, QuotientTreeNode | None] = field(default_factory=dict)

    @property
    def nodes(self) -> list[QuotientTreeNode]:
        return sorted(self.parents)

    @property
    def edges(self) -> list[tuple[QuotientTreeNode, QuotientTreeNode]]:
        return sorted((c, p) for c, p in self.parents.items() if p is not None)

    def root_degree(self) -> int:
        return sum(1 for p in self.parents.values() if p == ROOT)

    def pairs(self) -> list[QuotientTreeNode]:
        return [n for n in self.nodes if not n.is_root]


def plane_quotient_tree(x: Sequence[int], weight_bound: int, coord_bound: int) -> QuotientTree:
    """The tree for one isotropic plane, truncated at the given bounds.

    ``x`` is given in coordinates of the plane.  Built top-down from the
    distinguished vertex; a vertex is kept when its weight and coordinates
    are within bounds.
    """
    x = tuple(x)
    if len(x) != 2 or not primitive(x):
        raise ValueError("x must be a primitive vector of Z^2")
    if weight_bound < 1 or coord_bound < 1:
        raise ValueError("bounds must be positive")
    tree = QuotientTree(x, weight_bound, coord_bound, {ROOT: None})
    queue = deque([ROOT])
    while queue:
        node = queue.popleft()
        for child in children(node, x, coord_bound):
            if child.weight > weight_bound or child in tree.parents:
                continue
            tree.parents[child] = node
            queue.append(child)
    return tree


def descent_length(p: int, q: int) -> int:
    """Sum of the continued fraction partial quotients of ``p/q``."""
    total = 0
    while q:
        total += p // q
        p, q = q, p % q
    return total


def node_violations(node: QuotientTreeNode, x: Sequence[int]) -> list[str]:
    if node.is_root:
        return []
    (A, B), (p, q) = node.classes, node.weights
    out = []
    if abs(det2(A, B)) != 1:
        out.append("classes are not a basis")
    if gcd(p, q) != 1:
        out.append("weights are not coprime")
    if p <= 0 or q <= 0 or p + q != node.weight:
        out.append("bad weights")
    if _add(A, B, scale=[p, q]) != tuple(x):
        out.append("pA + qB != x")
    return out


# -- gluing --------------------------------------------------------------------


def isotropic_planes(bound: int) -> list[tuple[int, int]]:
    """Planes ``<[a], s[b] + t[b']>`` through ``x``, one per primitive ``(s, t)``
    up to sign with ``|s|, |t| <= bound``."""
    out = []
    for s in range(-bound, bound + 1):
        for t in range(-bound, bound + 1):
            if gcd(s, t) != 1:
                continue
            if s < 0 or (s == 0 and t < 0):
                continue
            out.append((s, t))
    return sorted(out, key=lambda st: (max(abs(st[0]), abs(st[1])), st))


def plane_basis(plane: tuple[int, int]) -> tuple[Vec, Vec]:
    s, t = plane
    return A, (0, 0, s, t)


def to_homology(plane: tuple[int, int], v: Sequence[int]) -> Vec:
    e1, e2 = plane_basis(plane)
    return _add(e1, e2, scale=list(v))


@dataclass
class GluedQuotient:
    planes: list[tuple[int, int]]
    trees: dict[tuple[int, int], QuotientTree]

    @property
    def vertex_count(self) -> int:
        return 1 + sum(len(t.pairs()) for t in self.trees.values())

    @property
    def edge_count(self) -> int:
        return sum(len(t.edges) for t in self.trees.values())


def assemble_full_quotient(plane_bound: int, weight_bound: int, coord_bound: int) -> GluedQuotient:
    """Plane trees for every enumerated isotropic plane, sharing one root."""
    if min(plane_bound, weight_bound, coord_bound) < 1:
        raise ValueError("bounds must be positive")
    planes = isotropic_planes(plane_bound)
    trees = {}
    for plane in planes:
        e1, e2 = plane_basis(plane)
        if pairing(e1, e2) or pairing(e2, e2):
            raise AssertionError(f"plane {plane} is not isotropic")
        trees[plane] = plane_quotient_tree((1, 0), weight_bound, coord_bound)
    return GluedQuotient(planes, trees)


# -- output --------------------------------------------------------------------


def _node_id(node: QuotientTreeNode, prefix: str = "") -> str:
    if node.is_root:
        return "x"
    (A, B), (p, q) = node.classes, node.weights
    return prefix + "n_" + "_".join(str(v).replace("-", "m") for v in (*A, p, *B, q))


def _class_id(v: Sequence[int]) -> str:
    return "c_" + "_".join(str(t).replace("-", "m") for t in v)


def tree_to_dot(tree: QuotientTree, farey: bool = False) -> str:
    lines = ["graph quotient_tree {", '  node [shape=box, fontsize=10];']
    lines.append(f'  label="x={tree.x} W={tree.weight_bound} C={tree.coord_bound}";')
    for node in tree.nodes:
        lines.append(f'  {_node_id(node)} [label="{node.label()}"];')
    for child, par in tree.edges:
        lines.append(f"  {_node_id(par)} -- {_node_id(child)};")
    if farey:
        lines.extend(_farey_overlay(tree))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _farey_overlay(tree: QuotientTree) -> list[str]:
    # primitive classes up to sign; edges join classes forming a basis
    classes = {tree.x}
    for node in tree.pairs():
        classes.update(node.classes)
    unsigned = sorted({max(v, tuple(-t for t in v)) for v in classes})
    out = ["  subgraph farey {", '    node [shape=point, color=gray];', '    edge [color=gray, style=dotted];']
    for v in unsigned:
        out.append(f'    {_class_id(v)} [xlabel="{v}"];')
    for i, u in enumerate(unsigned):
        for v in unsigned[i + 1:]:
            if abs(det2(u, v)) == 1:
                out.append(f"    {_class_id(u)} -- {_class_id(v)};")
    out.append("  }")
    return out


def tree_to_json(tree: QuotientTree) -> dict:
    ids = {n: _node_id(n) for n in tree.nodes}
    return {
        "x": list(tree.x),
        "weight_bound": tree.weight_bound,
        "coord_bound": tree.coord_bound,
        "nodes": [
            {
                "id": ids[n],
                "kind": n.kind,
                "weight": n.weight,
                "classes": [list(c) for c in n.classes],
                "weights": list(n.weights),
                "parent": ids[tree.parents[n]] if tree.parents[n] is not None else None,
            }
            for n in tree.nodes
        ],
        "edges": [[ids[c], ids[p]] for c, p in tree.edges],
    }


def glued_to_dot(glued: GluedQuotient) -> str:
    lines = ["graph full_quotient {", '  node [shape=box, fontsize=10];', '  x [label="x"];']
    for plane in glued.planes:
        tree = glued.trees[plane]
        prefix = "p" + "_".join(str(t).replace("-", "m") for t in plane) + "_"
        for node in tree.pairs():
            (u, v), (p, q) = node.classes, node.weights
            label = f"w={node.weight}: {p}*{to_homology(plane, u)} + {q}*{to_homology(plane, v)}"
            lines.append(f'  {_node_id(node, prefix)} [label="{label}"];')
        for child, par in tree.edges:
            lines.append(f"  {_node_id(par, prefix)} -- {_node_id(child, prefix)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def glued_to_json(glued: GluedQuotient) -> dict:
    planes = []
    for plane in glued.planes:
        tree = tree_to_json(glued.trees[plane])
        for node in tree["nodes"]:
            node["classes"] = [list(to_homology(plane, c)) for c in node["classes"]]
        planes.append({"plane": [list(v) for v in plane_basis(plane)], "tree": tree})
    return {"vertex_count": glued.vertex_count, "edge_count": glued.edge_count, "planes": planes}


def splittings_to_dot(line: SplittingLine) -> str:
    lines = ["graph splittings {"]
    for k in line.indices:
        s = splitting_from_index(k)
        lines.append(f'  k{str(k).replace("-", "m")} [label="k={k}\\nV1={list(s.first)}\\nV2={list(s.second)}"];')
    for k, l, d in line.edges:
        lines.append(f'  k{str(k).replace("-", "m")} -- k{str(l).replace("-", "m")} [label="det={d}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def splittings_to_json(line: SplittingLine) -> dict:
    return {
        "splittings": [
            {
                "index": k,
                "first": [list(v) for v in splitting_from_index(k).first],
                "second": [list(v) for v in splitting_from_index(k).second],
            }
            for k in line.indices
        ],
        "edges": [{"pair": [k, l], "determinant": d} for k, l, d in line.edges],
    }
