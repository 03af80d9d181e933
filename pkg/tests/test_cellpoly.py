import random
from fractions import Fraction

import pytest

from cyclecomplex.audit import enumerate_types, orientation_classes
from cyclecomplex.cellpoly import (
    Cycle,
    InfeasibleClass,
    NotAdmissible,
    _active_constraint_edges,
    _hull_edges,
    cell_polytope,
    edge_cycle,
    enumerate_basic_cycles,
    is_admissible,
    recession_rays,
    vertex_coordinates,
)
from cyclecomplex.exactlinalg import mat_vec, rational_rank
from cyclecomplex.multicurve import InconsistentReference, RelationPresentation, as_presentation

import figures
import lp_oracle


def labels(cycles):
    return {c.label() for c in cycles}


def random_instances(seed, count):
    """Admissible (presentation, reference) pairs drawn from enumerated types."""
    rng = random.Random(seed)
    pool = [o for g, k in ((2, 3), (3, 6)) for m in enumerate_types(g, k) for o in orientation_classes(m)]
    out = []
    while len(out) < count:
        o = rng.choice(pool)
        ref = tuple(rng.randint(0, 2) for _ in o.curves)
        try:
            if is_admissible(o, ref):
                out.append(as_presentation(o, ref))
        except (InfeasibleClass, InconsistentReference):
            continue
    return out


# -- basic cycles --------------------------------------------------------------


def test_edge_cell_basic_cycles():
    assert labels(enumerate_basic_cycles(figures.edge_cell(), figures.EDGE_X)) == {"a", "b+c"}


def test_three_homologous_basic_cycles():
    assert labels(enumerate_basic_cycles(figures.three_homologous(), {"a": 1})) == {"a", "b", "c"}


def test_pentagon_basic_cycles():
    assert labels(enumerate_basic_cycles(figures.pentagon())) == figures.PENTAGON_VERTICES


def test_reference_required_and_nonzero():
    with pytest.raises(InconsistentReference):
        enumerate_basic_cycles(RelationPresentation("abc", [[1, -1, -1]]))
    with pytest.raises(InconsistentReference):
        enumerate_basic_cycles(figures.edge_cell(), {"a": 1, "b": -1, "c": -1})


def test_infeasible_class_gives_no_cycles():
    # x = -[a] on the edge cell: needs negative coefficients
    cycles = enumerate_basic_cycles(RelationPresentation("abc", [[1, -1, -1]], (-1, 0, 0)))
    assert cycles == []
    cell = cell_polytope(RelationPresentation("abc", [[1, -1, -1]], (-1, 0, 0)))
    assert cell.is_empty and cell.dimension == -1
    with pytest.raises(InfeasibleClass):
        is_admissible(RelationPresentation("abc", [[1, -1, -1]], (-1, 0, 0)))


@pytest.mark.parametrize(
    "structure, x, expected",
    [
        (figures.edge_cell(), {"a": 1}, True),
        (figures.edge_cell().reversed(["b"]), {"a": 1}, False),
        (figures.single_loop(), {"a": 1}, True),
        (figures.pentagon(), None, True),
    ],
)
def test_is_admissible(structure, x, expected):
    assert is_admissible(structure, x) is expected


def test_non_admissible_cell_raises():
    with pytest.raises(NotAdmissible):
        cell_polytope(figures.edge_cell().reversed(["b"]), {"a": 1})


# -- cells ---------------------------------------------------------------------


def test_edge_cell_polytope():
    cell = cell_polytope(figures.edge_cell(), figures.EDGE_X)
    assert cell.dimension == 1
    assert len(cell.vertices) == 2
    assert cell.edges == ((0, 1),)
    assert cell.bounded


def test_three_homologous_simplex():
    cell = cell_polytope(figures.three_homologous(), {"a": 1})
    assert cell.dimension == 2
    assert len(cell.edges) == 3


def test_square_cell():
    cell = cell_polytope(figures.square())
    assert labels(cell.vertices) == figures.SQUARE_VERTICES
    assert cell.dimension == 2
    assert len(cell.edges) == 4
    assert edge_cycle(cell) is not None
    assert set(vertex_coordinates(cell, "cf")) == {(1, 1), (0, 1), (1, 0), (0, 0)}


def test_pentagon_cell():
    cell = cell_polytope(figures.pentagon())
    assert cell.dimension == 2
    ef = vertex_coordinates(cell, "ef")
    assert set(ef) == figures.PENTAGON_EF
    order = edge_cycle(cell)
    ring = [ef[i] for i in order]
    start = ring.index((0, 0))
    ring = ring[start:] + ring[:start]
    expected = [(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)]
    assert ring in (expected, [expected[0]] + expected[:0:-1])


def test_ik_cell_dimension():
    cell = cell_polytope(figures.ik_cell(), figures.IK_X)
    assert cell.dimension == 2
    assert labels(cell.vertices) == {"c1+c2+c3", "c2+2c3+c4", "c1+2c3+c5", "3c3+c4+c5"}


def test_vertex_coordinates():
    cell = cell_polytope(figures.edge_cell(), figures.EDGE_X)
    assert sorted(vertex_coordinates(cell, "a")) == [(0,), (1,)]
    with pytest.raises(KeyError):
        vertex_coordinates(cell, ["z"])


def test_cycle_helpers():
    c = Cycle.from_mapping("abc", {"a": 2, "c": Fraction(1, 2)})
    assert c.support == ("a", "c")
    assert not c.integral
    assert c.label() == "2a+(1/2)c"
    assert c["c"] == Fraction(1, 2)
    with pytest.raises(ValueError):
        Cycle(("a",), (-1,))
    with pytest.raises(KeyError):
        Cycle.from_mapping("ab", {"z": 1})


# -- properties on random instances ----------------------------------------------


@pytest.mark.parametrize("pres", random_instances(7, 40), ids=lambda p: f"{len(p.curves)}curves")
def test_vertex_properties(pres):
    q = pres.quotient
    phi = q.matrix()
    target = q.class_of(pres.reference)
    cell = cell_polytope(pres)
    assert cell.dimension == len(pres.curves) - q.D
    for v in cell.vertices:
        assert v.integral
        assert mat_vec(phi, v.coefficients) == list(target)
        cols = [[row[i] for i in v.support_indices] for row in phi]
        assert rational_rank(cols) == len(v.support_indices)


@pytest.mark.parametrize("pres", random_instances(11, 40), ids=lambda p: f"{len(p.curves)}curves")
def test_vertices_match_lp_oracle(pres):
    q = pres.quotient
    phi = q.matrix()
    b = q.class_of(pres.reference)
    vertices = {v.coefficients for v in enumerate_basic_cycles(pres)}
    n = len(pres.curves)
    # each vertex is the unique optimum for the cost that charges only off its support
    for v in vertices:
        cost = [0 if v[i] else 1 for i in range(n)]
        assert lp_oracle.solve(phi, b, cost) == v
    # and generic positive costs always land on a vertex
    rng = random.Random(n)
    for _ in range(15):
        cost = [Fraction(rng.randint(1, 97), rng.randint(1, 13)) for _ in range(n)]
        assert lp_oracle.solve(phi, b, cost) in vertices


@pytest.mark.parametrize("pres", random_instances(13, 60), ids=lambda p: f"{len(p.curves)}curves")
def test_edge_methods_agree_when_bounded(pres):
    cell = cell_polytope(pres)
    hull = _hull_edges(cell.vertices)
    if cell.bounded:
        assert _active_constraint_edges(pres.quotient.matrix(), cell.vertices) == hull
    assert list(cell.edges) == hull


def test_bounded_cells_have_no_rays():
    assert recession_rays(figures.bounding_pair_s3()) == []
    assert recession_rays(figures.pentagon()) == []


def test_unbounded_cell():
    # c0 + c1 bounds, so adding it never changes the class
    pres = RelationPresentation(
        ("c0", "c1", "c2", "c3"), [[1, 1, 0, 0], [-1, 0, -1, 1], [0, -1, 1, -1]], (1, 1, 2, 1)
    )
    assert recession_rays(pres) == [(1, 1, 0, 0)]
    cell = cell_polytope(pres)
    assert not cell.bounded
    assert labels(cell.vertices) == {"2c2+c3", "2c1+3c3", "c0+3c2"}
    assert cell.dimension == 2
    assert len(cell.edges) == 3
