import csv
import io
from itertools import combinations_with_replacement, product

import networkx as nx
import pytest

from cyclecomplex.audit import (
    CSV_HEADER,
    JOHNSON_CD,
    TORELLI_CD,
    audit_types,
    complex_dimension,
    enumerate_types,
    ledger,
    ledger_dict,
    orientation_classes,
    robbins_orientation,
    strongly_connected,
    to_csv,
    type_key,
    verify_inequalities,
)
from cyclecomplex.cellpoly import is_admissible
from cyclecomplex.multicurve import InvalidMulticurve, MulticurveType, validate

import figures


def nx_graph(m, directed=False):
    g = nx.MultiDiGraph() if directed else nx.MultiGraph()
    for c in m.components:
        g.add_node(c.id, genus=c.genus)
    for c in m.curves:
        g.add_edge(c.tail, c.head)
    return g


def same_genus(a, b):
    return a["genus"] == b["genus"]


def distinct_up_to_iso(graphs):
    reps = []
    for g in graphs:
        if not any(nx.is_isomorphic(g, h, node_match=same_genus) for h in reps):
            reps.append(g)
    return reps


def brute_force_types(g, max_curves):
    """Decorated multigraphs satisfying the constraints, deduplicated by networkx."""
    found = []
    for N in range(1, 2 * g - 1):
        pairs = [(i, j) for i in range(N) for j in range(i, N)]
        for E in range(1, max_curves + 1):
            D = E - N + 1
            if not 1 <= D <= g:
                continue
            for genera in product(range(g + 1), repeat=N):
                if sum(genera) != g - D or list(genera) != sorted(genera):
                    continue
                for edges in combinations_with_replacement(pairs, E):
                    m = MulticurveType.build(
                        g,
                        {f"v{i}": gi for i, gi in enumerate(genera)},
                        [(f"c{t}", f"v{i}", f"v{j}") for t, (i, j) in enumerate(edges)],
                    )
                    if validate(m).ok:
                        found.append(nx_graph(m))
    return distinct_up_to_iso(found)


# -- enumeration ---------------------------------------------------------------


@pytest.mark.parametrize("g, max_curves", [(2, 3), (3, 4), (3, 6)])
def test_enumeration_matches_brute_force(g, max_curves):
    ours = [nx_graph(m) for m in enumerate_types(g, max_curves)]
    assert len(distinct_up_to_iso(ours)) == len(ours)
    assert len(ours) == len(brute_force_types(g, max_curves))


def test_genus_two_single_curve():
    types = list(enumerate_types(2, 1))
    assert len(types) == 1
    (m,) = types
    assert [c.genus for c in m.components] == [1]
    assert m.curves[0].is_loop


def test_genus_two_pants_types():
    pants = [m for m in enumerate_types(2, 3) if all(m.euler_characteristic(c) == -1 for c in m.components)]
    assert pants
    assert all(ledger(m).B == 1 for m in pants)


def test_genus_two_has_no_bounding_pairs():
    assert all(ledger(m).BP == 0 for m in enumerate_types(2, 3))


def test_enumeration_is_deterministic():
    first = [type_key(m) for m in enumerate_types(3, 6)]
    assert first == [type_key(m) for m in enumerate_types(3, 6)]
    assert len(set(first)) == len(first)


def test_type_key_ignores_labels():
    m = figures.edge_cell()
    relabelled = MulticurveType.build(
        2, {"y": 0, "x": 0}, [("q", "y", "x"), ("p", "x", "y"), ("r", "y", "x")]
    )
    assert type_key(m) == type_key(relabelled)


def test_genus_below_two_refused():
    with pytest.raises(ValueError):
        list(enumerate_types(1, 1))


def brute_force_orientations(m):
    loops = [c for c in m.curves if c.is_loop]
    edges = [c for c in m.curves if not c.is_loop]
    graphs = []
    for flips in product((False, True), repeat=len(edges)):
        curves = [(c.id, c.head, c.tail) if f else (c.id, c.tail, c.head) for c, f in zip(edges, flips)]
        curves += [(c.id, c.tail, c.head) for c in loops]
        o = MulticurveType.build(m.surface_genus, [(c.id, c.genus) for c in m.components], curves)
        graphs.append(nx_graph(o, directed=True))
    reps = []
    for g in graphs:
        if any(
            nx.is_isomorphic(g, h, node_match=same_genus) or nx.is_isomorphic(g.reverse(), h, node_match=same_genus)
            for h in reps
        ):
            continue
        reps.append(g)
    return reps


@pytest.mark.parametrize("m", list(enumerate_types(3, 5)), ids=lambda m: type_key(m).encode())
def test_orientation_classes_match_brute_force(m):
    ours = list(orientation_classes(m))
    assert len(ours) == len(brute_force_orientations(m))
    for o in ours:
        assert type_key(o) == type_key(m)


@pytest.mark.parametrize("m", list(enumerate_types(3, 6)), ids=lambda m: type_key(m).encode())
def test_robbins_orientation(m):
    o = robbins_orientation(m)
    assert strongly_connected(o)
    assert nx.is_strongly_connected(nx_graph(o, directed=True))
    assert type_key(o) == type_key(m)
    assert is_admissible(o, {c: 1 for c in o.curve_ids})


def test_robbins_refuses_bridges():
    bridged = MulticurveType.build(2, {"p": 1, "q": 1}, [("a", "p", "q")], nonseparating=False)
    with pytest.raises(ValueError):
        robbins_orientation(bridged)


# -- ledgers -------------------------------------------------------------------


def test_edge_cell_ledger():
    l = ledger(figures.edge_cell())
    assert (l.torelli_bound, l.B, l.torelli_budget) == (0, 1, 1)
    assert (l.johnson_bound, l.johnson_budget) == (0, 1)
    assert l.torelli_budget_ok and l.johnson_budget_ok


def test_bounding_pair_ledger():
    l = ledger(figures.bounding_pair_s3())
    assert (l.curves, l.D, l.P, l.BP) == (2, 1, 2, 1)
    assert (l.torelli_bound, l.B, l.torelli_budget) == (3, 1, 4)
    assert l.bpdp_ok and l.bpdp_equality


def test_bppic_ledger():
    l = ledger(figures.bppic())
    assert (l.BP, l.D, l.P) == (4, 4, 2)
    assert l.bpdp_equality
    assert l.identity_failures() == []


def test_ik_cell_ledger():
    assert ledger(figures.ik_cell()).B == 2


def test_ledger_refuses_invalid():
    with pytest.raises(InvalidMulticurve):
        ledger(figures.bounding_pair_s2())


@pytest.mark.parametrize("g, max_curves", [(2, 3), (3, 6)])
def test_verify_inequalities(g, max_curves):
    report = verify_inequalities(g, max_curves)
    assert report.ok
    assert report.ledgers
    for l in report.ledgers:
        assert l.identity_failures() == []
        assert l.BP + 2 <= l.D + l.P
        assert l.torelli_budget <= 3 * g - 5
        assert l.johnson_budget == 2 * g - 3
        assert l.torelli_component_bound == l.torelli_bound
        assert l.johnson_component_bound == l.johnson_bound


def test_corrupt_type_is_excluded():
    bridged = MulticurveType.build(
        3, {"p": 1, "q": 1, "r": 0}, [("a", "p", "r"), ("b", "r", "q"), ("c", "r", "r")]
    )
    report = audit_types(3, [bridged, figures.bounding_pair_s3()])
    assert len(report.excluded) == 1
    assert report.excluded[0][0] is bridged
    assert len(report.ledgers) == 1
    assert report.ok


def test_summary_labels():
    summary = verify_inequalities(2, 3).summary()
    assert summary["torelli_cd"] == TORELLI_CD == "3g-5"
    assert summary["johnson_cd"] == JOHNSON_CD == "2g-3"
    assert summary["violations"] == 0


def test_csv_report():
    text = to_csv(verify_inequalities(3, 6))
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == CSV_HEADER
    assert tuple(rows[0][:14]) == (
        "g", "|M|", "D", "N", "P", "Z", "C", "BP", "B",
        "torelli_bound", "johnson_bound", "bpdp_ok", "torelli_budget_ok", "johnson_budget_ok",
    )
    assert len(rows) == 1 + len(list(enumerate_types(3, 6)))
    assert all(r[11:14] == ["1", "1", "1"] for r in rows[1:])
    assert text == to_csv(verify_inequalities(3, 6))


def test_ledger_dict():
    d = ledger_dict(ledger(figures.edge_cell()))
    assert d["torelli_budget"] == 1 and d["bpdp_ok"] is True


@pytest.mark.parametrize("g, expected", [(2, 1), (3, 3)])
def test_complex_dimension(g, expected):
    assert complex_dimension(g) == expected
