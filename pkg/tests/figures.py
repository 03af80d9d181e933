"""Worked examples shared by the test modules."""

from fractions import Fraction

from cyclecomplex.multicurve import MulticurveType, RelationPresentation


def edge_cell() -> MulticurveType:
    # two pairs of pants glued along three curves; a runs against b and c
    return MulticurveType.build(
        2, {"v1": 0, "v2": 0}, [("a", "v2", "v1"), ("b", "v1", "v2"), ("c", "v1", "v2")]
    )


EDGE_X = {"a": 1}


def pentagon() -> RelationPresentation:
    # a+b+c = e and a+b+d = f
    return RelationPresentation(
        "abcdef", [[1, 1, 1, 0, -1, 0], [1, 1, 0, 1, 0, -1]], (0, 0, 0, 1, 2, 1)
    )


PENTAGON_VERTICES = {"3a+3b+2c+2d", "a+b+2d+2e", "d+2e+f", "c+e+2f", "a+b+2c+2f"}
PENTAGON_EF = {(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)}


def square() -> RelationPresentation:
    # c = a+b and f = d+e
    return RelationPresentation(
        "abcdef", [[1, 1, -1, 0, 0, 0], [0, 0, 0, 1, 1, -1]], (0, 0, 1, 0, 0, 1)
    )


SQUARE_VERTICES = {"c+f", "a+b+f", "c+d+e", "a+b+d+e"}


def three_homologous() -> MulticurveType:
    # three curves cutting S_4 into three genus-1 pieces arranged in a cycle
    return MulticurveType.build(
        4, {"p": 1, "q": 1, "r": 1}, [("a", "p", "q"), ("b", "q", "r"), ("c", "r", "p")]
    )


def bounding_pair_s3() -> MulticurveType:
    return MulticurveType.build(3, {"p": 1, "q": 1}, [("a", "p", "q"), ("b", "q", "p")])


def bounding_pair_s2() -> MulticurveType:
    # the second piece would be an annulus
    return MulticurveType.build(2, {"p": 1, "q": 0}, [("a", "p", "q"), ("b", "q", "p")])


def single_loop() -> MulticurveType:
    return MulticurveType.build(2, {"p": 1}, [("a", "p", "p")])


def bppic() -> MulticurveType:
    """Eight curves in S_6: a1, a2, a3 homologous, two bounding pairs and d."""
    return MulticurveType.build(
        6,
        {"K2": 1, "K3": 1, "p": 0, "q": 0, "r": 0},
        [
            ("a1", "p", "K2"), ("a2", "K2", "K3"), ("a3", "K3", "p"),
            ("b1", "p", "q"), ("b2", "q", "p"),
            ("c1", "q", "r"), ("c2", "r", "q"),
            ("d", "r", "r"),
        ],
    )


def ik_cell() -> MulticurveType:
    """Five curves in S_3 with [c1]+[c2]+[c3] = x."""
    return MulticurveType.build(
        3,
        {"u": 0, "v": 0, "w": 0},
        [("c1", "u", "v"), ("c2", "v", "w"), ("c3", "w", "u"), ("c4", "v", "u"), ("c5", "w", "v")],
    )


IK_X = {"c1": 1, "c2": 1, "c3": 1}


def lengths(**values) -> dict:
    return {k: Fraction(v) for k, v in values.items()}
