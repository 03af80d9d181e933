"""Command-line interface.

Exit codes: 0 success, 1 bad input, 2 infeasible ``x``, 3 a mathematical
property was found to fail.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

import jsonschema

from . import audit, genus2, schemas
from .borrow import BorrowError, borrow_path, length_effect
from .cellpoly import Cycle, InfeasibleClass, NotAdmissible, cell_polytope
from .minimize import LengthAssignment, PropertyViolation, cycle_length, length_balance, minimal_face
from .multicurve import (
    InconsistentReference,
    InvalidMulticurve,
    MulticurveType,
    RelationPresentation,
    Structure,
    as_presentation,
    stats,
    validate,
)

EXIT_OK, EXIT_INVALID, EXIT_INFEASIBLE, EXIT_VIOLATION = 0, 1, 2, 3


class SpecError(ValueError):
    """Unreadable input, with one diagnostic line per problem."""

    def __init__(self, diagnostics: list[str]):
        self.diagnostics = diagnostics
        super().__init__("\n".join(diagnostics))


def _load_json(text: str, schema: dict, what: str) -> object:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError([f"{what}: line {exc.lineno}, column {exc.colno}: {exc.msg}"]) from None
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        lines = []
        for e in errors:
            path = "/".join(str(p) for p in e.absolute_path) or "(root)"
            lines.append(f"{what}: at {path}: {e.message}")
        raise SpecError(lines)
    return data


def parse_spec(text: str) -> tuple[Structure, object]:
    """Read a multicurve or relation presentation from JSON.

    Returns the validated structure and the ``x`` field (``None`` when absent).
    Malformed JSON raises :class:`SpecError`; a multicurve failing its
    invariants raises :class:`InvalidMulticurve` carrying the full report.
    """
    data = _load_json(text, schemas.SPEC_INPUT, "input")
    x = data.get("x")
    if "relations" in data:
        try:
            return RelationPresentation(data["curves"], data["relations"]), x
        except ValueError as exc:
            raise SpecError([f"input: {exc}"]) from None
    if len(data["components"]) != len({c["id"] for c in data["components"]}):
        raise SpecError(["input: duplicate component ids"])
    m = MulticurveType.build(
        data["surface_genus"],
        {c["id"]: c["genus"] for c in data["components"]},
        [(c["id"], c["tail"], c["head"]) for c in data["curves"]],
        nonseparating=data.get("nonseparating", True),
    )
    report = validate(m)
    if not report.ok:
        raise InvalidMulticurve(report)
    return m, x


def parse_lengths(text: str) -> LengthAssignment:
    data = _load_json(text, schemas.LENGTHS_INPUT, "lengths")
    try:
        return LengthAssignment(data)
    except ValueError as exc:
        raise SpecError([f"lengths: {exc}"]) from None


# -- reports -------------------------------------------------------------------


def _q(v: Fraction | int) -> str:
    return str(Fraction(v))


def _cycle(c: Cycle) -> dict[str, str]:
    return {curve: _q(k) for curve, k in c.as_dict().items()}


def cell_report(m: Structure, x) -> dict:
    pres = as_presentation(m, x)
    cell = cell_polytope(pres)
    if cell.is_empty:
        raise InfeasibleClass("x has no nonnegative representative on this multicurve")
    return {
        "curves": list(pres.curves),
        "x": list(pres.reference),
        "dimension": cell.dimension,
        "bounded": cell.bounded,
        "vertices": [_cycle(v) for v in cell.vertices],
        "labels": [v.label() for v in cell.vertices],
        "edges": [list(e) for e in cell.edges],
        "stats": stats(m).as_dict(),
    }


def face_report(m: Structure, x, lengths: LengthAssignment) -> dict:
    pres = as_presentation(m, x)
    face = minimal_face(pres, None, lengths)
    try:
        by_relations, by_vertices = length_balance(pres, None, lengths)
    except NotAdmissible:
        balanced = None
    else:
        if by_relations != by_vertices:
            raise PropertyViolation(
                f"relation balance ({by_relations}) disagrees with vertex lengths ({by_vertices})"
            )
        balanced = by_relations
    return {
        "curves": list(face.curves),
        "lengths": {c: _q(lengths[c]) for c in face.curves},
        "value": _q(face.value),
        "dimension": face.dimension,
        "vertices": [_cycle(v) for v in face.vertices],
        "labels": [v.label() for v in face.vertices],
        "edges": [list(e) for e in face.edges],
        "multicurve": list(face.multicurve),
        "balanced": balanced,
    }


def borrow_report(m: Structure, start: Cycle, lengths: LengthAssignment) -> dict:
    pres = as_presentation(m)
    steps = []
    current = start
    for after, move in borrow_path(pres, start, lengths):
        effect = length_effect(pres, current, move, lengths)
        if effect.length_after != cycle_length(after, lengths):
            raise PropertyViolation("borrowing step length mismatch")
        steps.append({
            "relation": [_q(v) for v in move.relation],
            "delta": _q(move.delta),
            "L1": _q(effect.L1),
            "L2": _q(effect.L2),
            "classification": effect.classification,
            "cycle": _cycle(after),
            "length": _q(effect.length_after),
        })
        current = after
    return {
        "curves": list(pres.curves),
        "start": {"cycle": _cycle(start), "length": _q(cycle_length(start, lengths))},
        "steps": steps,
        "result": {"cycle": _cycle(current), "length": _q(cycle_length(current, lengths))},
    }


def _dump(data: object) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


# -- commands ------------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _need_x(x):
    if x is None:
        raise SpecError(["input: an 'x' reference cycle is required"])
    return x


def _cmd_cell(args) -> tuple[int, str]:
    m, x = parse_spec(_read(args.input))
    return EXIT_OK, _dump(cell_report(m, _need_x(x)))


def _cmd_minimize(args) -> tuple[int, str]:
    m, x = parse_spec(_read(args.input))
    lengths = parse_lengths(_read(args.lengths))
    return EXIT_OK, _dump(face_report(m, _need_x(x), lengths))


def _cmd_borrow(args) -> tuple[int, str]:
    text = _read(args.input)
    m, x = parse_spec(text)
    data = json.loads(text)
    pres = as_presentation(m, x)
    lengths = parse_lengths(_read(args.lengths))
    if "cycle" in data:
        start = Cycle.from_mapping(pres.curves, data["cycle"])
    else:
        ref = _need_x(pres.reference)
        if any(v < 0 for v in ref):
            raise SpecError(["input: 'x' has negative coefficients; give a nonnegative 'cycle'"])
        start = Cycle(pres.curves, ref)
    return EXIT_OK, _dump(borrow_report(pres, start, lengths))


def _cmd_audit(args) -> tuple[int, str]:
    if args.genus is None or args.genus < 2:
        raise SpecError(["audit: --genus must be at least 2"])
    report = audit.verify_inequalities(args.genus, args.max_curves)
    if args.format == "json":
        out = _dump({
            "summary": report.summary(),
            "types": [audit.ledger_dict(l) for l in sorted(report.ledgers, key=lambda l: (l.curves, l.N, l.key))],
            "violations": [{"type": v.ledger.key, "problems": v.problems} for v in report.violations],
        })
    else:
        out = audit.to_csv(report)
    return (EXIT_OK if report.ok else EXIT_VIOLATION), out


def _parse_x(text: str) -> tuple[int, int]:
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise SpecError([f"tree: --x must be two integers, got {text!r}"]) from None
    if len(parts) != 2:
        raise SpecError([f"tree: --x must be two integers, got {text!r}"])
    return parts


def _cmd_tree(args) -> tuple[int, str]:
    W, C = args.weight_bound, args.coord_bound
    if args.plane_bound is not None:
        glued = genus2.assemble_full_quotient(args.plane_bound, W, C)
        if args.format == "json":
            return EXIT_OK, _dump(genus2.glued_to_json(glued))
        return EXIT_OK, genus2.glued_to_dot(glued)
    tree = genus2.plane_quotient_tree(_parse_x(args.x), W, C)
    bad = [n for n in tree.pairs() if genus2.node_violations(n, tree.x)]
    if bad:
        raise PropertyViolation(f"{len(bad)} tree nodes fail the basis or weight laws")
    if args.format == "json":
        return EXIT_OK, _dump(genus2.tree_to_json(tree))
    return EXIT_OK, genus2.tree_to_dot(tree, farey=args.farey)


def _cmd_splittings(args) -> tuple[int, str]:
    line = genus2.splitting_line(args.index_bound)
    if args.format == "json":
        return EXIT_OK, _dump(genus2.splittings_to_json(line))
    return EXIT_OK, genus2.splittings_to_dot(line)


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclecomplex", description="Cells of the complex of cycles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, default):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", help="write the report here instead of standard output")

    p = sub.add_parser("cell", help="basic cycles and cell polytope for x")
    p.add_argument("--input", required=True, help="multicurve or relation JSON ('-' for stdin)")
    common(p, ["json"], "json")
    p.set_defaults(run=_cmd_cell)

    p = sub.add_parser("minimize", help="face of minimal length")
    p.add_argument("--input", required=True)
    p.add_argument("--lengths", required=True, help="JSON object of curve lengths")
    common(p, ["json"], "json")
    p.set_defaults(run=_cmd_minimize)

    p = sub.add_parser("borrow", help="reduce a cycle to a basic cycle by borrowing")
    p.add_argument("--input", required=True)
    p.add_argument("--lengths", required=True)
    common(p, ["json"], "json")
    p.set_defaults(run=_cmd_borrow)

    p = sub.add_parser("audit", help="dimension ledger over all types in genus g")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--max-curves", type=_positive, default=None)
    common(p, ["csv", "json"], "csv")
    p.set_defaults(run=_cmd_audit)

    p = sub.add_parser("tree", help="genus-2 quotient tree")
    p.add_argument("--weight-bound", "--W", dest="weight_bound", type=_positive, default=5)
    p.add_argument("--coord-bound", "--C", dest="coord_bound", type=_positive, default=3)
    p.add_argument("--x", default="1,0", help="class in plane coordinates, e.g. 1,0")
    p.add_argument("--plane-bound", type=_positive, default=None, help="glue trees over isotropic planes")
    p.add_argument("--farey", action="store_true", help="overlay Farey edges among node classes")
    common(p, ["dot", "json"], "dot")
    p.set_defaults(run=_cmd_tree)

    p = sub.add_parser("splittings", help="genus-2 splittings compatible with x")
    p.add_argument("--index-bound", "--K", dest="index_bound", type=_nonnegative, default=3)
    common(p, ["dot", "json"], "dot")
    p.set_defaults(run=_cmd_splittings)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, out = args.run(args)
    except (SpecError, InconsistentReference, BorrowError, NotAdmissible, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InvalidMulticurve as exc:
        for check in exc.report.failures():
            print(f"invalid: {check.name}: {check.message}", file=sys.stderr)
        return EXIT_INVALID
    except InfeasibleClass as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except PropertyViolation as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
