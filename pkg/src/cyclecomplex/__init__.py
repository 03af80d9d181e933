"""Exact combinatorics of the complex of cycles of a closed surface."""

from .borrow import BorrowingMove, apply_borrow, length_effect, reduce_to_basic
from .cellpoly import CellPolytope, Cycle, InfeasibleClass, NotAdmissible, cell_polytope, enumerate_basic_cycles, is_admissible
from .exactlinalg import SmithForm, lattice_member, rational_rank, smith_normal_form
from .genus2 import assemble_full_quotient, plane_quotient_tree, splitting_from_index, splitting_line
from .minimize import LengthAssignment, is_length_balanced, minimal_face
from .multicurve import InvalidMulticurve, MulticurveType, RelationPresentation, relation_matrix, stats, validate
from .audit import complex_dimension, enumerate_types, ledger, verify_inequalities

__all__ = [
    "BorrowingMove", "CellPolytope", "Cycle", "InfeasibleClass", "InvalidMulticurve",
    "LengthAssignment", "MulticurveType", "NotAdmissible", "RelationPresentation", "SmithForm",
    "apply_borrow", "assemble_full_quotient", "cell_polytope", "complex_dimension",
    "enumerate_basic_cycles", "enumerate_types", "is_admissible", "is_length_balanced",
    "lattice_member", "ledger", "length_effect", "minimal_face", "plane_quotient_tree",
    "rational_rank", "reduce_to_basic", "relation_matrix", "smith_normal_form",
    "splitting_from_index", "splitting_line", "stats", "validate", "verify_inequalities",
]
