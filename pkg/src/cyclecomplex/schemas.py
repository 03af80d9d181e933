"""JSON schemas for command input and reports."""

RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}
ID = {"type": "string", "minLength": 1}

MULTICURVE_INPUT = {
    "type": "object",
    "required": ["surface_genus", "components", "curves"],
    "properties": {
        "surface_genus": {"type": "integer", "minimum": 0},
        "nonseparating": {"type": "boolean"},
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "genus"],
                "properties": {"id": ID, "genus": {"type": "integer", "minimum": 0}},
                "additionalProperties": False,
            },
        },
        "curves": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "tail", "head"],
                "properties": {"id": ID, "tail": ID, "head": ID},
                "additionalProperties": False,
            },
        },
        "x": {"type": "object", "additionalProperties": {"type": "integer"}},
        "cycle": {"type": "object", "additionalProperties": {"oneOf": [{"type": "integer"}, RATIONAL]}},
    },
    "additionalProperties": False,
}

PRESENTATION_INPUT = {
    "type": "object",
    "required": ["curves", "relations"],
    "properties": {
        "curves": {"type": "array", "items": ID},
        "relations": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "x": {
            "oneOf": [
                {"type": "array", "items": {"type": "integer"}},
                {"type": "object", "additionalProperties": {"type": "integer"}},
            ]
        },
        "cycle": {"type": "object", "additionalProperties": {"oneOf": [{"type": "integer"}, RATIONAL]}},
    },
    "additionalProperties": False,
}

SPEC_INPUT = {"oneOf": [MULTICURVE_INPUT, PRESENTATION_INPUT]}

LENGTHS_INPUT = {
    "type": "object",
    "additionalProperties": {"oneOf": [{"type": "integer", "minimum": 1}, RATIONAL]},
}

_CYCLE = {"type": "object", "additionalProperties": RATIONAL}
_EDGES = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}}
_STATS = {
    "type": "object",
    "required": ["|M|", "D", "C", "BP", "B"],
    "additionalProperties": {"type": ["integer", "null"]},
}

CELL_REPORT = {
    "type": "object",
    "required": ["curves", "x", "dimension", "bounded", "vertices", "labels", "edges", "stats"],
    "properties": {
        "curves": {"type": "array", "items": ID},
        "x": {"type": "array", "items": {"type": "integer"}},
        "dimension": {"type": "integer", "minimum": -1},
        "bounded": {"type": "boolean"},
        "vertices": {"type": "array", "items": _CYCLE},
        "labels": {"type": "array", "items": {"type": "string"}},
        "edges": _EDGES,
        "stats": _STATS,
    },
    "additionalProperties": False,
}

FACE_REPORT = {
    "type": "object",
    "required": ["curves", "lengths", "value", "dimension", "vertices", "labels", "edges", "multicurve", "balanced"],
    "properties": {
        "curves": {"type": "array", "items": ID},
        "lengths": _CYCLE,
        "value": RATIONAL,
        "dimension": {"type": "integer", "minimum": 0},
        "vertices": {"type": "array", "items": _CYCLE, "minItems": 1},
        "labels": {"type": "array", "items": {"type": "string"}},
        "edges": _EDGES,
        "multicurve": {"type": "array", "items": ID},
        "balanced": {"type": ["boolean", "null"]},
    },
    "additionalProperties": False,
}

BORROW_REPORT = {
    "type": "object",
    "required": ["curves", "start", "steps", "result"],
    "properties": {
        "curves": {"type": "array", "items": ID},
        "start": {"type": "object", "required": ["cycle", "length"]},
        "steps": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["relation", "delta", "L1", "L2", "classification", "cycle", "length"],
                "properties": {
                    "relation": {"type": "array", "items": RATIONAL},
                    "delta": RATIONAL,
                    "L1": RATIONAL,
                    "L2": RATIONAL,
                    "classification": {"enum": ["equal-length", "strictly-shorter", "strictly-longer"]},
                    "cycle": _CYCLE,
                    "length": RATIONAL,
                },
            },
        },
        "result": {"type": "object", "required": ["cycle", "length"]},
    },
}

_TREE = {
    "type": "object",
    "required": ["x", "weight_bound", "coord_bound", "nodes", "edges"],
    "properties": {
        "x": {"type": "array", "items": {"type": "integer"}},
        "weight_bound": {"type": "integer", "minimum": 1},
        "coord_bound": {"type": "integer", "minimum": 1},
        "nodes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "kind", "weight", "classes", "weights", "parent"],
                "properties": {
                    "id": ID,
                    "kind": {"enum": ["distinguished", "pair"]},
                    "weight": {"type": "integer", "minimum": 1},
                    "classes": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
                    "weights": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                    "parent": {"type": ["string", "null"]},
                },
            },
        },
        "edges": {"type": "array", "items": {"type": "array", "items": ID}},
    },
}

TREE_REPORT = _TREE

FULL_QUOTIENT_REPORT = {
    "type": "object",
    "required": ["vertex_count", "edge_count", "planes"],
    "properties": {
        "vertex_count": {"type": "integer", "minimum": 1},
        "edge_count": {"type": "integer", "minimum": 0},
        "planes": {
            "type": "array",
            "items": {"type": "object", "required": ["plane", "tree"], "properties": {"tree": _TREE}},
        },
    },
}

SPLITTINGS_REPORT = {
    "type": "object",
    "required": ["splittings", "edges"],
    "properties": {
        "splittings": {
            "type": "array",
            "items": {"type": "object", "required": ["index", "first", "second"]},
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["pair", "determinant"],
                "properties": {"determinant": {"enum": [-1, 1]}},
            },
        },
    },
}

AUDIT_REPORT = {
    "type": "object",
    "required": ["summary", "types", "violations"],
    "properties": {
        "summary": {"type": "object"},
        "types": {"type": "array", "items": {"type": "object"}},
        "violations": {"type": "array"},
    },
}
