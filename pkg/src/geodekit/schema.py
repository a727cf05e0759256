"""JSON Schemas for the machine-readable command outputs."""

from __future__ import annotations

_INT_LIST = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_PATHS = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["pair", "path"],
        "properties": {
            "pair": {**_INT_LIST, "minItems": 2, "maxItems": 2},
            "path": {**_INT_LIST, "minItems": 2},
        },
    },
}

OUTCOME = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "solver outcome",
    "type": "object",
    "required": ["status", "invariant", "graph"],
    "properties": {
        "invariant": {"enum": ["g", "sg", "sgc", "sgc-of-set", "enumerate-sg-sets"]},
        "graph": {"type": "string"},
        "status": {"enum": ["proved", "inconclusive"]},
        "set": _INT_LIST,
        "core": _INT_LIST,
        "paths": _PATHS,
        "lower": {"type": ["integer", "null"]},
        "upper": {"type": ["integer", "null"]},
        "limit_hit": {"type": ["string", "null"]},
    },
    "if": {"properties": {"status": {"const": "proved"}}},
    "then": {"required": ["value"]},
    "else": {"required": ["lower", "upper", "limit_hit"]},
}

_CHECK = {
    "type": "object",
    "required": ["name", "value", "relation", "satisfied", "tight"],
    "properties": {
        "name": {"type": "string"},
        "value": {"type": ["integer", "null"]},
        "relation": {"type": "string"},
        "satisfied": {"type": ["boolean", "null"]},
        "tight": {"type": ["boolean", "null"]},
    },
}

BOUNDS = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "bounds report",
    "type": "object",
    "required": ["graph_id", "n", "m", "diam", "g", "sg", "sgc", "brackets", "exempt", "checks"],
    "properties": {
        "graph_id": {"type": "string"},
        "n": {"type": "integer"},
        "m": {"type": "integer"},
        "diam": {"type": "integer"},
        "g": {"type": ["integer", "null"]},
        "sg": {"type": ["integer", "null"]},
        "sgc": {"type": ["integer", "null"]},
        "brackets": {"type": "object"},
        "exempt": {"type": "boolean"},
        "checks": {"type": "array", "items": _CHECK},
    },
}

PRODUCT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "product report",
    "type": "object",
    "required": ["graphs", "n", "m", "graph6", "factors", "upper_old", "upper_core"],
    "properties": {
        "graphs": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
        "n": {"type": "integer"},
        "m": {"type": "integer"},
        "graph6": {"type": ["string", "null"]},
        "factors": {"type": "array", "minItems": 2, "maxItems": 2},
        "upper_old": {"type": ["integer", "null"]},
        "upper_core": {"type": ["integer", "null"]},
        "solve": {"type": ["object", "null"]},
    },
}

CLAIMS = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "claim records",
    "type": "object",
    "required": ["claims", "summary"],
    "properties": {
        "claims": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["claim_id", "location", "quote", "graphs", "relation",
                             "budget_class", "provenance", "result", "measured", "detail"],
                "properties": {
                    "budget_class": {"enum": ["fast", "standard", "long"]},
                    "result": {"enum": ["pass", "fail", "inconclusive"]},
                    "graphs": {"type": "array", "items": {"type": "string"}},
                    "measured": {"type": "object"},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["pass", "fail", "inconclusive"],
            "additionalProperties": {"type": "integer"},
        },
    },
}

SCHEMAS = {"outcome": OUTCOME, "bounds": BOUNDS, "product": PRODUCT, "claims": CLAIMS}
