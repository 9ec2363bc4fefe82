"""Instance reports, verdicts, and the JSON schemas for CLI output."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .turan_formulas import FormulaValue


class Verdict(str, enum.Enum):
    ORACLE_MATCHES_FORMULA = "ORACLE_MATCHES_FORMULA"
    LOWER_BOUND_ONLY = "LOWER_BOUND_ONLY"
    MISMATCH = "MISMATCH"
    NO_FORMULA = "NO_FORMULA"


def decide(formulas: dict[str, dict], construction_edges: int | None, oracle_value: int | None):
    """(verdict, proved_mismatch, potential_counterexample) from plain report fields.

    ``formulas`` maps ids to dicts with ``value`` and ``in_proved_range``,
    which is the serialized shape, so a parsed JSON report can be
    re-checked with the same function.
    """
    if oracle_value is None:
        verdict = Verdict.LOWER_BOUND_ONLY if formulas or construction_edges is not None else Verdict.NO_FORMULA
        return verdict, False, False
    below_construction = construction_edges is not None and oracle_value < construction_edges
    wrong = [f for f in formulas.values() if f["value"] != oracle_value]
    proved = below_construction or any(f["in_proved_range"] for f in wrong)
    conjectured = any(not f["in_proved_range"] for f in wrong)
    if wrong or below_construction:
        return Verdict.MISMATCH, proved, conjectured
    if not formulas:
        return Verdict.NO_FORMULA, False, False
    return Verdict.ORACLE_MATCHES_FORMULA, False, False


@dataclass
class ExtremalReport:
    ns: tuple[int, ...]
    t: int
    k: int
    formulas: dict[str, FormulaValue]
    construction_edges: int | None
    construction_free: bool | None
    oracle: object | None = None  # OracleResult
    oracle_bounds: dict | None = None
    notes: list[str] = field(default_factory=list)
    elapsed_seconds: float | None = None

    @property
    def r(self) -> int:
        return len(self.ns)

    def _decision(self):
        return decide(
            {fid: fv.to_dict() for fid, fv in self.formulas.items()},
            self.construction_edges,
            None if self.oracle is None else self.oracle.value,
        )

    @property
    def verdict(self) -> Verdict:
        return self._decision()[0]

    @property
    def proved_mismatch(self) -> bool:
        return self._decision()[1] or self.construction_free is False

    @property
    def potential_counterexample(self) -> bool:
        return self._decision()[2]

    def to_dict(self) -> dict:
        return {
            "ns": list(self.ns),
            "r": self.r,
            "t": self.t,
            "k": self.k,
            "formulas": {fid: fv.to_dict() for fid, fv in sorted(self.formulas.items())},
            "construction_edges": self.construction_edges,
            "construction_free": self.construction_free,
            "oracle": None if self.oracle is None else self.oracle.to_dict(),
            "verdict": self.verdict.value,
            "proved_mismatch": self.proved_mismatch,
            "potential_counterexample": self.potential_counterexample,
            "oracle_bounds": self.oracle_bounds,
            "notes": list(self.notes),
            "elapsed_seconds": self.elapsed_seconds,
        }


_INT_LIST = {"type": "array", "items": {"type": "integer"}}
_NULLABLE_INT = {"type": ["integer", "null"]}

FORMULA_SCHEMA = {
    "type": "object",
    "required": ["value", "formula_id", "in_proved_range", "range_note"],
    "additionalProperties": False,
    "properties": {
        "value": {"type": "integer"},
        "formula_id": {"enum": ["thm11", "thm12", "thm13", "thm16", "conj15", "conj16", "kk2", "erdos"]},
        "in_proved_range": {"type": "boolean"},
        "range_note": {"type": "string"},
    },
}

ORACLE_SCHEMA = {
    "type": "object",
    "required": ["value", "deletions", "extremal_example", "nodes_explored", "timed_out"],
    "additionalProperties": False,
    "properties": {
        "value": {"type": "integer"},
        "deletions": {"type": "integer"},
        "extremal_example": {"type": "array", "items": _INT_LIST},
        "nodes_explored": {"type": "integer"},
        "timed_out": {"type": "boolean"},
    },
}

REPORT_SCHEMA = {
    "type": "object",
    "required": [
        "ns", "r", "t", "k", "formulas", "construction_edges", "construction_free",
        "oracle", "verdict", "proved_mismatch", "potential_counterexample",
        "oracle_bounds", "notes", "elapsed_seconds",
    ],
    "additionalProperties": False,
    "properties": {
        "ns": _INT_LIST,
        "r": {"type": "integer"},
        "t": {"type": "integer"},
        "k": {"type": "integer"},
        "formulas": {"type": "object", "additionalProperties": FORMULA_SCHEMA},
        "construction_edges": _NULLABLE_INT,
        "construction_free": {"type": ["boolean", "null"]},
        "oracle": {"oneOf": [{"type": "null"}, ORACLE_SCHEMA]},
        "verdict": {"enum": [v.value for v in Verdict]},
        "proved_mismatch": {"type": "boolean"},
        "potential_counterexample": {"type": "boolean"},
        "oracle_bounds": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["lower", "upper", "nodes_explored"],
                    "additionalProperties": False,
                    "properties": {
                        "lower": {"type": "integer"},
                        "upper": {"type": "integer"},
                        "nodes_explored": {"type": "integer"},
                    },
                },
            ]
        },
        "notes": {"type": "array", "items": {"type": "string"}},
        "elapsed_seconds": {"type": ["number", "null"]},
    },
}

CERTIFICATE_SCHEMA = {
    "type": "object",
    "required": ["t", "k", "measured_edges", "claimed_edges", "edges_ok", "spanning_ok", "free", "witness", "passed"],
    "additionalProperties": False,
    "properties": {
        "t": {"type": "integer"},
        "k": {"type": "integer"},
        "measured_edges": {"type": "integer"},
        "claimed_edges": _NULLABLE_INT,
        "edges_ok": {"type": "boolean"},
        "spanning_ok": {"type": "boolean"},
        "free": {"type": "boolean"},
        "witness": {"oneOf": [{"type": "null"}, {"type": "array", "items": _INT_LIST}]},
        "passed": {"type": "boolean"},
    },
}

SCHEMAS = {
    "ft": {
        "type": "object",
        "required": ["sizes", "t", "value", "witness"],
        "additionalProperties": False,
        "properties": {
            "sizes": _INT_LIST,
            "t": {"type": "integer"},
            "value": {"type": "integer"},
            "witness": {"oneOf": [{"type": "null"}, {"type": "array", "items": _INT_LIST}]},
        },
    },
    "formula": {
        "type": "object",
        "required": ["sizes", "t", "k", "formulas"],
        "additionalProperties": False,
        "properties": {
            "sizes": _INT_LIST,
            "t": {"type": "integer"},
            "k": {"type": "integer"},
            "formulas": {"type": "object", "additionalProperties": FORMULA_SCHEMA},
        },
    },
    "construct": {
        "type": "object",
        "required": ["sizes", "t", "k", "v0_size", "witness_partition", "certificate", "out"],
        "additionalProperties": False,
        "properties": {
            "sizes": _INT_LIST,
            "t": {"type": "integer"},
            "k": {"type": "integer"},
            "v0_size": {"type": "integer"},
            "witness_partition": {"oneOf": [{"type": "null"}, {"type": "array", "items": _INT_LIST}]},
            "certificate": CERTIFICATE_SCHEMA,
            "out": {"type": ["string", "null"]},
        },
    },
    "check-free": {
        "type": "object",
        "required": ["t", "k", "free", "witness"],
        "additionalProperties": False,
        "properties": {
            "t": {"type": "integer"},
            "k": {"type": "integer"},
            "free": {"type": "boolean"},
            "witness": {"oneOf": [{"type": "null"}, {"type": "array", "items": _INT_LIST}]},
        },
    },
    "oracle": {
        "type": "object",
        "required": ["sizes", "t", "k", "result"],
        "additionalProperties": False,
        "properties": {
            "sizes": _INT_LIST,
            "t": {"type": "integer"},
            "k": {"type": "integer"},
            "result": ORACLE_SCHEMA,
        },
    },
    "verify": REPORT_SCHEMA,
    "sweep": REPORT_SCHEMA,
    "props": {
        "type": "object",
        "required": ["which", "checked", "violations", "examples", "notes"],
        "additionalProperties": False,
        "properties": {
            "which": {"enum": ["2.1", "2.2", "2.3"]},
            "checked": {"type": "integer"},
            "violations": {"type": "integer"},
            "examples": {"type": "array", "items": {"type": "object"}},
            "notes": {"type": "array", "items": {"type": "string"}},
        },
    },
}
