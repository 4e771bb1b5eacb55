"""Serialization of verification reports.

Integers are written as decimal strings because the coefficients outgrow
both 64-bit integers and the 2**53 limit of JSON numbers in most readers.
Output is canonical (sorted keys, fixed indent), so a parse/dump cycle
reproduces it byte for byte.
"""

from __future__ import annotations

import json
from typing import Any, Iterable

from .identities import CaseResult, VerificationReport, format_terms

REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "additionalProperties": False,
    "required": ["family", "n_max", "k_max", "checked", "failed", "elapsed_ms", "cases"],
    "properties": {
        "family": {"type": "string"},
        "n_max": {"type": "integer", "minimum": 0},
        "k_max": {"type": "integer", "minimum": 0},
        "checked": {"type": "integer", "minimum": 0},
        "failed": {"type": "integer", "minimum": 0},
        "elapsed_ms": {"type": "integer", "minimum": 0},
        "cases": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["n", "k", "lhs_terms", "lhs_total", "rhs_terms", "rhs_total", "equal"],
                "properties": {
                    "n": {"type": "integer", "minimum": 0},
                    "k": {"type": "integer", "minimum": 0},
                    "lhs_terms": {"type": "array", "items": {"type": "string", "pattern": "^-?[0-9]+$"}},
                    "lhs_total": {"type": "string", "pattern": "^-?[0-9]+$"},
                    "rhs_terms": {"type": "array", "items": {"type": "string", "pattern": "^[+-][0-9]+$"}},
                    "rhs_total": {"type": "string", "pattern": "^-?[0-9]+$"},
                    "equal": {"type": "boolean"},
                },
            },
        },
    },
}


def _signed(t: int) -> str:
    return f"-{-t}" if t < 0 else f"+{t}"


def case_to_dict(result: CaseResult) -> dict[str, Any]:
    return {
        "n": result.case.n,
        "k": result.case.k,
        "lhs_terms": [str(t) for t in result.lhs.terms],
        "lhs_total": str(result.lhs.total),
        "rhs_terms": [_signed(t) for t in result.rhs.terms],
        "rhs_total": str(result.rhs.total),
        "equal": result.equal,
    }


def report_to_dict(report: VerificationReport) -> dict[str, Any]:
    return {
        "family": report.family.cli_name,
        "n_max": report.n_max,
        "k_max": report.k_max,
        "checked": report.checked,
        "failed": report.failed,
        "elapsed_ms": int(round(report.elapsed_ms)),
        "cases": [case_to_dict(c) for c in report.cases],
    }


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def reports_to_json(reports: Iterable[VerificationReport], as_array: bool = False) -> str:
    """A single report as an object, or an array of report objects."""
    docs = [report_to_dict(r) for r in reports]
    if not as_array and len(docs) != 1:
        raise ValueError("several reports need as_array=True")
    return canonical_json(docs if as_array else docs[0])


def report_to_text(report: VerificationReport) -> str:
    lines = [
        f"{report.family.cli_name}: n <= {report.n_max}, k <= {report.k_max}: "
        f"checked {report.checked}, failed {report.failed} ({report.elapsed_ms:.1f} ms)"
    ]
    for c in report.cases:
        status = "ok" if c.equal else "FAIL"
        lines.append(f"  n={c.case.n} k={c.case.k}: {c.line_item()}  {status}")
    return "\n".join(lines) + "\n"


__all__ = [
    "REPORT_SCHEMA",
    "case_to_dict",
    "report_to_dict",
    "canonical_json",
    "reports_to_json",
    "report_to_text",
    "format_terms",
]
