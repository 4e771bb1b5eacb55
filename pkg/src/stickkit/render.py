"""Text, CSV and JSON renderings of Pascal and trinomial triangles.

A highlighted identity case marks the summands of its left side (the stick)
and the cells of its right side (the puck). In text output stick cells are
drawn as ``[x]`` and puck cells as ``(x)``; CSV and JSON carry the marks in a
separate structure shaped like the rows.
"""

from __future__ import annotations

import csv
import io
import json
import textwrap
from dataclasses import dataclass
from typing import Literal

from .coefficients import RowKind, pascal_row, trinomial_row

STICK = "stick"
PUCK = "puck"

Format = Literal["text", "csv", "json"]


class InvalidSpecError(ValueError):
    """Render request that cannot be drawn as asked."""


@dataclass(frozen=True)
class RenderSpec:
    kind: RowKind
    rows: int
    highlight: tuple[int, int] | None = None
    format: Format = "text"

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", RowKind(self.kind))
        if self.rows < 1:
            raise ValueError(f"rows must be at least 1, got {self.rows}")
        if self.format not in ("text", "csv", "json"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.highlight is not None:
            n, k = self.highlight
            if n < 0 or k < 0:
                raise InvalidSpecError(f"highlight indices must be non-negative, got {n},{k}")
            deepest = max(row for row, _ in highlight_cells(self.kind, n, k))
            if deepest > self.rows - 1:
                raise InvalidSpecError(
                    f"highlight {n},{k} reaches row {deepest}, "
                    f"but only rows 0..{self.rows - 1} are rendered"
                )


def highlight_cells(kind: RowKind, n: int, k: int) -> dict[tuple[int, int], str]:
    """Map ``(row, position)`` to ``"stick"`` or ``"puck"`` for case ``(n, k)``."""
    marks: dict[tuple[int, int], str] = {}
    if RowKind(kind) is RowKind.PASCAL:
        for i in range(k + 1):
            marks[(n + 2 * i, i)] = STICK
        for j in range(k // 2 + 1):
            marks[(n + 2 * k - j + 1, k - 2 * j)] = PUCK
    else:
        for i in range(k + 1):
            marks[(n + i, n)] = STICK
        for s in range(k // 2 + 1):
            marks[(n + k + 1, n + 2 * s + 1)] = PUCK
    return marks


def _rows(spec: RenderSpec):
    make = pascal_row if spec.kind is RowKind.PASCAL else trinomial_row
    return [make(n) for n in range(spec.rows)]


def _marks(spec: RenderSpec, rows) -> list[list[str | None]]:
    cells = highlight_cells(spec.kind, *spec.highlight) if spec.highlight else {}
    return [[cells.get((row.n, pos)) for pos in row.positions] for row in rows]


def _decorate(value: int, mark: str | None) -> str:
    if mark == STICK:
        return f"[{value}]"
    if mark == PUCK:
        return f"({value})"
    return f" {value} "


def render_text(spec: RenderSpec) -> str:
    rows = _rows(spec)
    marks = _marks(spec, rows)
    width = max(len(str(v)) for row in rows for v in row) + 2
    # Pascal rows step by half a cell, so keep the pitch (cell + gap) even.
    if spec.kind is RowKind.PASCAL and width % 2 == 0:
        width += 1
    pitch = width + 1
    step = pitch // 2 if spec.kind is RowKind.PASCAL else pitch
    lines = []
    for row, row_marks in zip(rows, marks):
        cells = [_decorate(v, m).center(width) for v, m in zip(row, row_marks)]
        indent = " " * (step * (spec.rows - 1 - row.n))
        lines.append((indent + " ".join(cells)).rstrip())
    return textwrap.dedent("\n".join(lines)) + "\n"


def render_csv(spec: RenderSpec) -> str:
    """Values one row per line; with a highlight, a blank line and a marks block."""
    rows = _rows(spec)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow([str(v) for v in row])
    if spec.highlight:
        buf.write("\n")
        for row_marks in _marks(spec, rows):
            writer.writerow([m or "" for m in row_marks])
    return buf.getvalue()


def render_json(spec: RenderSpec) -> str:
    rows = _rows(spec)
    doc = {
        "kind": spec.kind.value,
        "rows": [[str(v) for v in row] for row in rows],
        "highlight": {"n": spec.highlight[0], "k": spec.highlight[1]} if spec.highlight else None,
        "marks": _marks(spec, rows) if spec.highlight else None,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render(spec: RenderSpec) -> str:
    return {"text": render_text, "csv": render_csv, "json": render_json}[spec.format](spec)
