"""Exact binomial, trinomial and multinomial coefficients.

Every coefficient function is total: indices outside the valid range give 0.
Rows are built by the additive recurrences and memoized in an append-only
cache, so sweeps that revisit the same rows stay cheap.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "RowKind",
    "TriangleRow",
    "RowCache",
    "binomial",
    "pascal_row",
    "trinomial",
    "trinomial_row",
    "multinomial",
]


class RowKind(str, enum.Enum):
    PASCAL = "pascal"
    TRINOMIAL = "trinomial"


@dataclass(frozen=True)
class TriangleRow:
    """One row of a Pascal or trinomial triangle.

    ``entries`` is ordered left to right: positions ``0..n`` for Pascal rows
    and ``-n..n`` for trinomial rows.
    """

    kind: RowKind
    n: int
    entries: tuple[int, ...]

    @property
    def positions(self) -> range:
        if self.kind is RowKind.PASCAL:
            return range(0, self.n + 1)
        return range(-self.n, self.n + 1)

    def at(self, k: int) -> int:
        """Entry at position ``k`` (zero outside the row)."""
        offset = k if self.kind is RowKind.PASCAL else k + self.n
        if 0 <= offset < len(self.entries):
            return self.entries[offset]
        return 0

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


class RowCache:
    """Append-only store of triangle rows, extended on demand.

    Pascal rows are stored whole. Trinomial rows keep only positions
    ``0..n``; negative positions are answered through the symmetry
    ``T(n, k) = T(n, -k)``.

    Readers never take the lock: rows are appended to a list and never
    mutated, so a reader sees either the old or the new length.
    """

    def __init__(self) -> None:
        self._rows: dict[RowKind, list[tuple[int, ...]]] = {
            RowKind.PASCAL: [(1,)],
            RowKind.TRINOMIAL: [(1,)],
        }
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return sum(len(rows) for rows in self._rows.values())

    def depth(self, kind: RowKind) -> int:
        """Number of rows of ``kind`` currently cached."""
        return len(self._rows[RowKind(kind)])

    def get(self, kind: RowKind, n: int) -> tuple[int, ...]:
        rows = self._rows[kind]
        if n < len(rows):
            return rows[n]
        with self._lock:
            step = _pascal_step if kind is RowKind.PASCAL else _trinomial_half_step
            while len(rows) <= n:
                rows.append(step(rows[-1]))
        return rows[n]

    def clear(self) -> None:
        with self._lock:
            for rows in self._rows.values():
                del rows[1:]


def _pascal_step(prev: tuple[int, ...]) -> tuple[int, ...]:
    return (1,) + tuple(a + b for a, b in zip(prev, prev[1:])) + (1,)


def _trinomial_half_step(prev: tuple[int, ...]) -> tuple[int, ...]:
    # prev holds T(m, 0..m); build T(m+1, 0..m+1) from the three cells above.
    m = len(prev) - 1

    def above(j: int) -> int:
        j = abs(j)
        return prev[j] if j <= m else 0

    return tuple(above(k - 1) + above(k) + above(k + 1) for k in range(m + 2))


_cache = RowCache()


def row_cache() -> RowCache:
    """The process-wide row cache shared by the functions below."""
    return _cache


@lru_cache(maxsize=1 << 16)
def _binomial(n: int, k: int) -> int:
    result = 1
    for i in range(1, k + 1):
        # exact at every step: result is C(n-k+i, i) afterwards
        result = result * (n - k + i) // i
    return result


def binomial(n: int, k: int) -> int:
    """Exact ``C(n, k)``; 0 when ``n < 0``, ``k < 0`` or ``k > n``.

    Point queries use the multiplicative formula and never build rows.

    >>> binomial(8, 3)
    56
    >>> binomial(5, 7)
    0
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return _binomial(n, min(k, n - k))


def pascal_row(n: int) -> TriangleRow:
    """Row ``n`` of Pascal's triangle, built by the additive recurrence."""
    if n < 0:
        raise ValueError(f"row index must be non-negative, got {n}")
    return TriangleRow(RowKind.PASCAL, n, _cache.get(RowKind.PASCAL, n))


def trinomial(n: int, k: int) -> int:
    """Trinomial coefficient: the coefficient of ``x**(n+k)`` in ``(1+x+x**2)**n``.

    Zero outside the band ``n >= 0``, ``|k| <= n``.

    >>> trinomial(6, 2), trinomial(6, -2), trinomial(5, 0)
    (90, 90, 51)
    """
    k = abs(k)
    if n < 0 or k > n:
        return 0
    return _cache.get(RowKind.TRINOMIAL, n)[k]


def trinomial_row(n: int) -> TriangleRow:
    """Full trinomial row ``n`` (``2n + 1`` entries, positions ``-n..n``)."""
    if n < 0:
        raise ValueError(f"row index must be non-negative, got {n}")
    half = _cache.get(RowKind.TRINOMIAL, n)
    return TriangleRow(RowKind.TRINOMIAL, n, half[:0:-1] + half)


def multinomial(n: int, parts: Sequence[int] | Iterable[int]) -> int:
    """``n! / prod(p!)`` for non-negative ``parts`` summing to ``n``, else 0.

    Evaluated as a running product of binomials so no factorial is formed.

    >>> multinomial(4, [2, 1, 1])
    12
    >>> multinomial(3, [1, 1, 2])
    0
    """
    parts = list(parts)
    if n < 0 or any(p < 0 for p in parts) or sum(parts) != n:
        return 0
    result = 1
    filled = 0
    for p in parts:
        filled += p
        result *= binomial(filled, p)
    return result
