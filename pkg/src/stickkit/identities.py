"""Both sides of the hockey-stick identities, and sweeps that check them.

Each evaluator returns a :class:`SideEvaluation` holding the individual
signed summands, so a mismatch can be read off term by term. Evaluators take
an optional :class:`CoefficientSource`; passing :data:`ORACLE` reruns the
same formula on coefficients obtained by polynomial expansion.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

from . import coefficients, oracle

__all__ = [
    "Family",
    "IdentityCase",
    "SideEvaluation",
    "CaseResult",
    "VerificationReport",
    "CoefficientSource",
    "RECURRENCE",
    "ORACLE",
    "pascal_hockey_lhs",
    "pascal_hockey_rhs",
    "trinomial_hockey_lhs",
    "trinomial_hockey_rhs",
    "big_stick_puck",
    "little_stick",
    "pyramid_lhs",
    "pyramid_rhs",
    "evaluate",
    "verify_family",
]


class Family(str, enum.Enum):
    LITTLE_STICK = "little_stick"
    BIG_STICK_PUCK = "big_stick_puck"
    PASCAL_HOCKEY = "pascal_hockey"
    TRINOMIAL_HOCKEY = "trinomial_hockey"
    PYRAMID = "pyramid"

    @classmethod
    def parse(cls, name: str | Family) -> Family:
        """Accept ``Family`` members and names spelled with ``_`` or ``-``."""
        if isinstance(name, cls):
            return name
        return cls(str(name).replace("-", "_"))

    @property
    def cli_name(self) -> str:
        return self.value.replace("_", "-")


BIG_STICK_K = 3


@dataclass(frozen=True, order=True)
class IdentityCase:
    family: Family
    n: int
    k: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family.parse(self.family))
        if self.family is Family.BIG_STICK_PUCK:
            object.__setattr__(self, "k", BIG_STICK_K)


@dataclass(frozen=True)
class SideEvaluation:
    """Signed summands of one side of an identity and their total."""

    terms: tuple[int, ...]
    total: int = field(init=False)

    def __init__(self, terms: Sequence[int]) -> None:
        object.__setattr__(self, "terms", tuple(terms))
        object.__setattr__(self, "total", sum(self.terms))

    def __str__(self) -> str:
        return format_terms(self.terms)


def format_terms(terms: Sequence[int]) -> str:
    """``[90, -21, 1]`` -> ``"90-21+1"``."""
    if not terms:
        return "0"
    out = [str(terms[0])]
    for t in terms[1:]:
        out.append(f"-{-t}" if t < 0 else f"+{t}")
    return "".join(out)


class CoefficientSource(NamedTuple):
    binomial: Callable[[int, int], int]
    trinomial: Callable[[int, int], int]
    multinomial: Callable[[int, Sequence[int]], int]


RECURRENCE = CoefficientSource(
    coefficients.binomial, coefficients.trinomial, coefficients.multinomial
)


def _oracle_binomial(n: int, k: int) -> int:
    return oracle.binomial_oracle(n, k) if n >= 0 else 0


def _oracle_trinomial(n: int, k: int) -> int:
    return oracle.trinomial_oracle(n, k) if n >= 0 else 0


ORACLE = CoefficientSource(_oracle_binomial, _oracle_trinomial, oracle.multinomial_oracle)


def _check(**values: int) -> None:
    for name, v in values.items():
        if v < 0:
            raise ValueError(f"{name} must be non-negative, got {v}")


def pascal_hockey_lhs(n: int, k: int, source: CoefficientSource = RECURRENCE) -> SideEvaluation:
    """Stick of ``sum_{i=0..k} C(n+2i, i)``."""
    _check(n=n, k=k)
    return SideEvaluation([source.binomial(n + 2 * i, i) for i in range(k + 1)])


def pascal_hockey_rhs(n: int, k: int, source: CoefficientSource = RECURRENCE) -> SideEvaluation:
    """Alternating puck sum ``sum_{j=0..k//2} (-1)**j C(n+2k-j+1, k-2j)``."""
    _check(n=n, k=k)
    return SideEvaluation(
        [(-1) ** j * source.binomial(n + 2 * k - j + 1, k - 2 * j) for j in range(k // 2 + 1)]
    )


def trinomial_hockey_lhs(n: int, k: int, source: CoefficientSource = RECURRENCE) -> SideEvaluation:
    """Stick ``T(n, n), T(n+1, n), ..., T(n+k, n)`` down trinomial column ``n``."""
    _check(n=n, k=k)
    return SideEvaluation([source.trinomial(n + i, n) for i in range(k + 1)])


def trinomial_hockey_rhs(n: int, k: int, source: CoefficientSource = RECURRENCE) -> SideEvaluation:
    """Alternating sum over row ``n+k+1``: ``T(n+k+1, n+1) - T(n+k+1, n+3) + ...``."""
    _check(n=n, k=k)
    row = n + k + 1
    return SideEvaluation(
        [(-1) ** s * source.trinomial(row, n + 2 * s + 1) for s in range(k // 2 + 1)]
    )


def big_stick_puck(n: int, source: CoefficientSource = RECURRENCE) -> tuple[SideEvaluation, SideEvaluation]:
    """``C(n,0)+C(n+2,1)+C(n+4,2)+C(n+6,3)`` against ``C(n+7,3) - C(n+6,1)``.

    The right side is written out explicitly rather than delegated to
    :func:`pascal_hockey_rhs`, so the two can be compared.
    """
    _check(n=n)
    lhs = pascal_hockey_lhs(n, BIG_STICK_K, source)
    rhs = SideEvaluation([source.binomial(n + 7, 3), -source.binomial(n + 6, 1)])
    return lhs, rhs


def little_stick(n: int, k: int, source: CoefficientSource = RECURRENCE) -> tuple[SideEvaluation, SideEvaluation]:
    """Column sum ``sum_{i=0..k} C(n+i, i) = C(n+k+1, k)``.

    This is the usual statement of the little hockey stick; it is checked
    here only by evaluation, not taken from any proof.
    """
    _check(n=n, k=k)
    lhs = SideEvaluation([source.binomial(n + i, i) for i in range(k + 1)])
    rhs = SideEvaluation([source.binomial(n + k + 1, k)])
    return lhs, rhs


def _pyramid_layer(level: int, diagonal: int, shift: int, source: CoefficientSource) -> int:
    # sum of multinomial(level; r, s, r - shift) over r, s >= 0 with 2r + s == diagonal;
    # triples with a negative part vanish through zero-extension
    total = 0
    for s in range(diagonal % 2, diagonal + 1, 2):
        r = (diagonal - s) // 2
        total += source.multinomial(level, (r, s, r - shift))
    return total


def pyramid_lhs(n: int, k: int, source: CoefficientSource = RECURRENCE) -> SideEvaluation:
    """Stick of diagonal sums in Pascal's pyramid.

    Term ``i`` is ``sum over 2r+s = 2n+i of multinomial(n+i; r, s, r-n)``,
    which equals ``T(n+i, n)``.
    """
    _check(n=n, k=k)
    return SideEvaluation([_pyramid_layer(n + i, 2 * n + i, n, source) for i in range(k + 1)])


def pyramid_rhs(n: int, k: int, source: CoefficientSource = RECURRENCE) -> SideEvaluation:
    """Signed diagonal sums in layer ``n+k+1`` of Pascal's pyramid.

    Term ``j`` is ``(-1)**j`` times the sum over ``2r+s = 2n+k+2j+2`` of
    ``multinomial(n+k+1; r, s, r-n-2j-1)``.
    """
    _check(n=n, k=k)
    level = n + k + 1
    return SideEvaluation(
        [
            (-1) ** j * _pyramid_layer(level, 2 * n + k + 2 * j + 2, n + 2 * j + 1, source)
            for j in range(k // 2 + 1)
        ]
    )


def _paired(lhs_fn, rhs_fn):
    def evaluate_pair(n: int, k: int, source: CoefficientSource = RECURRENCE):
        return lhs_fn(n, k, source), rhs_fn(n, k, source)

    return evaluate_pair


# Family -> callable (n, k, source) -> (lhs, rhs). Looked up at call time,
# so a test can swap in a broken evaluator.
EVALUATORS: dict[Family, Callable[..., tuple[SideEvaluation, SideEvaluation]]] = {
    Family.LITTLE_STICK: little_stick,
    Family.BIG_STICK_PUCK: lambda n, k, source=RECURRENCE: big_stick_puck(n, source),
    Family.PASCAL_HOCKEY: _paired(pascal_hockey_lhs, pascal_hockey_rhs),
    Family.TRINOMIAL_HOCKEY: _paired(trinomial_hockey_lhs, trinomial_hockey_rhs),
    Family.PYRAMID: _paired(pyramid_lhs, pyramid_rhs),
}


@dataclass(frozen=True)
class CaseResult:
    case: IdentityCase
    lhs: SideEvaluation
    rhs: SideEvaluation

    @property
    def equal(self) -> bool:
        return self.lhs.total == self.rhs.total

    def line_item(self) -> str:
        """``"1+2+6+16+45 = 90-21+1 = 70"``, or both totals when they differ."""
        if self.equal:
            return f"{self.lhs} = {self.rhs} = {self.lhs.total}"
        return f"{self.lhs} = {self.lhs.total} != {self.rhs} = {self.rhs.total}"


@dataclass
class VerificationReport:
    family: Family
    n_max: int
    k_max: int
    cases: list[CaseResult]
    elapsed_ms: float = 0.0

    @property
    def checked(self) -> int:
        return len(self.cases)

    @property
    def failed(self) -> int:
        return sum(not c.equal for c in self.cases)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def evaluate(case: IdentityCase, source: CoefficientSource = RECURRENCE) -> CaseResult:
    lhs, rhs = EVALUATORS[case.family](case.n, case.k, source)
    return CaseResult(case, lhs, rhs)


def family_cases(family: Family | str, n_max: int, k_max: int) -> list[IdentityCase]:
    """Cases of a sweep in lexicographic ``(n, k)`` order."""
    family = Family.parse(family)
    _check(n_max=n_max, k_max=k_max)
    if family is Family.BIG_STICK_PUCK:
        return [IdentityCase(family, n) for n in range(n_max + 1)]
    return [IdentityCase(family, n, k) for n in range(n_max + 1) for k in range(k_max + 1)]


def verify_family(
    family: Family | str,
    n_max: int,
    k_max: int,
    *,
    source: CoefficientSource = RECURRENCE,
    fail_fast: bool = False,
    workers: int | None = None,
) -> VerificationReport:
    """Check every case of ``family`` in ``[0, n_max] x [0, k_max]``.

    Failed cases are recorded and the sweep continues, unless ``fail_fast``
    is set, in which case the report ends at the first failure. With
    ``workers > 1`` cases are evaluated on a thread pool; the report order is
    the same either way.
    """
    family = Family.parse(family)
    cases = family_cases(family, n_max, k_max)
    start = time.perf_counter()
    results: list[CaseResult] = []
    if workers and workers > 1 and not fail_fast:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: evaluate(c, source), cases))
    else:
        for case in cases:
            result = evaluate(case, source)
            results.append(result)
            if fail_fast and not result.equal:
                break
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerificationReport(family, n_max, k_max, results, elapsed)
