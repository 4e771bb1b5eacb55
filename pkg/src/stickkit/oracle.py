"""Brute-force coefficient oracle.

Coefficients are obtained by literally expanding ``(1+x)**n`` and
``(1+x+x**2)**n`` with schoolbook convolution. Nothing here touches the
recurrences in :mod:`stickkit.coefficients`, which is what makes it useful
as a second route.

The Laurent form ``(1 + x + 1/x)**n`` is not represented directly: since
``x**n * (1 + x + 1/x)**n == (1 + x + x**2)**n``, its ``x**k`` coefficient is
the ``x**(n+k)`` coefficient of the ordinary power.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "IntegerPolynomial",
    "poly_mul",
    "poly_pow",
    "binomial_oracle",
    "trinomial_oracle",
    "multinomial_oracle",
]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True, init=False)
class IntegerPolynomial:
    """Dense integer polynomial; ``coeffs[i]`` multiplies ``x**i``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def __mul__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        return poly_mul(self, other)

    def __pow__(self, n: int) -> IntegerPolynomial:
        return poly_pow(self, n)

    def __repr__(self) -> str:
        return f"IntegerPolynomial({list(self.coeffs)})"


ONE = IntegerPolynomial([1])
ONE_PLUS_X = IntegerPolynomial([1, 1])
ONE_PLUS_X_PLUS_X2 = IntegerPolynomial([1, 1, 1])


def poly_mul(a: IntegerPolynomial, b: IntegerPolynomial) -> IntegerPolynomial:
    """Exact product by schoolbook convolution."""
    if a.is_zero() or b.is_zero():
        return IntegerPolynomial()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j, bj in enumerate(b.coeffs):
            out[i + j] += ai * bj
    return IntegerPolynomial(out)


@lru_cache(maxsize=512)
def _pow(base: IntegerPolynomial, n: int) -> IntegerPolynomial:
    result = ONE
    square = base
    while n:
        if n & 1:
            result = poly_mul(result, square)
        n >>= 1
        if n:
            square = poly_mul(square, square)
    return result


def poly_pow(base: IntegerPolynomial, n: int) -> IntegerPolynomial:
    """``base ** n`` by binary exponentiation; ``base ** 0 == 1``."""
    if n < 0:
        raise ValueError(f"exponent must be non-negative, got {n}")
    return _pow(base, n)


def binomial_oracle(n: int, k: int) -> int:
    """Coefficient of ``x**k`` in the expansion of ``(1+x)**n``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return poly_pow(ONE_PLUS_X, n).coefficient(k)


def trinomial_oracle(n: int, k: int) -> int:
    """Coefficient of ``x**(n+k)`` in the expansion of ``(1+x+x**2)**n``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return poly_pow(ONE_PLUS_X_PLUS_X2, n).coefficient(n + k)


def multinomial_oracle(n: int, parts: Sequence[int]) -> int:
    """Multinomial coefficient as a product of oracle binomials.

    Choosing the positions of each part in turn among the ones left:
    ``C(n, p1) * C(n - p1, p2) * ...``. Zero unless every part is
    non-negative and the parts sum to ``n``.
    """
    if n < 0 or any(p < 0 for p in parts) or sum(parts) != n:
        return 0
    result = 1
    remaining = n
    for p in parts:
        result *= binomial_oracle(remaining, p)
        remaining -= p
    return result
