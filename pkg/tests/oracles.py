"""Reference computations used only by the tests.

Deliberately naive and independent of both the recurrences and the
polynomial oracle in the package.
"""

from itertools import product
from math import factorial


def binomial_factorial(n, k):
    if n < 0 or k < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def multinomial_factorial(n, parts):
    if n < 0 or any(p < 0 for p in parts) or sum(parts) != n:
        return 0
    denom = 1
    for p in parts:
        denom *= factorial(p)
    return factorial(n) // denom


def laurent_trinomial(n, k):
    """Coefficient of x**k in (1 + x + 1/x)**n, expanded with a dict keyed by exponent."""
    poly = {0: 1}
    for _ in range(n):
        nxt = {}
        for e, c in poly.items():
            for step in (-1, 0, 1):
                nxt[e + step] = nxt.get(e + step, 0) + c
        poly = nxt
    return poly.get(k, 0)


def trinomial_by_enumeration(n, k):
    """Count words in {-1, 0, 1}**n whose letters sum to k."""
    return sum(1 for word in product((-1, 0, 1), repeat=n) if sum(word) == k)
