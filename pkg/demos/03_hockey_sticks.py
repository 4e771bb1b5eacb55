"""The hockey stick identities, term by term.

Run:
    python demos/03_hockey_sticks.py
"""

from stickkit import (
    ORACLE,
    big_stick_puck,
    little_stick,
    pascal_hockey_lhs,
    pascal_hockey_rhs,
    trinomial_hockey_lhs,
    trinomial_hockey_rhs,
)
from stickkit.render import RenderSpec, render

# Stick cells are bracketed, puck cells parenthesized.
print(render(RenderSpec("pascal", 9, highlight=(1, 3))))
print(pascal_hockey_lhs(1, 3), "=", pascal_hockey_rhs(1, 3), "=", pascal_hockey_rhs(1, 3).total)

print(render(RenderSpec("trinomial", 7, highlight=(1, 4))))
print(trinomial_hockey_lhs(1, 4), "=", trinomial_hockey_rhs(1, 4), "=", trinomial_hockey_rhs(1, 4).total)

# The big stick and puck: k = 3 of the Pascal identity.
for n in range(5):
    lhs, rhs = big_stick_puck(n)
    print(f"n={n}: {lhs} = {rhs} = {rhs.total}")

# The little stick, for comparison.
lhs, rhs = little_stick(2, 2)
print(f"{lhs} = {rhs}")

# Same identity, coefficients taken from polynomial expansion instead.
print(trinomial_hockey_lhs(3, 6, ORACLE).total, trinomial_hockey_rhs(3, 6, ORACLE).total)

# The right side grows by exactly the next stick term.
n, k = 2, 5
print(trinomial_hockey_rhs(n, k + 1).total - trinomial_hockey_rhs(n, k).total,
      trinomial_hockey_lhs(n, k + 1).terms[-1])
