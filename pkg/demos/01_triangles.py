"""Pascal's triangle and the trinomial triangle.

Run:
    python demos/01_triangles.py
"""

from stickkit import binomial, pascal_row, trinomial, trinomial_row
from stickkit.render import RenderSpec, render

# Each trinomial entry is the sum of the three entries above it.
print(render(RenderSpec("trinomial", 7)))

# Rows are palindromic and sum to powers of three.
for n in range(7):
    row = trinomial_row(n)
    print(n, list(row), sum(row), 3**n)

# Point queries are total: out-of-range indices give 0.
print(binomial(8, 3), binomial(5, 7), binomial(-2, 1))
print(trinomial(6, 2), trinomial(6, -2), trinomial(3, 4))

# Nothing overflows.
print(pascal_row(1000).at(500).bit_length(), "bits in C(1000, 500)")
print("T(500, 0) has", len(str(trinomial(500, 0))), "digits")
