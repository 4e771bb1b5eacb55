"""Getting the same coefficients a second way: expand the polynomial.

Run:
    python demos/02_expansion_oracle.py
"""

from stickkit import IntegerPolynomial, poly_pow, trinomial, trinomial_oracle

base = IntegerPolynomial([1, 1, 1])  # 1 + x + x^2
for n in range(5):
    print(n, list(poly_pow(base, n).coeffs))

# The coefficient of x^(n+k) in (1+x+x^2)^n is the trinomial coefficient T(n, k).
# The Laurent form (1 + x + 1/x)^n is the same thing shifted by x^n.
mismatches = [
    (n, k) for n in range(61) for k in range(-n, n + 1) if trinomial(n, k) != trinomial_oracle(n, k)
]
print("recurrence vs expansion mismatches for n <= 60:", mismatches)
