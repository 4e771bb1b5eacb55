"""Pascal's pyramid form of the trinomial identity, and exhaustive sweeps.

Run:
    python demos/04_pyramid_and_sweeps.py
"""

from stickkit import multinomial, pyramid_lhs, pyramid_rhs, trinomial_hockey_lhs, verify_family
from stickkit.report import report_to_text

# Summing layer n+i of the pyramid along 2r + s = 2n + i gives T(n+i, n).
print(multinomial(4, [2, 1, 1]))
print(pyramid_lhs(1, 4).terms, trinomial_hockey_lhs(1, 4).terms)
print(pyramid_rhs(1, 4).terms)

for family in ("little_stick", "big_stick_puck", "pascal_hockey", "trinomial_hockey", "pyramid"):
    report = verify_family(family, 20, 20)
    print(f"{family:18s} checked {report.checked:4d} failed {report.failed}  {report.elapsed_ms:7.1f} ms")

print(report_to_text(verify_family("trinomial_hockey", 1, 4)))
