"""Exact coefficients of Pascal's and the trinomial triangle, and checks of
their hockey-stick identities."""

from .coefficients import (
    RowKind,
    TriangleRow,
    binomial,
    multinomial,
    pascal_row,
    trinomial,
    trinomial_row,
)
from .identities import (
    ORACLE,
    RECURRENCE,
    CoefficientSource,
    Family,
    IdentityCase,
    SideEvaluation,
    VerificationReport,
    big_stick_puck,
    little_stick,
    pascal_hockey_lhs,
    pascal_hockey_rhs,
    pyramid_lhs,
    pyramid_rhs,
    trinomial_hockey_lhs,
    trinomial_hockey_rhs,
    verify_family,
)
from .oracle import (
    IntegerPolynomial,
    binomial_oracle,
    multinomial_oracle,
    poly_mul,
    poly_pow,
    trinomial_oracle,
)
from .render import InvalidSpecError, RenderSpec, render

__version__ = "0.1.0"
