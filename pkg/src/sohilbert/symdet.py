"""Closed-form data for the symmetric determinantal ring ``R = K[Y^T Y]``.

Y is a ``t x n`` matrix of indeterminates, so R is ``K[X]/I_{t+1}(X)`` for a
symmetric ``n x n`` matrix X.  Integers named ``a_*`` are in the Y grading
(``deg x_ij = 2``) unless the name says otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import InitVar, dataclass
from math import comb

from sohilbert.series import GradingTag, HilbertSeries, LaurentPoly


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class RingSpec:
    t: int
    n: int
    check: InitVar[bool] = True

    def __post_init__(self, check):
        if self.t < 1 or self.n < 1:
            raise SpecError(f"t and n must be positive, got t={self.t}, n={self.n}")
        if check and not self.t <= self.n - 1:
            raise SpecError(f"need 1 <= t <= n-1, got t={self.t}, n={self.n}")

    def __str__(self):
        return f"(t={self.t}, n={self.n})"


class CanonicalCase(enum.Enum):
    P_TWIST = "PTwist"
    FREE_TWIST = "FreeTwist"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CanonicalDescriptor:
    """``P_TWIST``: omega_R = p(twist); ``FREE_TWIST``: omega_R = R(twist)."""

    case: CanonicalCase
    twist: int


def krull_dim(spec: RingSpec) -> int:
    return comb(spec.n + 1, 2) - comb(spec.n + 1 - spec.t, 2)


def same_parity(spec: RingSpec) -> bool:
    return (spec.n - spec.t) % 2 == 0


def is_gorenstein(spec: RingSpec) -> bool:
    return (spec.n - spec.t - 1) % 2 == 0


def a_invariant_R(spec: RingSpec) -> int:
    t, n = spec.t, spec.n
    return -t * (n + 1) if same_parity(spec) else -t * n


def to_rescaled(a: int) -> int:
    """Convert a Y-grading degree to the rescaled grading."""
    if a % 2:
        raise SpecError(f"degree {a} has no rescaled counterpart")
    return a // 2


def canonical_descriptor(spec: RingSpec) -> CanonicalDescriptor:
    t, n = spec.t, spec.n
    if same_parity(spec):
        return CanonicalDescriptor(CanonicalCase.P_TWIST, -t * n + t)
    return CanonicalDescriptor(CanonicalCase.FREE_TWIST, -t * n)


def h_poly_codim3(spec: RingSpec) -> HilbertSeries:
    """Rescaled series of R when ``n = t + 2``: ``sum_{i=0}^{n-2} C(i+2, 2) z**i``."""
    if spec.n != spec.t + 2:
        raise SpecError("not codimension three")
    coeffs = tuple(comb(i, 2) for i in range(2, spec.n + 1))
    return HilbertSeries(LaurentPoly(0, coeffs), krull_dim(spec), GradingTag.RESCALED)


def numerator_degree_R(spec: RingSpec) -> int:
    """Degree of the rescaled h-polynomial of R: ``dim + a(R)/2``."""
    return krull_dim(spec) + to_rescaled(a_invariant_R(spec))


def h_poly_R(spec: RingSpec, oracle_budget: int = 4, field=None, guard=None) -> HilbertSeries:
    """Rescaled series of R.

    Closed form in codimension three; otherwise the h-polynomial is
    reconstructed from brute-force graded dimensions, which needs degrees up
    to ``numerator_degree_R(spec)``.  Refuses if that exceeds the budget.
    """
    if spec.n == spec.t + 2:
        return h_poly_codim3(spec)
    from sohilbert import oracle

    k = numerator_degree_R(spec)
    if k > oracle_budget:
        raise oracle.BudgetError(f"reconstruction needs rescaled degree {k}, budget is {oracle_budget}")
    table = oracle.hilbert_function(spec, oracle.Label.GRAM_ONLY, k, field=field, guard=guard, rescale=True)
    num = oracle.reconstruct_numerator(table.dims, krull_dim(spec), k)
    if num.is_zero() or num.degree != k:
        raise oracle.OracleError(f"reconstructed numerator {num} does not have degree {k}")
    return HilbertSeries(num, krull_dim(spec), GradingTag.RESCALED)
