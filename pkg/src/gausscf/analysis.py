"""Closed-form error probabilities for the compute-and-forward link.

Two relay-error expressions are provided. :func:`relay_error_paper` is the
one-dimensional crossing probability ``erfc(1 / (2*sqrt(2)*sigma))`` used in
the union bound. :func:`relay_error_exact` is the probability that complex
noise with total variance ``sigma**2`` leaves the unit square around a
lattice point, which is what the simulator actually measures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def rank_failure_fraction(p: int, L: int) -> Fraction:
    """``1 - prod_{t=1..L} (1 - p**-t)`` as an exact rational."""
    if p < 2 or L < 1:
        raise ValueError("need p >= 2 and L >= 1")
    prod = Fraction(1)
    for t in range(1, L + 1):
        prod *= 1 - Fraction(1, p**t)
    return 1 - prod


def rank_failure_prob(p: int, L: int) -> float:
    """Probability that a uniform L x L matrix over F_p is singular.

    Rounded once from the exact rational, so e.g. ``rank_failure_prob(5, 2)``
    is exactly ``0.232``.
    """
    return float(rank_failure_fraction(p, L))


def _check_sigma(sigma: float) -> None:
    if not sigma >= 0:
        raise ValueError(f"sigma must be non-negative, got {sigma}")


def relay_error_paper(sigma: float) -> float:
    _check_sigma(sigma)
    if sigma == 0:
        return 0.0
    return math.erfc(1.0 / (2.0 * math.sqrt(2.0) * sigma))


def relay_error_exact(sigma: float) -> float:
    """``1 - erf(1/(2 sigma))**2``, evaluated via erfc to keep small tails accurate."""
    _check_sigma(sigma)
    if sigma == 0:
        return 0.0
    c = math.erfc(1.0 / (2.0 * sigma))
    return c * (2.0 - c)


@dataclass(frozen=True)
class BoundReport:
    p: int
    L: int
    sigma: float
    p1: float
    pr_paper: float
    pr_exact: float
    union_bound: float


def union_bound(p: int, L: int, sigma: float) -> BoundReport:
    p1 = rank_failure_prob(p, L)
    pr = relay_error_paper(sigma)
    return BoundReport(p, L, sigma, p1, pr, relay_error_exact(sigma), min(1.0, p1 + L * pr))
