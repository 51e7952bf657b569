"""Telling a weight-rho function apart from the zero function.

A single reflection vector is enough here.  Success after ``m`` iterations
needs ``cos(m * theta) = 0`` with ``cos(theta) = 1 - 2*rho*mu1``, which has
the closed-form solution ``theta = pi / (2m)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .scalar import grover_angle


@dataclass(frozen=True)
class ZeroWeightScheme:
    m: int
    mu1: float
    rho: float | None = None


@dataclass(frozen=True)
class Undecidable:
    """Negative verdict; falsy so callers can write ``if scheme:``."""

    reason: str

    def __bool__(self):
        return False


def _check_rho(rho):
    if not math.isfinite(rho) or not 0.0 < rho <= 1.0:
        raise ValueError(f"rho must lie in (0, 1], got {rho!r}")


def min_weight_zero(m: int) -> float:
    """Smallest weight distinguishable from zero with ``m`` iterations."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return 0.5 * (1.0 - math.cos(math.pi / (2 * m)))


def min_iterations_zero(rho: float) -> int:
    """Fewest iterations telling weight ``rho`` from the zero function."""
    _check_rho(rho)
    m = math.ceil(math.pi / (2.0 * grover_angle(rho, 1.0)))
    # ceil of a rounded quotient can land one off at exact thresholds
    while m > 1 and min_weight_zero(m - 1) <= rho:
        m -= 1
    while min_weight_zero(m) > rho:
        m += 1
    return m


def zero_scheme(rho: float, m: int) -> ZeroWeightScheme | Undecidable:
    """Reflection parameter achieving sure success against the zero function.

    Returns :class:`Undecidable` when ``rho < min_weight_zero(m)``.  At
    equality ``mu1`` is exactly 1.
    """
    _check_rho(rho)
    if m < 1:
        raise ValueError("m must be >= 1")
    need = 1.0 - math.cos(math.pi / (2 * m))
    if need > 2.0 * rho:
        return Undecidable(f"rho={rho} below rho_min({m})={need / 2}")
    return ZeroWeightScheme(m=m, mu1=min(1.0, need / (2.0 * rho)), rho=rho)
