"""Scalar building blocks: Grover angles, Chebyshev polynomials and the (A, B) curve.

Everything here works on plain floats and, where noted, on numpy arrays of
any shape.  The curve coordinates are evaluated through the Chebyshev
three-term recurrences, so there is no ``sin(m*theta) / sin(theta)`` ratio
to blow up at ``theta = 0`` or ``theta = pi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Slack allowed on Chebyshev arguments before they are clamped to [-1, 1].
ARG_SLACK = 1e-12


@dataclass(frozen=True)
class WeightPair:
    """The two candidate weights of the unknown Boolean function."""

    rho: float
    rho_prime: float

    def __post_init__(self):
        for name in ("rho", "rho_prime"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_counts(cls, r: int, r_prime: int, n_inputs: int) -> "WeightPair":
        if n_inputs <= 0:
            raise ValueError("n_inputs must be positive")
        return cls(r / n_inputs, r_prime / n_inputs)

    def swapped(self) -> "WeightPair":
        return WeightPair(self.rho_prime, self.rho)

    @property
    def gap(self) -> float:
        return abs(self.rho - self.rho_prime)


@dataclass(frozen=True)
class CurvePoint:
    mu: float
    a: float
    b: float

    @property
    def norm(self) -> float:
        return math.hypot(self.a, self.b)


@dataclass(frozen=True)
class QueryEstimates:
    """Rough query counts: classical deterministic, classical probabilistic, quantum."""

    m_classical_det: float
    m_classical_prob: float
    m_quantum: float


def _check_finite(x, name):
    if np.any(np.isnan(x)):
        raise ValueError(f"{name} is NaN")


def _clamp_arg(t):
    _check_finite(t, "t")
    if np.any(np.abs(t) > 1.0 + ARG_SLACK):
        raise ValueError(f"Chebyshev argument outside [-1, 1]: {t!r}")
    return np.clip(t, -1.0, 1.0)


def grover_angle(rho, mu):
    """Angle whose cosine is the oracle matrix element ``1 - 2*rho*mu``.

    Works elementwise on arrays.  The result is in ``[0, arccos(1 - 2*rho)]``.
    """
    _check_finite(rho, "rho")
    _check_finite(mu, "mu")
    out = np.arccos(np.clip(1.0 - 2.0 * np.asarray(rho, float) * mu, -1.0, 1.0))
    return float(out) if np.ndim(out) == 0 else out


def _cheb_pair(m: int, t):
    """Return ``(T_m(t), U_{m-1}(t))`` by a joint forward recurrence."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    t = np.asarray(t, dtype=float)
    t_prev, t_cur = np.ones_like(t), t.copy()
    u_prev, u_cur = np.zeros_like(t), np.ones_like(t)  # U_{-1}, U_0
    if m == 0:
        return t_prev, u_prev
    for _ in range(m - 1):
        t_prev, t_cur = t_cur, 2.0 * t * t_cur - t_prev
        u_prev, u_cur = u_cur, 2.0 * t * u_cur - u_prev
    return t_cur, u_cur


def _scalar_or_array(x):
    return float(x) if np.ndim(x) == 0 else x


def cheb_t(m: int, t):
    """Chebyshev polynomial of the first kind, ``T_m(t) = cos(m arccos t)``.

    Parameters
    ----------
    m : int
        Nonnegative order.
    t : float or numpy.ndarray
        Argument(s) in [-1, 1]; values within 1e-12 outside are clamped.
    """
    t = _clamp_arg(t)
    return _scalar_or_array(_cheb_pair(m, t)[0])


def cheb_u(m_minus_1: int, t):
    """Chebyshev polynomial of the second kind ``U_{m-1}(t)``.

    ``U_{m-1}(cos x) = sin(m x) / sin(x)``.  The recurrence is polynomial, so
    the endpoint limits ``U_{m-1}(1) = m`` and ``U_{m-1}(-1) = (-1)**(m-1) m``
    come out exactly.  ``m_minus_1 = -1`` gives the zero polynomial.
    """
    if m_minus_1 < -1:
        raise ValueError("order must be >= -1")
    t = _clamp_arg(t)
    return _scalar_or_array(_cheb_pair(m_minus_1 + 1, t)[1])


def curve_arrays(m: int, w: WeightPair, mu):
    """Vectorised (A(mu), B(mu)) for an array of mu values."""
    if m < 1:
        raise ValueError("m must be >= 1")
    mu = np.asarray(mu, dtype=float)
    _check_finite(mu, "mu")
    y = np.clip(1.0 - 2.0 * w.rho * mu, -1.0, 1.0)
    yp = np.clip(1.0 - 2.0 * w.rho_prime * mu, -1.0, 1.0)
    t, u = _cheb_pair(m, y)
    tp, up = _cheb_pair(m, yp)
    uu = u * up
    # grouped so that m = 1 gives exactly 1 and the swap rho <-> rho' is bitwise exact
    a = t * tp - uu * (y * yp) + uu
    b = 2.0 * (w.rho + w.rho_prime) * uu * mu
    return a, b


def curve_point(m: int, w: WeightPair, mu: float) -> CurvePoint:
    """Point of the decidability curve at parameter ``mu``.

    >>> curve_point(2, WeightPair(0.95, 0.45), 0.0)
    CurvePoint(mu=0.0, a=1.0, b=0.0)
    """
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu must lie in [0, 1], got {mu!r}")
    a, b = curve_arrays(m, w, mu)
    return CurvePoint(float(mu), float(a), float(b))


def query_estimates(w: WeightPair, n_inputs: int) -> QueryEstimates:
    """Rough classical and quantum query counts for telling the weights apart.

    The ``rho * (1 - rho)`` factors use the larger of the two weights.
    At the boundary (``|rho - rho'| = 1``) both the deterministic and the
    quantum counts degenerate to 0.
    """
    if n_inputs <= 0:
        raise ValueError("n_inputs must be positive")
    gap = w.gap
    if gap == 0.0:
        raise ValueError("degenerate weight pair: rho == rho_prime")
    rho = max(w.rho, w.rho_prime)
    var = rho * (1.0 - rho)
    return QueryEstimates(
        m_classical_det=n_inputs * (1.0 - gap),
        m_classical_prob=4.0 * var / gap / gap,
        m_quantum=2.0 * math.sqrt(var) / gap,
    )
