"""Sure-success decision for two non-zero weights.

Two weights are distinguishable with ``m`` iterations when the origin lies
in the convex hull of the curve ``mu -> (A(mu), B(mu))``.  Because the curve
is connected and starts at (1, 0), it is enough to find two curve points
that are anti-parallel; their convex combination through the origin gives
the squared amplitudes of the initial state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .scalar import WeightPair, curve_arrays
from .zero_weight import Undecidable, ZeroWeightScheme, zero_scheme

MU_SAMPLES = 2048
MU2_SAMPLES = 256
ROOT_XTOL = 1e-12
DEGENERATE_NORM = 1e-13
# The general path is skipped only when the sampled angular span is clearly short of pi.
SPAN_MARGIN = 1e-3


class PreconditionError(ValueError):
    pass


class NotFoundWithin(Exception):
    """No scheme with at most ``m_max`` iterations. Not a proof of impossibility."""

    def __init__(self, m_max: int):
        super().__init__(f"no sure-success scheme with m <= {m_max}")
        self.m_max = m_max


@dataclass(frozen=True)
class Scheme:
    m: int
    mu1: float
    mu2: float
    c1_sq: float
    c2_sq: float
    weights: WeightPair | None = None

    def residual(self) -> tuple[float, float]:
        """``c1^2 P(mu1) + c2^2 P(mu2)``, which should vanish."""
        if self.weights is None:
            raise ValueError("scheme carries no weights")
        a, b = curve_arrays(self.m, self.weights, np.array([self.mu1, self.mu2]))
        c = np.array([self.c1_sq, self.c2_sq])
        return float(c @ a), float(c @ b)


@dataclass(frozen=True)
class M2Analysis:
    """Closed-form quantities for two iterations, with ``rho > rho'``.

    ``k``, ``l``, ``m_coef`` are the coefficients of the quadratic factor of
    ``B(mu) A(1) - A(mu) B(1)``; the four flags are the published necessary
    conditions.  ``admissible_root`` is the smallest root in [0, 1) that
    actually yields an anti-parallel pair with ``mu = 1`` (None if none).
    """

    k: float
    l: float
    m_coef: float
    delta: float
    ratio: bool
    half: bool
    gap: bool
    discriminant: bool
    admissible_root: float | None = None

    @property
    def conditions_met(self) -> bool:
        return self.ratio and self.half and self.gap and self.discriminant


def _check_pair(w: WeightPair):
    if w.rho == w.rho_prime:
        raise PreconditionError("weights must differ")
    if w.rho == 0.0 or w.rho_prime == 0.0:
        raise PreconditionError("zero weight: use the zero-weight decision")


def m2_analysis(w: WeightPair) -> M2Analysis:
    r, rp = w.rho, w.rho_prime
    if not 0.0 < rp < r < 1.0:
        raise PreconditionError("m2_analysis needs 0 < rho' < rho < 1; swap the pair")
    d2 = (r - rp) ** 2
    k = 4.0 * r * rp * (1.0 - 8.0 * d2)
    l = 8.0 * d2 + 4.0 * r * rp - 2.0 * (r + rp)
    mc = (2.0 * r - 1.0) * (2.0 * rp - 1.0)
    delta = l * l - 4.0 * k * mc

    def a2(mu):
        return 1.0 - 8.0 * mu * mu * d2

    def b2(mu):
        return 2.0 * mu * (r + rp) * (1.0 - 2.0 * mu * r) * (1.0 - 2.0 * mu * rp)

    root = None
    if delta >= 0.0:
        if k != 0.0:
            sq = math.sqrt(delta)
            cands = [(-l - sq) / (2.0 * k), (-l + sq) / (2.0 * k)]
        elif l != 0.0:
            cands = [-mc / l]
        else:
            cands = []
        a1, b1 = a2(1.0), b2(1.0)
        for mu in sorted(cands):
            if 0.0 <= mu < 1.0 and a2(mu) * a1 <= 0.0 and b2(mu) * b1 <= 0.0:
                if math.hypot(a2(mu), b2(mu)) > DEGENERATE_NORM:
                    root = mu
                    break

    return M2Analysis(
        k=k,
        l=l,
        m_coef=mc,
        delta=delta,
        ratio=r / rp > 1.0 + 1.0 / math.sqrt(2.0),
        half=r > 0.5,
        gap=r - rp > 1.0 / (2.0 * math.sqrt(2.0)),
        discriminant=delta > 0.0,
        admissible_root=root,
    )


def angular_span(m: int, w: WeightPair, samples: int = MU_SAMPLES) -> float:
    """Range of the continuous polar angle along the sampled curve.

    The origin is in the convex hull of the (connected) curve exactly when
    this is at least pi.
    """
    mu = np.linspace(0.0, 1.0, samples)
    a, b = curve_arrays(m, w, mu)
    theta = np.unwrap(np.arctan2(b, a))
    return float(theta.max() - theta.min())


class _Searcher:
    """Anti-parallel pair search on one (m, w) curve."""

    def __init__(self, m, w, samples, xtol):
        self.m, self.w, self.xtol = m, w, xtol
        self.mu = np.linspace(0.0, 1.0, samples)
        self.a, self.b = curve_arrays(m, w, self.mu)

    def point(self, mu):
        a, b = curve_arrays(self.m, self.w, mu)
        return float(a), float(b)

    def _accept(self, mu1, p2):
        a1, b1 = self.point(mu1)
        a2, b2 = p2
        if math.hypot(a1, b1) < DEGENERATE_NORM:
            return None
        if a1 * a2 <= 0.0 and b1 * b2 <= 0.0:
            return mu1, (a1, b1)
        return None

    def roots_against(self, mu2, p2, g_samples=None):
        """Yield accepted (mu1, P1) for the fixed partner ``P(mu2) = p2``, smallest first."""
        a2, b2 = p2
        if g_samples is None:
            g_samples = self.b * a2 - self.a * b2
        mu = self.mu
        g0, g1 = g_samples[:-1], g_samples[1:]
        exact = np.nonzero(g_samples == 0.0)[0]
        brackets = np.nonzero(g0 * g1 < 0.0)[0]

        def g(x):
            a, b = self.point(x)
            return b * a2 - a * b2

        cands = [(mu[i], None) for i in exact] + [(mu[i], i) for i in brackets]
        cands.sort(key=lambda c: c[0])
        for left, i in cands:
            if i is None:
                root = float(left)
            else:
                # cheap reject: sign pattern must be opposite at one end of the bracket
                ok_a = min(self.a[i] * a2, self.a[i + 1] * a2) <= 0.0
                ok_b = min(self.b[i] * b2, self.b[i + 1] * b2) <= 0.0
                if not (ok_a and ok_b):
                    continue
                root = brentq(g, mu[i], mu[i + 1], xtol=self.xtol, rtol=4 * np.finfo(float).eps)
            hit = self._accept(root, p2)
            if hit is not None:
                yield hit


def _make_scheme(m, w, mu1, p1, mu2, p2):
    n1, n2 = math.hypot(*p1), math.hypot(*p2)
    c1 = n2 / (n1 + n2)
    return Scheme(m=m, mu1=float(mu1), mu2=float(mu2), c1_sq=c1, c2_sq=1.0 - c1, weights=w)


def decide_fixed_m(
    m: int,
    w: WeightPair,
    samples: int = MU_SAMPLES,
    mu2_samples: int = MU2_SAMPLES,
    xtol: float = ROOT_XTOL,
) -> Scheme | Undecidable:
    """Search for a sure-success scheme with exactly ``m`` iterations.

    First tries the partner point ``mu2 = 1``.  If that fails and the curve
    winds through at least pi around the origin, partners on a ``mu2`` grid
    (plus the two extremal-angle samples) are tried in order.  The smallest
    admissible ``mu1`` is taken for the first partner that works.

    Raises
    ------
    PreconditionError
        If the weights coincide or either is zero.
    """
    if m < 1:
        raise PreconditionError("m must be >= 1")
    _check_pair(w)
    s = _Searcher(m, w, samples, xtol)

    p_end = (float(s.a[-1]), float(s.b[-1]))
    if math.hypot(*p_end) >= DEGENERATE_NORM:
        for mu1, p1 in s.roots_against(1.0, p_end):
            return _make_scheme(m, w, mu1, p1, 1.0, p_end)

    theta = np.unwrap(np.arctan2(s.b, s.a))
    span = float(theta.max() - theta.min())
    if span < math.pi - SPAN_MARGIN:
        return Undecidable(f"fast path (mu2=1) failed; angular span {span:.6g} < pi")

    grid = list(np.linspace(0.0, 1.0, mu2_samples))
    grid += [s.mu[int(np.argmax(theta))], s.mu[int(np.argmin(theta))]]
    for mu2 in grid:
        p2 = s.point(mu2)
        if math.hypot(*p2) < DEGENERATE_NORM:
            continue
        for mu1, p1 in s.roots_against(mu2, p2):
            return _make_scheme(m, w, mu1, p1, mu2, p2)
    return Undecidable("fast path (mu2=1) and general mu2 scan both failed")


def decide(m: int, w: WeightPair) -> Scheme | ZeroWeightScheme | Undecidable:
    """Dispatch on the boundary case: a zero weight goes to the closed-form decision."""
    if w.rho == w.rho_prime:
        raise PreconditionError("weights must differ")
    if w.rho_prime == 0.0:
        return zero_scheme(w.rho, m)
    if w.rho == 0.0:
        return zero_scheme(w.rho_prime, m)
    return decide_fixed_m(m, w)


def min_iterations_pair(w: WeightPair, m_max: int = 64) -> tuple[int, Scheme]:
    """Smallest ``m <= m_max`` admitting a scheme; every ``m`` is tried in turn.

    Raises :class:`NotFoundWithin` when the cap is reached.
    """
    _check_pair(w)
    if m_max < 1:
        raise PreconditionError("m_max must be >= 1")
    for m in range(1, m_max + 1):
        scheme = decide_fixed_m(m, w)
        if scheme:
            return m, scheme
    raise NotFoundWithin(m_max)


def diagnose(m: int, w: WeightPair, tolerance: float = 1e-6) -> tuple[str, Scheme | Undecidable]:
    """Three-valued verdict: decidable, undecidable or boundary-uncertain.

    A pair is boundary-uncertain when the curve's angular span is within
    ``tolerance`` of pi, whatever the search returned.
    """
    result = decide_fixed_m(m, w)
    if abs(angular_span(m, w) - math.pi) < tolerance:
        return "boundary-uncertain", result
    return ("decidable" if result else "undecidable"), result
