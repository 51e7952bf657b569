"""Brute-force state-vector oracle for the generalized Grover iteration.

States live on ancilla (n levels) x input (N levels) x result qubit, with
the result qubit written in the {+, -} basis.  The amplitude array has shape
``(n_anc, N, 2)``; index 0 of the last axis is ``+`` and index 1 is ``-``.
Nothing here uses the curve algebra from :mod:`weightdecision.scalar`
except :func:`final_state_closed_form`, which is the thing being checked.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .decider import Scheme
from .scalar import cheb_u
from .zero_weight import ZeroWeightScheme

PLUS, MINUS = 0, 1
ORTHO_TOL = 1e-8
MAX_EXHAUSTIVE_PAIRS = 5_000_000


@dataclass(frozen=True)
class BooleanOracle:
    truth_table: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.truth_table)
        if not bits or any(b not in (0, 1) for b in bits):
            raise ValueError("truth table must be a non-empty sequence of bits")
        object.__setattr__(self, "truth_table", bits)

    @classmethod
    def from_ones(cls, ones, n_inputs: int) -> "BooleanOracle":
        table = [0] * n_inputs
        for x in ones:
            table[x] = 1
        return cls(tuple(table))

    @classmethod
    def zero(cls, n_inputs: int) -> "BooleanOracle":
        return cls((0,) * n_inputs)

    @property
    def n_inputs(self) -> int:
        return len(self.truth_table)

    @property
    def count(self) -> int:
        return sum(self.truth_table)

    def weight(self) -> float:
        return self.count / self.n_inputs

    def xor(self, other: "BooleanOracle") -> "BooleanOracle":
        if other.n_inputs != self.n_inputs:
            raise ValueError("input sizes differ")
        return BooleanOracle(tuple(a ^ b for a, b in zip(self.truth_table, other.truth_table)))


@dataclass
class StateVector:
    amplitudes: np.ndarray  # complex, shape (n_anc, N, 2)

    @property
    def n_anc(self) -> int:
        return self.amplitudes.shape[0]

    @property
    def n_inputs(self) -> int:
        return self.amplitudes.shape[1]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def inner(self, other: "StateVector") -> complex:
        """``<self|other>``."""
        _check_dims(self, other)
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def __add__(self, other):
        return StateVector(self.amplitudes + other.amplitudes)

    def __sub__(self, other):
        return StateVector(self.amplitudes - other.amplitudes)

    def __rmul__(self, scalar):
        return StateVector(scalar * self.amplitudes)

    def __neg__(self):
        return StateVector(-self.amplitudes)


@dataclass
class ReflectionSet:
    betas: list[StateVector]
    mus: tuple[float, ...] = ()

    @classmethod
    def from_mus(cls, mus, n_inputs: int) -> "ReflectionSet":
        n = len(mus)
        return cls([build_beta(mu, i, n, n_inputs) for i, mu in enumerate(mus)], tuple(mus))

    def gram(self) -> np.ndarray:
        return np.array([[a.inner(b) for b in self.betas] for a in self.betas])


def _check_dims(s, t):
    if s.amplitudes.shape != t.amplitudes.shape:
        raise ValueError(f"dimension mismatch: {s.amplitudes.shape} vs {t.amplitudes.shape}")


def build_beta(mu: float, ancilla_index: int, n_anc: int, n_inputs: int) -> StateVector:
    """Reflection vector ``|alpha_i> (sqrt(mu) |s-> + sqrt(1-mu) |0+>)``.

    ``|s->`` is the uniform superposition of ``|x->`` over all inputs.
    """
    if not 0 <= ancilla_index < n_anc:
        raise IndexError(f"ancilla index {ancilla_index} out of range for n_anc={n_anc}")
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu must lie in [0, 1], got {mu!r}")
    amp = np.zeros((n_anc, n_inputs, 2), dtype=complex)
    amp[ancilla_index, :, MINUS] = math.sqrt(mu / n_inputs)
    amp[ancilla_index, 0, PLUS] = math.sqrt(1.0 - mu)
    return StateVector(amp)


def apply_oracle(f: BooleanOracle, s: StateVector) -> StateVector:
    """Phase oracle: ``|x-> -> (-1)^f(x) |x->``, ``|x+>`` untouched."""
    if f.n_inputs != s.n_inputs:
        raise ValueError("oracle and state input sizes differ")
    out = s.amplitudes.copy()
    ones = np.array(f.truth_table, dtype=bool)
    out[:, ones, MINUS] *= -1
    return StateVector(out)


def apply_reflection(refl: ReflectionSet, s: StateVector) -> StateVector:
    """``S = 1 - 2 sum_i |beta_i><beta_i|``."""
    out = s.amplitudes.copy()
    for beta in refl.betas:
        _check_dims(beta, s)
        out -= 2.0 * np.vdot(beta.amplitudes, s.amplitudes) * beta.amplitudes
    return StateVector(out)


def apply_q(f: BooleanOracle, refl: ReflectionSet, s: StateVector) -> StateVector:
    """One iteration ``Q_f = -S (1 x U_f)``."""
    return -apply_reflection(refl, apply_oracle(f, s))


def iterate_q(f, refl, s, m):
    for _ in range(m):
        s = apply_q(f, refl, s)
    return s


def cosine_matrix(f: BooleanOracle, refl: ReflectionSet) -> np.ndarray:
    return np.array([[a.inner(apply_oracle(f, b)) for b in refl.betas] for a in refl.betas])


def r_matrix(cosine: np.ndarray, m: int) -> np.ndarray:
    """``R^(m)`` from ``R^(0) = 0``, ``R^(1) = 1``, ``R^(k+1) = 2 C R^(k) - R^(k-1)``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    n = cosine.shape[0]
    prev, cur = np.zeros((n, n), dtype=complex), np.eye(n, dtype=complex)
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, 2.0 * cosine @ cur - prev
    return cur


def final_state_closed_form(f: BooleanOracle, refl: ReflectionSet, i: int, m: int) -> StateVector:
    """``Q_f^m |beta_i>`` via ``sum_j |beta_j> R^(m+1)_ji - U_f|beta_j> R^(m)_ji``.

    The cosine matrix must be diagonal (true for the ``build_beta`` family);
    its diagonal entries feed :func:`cheb_u`.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    c = cosine_matrix(f, refl)
    if np.max(np.abs(c - np.diag(np.diag(c)))) > 1e-12:
        raise ValueError("cosine matrix is not diagonal")
    cj = np.real(np.diag(c))
    out = np.zeros_like(refl.betas[0].amplitudes)
    # diagonal R: only j == i contributes
    beta = refl.betas[i]
    out += cheb_u(m, cj[i]) * beta.amplitudes
    out -= cheb_u(m - 1, cj[i]) * apply_oracle(f, beta).amplitudes
    return StateVector(out)


# --- sure-success verification -------------------------------------------------


@dataclass
class VerificationReport:
    mode: str
    N: int
    r: int
    r_prime: int
    m: int
    max_abs_inner_product: float
    violations: list[dict] = field(default_factory=list)
    t_values: list[int] = field(default_factory=list)
    nominal_t_truncated: bool = False
    pairs_checked: int = 0
    tolerance: float = ORTHO_TOL

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"mode: {self.mode}",
            f"N={self.N} r={self.r} r'={self.r_prime} m={self.m}",
            f"t values: {self.t_values}" + (" (nominal range truncated)" if self.nominal_t_truncated else ""),
            f"pairs checked: {self.pairs_checked}",
            f"max |<Phi_f|Phi_g>|: {self.max_abs_inner_product:.3e}",
            f"result: {'PASS' if self.passed else 'FAIL'} (tolerance {self.tolerance:g})",
        ]
        for v in self.violations[:10]:
            lines.append(f"  violation t={v['t']} |ip|={v['abs_inner_product']:.3e}")
        return "\n".join(lines)


def admissible_t(r: int, r_prime: int, n_inputs: int) -> list[int]:
    """Possible Hamming weights of ``f xor g`` for ``|f| = r``, ``|g| = r'``."""
    lo = max(0, r + r_prime - n_inputs)
    hi = min(r, r_prime)
    return sorted({r + r_prime - 2 * k for k in range(lo, hi + 1)})


def nominal_t(r: int, r_prime: int) -> list[int]:
    """The t list ``|r-r'|, |r-r'|+2, ..., r+r'`` ignoring the input-size cap."""
    return list(range(abs(r - r_prime), r + r_prime + 1, 2))


def representative_pair(r: int, r_prime: int, n_inputs: int, t: int):
    """Deterministic (f, g) with ``|f| = r``, ``|g| = r'`` and ``|f xor g| = t``."""
    k = (r + r_prime - t) // 2
    if (r + r_prime - t) % 2 or not max(0, r + r_prime - n_inputs) <= k <= min(r, r_prime):
        raise ValueError(f"t={t} not realisable for r={r}, r'={r_prime}, N={n_inputs}")
    f = BooleanOracle.from_ones(range(r), n_inputs)
    g = BooleanOracle.from_ones(list(range(k)) + list(range(r, r + r_prime - k)), n_inputs)
    return f, g


def rationalize(rho: float, rho_prime: float, n_max: int = 20, tol: float = 1e-9) -> tuple[int, int, int]:
    """Smallest ``N <= n_max`` with both weights within ``tol`` of multiples of 1/N."""
    for n in range(1, n_max + 1):
        r, rp = round(rho * n), round(rho_prime * n)
        if abs(rho * n - r) < tol and abs(rho_prime * n - rp) < tol:
            return r, rp, n
    raise ValueError(f"weights ({rho}, {rho_prime}) are not rationals with denominator <= {n_max}")


def initial_state(scheme, n_inputs: int) -> tuple[ReflectionSet, StateVector]:
    if isinstance(scheme, ZeroWeightScheme):
        refl = ReflectionSet.from_mus([scheme.mu1], n_inputs)
        return refl, refl.betas[0]
    refl = ReflectionSet.from_mus([scheme.mu1, scheme.mu2], n_inputs)
    c1, c2 = math.sqrt(scheme.c1_sq), math.sqrt(scheme.c2_sq)
    return refl, c1 * refl.betas[0] + c2 * refl.betas[1]


def final_state(f: BooleanOracle, scheme, refl=None, start=None) -> StateVector:
    if refl is None:
        refl, start = initial_state(scheme, f.n_inputs)
    return iterate_q(f, refl, start, scheme.m)


def _scheme_weights(scheme):
    if isinstance(scheme, ZeroWeightScheme):
        return (scheme.rho, 0.0) if scheme.rho is not None else None
    if isinstance(scheme, Scheme) and scheme.weights is not None:
        return scheme.weights.rho, scheme.weights.rho_prime
    return None


def verify_scheme(
    scheme: Scheme | ZeroWeightScheme,
    r: int,
    r_prime: int,
    n_inputs: int,
    mode: str = "per_t",
    tolerance: float = ORTHO_TOL,
) -> VerificationReport:
    """Check orthogonality of final states for functions of weight r/N and r'/N.

    ``per_t`` builds one representative pair for every admissible overlap t;
    ``exhaustive`` runs every pair of truth tables (use small N).  For a
    :class:`ZeroWeightScheme` the second function is the zero function and
    ``r_prime`` must be 0.
    """
    if mode not in ("per_t", "exhaustive"):
        raise ValueError(f"unknown mode {mode!r}")
    weights = _scheme_weights(scheme)
    if weights is not None:
        if abs(weights[0] - r / n_inputs) > 1e-9 or abs(weights[1] - r_prime / n_inputs) > 1e-9:
            raise ValueError(
                f"r/N={r}/{n_inputs}, r'/N={r_prime}/{n_inputs} do not match scheme weights {weights}"
            )
    if isinstance(scheme, ZeroWeightScheme) and r_prime != 0:
        raise ValueError("zero-weight schemes are verified against r' = 0")
    ts = admissible_t(r, r_prime, n_inputs)
    if not ts:
        raise ValueError("no admissible overlap t")

    refl, start = initial_state(scheme, n_inputs)
    report = VerificationReport(
        mode=mode, N=n_inputs, r=r, r_prime=r_prime, m=scheme.m,
        max_abs_inner_product=0.0, t_values=ts,
        nominal_t_truncated=ts != nominal_t(r, r_prime), tolerance=tolerance,
    )

    def record(f, g, phi_f, phi_g):
        ip = abs(phi_f.inner(phi_g))
        report.pairs_checked += 1
        report.max_abs_inner_product = max(report.max_abs_inner_product, ip)
        if ip >= tolerance:
            report.violations.append({
                "t": f.xor(g).count,
                "abs_inner_product": ip,
                "f": "".join(map(str, f.truth_table)),
                "g": "".join(map(str, g.truth_table)),
            })

    if mode == "per_t":
        for t in ts:
            f, g = representative_pair(r, r_prime, n_inputs, t)
            record(f, g, final_state(f, scheme, refl, start), final_state(g, scheme, refl, start))
        return report

    n_pairs = math.comb(n_inputs, r) * math.comb(n_inputs, r_prime)
    if n_pairs > MAX_EXHAUSTIVE_PAIRS:
        raise ValueError(f"exhaustive mode would check {n_pairs} pairs (limit {MAX_EXHAUSTIVE_PAIRS})")
    fs = [BooleanOracle.from_ones(c, n_inputs) for c in itertools.combinations(range(n_inputs), r)]
    gs = [BooleanOracle.from_ones(c, n_inputs) for c in itertools.combinations(range(n_inputs), r_prime)]
    phis_f = [final_state(f, scheme, refl, start) for f in fs]
    phis_g = [final_state(g, scheme, refl, start) for g in gs]
    for (f, pf), (g, pg) in itertools.product(zip(fs, phis_f), zip(gs, phis_g)):
        record(f, g, pf, pg)
    return report
