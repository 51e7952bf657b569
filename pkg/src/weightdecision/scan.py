"""Parameter sweeps and their plain-text artifacts (CSV, plain PGM)."""

from __future__ import annotations

import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .decider import NotFoundWithin, min_iterations_pair
from .scalar import WeightPair, curve_arrays
from .zero_weight import min_iterations_zero, min_weight_zero

TABLE_M = (1, 2, 3, 4, 5, 10)


def fmt(x) -> str:
    """Full double precision, 17 significant digits."""
    return format(float(x), ".17g")


@dataclass
class RegionGrid:
    """Minimal iteration count per cell; 0 means none found up to ``m_max``.

    ``cells[i, j]`` belongs to ``rho = (i + 1/2) / resolution`` and
    ``rho' = (j + 1/2) / resolution``.
    """

    resolution: int
    m_max: int
    cells: np.ndarray

    def centers(self) -> np.ndarray:
        return (np.arange(self.resolution) + 0.5) / self.resolution

    def nearest_index(self, rho: float) -> int:
        return int(np.clip(np.floor(rho * self.resolution), 0, self.resolution - 1))

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("rho,rho_prime,min_m\n")
        c = self.centers()
        for i in range(self.resolution):
            for j in range(self.resolution):
                buf.write(f"{fmt(c[i])},{fmt(c[j])},{int(self.cells[i, j])}\n")
        return buf.getvalue()

    def to_pgm(self) -> str:
        """Plain PGM; smaller m is lighter, no solution is black.

        Columns run along rho (rightward), rows along rho' (upward).
        """
        shade = np.where(self.cells > 0, self.m_max + 1 - self.cells, 0)
        rows = shade.T[::-1]
        lines = ["P2", f"{self.resolution} {self.resolution}", str(self.m_max)]
        lines += [" ".join(str(int(v)) for v in row) for row in rows]
        return "\n".join(lines) + "\n"


def min_m_or_zero(rho: float, rho_prime: float, m_max: int) -> int:
    if rho == rho_prime:
        return 0
    try:
        m, _ = min_iterations_pair(WeightPair(rho, rho_prime), m_max)
    except NotFoundWithin:
        return 0
    return m


def _row(args):
    i, resolution, m_max = args
    c = (np.arange(resolution) + 0.5) / resolution
    return i, [min_m_or_zero(c[i], c[j], m_max) for j in range(resolution)]


def region_grid(resolution: int, m_max: int, workers: int = 1) -> RegionGrid:
    """Minimal iteration counts on the interior cell-centre grid."""
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    cells = np.zeros((resolution, resolution), dtype=int)
    jobs = [(i, resolution, m_max) for i in range(resolution)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_row, jobs))
    else:
        results = map(_row, jobs)
    for i, row in results:
        cells[i] = row
    return RegionGrid(resolution, m_max, cells)


def curve_table(m: int, w: WeightPair, samples: int) -> np.ndarray:
    """Columns mu, A, B at ``samples`` uniform points of [0, 1]."""
    if samples < 2:
        raise ValueError("samples must be >= 2")
    mu = np.linspace(0.0, 1.0, samples)
    a, b = curve_arrays(m, w, mu)
    return np.column_stack([mu, a, b])


def curve_csv(table: np.ndarray) -> str:
    return "mu,a,b\n" + "".join(f"{fmt(r[0])},{fmt(r[1])},{fmt(r[2])}\n" for r in table)


def zero_table(ms=TABLE_M) -> list[tuple[int, float]]:
    return [(m, min_weight_zero(m)) for m in ms]


def zero_inverse_table(rhos) -> list[tuple[float, int]]:
    return [(rho, min_iterations_zero(rho)) for rho in rhos]


def write_text(path, text: str) -> None:
    d = os.path.dirname(os.fspath(path))
    if d:
        os.makedirs(d, exist_ok=True)
    with open(path, "w", newline="\n") as fh:
        fh.write(text)
