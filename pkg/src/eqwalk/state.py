"""Walker wavefunctions on finite windows of the 1D/2D integer lattice."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coin import Ordering

NORM_TOL = 1e-10
STATE_NORM_TOL = 1e-12  # constructors reject, they never renormalize


@dataclass
class WalkState1D:
    """Amplitudes a[x - x_min, s] over window [x_min, x_max], coin slots (+1, -1)."""

    x_min: int
    x_max: int
    amplitudes: np.ndarray  # shape (x_max - x_min + 1, 2), complex
    time: int = 0

    def positions(self) -> np.ndarray:
        return np.arange(self.x_min, self.x_max + 1)

    def norm(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


@dataclass
class WalkState2D:
    """Amplitudes a[x - x_min, y - y_min, s] on a rectangular window."""

    x_min: int
    x_max: int
    y_min: int
    y_max: int
    amplitudes: np.ndarray  # shape (nx, ny, coin_dim), complex
    ordering: Ordering
    time: int = 0

    @property
    def coin_dim(self) -> int:
        return self.amplitudes.shape[2]

    def x_positions(self) -> np.ndarray:
        return np.arange(self.x_min, self.x_max + 1)

    def y_positions(self) -> np.ndarray:
        return np.arange(self.y_min, self.y_max + 1)

    def norm(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


def _check_coin_state(coin_state, dim_choices) -> np.ndarray:
    v = np.asarray(coin_state, dtype=complex).reshape(-1)
    if v.size not in dim_choices:
        raise ValueError(f"coin state must have {dim_choices} components, got {v.size}")
    if abs(np.sum(np.abs(v) ** 2) - 1.0) > STATE_NORM_TOL:
        raise ValueError("coin state is not normalized")
    return v


def new_localized_1d(coin_state, capacity_steps: int) -> WalkState1D:
    """Walker at x=0; window [-capacity_steps-1, capacity_steps+1] covers the light cone."""
    if capacity_steps < 0:
        raise ValueError("capacity_steps must be >= 0")
    v = _check_coin_state(coin_state, (2,))
    half = capacity_steps + 1
    amp = np.zeros((2 * half + 1, 2), dtype=complex)
    amp[half] = v
    return WalkState1D(-half, half, amp, time=0)


def new_localized_2d(coin_state, capacity_steps: int,
                     ordering: Ordering | None = None) -> WalkState2D:
    """Walker at the origin of a square window, coin dim 2 (alternate) or 4."""
    if capacity_steps < 0:
        raise ValueError("capacity_steps must be >= 0")
    v = _check_coin_state(coin_state, (2, 4))
    if ordering is None:
        ordering = Ordering.QUBIT if v.size == 2 else Ordering.XY_CROSS
    half = capacity_steps + 1
    n = 2 * half + 1
    amp = np.zeros((n, n, v.size), dtype=complex)
    amp[half, half] = v
    return WalkState2D(-half, half, -half, half, amp, ordering, time=0)


def write_snapshot_csv(state, path, amplitudes: bool = False) -> None:
    """Position marginal as CSV; optionally the full complex amplitudes.

    Rows are "x,p" (1D) or "x,y,p" (2D); with amplitudes=True the extra
    columns are per-slot re/im ("x,s,re,im" or "x,y,s,re,im").
    Zero-probability sites are skipped to keep files proportional to support.
    """
    import csv

    f = open(path, "w", newline="")
    try:
        w = csv.writer(f)
        if isinstance(state, WalkState1D):
            p = np.sum(np.abs(state.amplitudes) ** 2, axis=1)
            if amplitudes:
                w.writerow(["x", "s", "re", "im"])
                for i, x in enumerate(state.positions()):
                    if p[i] == 0.0:
                        continue
                    for s in range(2):
                        a = state.amplitudes[i, s]
                        w.writerow([x, s, _fmt(a.real), _fmt(a.imag)])
            else:
                w.writerow(["x", "p"])
                for i, x in enumerate(state.positions()):
                    if p[i] > 0.0:
                        w.writerow([x, _fmt(p[i])])
        else:
            p = np.sum(np.abs(state.amplitudes) ** 2, axis=2)
            xs, ys = state.x_positions(), state.y_positions()
            nz = np.argwhere(p > 0.0)
            if amplitudes:
                w.writerow(["x", "y", "s", "re", "im"])
                for i, j in nz:
                    for s in range(state.coin_dim):
                        a = state.amplitudes[i, j, s]
                        w.writerow([xs[i], ys[j], s, _fmt(a.real), _fmt(a.imag)])
            else:
                w.writerow(["x", "y", "p"])
                for i, j in nz:
                    w.writerow([xs[i], ys[j], _fmt(p[i, j])])
    finally:
        f.close()


def _fmt(v: float) -> str:
    # 17 significant digits round-trip float64 exactly
    return format(v, ".17g")
