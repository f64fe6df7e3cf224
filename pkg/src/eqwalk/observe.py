"""Observables: marginals, axis/diagonal widths, the 45-degree frame map,
and autocorrelation period detection for width series."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .state import WalkState1D, WalkState2D


class Widths(NamedTuple):
    sigma_x: float
    sigma_y: float | None = None
    sigma_d: float | None = None
    sigma_a: float | None = None


@dataclass
class WidthSeries:
    """Per-step widths; diagonal coordinates are the orthonormal
    u=(x+y)/sqrt2, v=(x-y)/sqrt2 so sigma_d^2 + sigma_a^2 = sigma_x^2 + sigma_y^2."""

    t: np.ndarray
    sigma_x: np.ndarray
    sigma_y: np.ndarray | None = None
    sigma_d: np.ndarray | None = None
    sigma_a: np.ndarray | None = None

    @classmethod
    def from_observations(cls, widths_list) -> "WidthSeries":
        t = np.arange(1, len(widths_list) + 1)
        if widths_list and widths_list[0].sigma_y is None:
            return cls(t, np.array([u.sigma_x for u in widths_list]))
        arr = np.array(widths_list, dtype=float)
        return cls(t, arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3])


def write_width_csv(series: WidthSeries, path) -> None:
    """t,sigma_x[,sigma_y,sigma_d,sigma_a] rows with full float precision."""
    fmt = lambda v: format(float(v), ".17g")
    two_d = series.sigma_y is not None
    with open(path, "w") as fh:
        fh.write("t,sigma_x,sigma_y,sigma_d,sigma_a\n" if two_d else "t,sigma_x\n")
        for i, t in enumerate(series.t):
            row = [str(int(t)), fmt(series.sigma_x[i])]
            if two_d:
                row += [fmt(series.sigma_y[i]), fmt(series.sigma_d[i]),
                        fmt(series.sigma_a[i])]
            fh.write(",".join(row) + "\n")


def position_marginal(state) -> np.ndarray:
    """P(x) or P(x, y), summed over coin slots; sums to 1 for a valid state."""
    a = state.amplitudes
    # |a|^2 without a complex temporary (these run once per step on big windows)
    return np.einsum("...c,...c->...", a.real, a.real) + \
        np.einsum("...c,...c->...", a.imag, a.imag)


def widths(state) -> Widths:
    """Standard deviations along x (1D) or x, y and both diagonals (2D)."""
    p = position_marginal(state)
    if isinstance(state, WalkState1D):
        xs = state.positions().astype(float)
        m = p @ xs
        var = p @ xs**2 - m * m
        return Widths(float(np.sqrt(max(var, 0.0))))
    xs = state.x_positions().astype(float)
    ys = state.y_positions().astype(float)
    px = p.sum(axis=1)
    py = p.sum(axis=0)
    mx, my = px @ xs, py @ ys
    vx = px @ xs**2 - mx * mx
    vy = py @ ys**2 - my * my
    cov = np.einsum("xy,x,y->", p, xs, ys) - mx * my
    # variances of (x+y)/sqrt2 and (x-y)/sqrt2
    vd = 0.5 * (vx + vy) + cov
    va = 0.5 * (vx + vy) - cov
    return Widths(*(float(np.sqrt(max(v, 0.0))) for v in (vx, vy, vd, va)))


def rotate_frame_45(dist: np.ndarray, x_min: int = 0, y_min: int = 0):
    """Re-index P(x, y) to the integer diagonal frame (u, v) = (x+y, x-y).

    The input must live on one checkerboard sublattice (all mass on sites with
    x+y of a single parity), which is what whole steps away from a point source
    produce. Returns (Q, u_min, v_min).
    """
    p = np.asarray(dist, dtype=float)
    if p.ndim != 2:
        raise ValueError("expected a 2D probability array")
    nz = np.argwhere(p != 0.0)
    if nz.size == 0:
        raise ValueError("empty distribution")
    par = ((nz[:, 0] + x_min) + (nz[:, 1] + y_min)) % 2
    if not np.all(par == par[0]):
        raise ValueError("support is not on a single checkerboard sublattice")
    xs = nz[:, 0] + x_min
    ys = nz[:, 1] + y_min
    us, vs = xs + ys, xs - ys
    u_min, v_min = int(us.min()), int(vs.min())
    q = np.zeros((int(us.max()) - u_min + 1, int(vs.max()) - v_min + 1))
    q[us - u_min, vs - v_min] = p[nz[:, 0], nz[:, 1]]
    return q, u_min, v_min


def detect_periods(series, max_period: int) -> list[tuple[int, float]]:
    """Candidate periods of a series from detrended autocorrelation peaks.

    The series is detrended by a linear least-squares fit, then scored per lag
    with a correlation coefficient clamped to [0, 1]. Local maxima at lags >= 2
    with score >= 0.5 come back sorted by score (ties: smaller period first).
    Needs len(series) >= 3 * max_period.
    """
    s = np.asarray(series, dtype=float)
    if max_period < 2:
        raise ValueError("max_period must be >= 2")
    n = s.size
    if n < 3 * max_period:
        raise ValueError("series too short: need length >= 3 * max_period")
    t = np.arange(n)
    slope, icpt = np.polyfit(t, s, 1)
    d = s - (slope * t + icpt)
    r = np.zeros(max_period + 2)
    r[max_period + 1] = -np.inf
    for lag in range(1, max_period + 1):
        u, v = d[:-lag], d[lag:]
        su, sv = u.std(), v.std()
        if su == 0.0 or sv == 0.0:
            r[lag] = 1.0  # constant after detrending: repeats at every lag
            continue
        c = float(np.mean((u - u.mean()) * (v - v.mean())) / (su * sv))
        r[lag] = min(max(c, 0.0), 1.0)
    peaks = [(lag, float(r[lag]))
             for lag in range(2, max_period + 1)
             if r[lag] >= 0.5 and r[lag] > r[lag - 1] and r[lag] >= r[lag + 1]]
    peaks.sort(key=lambda pr: (-pr[1], pr[0]))
    return peaks
