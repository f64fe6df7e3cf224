"""Dispersion relations, stroboscopic spectra, and momentum-space unitaries.

Conventions used throughout: psi(k) = sum_x e^{ikx} a_x, so the conditional
shift contributes diag(e^{ik}, e^{-ik}) per axis; an eigenvalue lambda of a
momentum unitary carries eigenphase omega = -arg(lambda) mod 2pi. Branches are
reported inside [0, 2pi), ascending.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coin import CoinOperator, Ordering, make_rotation_coin, grover_coin, \
    dft_coin, hadamard2_coin
from .evolve import Family


# ---------------------------------------------------------------- momentum ops

def momentum_unitary_1d(theta: float, k: float, alpha: float = 0.0,
                        beta: float = 0.0) -> np.ndarray:
    """2x2 one-step unitary diag(e^{ik}, e^{-ik}) C."""
    c = make_rotation_coin(alpha, beta, theta).entries
    return np.diag([np.exp(1j * k), np.exp(-1j * k)]) @ c


def momentum_unitary_alternate(theta_x: float, theta_y: float, k_x: float,
                               k_y: float, alpha: float = 0.0,
                               beta: float = 0.0) -> np.ndarray:
    """2x2 unitary D_y C_y D_x C_x of the alternate step."""
    cx = make_rotation_coin(alpha, beta, theta_x).entries
    cy = make_rotation_coin(alpha, beta, theta_y).entries
    dx = np.diag([np.exp(1j * k_x), np.exp(-1j * k_x)])
    dy = np.diag([np.exp(1j * k_y), np.exp(-1j * k_y)])
    return dy @ cy @ dx @ cx


def momentum_unitary_2d(coin: CoinOperator, k_x: float, k_y: float) -> np.ndarray:
    """4x4 unitary D(kx, ky) C with D = diag(e^{ikx}, e^{-iky}, e^{iky}, e^{-ikx})."""
    if coin.dim != 4 or coin.ordering is not Ordering.XY_CROSS:
        raise ValueError("need a 4x4 coin in XY_CROSS ordering")
    d = np.exp(1j * np.array([k_x, -k_y, k_y, -k_x]))
    return d[:, None] * coin.entries


def momentum_unitary(family: Family, k_x: float, k_y: float = 0.0, *,
                     theta: float = math.pi / 4, theta_x: float = math.pi / 4,
                     theta_y: float = math.pi / 4, alpha: float = 0.0,
                     beta: float = 0.0, coin: CoinOperator | None = None) -> np.ndarray:
    """One-step momentum unitary for any walk family."""
    if family is Family.ONE_D:
        return momentum_unitary_1d(theta, k_x, alpha, beta)
    if family is Family.ALTERNATE_2D:
        return momentum_unitary_alternate(theta_x, theta_y, k_x, k_y, alpha, beta)
    named = {Family.GROVER_2D: grover_coin, Family.DFT_2D: dft_coin,
             Family.HADAMARD_2D: hadamard2_coin}
    if family in named:
        return momentum_unitary_2d(named[family](), k_x, k_y)
    if family is Family.CUSTOM_4COIN:
        if coin is None:
            raise ValueError("custom-4coin needs an explicit coin")
        return momentum_unitary_2d(coin, k_x, k_y)
    raise ValueError(f"unknown family {family}")


def _fold(omega):
    """Wrap into [0, 2pi). The bare modulo can round up to exactly 2pi when
    the input is a tiny negative number (float spacing near 2pi is ~9e-16)."""
    w = np.asarray(omega) % (2.0 * np.pi)
    return np.where(w >= 2.0 * np.pi, 0.0, w)


def eigenphases(u: np.ndarray) -> np.ndarray:
    """Sorted omega = -arg(lambda) mod 2pi of a unitary matrix."""
    return np.sort(_fold(-np.angle(np.linalg.eigvals(u))))


def circular_distance(a, b) -> np.ndarray:
    """|a - b| on the phase circle; plain differences misreport near 0/2pi."""
    d = np.abs(np.asarray(a) - np.asarray(b)) % (2.0 * np.pi)
    return np.minimum(d, 2.0 * np.pi - d)


def phase_set_distance(a, b) -> float:
    """Hausdorff distance between two phase sets on the circle.

    Sorting phases and comparing elementwise misaligns sets when one member
    sits at 0 and its partner at 2pi - eps; this comparison does not.
    """
    a = np.atleast_1d(np.asarray(a, dtype=float))
    b = np.atleast_1d(np.asarray(b, dtype=float))
    d = circular_distance(a[:, None], b[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def _pm(omega_plus):
    """Fold the (omega, -omega) branch pair into [0, 2pi)."""
    return omega_plus, _fold(-omega_plus)


# ---------------------------------------------------------------- closed forms

def dispersion_1d(theta: float, k):
    """1D bands: omega_plus = arccos(cos theta cos k), omega_minus its mirror."""
    k = np.asarray(k, dtype=float)
    if np.any(np.abs(k) > math.pi + 1e-9):
        raise ValueError("k outside [-pi, pi]")
    w = np.arccos(np.clip(math.cos(theta) * np.cos(k), -1.0, 1.0))
    return _pm(w)


def effective_dispersion_1d(theta: float, p: int, k):
    """Stroboscopic 1D bands of the p-step walk at phi = 2pi/p, reduced zone
    |k| <= pi/p; cos omega = c^p cos(pk) (odd p) with the gap shift for even p."""
    if p < 1:
        raise ValueError("p must be >= 1")
    k = np.asarray(k, dtype=float)
    if np.any(np.abs(k) > math.pi / p + 1e-9):
        raise ValueError(f"k outside the reduced zone [-pi/{p}, pi/{p}]")
    c = math.cos(theta) ** p
    if p % 2:
        cosw = c * np.cos(p * k)
    else:
        cosw = (1.0 - c) * (-1.0) ** (1 + p // 2) - c * np.cos(p * k)
    w = np.arccos(np.clip(cosw, -1.0, 1.0))
    return _pm(w)


def max_group_velocity_1d(theta: float, p: int) -> tuple[float, float]:
    """(|v_max|, k location) of v = (1/p) d omega/dk on the effective bands."""
    if p < 1:
        raise ValueError("p must be >= 1")
    c = math.cos(theta)
    if p % 2:
        return abs(c) ** p, math.pi / (2 * p)
    if abs(c) < 1e-15:  # cos(pi/2) lands at ~6e-17, never exactly 0
        raise ValueError("even-p formula needs cos(theta) != 0")
    v = math.sqrt(abs(c) ** p)
    k_at = 0.0 if p % 4 == 0 else math.pi / p
    return v, k_at


def dispersion_alternate(theta_x: float, theta_y: float, k_x, k_y):
    """Alternate-walk bands: cos omega = cos(kx+ky) cx cy - cos(kx-ky) sx sy."""
    k_x = np.asarray(k_x, dtype=float)
    k_y = np.asarray(k_y, dtype=float)
    cosw = np.cos(k_x + k_y) * math.cos(theta_x) * math.cos(theta_y) \
        - np.cos(k_x - k_y) * math.sin(theta_x) * math.sin(theta_y)
    w = np.arccos(np.clip(cosw, -1.0, 1.0))
    return _pm(w)


def _strobe_r(theta_x, theta_y, k_field, k_trans):
    return np.exp(1j * k_field) * (
        math.cos(theta_x) * math.cos(theta_y) * np.exp(1j * k_trans)
        - math.sin(theta_x) * math.sin(theta_y) * np.exp(-1j * k_trans))


def stroboscopic_dispersion_alternate(theta_x: float, theta_y: float, p: int,
                                      k_x, k_y, field_axis: str = "x"):
    """Alternate-walk bands of the p-step stroboscopic walk at phi = 2pi/p along
    field_axis. Reduced zone: |k_field| <= pi/p, |k_trans| <= pi/2 (checkerboard).

    Samples with |r| = 0 (arccos(0/0) undefined) are resolved through the
    product-unitary eigenphases at that exact k instead of a limit convention.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    if field_axis not in ("x", "y"):
        raise ValueError("field_axis must be 'x' or 'y'")
    k_x = np.asarray(k_x, dtype=float)
    k_y = np.asarray(k_y, dtype=float)
    kf, kt = (k_x, k_y) if field_axis == "x" else (k_y, k_x)
    r = _strobe_r(theta_x, theta_y, kf, kt)
    mod = np.abs(r)
    # p*arg(r) via atan2; arccos(Re r/|r|) amplifies roundoff near |Re r| = |r|
    beta = p * np.angle(r)
    if p % 2:
        cosw = mod**p * np.cos(beta)
    else:
        cosw = (-1.0) ** (p // 2 + 1) * (1.0 - mod**p) - mod**p * np.cos(beta)
    if np.any(mod == 0.0):
        cosw = _strobe_fallback(theta_x, theta_y, p, k_x, k_y, field_axis,
                                np.asarray(cosw), mod)
    w = np.arccos(np.clip(cosw, -1.0, 1.0))
    return _pm(w)


def _strobe_fallback(theta_x, theta_y, p, k_x, k_y, field_axis, cosw, mod):
    phi = 2.0 * math.pi / p
    it = np.nditer(mod, flags=["multi_index"])
    for m in it:
        if m != 0.0:
            continue
        idx = it.multi_index
        kx = float(np.broadcast_to(k_x, mod.shape)[idx])
        ky = float(np.broadcast_to(k_y, mod.shape)[idx])
        w = np.eye(2, dtype=complex)
        for j in range(1, p + 1):
            if field_axis == "x":
                w = w @ momentum_unitary_alternate(theta_x, theta_y, kx + j * phi, ky)
            else:
                w = w @ momentum_unitary_alternate(theta_x, theta_y, kx, ky + j * phi)
        cosw[idx] = 0.5 * np.trace(w).real  # SU(2): Tr W = 2 cos omega
    return cosw


def dispersion_hadamard2(k_x, k_y):
    """Hadamard-coin bands (omega_1, omega_2); all four sheets are +-omega_1,2."""
    k_x = np.asarray(k_x, dtype=float)
    k_y = np.asarray(k_y, dtype=float)
    cx, cy = np.cos(k_x), np.cos(k_y)
    s = cx * cx + cy * cy + 6.0 * cx * cy
    root = np.sqrt(s + 8.0)  # s >= -4, see the grid assertion in the tests
    w1 = np.arccos(np.clip(0.25 * (cx - cy - root), -1.0, 1.0))
    w2 = np.arccos(np.clip(0.25 * (cx - cy + root), -1.0, 1.0))
    return w1, w2


def dft_dispersion_residual(omega, k_x, k_y):
    """Residual of the implicit DFT band equation (zero at a band omega)."""
    omega = np.asarray(omega, dtype=float)
    return np.cos(2 * omega) + 2 * np.sin(2 * omega) - (
        np.cos(k_x - k_y)
        + 2 * (np.sin(omega) + np.sin(k_x) + np.sin(k_y)
               + np.cos(k_x) + np.cos(k_y)) * np.sin(omega))


def dispersion_dft(k_x: float, k_y: float, samples: int = 4096,
                   return_info: bool = False):
    """The four band eigenphases at one k, by dense scan + bisection of the
    implicit equation; falls back to the eigenphase oracle when bracketing
    finds fewer or more than 4 roots (tangential roots at band touchings)."""
    grid = np.linspace(0.0, 2.0 * math.pi, samples + 1)
    f = dft_dispersion_residual(grid, k_x, k_y)
    roots = [float(g) for g, v in zip(grid[:-1], f[:-1]) if v == 0.0]
    for i in np.nonzero(f[:-1] * f[1:] < 0.0)[0]:
        lo, hi = grid[i], grid[i + 1]
        flo = f[i]
        for _ in range(60):  # interval below 1e-12 after ~52 halvings
            mid = 0.5 * (lo + hi)
            fm = dft_dispersion_residual(mid, k_x, k_y)
            if fm == 0.0:
                lo = hi = mid
                break
            if (fm > 0) == (flo > 0):
                lo, flo = mid, fm
            else:
                hi = mid
        roots.append(0.5 * (lo + hi))
    roots = sorted(float(_fold(r)) for r in roots)
    info = {"bracketed": len(roots), "fallback": False}
    if len(roots) != 4:
        roots = list(eigenphases(momentum_unitary_2d(dft_coin(), k_x, k_y)))
        info["fallback"] = True
    out = np.array(roots)
    return (out, info) if return_info else out


# ---------------------------------------------------------------- trace lemma

@dataclass(frozen=True)
class LemmaInput:
    """A 2x2 matrix, the order m, and a primitive m-th root of unity eta."""

    a_matrix: np.ndarray
    m: int
    eta: complex

    def __post_init__(self):
        a = np.asarray(self.a_matrix, dtype=complex)
        if a.shape != (2, 2):
            raise ValueError("A must be 2x2")
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if abs(self.eta**self.m - 1.0) > 1e-9:
            raise ValueError("eta is not an m-th root of unity")
        if any(abs(self.eta**j - 1.0) < 1e-9 for j in range(1, self.m)):
            raise ValueError("eta is not primitive")
        object.__setattr__(self, "a_matrix", a)

    @classmethod
    def of(cls, a_matrix, m: int, eta: complex | None = None) -> "LemmaInput":
        if m < 1:
            raise ValueError("m must be >= 1")
        if eta is None:
            eta = np.exp(2j * math.pi / m)
        return cls(np.asarray(a_matrix, dtype=complex), m, complex(eta))


def lemma_trace_direct(inp: LemmaInput) -> complex:
    """tau_m = Tr[A R^0 A R^1 ... A R^{m-1}] with R = diag(eta, 1/eta), literally."""
    a = inp.a_matrix
    r = np.diag([inp.eta, 1.0 / inp.eta])
    prod = np.eye(2, dtype=complex)
    for j in range(inp.m):
        prod = prod @ a @ np.linalg.matrix_power(r, j)
    return complex(np.trace(prod))


def lemma_trace_closed(inp: LemmaInput) -> complex:
    """Closed form of tau_m: a^m + d^m (odd m), with the determinant correction
    -(a^m + d^m) + 2 (-1)^{m/2} [(ad)^{m/2} - (det A)^{m/2}] for even m."""
    a, d = inp.a_matrix[0, 0], inp.a_matrix[1, 1]
    m = inp.m
    if m % 2:
        return complex(a**m + d**m)
    det = np.linalg.det(inp.a_matrix)
    half = m // 2
    return complex(-(a**m + d**m) + 2.0 * (-1.0) ** half * ((a * d) ** half - det**half))


# ---------------------------------------------------------------- band grids

@dataclass
class BandGrid:
    """omega[i..., branch] in [0, 2pi), ascending along the last axis."""

    k_axes: tuple[np.ndarray, ...]
    branches: int
    omega: np.ndarray

    def __post_init__(self):
        if self.omega.shape != tuple(len(ax) for ax in self.k_axes) + (self.branches,):
            raise ValueError("omega shape inconsistent with k_axes/branches")


def _sorted_pairs(*branches):
    return np.sort(np.stack(np.broadcast_arrays(*branches), axis=-1), axis=-1)


def band_grid_1d(theta: float, n: int = 101, p: int | None = None) -> BandGrid:
    """1D bands over [-pi, pi], or the reduced zone [-pi/p, pi/p] when p is given."""
    if p is None:
        k = np.linspace(-math.pi, math.pi, n)
        wp, wm = dispersion_1d(theta, k)
    else:
        k = np.linspace(-math.pi / p, math.pi / p, n)
        wp, wm = effective_dispersion_1d(theta, p, k)
    return BandGrid((k,), 2, _sorted_pairs(wp, wm))


def band_grid_alternate(theta_x: float, theta_y: float, n: int = 101,
                        p: int | None = None, field_axis: str = "x") -> BandGrid:
    """Alternate-walk bands over the full zone, or the stroboscopic reduced zone."""
    if p is None:
        kx = np.linspace(-math.pi, math.pi, n)
        ky = np.linspace(-math.pi, math.pi, n)
        wp, wm = dispersion_alternate(theta_x, theta_y, kx[:, None], ky[None, :])
    else:
        f = np.linspace(-math.pi / p, math.pi / p, n)
        t = np.linspace(-math.pi / 2, math.pi / 2, n)
        kx, ky = (f, t) if field_axis == "x" else (t, f)
        wp, wm = stroboscopic_dispersion_alternate(
            theta_x, theta_y, p, kx[:, None], ky[None, :], field_axis)
    return BandGrid((kx, ky), 2, _sorted_pairs(wp, wm))


def write_band_csv(grid: BandGrid, path) -> None:
    """Band rows as kx[,ky],branch,omega with full float precision."""
    fmt = lambda v: format(v, ".17g")
    axes = grid.k_axes
    with open(path, "w") as fh:
        fh.write(("kx,ky" if len(axes) == 2 else "kx") + ",branch,omega\n")
        for idx in np.ndindex(*(len(ax) for ax in axes)):
            ks = ",".join(fmt(ax[i]) for ax, i in zip(axes, idx))
            for b in range(grid.branches):
                fh.write(f"{ks},{b},{fmt(grid.omega[idx + (b,)])}\n")


def band_grid_2d(family: Family, n: int = 101,
                 coin: CoinOperator | None = None) -> BandGrid:
    """Four-branch bands of the 4-component walks over the full zone.

    Hadamard and DFT go through their dispersion relations (the DFT solver per
    k sample); Grover and custom coins through the eigenphase oracle.
    """
    kx = np.linspace(-math.pi, math.pi, n)
    ky = np.linspace(-math.pi, math.pi, n)
    if family is Family.HADAMARD_2D:
        w1, w2 = dispersion_hadamard2(kx[:, None], ky[None, :])
        omega = _sorted_pairs(w1, _fold(-w1), w2, _fold(-w2))
        return BandGrid((kx, ky), 4, omega)
    if family is Family.DFT_2D:
        omega = np.empty((n, n, 4))
        for i, kxi in enumerate(kx):
            for j, kyj in enumerate(ky):
                omega[i, j] = dispersion_dft(kxi, kyj)
        return BandGrid((kx, ky), 4, omega)
    if family is Family.GROVER_2D:
        coin = grover_coin()
    if family is Family.CUSTOM_4COIN and coin is None:
        raise ValueError("custom-4coin needs an explicit coin")
    if coin is None or coin.dim != 4:
        raise ValueError(f"band_grid_2d cannot handle family {family}")
    omega = np.empty((n, n, 4))
    for i, kxi in enumerate(kx):
        for j, kyj in enumerate(ky):
            omega[i, j] = eigenphases(momentum_unitary_2d(coin, kxi, kyj))
    return BandGrid((kx, ky), 4, omega)
