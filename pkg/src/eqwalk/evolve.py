"""Single steps and multi-step runs of the electric walks.

Step order is literal everywhere: coin, then conditional shift, then the
position-diagonal electric phase. Rational phases phi = 2pi q/p go through a
p-entry roots-of-unity table so long runs accumulate no phase drift.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .coin import CoinOperator, Ordering, make_rotation_coin, grover_coin, \
    dft_coin, hadamard2_coin
from .state import WalkState1D, WalkState2D, new_localized_1d, new_localized_2d


@dataclass(frozen=True)
class FieldPhase:
    """Electric phase per step: exact rational multiple of 2pi, or a real angle."""

    kind: str  # "rational" or "real"
    q: int = 0
    p: int = 1
    value: float = 0.0

    def __post_init__(self):
        if self.kind == "rational":
            if self.p < 1:
                raise ValueError("p must be >= 1")
            if math.gcd(abs(self.q), self.p) != 1 and self.q != 0:
                raise ValueError("q/p must be reduced")
            if self.q == 0 and self.p != 1:
                raise ValueError("zero phase is 0/1")
        elif self.kind == "real":
            if not math.isfinite(self.value):
                raise ValueError("phase must be finite")
        else:
            raise ValueError(f"unknown FieldPhase kind {self.kind!r}")

    @classmethod
    def rational(cls, q: int, p: int) -> "FieldPhase":
        if p < 1:
            raise ValueError("p must be >= 1")
        g = math.gcd(abs(q), p)
        q, p = q // g, p // g
        if q == 0:
            p = 1
        return cls("rational", q=q, p=p)

    @classmethod
    def real(cls, value: float) -> "FieldPhase":
        return cls("real", value=float(value))

    @classmethod
    def zero(cls) -> "FieldPhase":
        return cls("rational", q=0, p=1)

    @property
    def radians(self) -> float:
        if self.kind == "rational":
            return 2.0 * math.pi * self.q / self.p
        return self.value

    def is_zero(self) -> bool:
        return self.q == 0 if self.kind == "rational" else self.value == 0.0

    def phase_vector(self, xs: np.ndarray) -> np.ndarray | None:
        """e^{i phi x} for integer positions xs; None when the phase is zero."""
        if self.is_zero():
            return None
        if self.kind == "rational":
            table = np.exp(2j * np.pi * np.arange(self.p) / self.p)
            return table[(self.q * np.asarray(xs)) % self.p]
        return np.exp(1j * self.value * np.asarray(xs))


class Family(enum.Enum):
    ONE_D = "one-d"
    GROVER_2D = "grover-2d"
    ALTERNATE_2D = "alternate-2d"
    DFT_2D = "dft-2d"
    HADAMARD_2D = "hadamard-2d"
    CUSTOM_4COIN = "custom-4coin"


TWO_DIM_FAMILIES = (Family.GROVER_2D, Family.ALTERNATE_2D, Family.DFT_2D,
                    Family.HADAMARD_2D, Family.CUSTOM_4COIN)


@dataclass
class WalkSpec:
    """Everything needed to reproduce a run deterministically."""

    family: Family
    steps: int
    coin_state: Sequence[complex]
    phi_x: FieldPhase = field(default_factory=FieldPhase.zero)
    phi_y: FieldPhase = field(default_factory=FieldPhase.zero)
    theta: float = math.pi / 4          # 1D rotation coin
    alpha: float = 0.0
    beta: float = 0.0
    theta_x: float = math.pi / 4        # alternate sub-coins
    theta_y: float = math.pi / 4
    custom_coin: CoinOperator | None = None

    def validate(self) -> None:
        if self.steps < 0:
            raise ValueError("steps must be >= 0")
        n = np.asarray(self.coin_state).size
        want = 2 if self.family in (Family.ONE_D, Family.ALTERNATE_2D) else 4
        if n != want:
            raise ValueError(f"{self.family.value} needs a {want}-component coin state")
        if self.family is Family.CUSTOM_4COIN:
            if self.custom_coin is None or self.custom_coin.dim != 4:
                raise ValueError("custom-4coin needs a 4x4 custom_coin")
            if self.custom_coin.ordering is not Ordering.XY_CROSS:
                raise ValueError("custom_coin must use the XY_CROSS ordering")
        if self.family is Family.ONE_D and not self.phi_y.is_zero():
            raise ValueError("1D walk has no y field")

    def coins(self):
        """Coin operator(s) for the family; alternate returns an (x, y) pair."""
        if self.family is Family.ONE_D:
            return make_rotation_coin(self.alpha, self.beta, self.theta)
        if self.family is Family.GROVER_2D:
            return grover_coin()
        if self.family is Family.DFT_2D:
            return dft_coin()
        if self.family is Family.HADAMARD_2D:
            return hadamard2_coin()
        if self.family is Family.CUSTOM_4COIN:
            return self.custom_coin
        return (make_rotation_coin(self.alpha, self.beta, self.theta_x),
                make_rotation_coin(self.alpha, self.beta, self.theta_y))


@dataclass
class RunResult:
    final_state: WalkState1D | WalkState2D
    observations: list  # one list per observer, one entry per step


# ---------------------------------------------------------------- kernels

def _k1d(src, dst, coin_t, pvec, lo, hi):
    # src support inside rows [lo, hi); writes rows [lo-1, hi+1)
    c = src[lo:hi] @ coin_t
    dst[lo - 1:hi + 1] = 0.0
    dst[lo + 1:hi + 1, 0] = c[:, 0]
    dst[lo - 1:hi - 1, 1] = c[:, 1]
    if pvec is not None:
        dst[lo - 1:hi + 1] *= pvec[lo - 1:hi + 1, None]


def _k2d_cross(src, dst, coin_t, px, py, xlo, xhi, ylo, yhi):
    # slots: 0 -> +x, 1 -> -y, 2 -> +y, 3 -> -x (XY_CROSS)
    c = np.matmul(src[xlo:xhi, ylo:yhi], coin_t)
    dst[xlo - 1:xhi + 1, ylo - 1:yhi + 1] = 0.0
    dst[xlo + 1:xhi + 1, ylo:yhi, 0] = c[..., 0]
    dst[xlo:xhi, ylo - 1:yhi - 1, 1] = c[..., 1]
    dst[xlo:xhi, ylo + 1:yhi + 1, 2] = c[..., 2]
    dst[xlo - 1:xhi - 1, ylo:yhi, 3] = c[..., 3]
    blk = dst[xlo - 1:xhi + 1, ylo - 1:yhi + 1]
    if px is not None:
        blk *= px[xlo - 1:xhi + 1, None, None]
    if py is not None:
        blk *= py[None, ylo - 1:yhi + 1, None]


def _k2d_alt(src, tmp, dst, cx_t, cy_t, px, py, xlo, xhi, ylo, yhi):
    # x sub-step: slot 0 -> +x, slot 1 -> -x; then the same along y
    c = np.matmul(src[xlo:xhi, ylo:yhi], cx_t)
    tmp[xlo - 1:xhi + 1, ylo:yhi] = 0.0
    tmp[xlo + 1:xhi + 1, ylo:yhi, 0] = c[..., 0]
    tmp[xlo - 1:xhi - 1, ylo:yhi, 1] = c[..., 1]
    d = np.matmul(tmp[xlo - 1:xhi + 1, ylo:yhi], cy_t)
    dst[xlo - 1:xhi + 1, ylo - 1:yhi + 1] = 0.0
    dst[xlo - 1:xhi + 1, ylo + 1:yhi + 1, 0] = d[..., 0]
    dst[xlo - 1:xhi + 1, ylo - 1:yhi - 1, 1] = d[..., 1]
    blk = dst[xlo - 1:xhi + 1, ylo - 1:yhi + 1]
    if px is not None:
        blk *= px[xlo - 1:xhi + 1, None, None]
    if py is not None:
        blk *= py[None, ylo - 1:yhi + 1, None]


# ---------------------------------------------------------------- public steps

def _edge_error(name):
    raise ValueError(f"support touching the {name} window boundary; "
                     "enlarge capacity_steps (no wraparound is performed)")


def step_1d(state: WalkState1D, coin: CoinOperator, phi: FieldPhase) -> WalkState1D:
    """One step: coin, shift (+1 slot moves +x), then e^{i phi x}."""
    if coin.dim != 2:
        raise ValueError("step_1d needs a 2x2 coin")
    a = state.amplitudes
    if np.any(a[0] != 0) or np.any(a[-1] != 0):
        _edge_error("1D")
    dst = np.empty_like(a)
    pvec = phi.phase_vector(state.positions())
    _k1d(a, dst, coin.entries.T.copy(), pvec, 1, a.shape[0] - 1)
    return WalkState1D(state.x_min, state.x_max, dst, state.time + 1)


def step_grover_like_2d(state: WalkState2D, coin: CoinOperator,
                        phi_x: FieldPhase, phi_y: FieldPhase) -> WalkState2D:
    """One step of the 4-component walk (Grover/DFT/Hadamard/custom coins)."""
    if coin.dim != 4:
        raise ValueError("step_grover_like_2d needs a 4x4 coin")
    if coin.ordering is not Ordering.XY_CROSS or state.ordering is not Ordering.XY_CROSS:
        raise ValueError("coin and state must use the XY_CROSS ordering")
    a = state.amplitudes
    if np.any(a[0] != 0) or np.any(a[-1] != 0) or np.any(a[:, 0] != 0) or np.any(a[:, -1] != 0):
        _edge_error("2D")
    dst = np.empty_like(a)
    px = phi_x.phase_vector(state.x_positions())
    py = phi_y.phase_vector(state.y_positions())
    _k2d_cross(a, dst, coin.entries.T.copy(), px, py,
               1, a.shape[0] - 1, 1, a.shape[1] - 1)
    return WalkState2D(state.x_min, state.x_max, state.y_min, state.y_max,
                       dst, state.ordering, state.time + 1)


def step_alternate_2d(state: WalkState2D, coin_x: CoinOperator, coin_y: CoinOperator,
                      phi_x: FieldPhase, phi_y: FieldPhase) -> WalkState2D:
    """One alternate step: coin_x, x shift, coin_y, y shift, then the phase."""
    if coin_x.dim != 2 or coin_y.dim != 2:
        raise ValueError("alternate walk uses 2x2 coins")
    if state.coin_dim != 2:
        raise ValueError("alternate walk state has coin_dim 2")
    a = state.amplitudes
    if np.any(a[0] != 0) or np.any(a[-1] != 0) or np.any(a[:, 0] != 0) or np.any(a[:, -1] != 0):
        _edge_error("2D")
    dst = np.empty_like(a)
    tmp = np.empty_like(a)
    px = phi_x.phase_vector(state.x_positions())
    py = phi_y.phase_vector(state.y_positions())
    _k2d_alt(a, tmp, dst, coin_x.entries.T.copy(), coin_y.entries.T.copy(),
             px, py, 1, a.shape[0] - 1, 1, a.shape[1] - 1)
    return WalkState2D(state.x_min, state.x_max, state.y_min, state.y_max,
                       dst, state.ordering, state.time + 1)


# ---------------------------------------------------------------- runner

def _support_box_1d(a):
    nz = np.nonzero(np.any(a != 0, axis=1))[0]
    return (int(nz[0]), int(nz[-1]) + 1)


def _support_box_2d(a):
    nzx = np.nonzero(np.any(a != 0, axis=(1, 2)))[0]
    nzy = np.nonzero(np.any(a != 0, axis=(0, 2)))[0]
    return (int(nzx[0]), int(nzx[-1]) + 1, int(nzy[0]), int(nzy[-1]) + 1)


def run(spec: WalkSpec, observers: Sequence[Callable] = ()) -> RunResult:
    """Execute spec.steps steps, invoking each observer after every step.

    Observers receive a read-only state view trimmed to the active window;
    they must not retain it across steps (buffers are reused).
    """
    spec.validate()
    obs_out = [[] for _ in observers]
    if spec.family is Family.ONE_D:
        st = new_localized_1d(spec.coin_state, spec.steps)
        a = st.amplitudes
        # zeros, not empty: the kernels only write the light cone, and rows
        # outside it must read as vacuum in the state handed back
        b = np.zeros_like(a)
        coin_t = spec.coins().entries.T.copy()
        pvec = spec.phi_x.phase_vector(st.positions())
        lo, hi = _support_box_1d(a)
        for t in range(1, spec.steps + 1):
            if lo - 1 < 0 or hi + 1 > a.shape[0]:
                raise ValueError(f"window boundary reached at step {t}")
            _k1d(a, b, coin_t, pvec, lo, hi)
            a, b = b, a
            lo, hi = lo - 1, hi + 1
            if observers:
                view = a[lo:hi]
                view.setflags(write=False)
                vs = WalkState1D(st.x_min + lo, st.x_min + hi - 1, view, t)
                for k, f in enumerate(observers):
                    obs_out[k].append(f(vs))
        final = WalkState1D(st.x_min, st.x_max, a, spec.steps)
        return RunResult(final, obs_out)

    st = new_localized_2d(spec.coin_state, spec.steps)
    a = st.amplitudes
    b = np.zeros_like(a)  # same vacuum guarantee as the 1D branch
    px = spec.phi_x.phase_vector(st.x_positions())
    py = spec.phi_y.phase_vector(st.y_positions())
    coins = spec.coins()
    if spec.family is Family.ALTERNATE_2D:
        tmp = np.zeros_like(a)
        cx_t = coins[0].entries.T.copy()
        cy_t = coins[1].entries.T.copy()
    else:
        coin_t = coins.entries.T.copy()
    xlo, xhi, ylo, yhi = _support_box_2d(a)
    for t in range(1, spec.steps + 1):
        if xlo - 1 < 0 or xhi + 1 > a.shape[0] or ylo - 1 < 0 or yhi + 1 > a.shape[1]:
            raise ValueError(f"window boundary reached at step {t}")
        if spec.family is Family.ALTERNATE_2D:
            _k2d_alt(a, tmp, b, cx_t, cy_t, px, py, xlo, xhi, ylo, yhi)
        else:
            _k2d_cross(a, b, coin_t, px, py, xlo, xhi, ylo, yhi)
        a, b = b, a
        xlo, xhi, ylo, yhi = xlo - 1, xhi + 1, ylo - 1, yhi + 1
        if observers:
            view = a[xlo:xhi, ylo:yhi]
            view.setflags(write=False)
            vs = WalkState2D(st.x_min + xlo, st.x_min + xhi - 1,
                             st.y_min + ylo, st.y_min + yhi - 1,
                             view, st.ordering, t)
            for k, f in enumerate(observers):
                obs_out[k].append(f(vs))
    final = WalkState2D(st.x_min, st.x_max, st.y_min, st.y_max, a, st.ordering,
                        spec.steps)
    return RunResult(final, obs_out)
