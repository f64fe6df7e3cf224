"""Coin unitaries (2x2 and 4x4) with explicit component-ordering tags."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

UNITARITY_TOL = 1e-12


class Ordering(enum.Enum):
    """Convention naming what each coin slot means.

    QUBIT:     2-component coin, slots (+1, -1).
    XY_CROSS:  col(X+, Y-, Y+, X-), the canonical 4-slot order here.
    DIAG_ANTI: col(d+, a-, a+, d-), same slots relabeled for the 45-degree
               rotated frame (d = main diagonal, a = antidiagonal).
    XX_YY:     col(x+, x-, y+, y-).
    """

    QUBIT = "qubit"
    XY_CROSS = "xy-cross"
    DIAG_ANTI = "diag-anti"
    XX_YY = "xx-yy"


# slot -> XY_CROSS slot carrying the same component
_PERM_FROM_XY = {
    Ordering.XY_CROSS: (0, 1, 2, 3),
    Ordering.DIAG_ANTI: (0, 1, 2, 3),  # pure relabeling, same slot layout
    Ordering.XX_YY: (0, 3, 2, 1),
}


@dataclass(frozen=True)
class CoinOperator:
    """Immutable small unitary with its component ordering."""

    entries: np.ndarray
    ordering: Ordering
    dim: int = field(init=False)

    def __post_init__(self):
        entries = np.array(self.entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError("coin must be a square matrix")
        dim = entries.shape[0]
        if dim not in (2, 4):
            raise ValueError(f"coin dimension must be 2 or 4, got {dim}")
        if (dim == 2) != (self.ordering is Ordering.QUBIT):
            raise ValueError(f"ordering {self.ordering} inconsistent with dim {dim}")
        dev = np.abs(entries @ entries.conj().T - np.eye(dim)).max()
        if dev > UNITARITY_TOL:
            raise ValueError(f"coin is not unitary (deviation {dev:.3e})")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "dim", dim)


def make_rotation_coin(alpha: float = 0.0, beta: float = 0.0,
                       theta: float = math.pi / 4) -> CoinOperator:
    """General 2x2 rotation coin; alpha=beta=0, theta=pi/4 gives (1/sqrt2)[[1,1],[-1,1]]."""
    c, s = math.cos(theta), math.sin(theta)
    ea, eb = np.exp(1j * alpha), np.exp(1j * beta)
    m = np.array([[ea * c, eb * s],
                  [-np.conj(eb) * s, np.conj(ea) * c]])
    return CoinOperator(m, Ordering.QUBIT)


def grover_coin() -> CoinOperator:
    """4x4 coin with entries 1/2 - delta_jk; identical in every ordering."""
    return CoinOperator(np.full((4, 4), 0.5) - np.eye(4), Ordering.XY_CROSS)


def dft_coin() -> CoinOperator:
    """4x4 discrete-Fourier coin, entries (1/2) i^{jk}."""
    j = np.arange(4)
    return CoinOperator(0.5 * (1j ** np.outer(j, j)), Ordering.XY_CROSS)


def hadamard2_coin() -> CoinOperator:
    """Separable 4x4 Hadamard coin for the XY_CROSS slot order."""
    h = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)
    return CoinOperator(np.kron(h, h), Ordering.XY_CROSS)


def reorder_coin(coin: CoinOperator, target: Ordering) -> CoinOperator:
    """Rewrite a 4x4 coin for another slot convention (P C P^dagger)."""
    if coin.dim != 4 or target is Ordering.QUBIT:
        raise ValueError("orderings are a 4-component concept")
    src = _PERM_FROM_XY[coin.ordering]
    dst = _PERM_FROM_XY[target]
    # perm[i] = source slot feeding target slot i
    perm = [src.index(d) for d in dst]
    p = np.zeros((4, 4))
    p[np.arange(4), perm] = 1.0
    return CoinOperator(p @ coin.entries @ p.T, target)


_NAMED = {
    "grover": grover_coin,
    "dft": dft_coin,
    "hadamard2": hadamard2_coin,
    "hadamard2-permuted": lambda: reorder_coin(hadamard2_coin(), Ordering.XX_YY),
}


def coin_from_name(name: str, alpha: float = 0.0, beta: float = 0.0,
                   theta: float = math.pi / 4) -> CoinOperator:
    """Resolve a config coin name; "rotation" consumes the angle parameters."""
    if name == "rotation":
        return make_rotation_coin(alpha, beta, theta)
    try:
        return _NAMED[name]()
    except KeyError:
        raise ValueError(f"unknown coin name {name!r}; "
                         f"choose rotation, {', '.join(sorted(_NAMED))}") from None
