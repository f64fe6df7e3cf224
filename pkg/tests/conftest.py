"""Shared oracles and fixtures.

The dense oracles build the full one-step evolution matrix over the position
x coin basis and apply it literally; no windowing, no slicing tricks. They are
deliberately slow and independent of the package kernels.
"""

import math

import numpy as np
import pytest

from eqwalk import FieldPhase, WalkSpec, run, widths
from eqwalk.evolve import Family

# slot displacements of the 4-component walks: (X+, Y-, Y+, X-)
CROSS_DISP = ((1, 0), (0, -1), (0, 1), (-1, 0))


def circdist(a, b):
    d = np.abs(np.asarray(a, dtype=float) - np.asarray(b, dtype=float)) % (2 * np.pi)
    return np.minimum(d, 2 * np.pi - d)


def setdist(a, b):
    a = np.atleast_1d(np.asarray(a, dtype=float))
    b = np.atleast_1d(np.asarray(b, dtype=float))
    d = circdist(a[:, None], b[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


# ------------------------------------------------------------- dense oracles

def dense_unitary_1d(n, x_min, coin, phi_rad):
    """Full-matrix one step over basis (x, c), c-major within site."""
    u = np.zeros((2 * n, 2 * n), dtype=complex)
    for xi in range(n):
        for c_in in range(2):
            for c_out in range(2):
                amp = coin[c_out, c_in]
                if amp == 0:
                    continue
                xo = xi + (1 if c_out == 0 else -1)
                if 0 <= xo < n:
                    u[2 * xo + c_out, 2 * xi + c_in] = amp * np.exp(
                        1j * phi_rad * (x_min + xo))
    return u


def dense_unitary_2d_cross(n, x_min, y_min, coin, phix_rad, phiy_rad):
    dim = 4 * n * n
    u = np.zeros((dim, dim), dtype=complex)
    idx = lambda xi, yi, c: 4 * (xi * n + yi) + c
    for xi in range(n):
        for yi in range(n):
            for c_in in range(4):
                for c_out in range(4):
                    amp = coin[c_out, c_in]
                    if amp == 0:
                        continue
                    dx, dy = CROSS_DISP[c_out]
                    xo, yo = xi + dx, yi + dy
                    if 0 <= xo < n and 0 <= yo < n:
                        ph = phix_rad * (x_min + xo) + phiy_rad * (y_min + yo)
                        u[idx(xo, yo, c_out), idx(xi, yi, c_in)] = amp * np.exp(1j * ph)
    return u


def dense_unitary_2d_alternate(n, x_min, y_min, cx, cy, phix_rad, phiy_rad):
    """Phase * (Sy Cy) * (Sx Cx) as an explicit matrix product."""
    dim = 2 * n * n
    idx = lambda xi, yi, c: 2 * (xi * n + yi) + c
    sxcx = np.zeros((dim, dim), dtype=complex)
    sycy = np.zeros((dim, dim), dtype=complex)
    for xi in range(n):
        for yi in range(n):
            for c_in in range(2):
                for c_out in range(2):
                    if cx[c_out, c_in] != 0:
                        xo = xi + (1 if c_out == 0 else -1)
                        if 0 <= xo < n:
                            sxcx[idx(xo, yi, c_out), idx(xi, yi, c_in)] = cx[c_out, c_in]
                    if cy[c_out, c_in] != 0:
                        yo = yi + (1 if c_out == 0 else -1)
                        if 0 <= yo < n:
                            sycy[idx(xi, yo, c_out), idx(xi, yi, c_in)] = cy[c_out, c_in]
    phase = np.zeros(dim, dtype=complex)
    for xi in range(n):
        for yi in range(n):
            ph = np.exp(1j * (phix_rad * (x_min + xi) + phiy_rad * (y_min + yi)))
            phase[idx(xi, yi, 0):idx(xi, yi, 0) + 2] = ph
    return phase[:, None] * (sycy @ sxcx)


def state_vector_1d(state):
    return state.amplitudes.reshape(-1)


def state_vector_2d(state):
    return state.amplitudes.reshape(-1)


# ----------------------------------------------------- acceptance reporting

_ACCEPTANCE = []


def record_acceptance(num, name, ok, detail):
    _ACCEPTANCE.append((num, name, bool(ok), detail))


@pytest.fixture(scope="session")
def acceptance():
    return record_acceptance


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, ok, detail in sorted(_ACCEPTANCE):
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {num} ({name}): {verdict} - {detail}")


# ------------------------------------------------------------ heavy 2D runs

def _seeded_coin_4():
    from eqwalk import CoinOperator, Ordering
    rng = np.random.default_rng(20240811)
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    q, r = np.linalg.qr(g)
    q = q * (np.diagonal(r) / np.abs(np.diagonal(r)))
    return CoinOperator(q, Ordering.XY_CROSS)


@pytest.fixture(scope="session")
def heavy_runs():
    """All long 2D reference runs, computed once per session (minutes)."""
    f120 = FieldPhase.rational(1, 120)
    gsym = np.array([1, -1, -1, 1]) / 2
    hsym = np.array([1, 1j, 1j, -1]) / 2
    circ = np.array([1, 1j]) / math.sqrt(2)
    e0 = np.array([1, 0, 0, 0], dtype=complex)
    zero = FieldPhase.zero()
    jobs = {
        "fig2a": (WalkSpec(Family.GROVER_2D, 600, gsym), True),
        "fig2b": (WalkSpec(Family.GROVER_2D, 600, gsym, phi_x=f120), True),
        "fig2c": (WalkSpec(Family.GROVER_2D, 1000, gsym, phi_x=f120, phi_y=f120), True),
        "fig4dt0": (WalkSpec(Family.ALTERNATE_2D, 1000, circ, phi_x=f120), True),
        "fig4dt02": (WalkSpec(Family.ALTERNATE_2D, 1000, circ, phi_x=f120,
                              theta_x=math.pi / 4 + 0.2,
                              theta_y=math.pi / 4 - 0.2), True),
        "had_free": (WalkSpec(Family.HADAMARD_2D, 1000, hsym), True),
        "fig9": (WalkSpec(Family.HADAMARD_2D, 1000, hsym, phi_x=f120), True),
        "fig10": (WalkSpec(Family.HADAMARD_2D, 1000, hsym, phi_x=f120, phi_y=f120), True),
        "dft_x": (WalkSpec(Family.DFT_2D, 1000, hsym, phi_x=f120, phi_y=zero), False),
        "custom": (WalkSpec(Family.CUSTOM_4COIN, 1000, e0,
                            custom_coin=_seeded_coin_4()), False),
    }
    out = {}
    for tag, (spec, want_w) in jobs.items():
        res = run(spec, observers=(widths,) if want_w else ())
        entry = {"norm": res.final_state.norm(), "w": None}
        if want_w:
            entry["w"] = np.vstack([[0.0] * 4] +
                                   [list(v) for v in res.observations[0]])
        out[tag] = entry
    return out
