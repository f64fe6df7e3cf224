import math

import numpy as np
import pytest

from eqwalk import (
    Family,
    FieldPhase,
    Ordering,
    WalkSpec,
    WalkState1D,
    WalkState2D,
    WidthSeries,
    detect_periods,
    position_marginal,
    rotate_frame_45,
    run,
    widths,
    write_width_csv,
)

CIRC = (1 / math.sqrt(2), 1j / math.sqrt(2))


def _state_1d(pairs):
    xs = [x for x, _ in pairs]
    lo, hi = min(xs), max(xs)
    amp = np.zeros((hi - lo + 1, 2), dtype=complex)
    for x, (a, b) in pairs:
        amp[x - lo] = (a, b)
    return WalkState1D(lo, hi, amp)


def test_marginal_sums_to_one():
    res = run(WalkSpec(Family.ONE_D, 25, CIRC, phi_x=FieldPhase.rational(1, 5)))
    assert position_marginal(res.final_state).sum() == pytest.approx(1.0)
    res = run(WalkSpec(Family.GROVER_2D, 12, (0.5, -0.5, -0.5, 0.5)))
    p = position_marginal(res.final_state)
    assert p.shape == (27, 27)
    assert p.sum() == pytest.approx(1.0)


def test_widths_hand_case_1d():
    inv = 1 / math.sqrt(2)
    st = _state_1d([(-1, (inv, 0)), (2, (0, 1j * inv))])
    assert widths(st).sigma_x == pytest.approx(1.5)
    st = _state_1d([(3, (1, 0))])
    assert widths(st) == (0.0, None, None, None)


def test_widths_hand_case_2d():
    amp = np.zeros((3, 3, 4), dtype=complex)
    for i, j in ((0, 0), (0, 2), (2, 0), (2, 2)):
        amp[i, j, 0] = 0.5
    st = WalkState2D(-1, 1, -1, 1, amp, Ordering.XY_CROSS)
    w = widths(st)
    assert w == pytest.approx((1.0, 1.0, 1.0, 1.0))


def test_diagonal_widths_preserve_total_variance():
    rng = np.random.default_rng(8)
    for _ in range(20):
        p = rng.random((9, 11))
        amp = np.zeros((9, 11, 4), dtype=complex)
        amp[:, :, 1] = np.sqrt(p / p.sum()) * np.exp(2j * np.pi * rng.random((9, 11)))
        st = WalkState2D(-4, 4, -5, 5, amp, Ordering.XY_CROSS)
        w = widths(st)
        assert w.sigma_d**2 + w.sigma_a**2 == pytest.approx(
            w.sigma_x**2 + w.sigma_y**2, abs=1e-12)


# ------------------------------------------------------------ 45 degree frame

def test_rotate_frame_45_corner_mass():
    p = np.zeros((3, 3))
    p[0, 0] = p[0, 2] = p[2, 0] = p[2, 2] = 0.25
    q, u_min, v_min = rotate_frame_45(p, x_min=-1, y_min=-1)
    assert (u_min, v_min) == (-2, -2)
    assert q.shape == (5, 5)
    # (x,y)=(1,1)->(2,0); (1,-1)->(0,2); (-1,1)->(0,-2); (-1,-1)->(-2,0)
    for u, v in ((2, 0), (0, 2), (0, -2), (-2, 0)):
        assert q[u - u_min, v - v_min] == 0.25
    assert q.sum() == pytest.approx(1.0)


def test_rotate_frame_45_rejects_mixed_parity():
    p = np.zeros((3, 3))
    p[0, 0] = p[1, 0] = 0.5  # sites (0,0) and (1,0): opposite parity
    with pytest.raises(ValueError, match="checkerboard"):
        rotate_frame_45(p)
    with pytest.raises(ValueError):
        rotate_frame_45(np.zeros((3, 3)))
    with pytest.raises(ValueError):
        rotate_frame_45(np.zeros(3))


def test_rotate_frame_45_conserves_mass():
    rng = np.random.default_rng(9)
    p = np.zeros((8, 8))
    for i in range(8):
        for j in range(8):
            if (i + j) % 2 == 0:
                p[i, j] = rng.random()
    p /= p.sum()
    q, _, _ = rotate_frame_45(p, x_min=0, y_min=0)
    assert q.sum() == pytest.approx(1.0)
    assert np.count_nonzero(q) == np.count_nonzero(p)


# ------------------------------------------------------------------- periods

def test_detect_periods_pure_tile():
    s = np.tile([1.0, 2.0, 0.5], 40)
    got = detect_periods(s, 12)
    assert [lag for lag, _ in got] in ([3, 6, 9, 12], [3, 6, 9, 12])
    assert {lag for lag, _ in got} == {3, 6, 9, 12}
    assert all(score > 0.999 for _, score in got)


def test_detect_periods_sinusoid_with_trend():
    t = np.arange(160)
    s = np.sin(2 * np.pi * t / 8) + 0.05 * t
    got = detect_periods(s, 16)
    assert {lag for lag, _ in got} == {8, 16}
    assert all(score > 0.99 for _, score in got)


def test_detect_periods_flat_series_has_no_peaks():
    # constant after detrending correlates perfectly at every lag, so no lag
    # is a strict local maximum over its left neighbor
    assert detect_periods(np.ones(60), 10) == []


def test_detect_periods_validation():
    with pytest.raises(ValueError):
        detect_periods(np.ones(10), 4)
    with pytest.raises(ValueError):
        detect_periods(np.ones(60), 1)


def _width_series(q, p, steps):
    spec = WalkSpec(Family.ONE_D, steps, CIRC, phi_x=FieldPhase.rational(q, p))
    return [w.sigma_x for w in run(spec, observers=(widths,)).observations[0]]


def test_detect_periods_walk_regressions():
    # pinned outputs on width series of rational-field runs; the detected
    # lags track the revival structure, not necessarily the field period
    cases = [
        (1, 3, 280, 20, [(8, 0.8003171331425194), (15, 0.5060751106114159)]),
        (1, 4, 280, 20, [(6, 0.83068527573953), (12, 0.5337204377885583)]),
        (3, 7, 280, 20, [(14, 0.8923091965165676)]),
        (1, 3, 120, 12, [(8, 0.6161824722223027)]),
        (1, 5, 120, 12, [(11, 0.655130335867045)]),
    ]
    for q, p, steps, mp, want in cases:
        got = detect_periods(_width_series(q, p, steps), mp)
        assert [lag for lag, _ in got] == [lag for lag, _ in want]
        for (_, gs), (_, ws) in zip(got, want):
            assert gs == pytest.approx(ws, abs=1e-9)


# ---------------------------------------------------------------- series I/O

def test_width_series_from_observations():
    res = run(WalkSpec(Family.ONE_D, 5, (1, 0)), observers=(widths,))
    s = WidthSeries.from_observations(res.observations[0])
    assert np.array_equal(s.t, [1, 2, 3, 4, 5])
    assert s.sigma_y is None and s.sigma_x.shape == (5,)
    res = run(WalkSpec(Family.GROVER_2D, 4, (0.5, -0.5, -0.5, 0.5)),
              observers=(widths,))
    s = WidthSeries.from_observations(res.observations[0])
    assert s.sigma_a.shape == (4,)


def test_write_width_csv(tmp_path):
    res = run(WalkSpec(Family.GROVER_2D, 4, (0.5, -0.5, -0.5, 0.5)),
              observers=(widths,))
    s = WidthSeries.from_observations(res.observations[0])
    path = tmp_path / "w.csv"
    write_width_csv(s, path)
    lines = path.read_text().strip().split("\n")
    assert lines[0] == "t,sigma_x,sigma_y,sigma_d,sigma_a"
    assert len(lines) == 5
    cells = lines[2].split(",")
    assert cells[0] == "2"
    assert float(cells[3]) == s.sigma_d[1]  # .17g round-trips exactly

    res = run(WalkSpec(Family.ONE_D, 3, (1, 0)), observers=(widths,))
    path1 = tmp_path / "w1.csv"
    write_width_csv(WidthSeries.from_observations(res.observations[0]), path1)
    assert path1.read_text().startswith("t,sigma_x\n")
