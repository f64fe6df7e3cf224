import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqwalk import (CoinOperator, Ordering, coin_from_name, dft_coin,
                    grover_coin, hadamard2_coin, make_rotation_coin,
                    reorder_coin)


def test_rotation_default_is_balanced():
    c = make_rotation_coin().entries
    r = 1 / math.sqrt(2)
    assert np.allclose(c, [[r, r], [-r, r]], atol=1e-15)


def test_rotation_entries_general():
    a, b, th = 0.3, -1.1, 0.7
    c = make_rotation_coin(a, b, th).entries
    expect = np.array([
        [np.exp(1j * a) * math.cos(th), np.exp(1j * b) * math.sin(th)],
        [-np.exp(-1j * b) * math.sin(th), np.exp(-1j * a) * math.cos(th)],
    ])
    assert np.allclose(c, expect, atol=1e-15)


@settings(max_examples=60, deadline=None)
@given(st.floats(-math.pi, math.pi), st.floats(-math.pi, math.pi),
       st.floats(0, math.pi / 2))
def test_rotation_always_unitary(alpha, beta, theta):
    c = make_rotation_coin(alpha, beta, theta).entries
    assert np.allclose(c.conj().T @ c, np.eye(2), atol=1e-12)


def test_grover_matrix_and_involution():
    g = grover_coin().entries
    assert np.allclose(g, 0.5 * np.ones((4, 4)) - np.eye(4), atol=0)
    assert np.allclose(g @ g, np.eye(4), atol=1e-15)


def test_dft_matrix():
    d = dft_coin().entries
    j = np.arange(4)
    assert np.allclose(d, 0.5 * 1j ** np.outer(j, j), atol=0)
    assert np.allclose(d.conj().T @ d, np.eye(4), atol=1e-15)


def test_hadamard2_is_kron_of_h():
    h = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    assert np.allclose(hadamard2_coin().entries, np.kron(h, h), atol=1e-15)


def test_coin_is_frozen():
    c = grover_coin()
    with pytest.raises((ValueError, RuntimeError)):
        c.entries[0, 0] = 9.0


def test_rejects_non_unitary():
    with pytest.raises(ValueError):
        CoinOperator(np.ones((2, 2)), Ordering.QUBIT)


def test_rejects_bad_ordering_dim_combo():
    ok = make_rotation_coin().entries
    with pytest.raises(ValueError):
        CoinOperator(ok, Ordering.XY_CROSS)  # 4-component label on a 2x2
    with pytest.raises(ValueError):
        CoinOperator(np.eye(4, dtype=complex), Ordering.QUBIT)


def test_reorder_rejects_2d_coin():
    with pytest.raises(ValueError):
        reorder_coin(make_rotation_coin(), Ordering.XX_YY)


def test_reorder_to_diag_anti_is_relabel_only():
    out = reorder_coin(grover_coin(), Ordering.DIAG_ANTI)
    assert out.ordering is Ordering.DIAG_ANTI
    assert np.array_equal(out.entries, grover_coin().entries)


def test_reorder_xx_yy_swaps_slots_1_and_3():
    # a matrix with all-distinct entries pins the permutation exactly
    m = np.diag(np.exp(1j * np.array([0.1, 0.4, 0.9, 1.6])))
    src = CoinOperator(m, Ordering.XY_CROSS)
    out = reorder_coin(src, Ordering.XX_YY)
    assert np.allclose(np.diagonal(out.entries),
                       np.exp(1j * np.array([0.1, 1.6, 0.9, 0.4])), atol=0)


def test_reorder_round_trip():
    src = hadamard2_coin()
    back = reorder_coin(reorder_coin(src, Ordering.XX_YY), Ordering.XY_CROSS)
    assert np.array_equal(back.entries, src.entries)
    assert back.ordering is Ordering.XY_CROSS


def test_grover_same_in_every_ordering():
    for target in (Ordering.DIAG_ANTI, Ordering.XX_YY):
        assert np.array_equal(reorder_coin(grover_coin(), target).entries,
                              grover_coin().entries)


def test_hadamard2_permuted_matrix():
    out = coin_from_name("hadamard2-permuted")
    expect = 0.5 * np.array([[1, 1, 1, 1],
                             [1, 1, -1, -1],
                             [1, -1, -1, 1],
                             [1, -1, 1, -1]])
    assert out.ordering is Ordering.XX_YY
    assert np.allclose(out.entries, expect, atol=1e-15)


def test_coin_from_name():
    assert np.array_equal(coin_from_name("grover").entries, grover_coin().entries)
    c = coin_from_name("rotation", theta=0.3)
    assert np.allclose(c.entries[0, 0], math.cos(0.3), atol=1e-15)
    with pytest.raises(ValueError):
        coin_from_name("parrondo")
