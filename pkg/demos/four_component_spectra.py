# Eigenphase structure of the three named 4-component coins at a few
# momenta, with the closed forms next to the numerical values.

import math

import numpy as np

from eqwalk import (
    dft_coin,
    dispersion_dft,
    dispersion_hadamard2,
    eigenphases,
    grover_coin,
    hadamard2_coin,
    momentum_unitary_2d,
)

POINTS = [(0.0, 0.0), (math.pi / 2, 0.3), (1.0, -2.0), (math.pi, math.pi)]


def show(name, coin, closed):
    print(name)
    for kx, ky in POINTS:
        eig = eigenphases(momentum_unitary_2d(coin, kx, ky))
        got = " ".join(f"{w:7.4f}" for w in eig)
        want = closed(kx, ky)
        ref = " ".join(f"{w:7.4f}" for w in sorted(want))
        print(f"  k=({kx:+.3f},{ky:+.3f})  eig: {got}   closed: {ref}")
    print()


def hadamard_sheets(kx, ky):
    w1, w2 = dispersion_hadamard2(kx, ky)
    return [w % (2 * math.pi) for w in (w1, -w1, w2, -w2)]


def grover_sheets(kx, ky):
    # two flat bands plus a cosine sheet and its mirror
    w = math.acos(-(math.cos(kx) + math.cos(ky)) / 2)
    return [0.0, math.pi, w, (-w) % (2 * math.pi)]


show("hadamard pair coin", hadamard2_coin(), hadamard_sheets)
show("symmetric 4-way coin", grover_coin(), grover_sheets)
show("fourier coin (roots of the implicit equation)", dft_coin(),
     lambda kx, ky: list(dispersion_dft(kx, ky)))
