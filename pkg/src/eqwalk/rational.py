"""Continued fractions: expansions, convergents, and rational phase snapping."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .evolve import FieldPhase

EXACT_EPS = 1e-12  # double-precision input fidelity


@dataclass(frozen=True)
class CFExpansion:
    """Terms a0, a1, ... with a0 >= 0 and a_i >= 1 for i >= 1."""

    terms: tuple[int, ...]
    exact: bool

    def __post_init__(self):
        if not self.terms or self.terms[0] < 0 or any(a < 1 for a in self.terms[1:]):
            raise ValueError("invalid continued-fraction terms")


def expand(x: float, max_terms: int) -> CFExpansion:
    """Continued-fraction expansion of x in [0,1); stops early when the
    remainder drops below 1e-12 (the expansion is then flagged exact)."""
    if not 0.0 <= x < 1.0:
        raise ValueError("x must lie in [0, 1)")
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    terms = [0]
    r = x
    for _ in range(max_terms - 1):
        if r < EXACT_EPS:
            return CFExpansion(tuple(terms), True)
        inv = 1.0 / r
        a = int(math.floor(inv))
        r = inv - a
        # guard against 0.999999999999x flooring one too low
        if r > 1.0 - EXACT_EPS:
            a += 1
            r = 0.0
        terms.append(a)
    return CFExpansion(tuple(terms), r < EXACT_EPS)


def convergent(cf: CFExpansion, depth: int) -> tuple[int, int]:
    """Reduced fraction q/p from the first `depth` terms (depth is 1-based)."""
    if not 1 <= depth <= len(cf.terms):
        raise ValueError(f"depth must be in [1, {len(cf.terms)}]")
    # standard recurrence h_n = a_n h_{n-1} + h_{n-2}
    h0, k0 = 1, 0
    h1, k1 = cf.terms[0], 1
    for a in cf.terms[1:depth]:
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
    g = math.gcd(h1, k1)
    return h1 // g, k1 // g


def phase_to_rational(phi: float, tolerance: float) -> FieldPhase:
    """Smallest-denominator convergent of phi/2pi within tolerance."""
    if tolerance <= 0:
        raise ValueError("tolerance must be > 0")
    x = (phi / (2.0 * math.pi)) % 1.0
    cf = expand(x, 64)
    for depth in range(1, len(cf.terms) + 1):
        q, p = convergent(cf, depth)
        if abs(x - q / p) <= tolerance:
            return FieldPhase.rational(q, p)
    return FieldPhase.rational(q, p)  # deepest convergent as best effort
