"""Reduced-zone bands of the 1D walk at rational fields 2pi/p.

For each denominator p the p-step cycle has a closed dispersion; its
steepness sets how fast a wave packet can move. The table checks the
closed-form peak velocity against a finite-difference scan and writes
the p = 5 band to a CSV next to this script.
"""

import math
from pathlib import Path

import numpy as np

from eqwalk import (
    band_grid_1d,
    effective_dispersion_1d,
    max_group_velocity_1d,
    write_band_csv,
)

THETA = math.pi / 4

print(f"{'p':>3} {'v_max (formula)':>16} {'v_max (scan)':>14} {'at k':>8}")
for p in range(1, 13):
    v, k_at = max_group_velocity_1d(THETA, p)
    k = np.linspace(-math.pi / p, math.pi / p, 20001)
    wp, _ = effective_dispersion_1d(THETA, p, k)
    scan = float((np.abs(np.diff(wp)) / (np.diff(k) * p)).max())
    print(f"{p:>3} {v:16.9f} {scan:14.9f} {k_at:8.4f}")

out = Path(__file__).with_name("band_p5.csv")
write_band_csv(out, band_grid_1d(THETA, 301, p=5))
print(f"\nwrote {out.name} (301 momentum points, 2 branches)")
