"""Width revivals of the 1D walk under a linear phase gradient.

Runs the same localized start at three field strengths and prints the
standard deviation of the position distribution every few steps. At
phi = 2pi/3 the width snaps back near multiples of a short revival
time; at a weak field the revivals are long and shallow; at zero field
the walk just spreads.
"""

import math

import numpy as np

from eqwalk import Family, FieldPhase, WalkSpec, detect_periods, run, widths

CIRC = np.array([1, 1j]) / math.sqrt(2)
STEPS = 120

cases = [
    ("zero field", FieldPhase.zero()),
    ("2pi/3", FieldPhase.rational(1, 3)),
    ("2pi/60", FieldPhase.rational(1, 60)),
]

series = {}
for label, phi in cases:
    spec = WalkSpec(Family.ONE_D, STEPS, CIRC, phi_x=phi)
    obs = run(spec, observers=(widths,)).observations[0]
    series[label] = [0.0] + [w.sigma_x for w in obs]

print(f"{'t':>4}  " + "".join(f"{label:>12}" for label, _ in cases))
for t in range(0, STEPS + 1, 6):
    row = "".join(f"{series[label][t]:12.3f}" for label, _ in cases)
    print(f"{t:>4}  {row}")

print()
for label, _ in cases:
    peaks = detect_periods(series[label], max_period=30)
    if peaks:
        desc = ", ".join(f"lag {lag} (r={r:.2f})" for lag, r in peaks)
    else:
        desc = "none"
    print(f"periods in sigma_x at {label}: {desc}")
