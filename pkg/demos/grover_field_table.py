"""Field switched on along one axis of the 4-component walk.

Compares the free walk with a run where a linear phase 2pi/60 acts on x
only. The x width saturates while the y width keeps growing at the same
rate as before, which is the trapping signature in its cleanest form.
Takes around half a minute.
"""

import math

import numpy as np

from eqwalk import Family, FieldPhase, WalkSpec, run, widths

GSYM = np.array([1, -1, -1, 1]) / 2
STEPS = 200

free = WalkSpec(Family.GROVER_2D, STEPS, GSYM)
held = WalkSpec(Family.GROVER_2D, STEPS, GSYM,
                phi_x=FieldPhase.rational(1, 60))

wf = run(free, observers=(widths,)).observations[0]
wh = run(held, observers=(widths,)).observations[0]

print(f"{'t':>4} {'free sx':>9} {'free sy':>9} {'field sx':>9} {'field sy':>9}")
for t in range(10, STEPS + 1, 10):
    a, b = wf[t - 1], wh[t - 1]
    print(f"{t:>4} {a.sigma_x:9.2f} {a.sigma_y:9.2f} {b.sigma_x:9.2f} {b.sigma_y:9.2f}")

ratio = wh[-1].sigma_x / wf[-1].sigma_x
print(f"\nfinal sigma_x ratio (field / free): {ratio:.3f}")
print(f"final sigma_y ratio (field / free): {wh[-1].sigma_y / wf[-1].sigma_y:.3f}")
