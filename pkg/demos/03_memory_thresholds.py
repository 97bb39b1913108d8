"""Walkthrough: memory thresholds, where one coding scheme overtakes another.

Finds the two headline crossings, then traces the sq1/sq2 threshold across
the depolarizing family. The trace has structure worth seeing: it peaks near
p_i ~ 0.083, collapses to zero exactly at the uniform channel p_i = 1/4
(where all four Pauli weights agree), and climbs again as p_i approaches 1/3.
"""

import pathlib

import numpy as np

from memchan import memory_threshold, preset_probs, threshold_curve

HERE = pathlib.Path(__file__).resolve().parent

print("Headline crossings")
print("-" * 60)
dep = preset_probs("depolarizing", 0.15)
r = memory_threshold("sq1", "sq2", dep)
print(f"depolarizing p=0.15, sq1 vs sq2:      mu_t = {r.mu_t:.6f}")
two = preset_probs("two-pauli", 0.5)
r = memory_threshold("product-x", "bell", two)
print(f"two-pauli    p=0.5,  product-x vs bell: mu_t = {r.mu_t:.6f}")

uniform = preset_probs("depolarizing", 0.75)
r = memory_threshold("sq1", "sq2", uniform)
print(f"uniform channel (p_i = 1/4), sq1 vs sq2: mu_t = {r.mu_t} "
      f"({r.dominant} dominates for every mu)")

print()
print("sq1/sq2 threshold across the depolarizing family")
print("-" * 60)
grid = np.linspace(0.001, 0.333, 200)
curve = threshold_curve(grid, ("sq1", "sq2"))
best = curve.max_threshold()
print(f"maximum: mu_t = {best[1]:.6f} at p_i = {best[0]:.4f}")

path = HERE / "threshold_curve_sq1_sq2.csv"
lines = ["p,mu_t"]
for p, mu in zip(curve.p_values, curve.mu_values):
    lines.append(f"{p:.12g},{'' if mu is None else f'{mu:.12g}'}")
path.write_text("\n".join(lines) + "\n", encoding="utf-8")
print(f"wrote {path.name}")

print()
print("samples along the curve (note the dip to zero at p_i = 1/4):")
for target in (0.02, 0.083, 0.15, 0.22, 0.249, 0.251, 0.29, 0.333):
    i = int(np.argmin(np.abs(grid - target)))
    mu = curve.mu_values[i]
    text = "gap (no crossing)" if mu is None else f"{mu:.4f}"
    print(f"  p_i = {curve.p_values[i]:.4f}: mu_t = {text}")
