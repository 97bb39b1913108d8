"""Walkthrough: error distributions, the memory kernel, and joint noise weights.

A single channel use applies I, sigma_x, sigma_y or sigma_z with
probabilities (p0, px, py, pz). With memory coefficient mu, consecutive uses
repeat the previous Pauli with probability mu and draw fresh with 1 - mu.
"""

import itertools

from memchan import (
    MemoryChannel,
    PRESET_NAMES,
    conditional_prob,
    noise_weight,
    preset_formula,
    preset_probs,
)

print("Preset channels")
print("-" * 60)
for name in PRESET_NAMES:
    probs = preset_probs(name, 0.3)
    print(f"{name:<16} {preset_formula(name):<28} at p=0.3 -> "
          f"({probs.p0:.3f}, {probs.px:.3f}, {probs.py:.3f}, {probs.pz:.3f})")

probs = preset_probs("depolarizing", 0.15)
print()
print("Markov kernel p(cur | prev) for depolarizing p=0.15, mu=0.5")
print("-" * 60)
labels = ("0", "x", "y", "z")
print("prev\\cur " + "".join(f"{c:>8}" for c in labels))
for prev in labels:
    row = [conditional_prob(probs, 0.5, prev, cur) for cur in labels]
    print(f"{prev:>8} " + "".join(f"{v:8.4f}" for v in row), "  sum =", f"{sum(row):.3f}")

print()
print("Joint weights over n correlated uses sum to 1")
print("-" * 60)
for uses in (2, 4):
    for mu in (0.0, 0.5, 1.0):
        channel = MemoryChannel(probs, mu, uses)
        total = sum(noise_weight(channel, word)
                    for word in itertools.product(range(4), repeat=uses))
        print(f"n={uses}, mu={mu}: sum of 4^{uses} weights = {total:.15f}")

channel = MemoryChannel(probs, 0.5, 2)
print()
print("A few individual weights (n=2, mu=0.5):")
for word in ((0, 0), (0, 1), (1, 1), (2, 3)):
    print(f"  word {word}: {noise_weight(channel, word):.6f}")
