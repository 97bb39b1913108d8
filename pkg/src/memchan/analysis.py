"""Verification oracle, Holevo quantity, memory thresholds, sweeps.

The brute-force path here never touches the closed-form spectra: it builds a
scheme's representative state, pushes its density matrix through the
explicit Kraus sum, and eigensolves. Agreement between that path and
``schemes.closed_form_spectrum`` is the central correctness check of the
package.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .channel import MemoryChannel, PauliProbs, apply_channel, preset_probs
from .linalg import entropy_bits, hermitian_spectrum
from .schemes import (
    SCHEME_KINDS,
    build_representative,
    closed_form_spectrum,
    get_scheme,
    normalized_information,
)

__all__ = [
    "BadEnsembleError",
    "DegenerateCurvesError",
    "BadKError",
    "ThresholdResult",
    "ThresholdCurve",
    "SweepTable",
    "OracleCase",
    "brute_force_spectrum",
    "oracle_gap",
    "run_oracle_trials",
    "holevo_chi",
    "memory_threshold",
    "threshold_curve",
    "sweep",
    "high_error_entropy",
    "sample_probs",
    "default_workers",
]

ENSEMBLE_SUM_TOL = 1e-9
CURVE_COINCIDE_TOL = 1e-12
VALUE_MATCH_TOL = 1e-9
SCAN_POINTS = 1024


class BadEnsembleError(ValueError):
    """Ensemble weights are negative or do not sum to 1."""


class DegenerateCurvesError(ValueError):
    """The two information curves coincide, so no crossing is defined."""


class BadKError(ValueError):
    """k outside 1..a**b in the high-error entropy formula."""


def brute_force_spectrum(kind: str, probs: PauliProbs, mu: float) -> np.ndarray:
    """Channel-output spectrum of a scheme's representative, by direct evolution.

    Length is the full register dimension (4, 16 or 256), including exact
    zeros outside the reachable subspace.
    """
    scheme = get_scheme(kind)
    sset = build_representative(kind)
    rho = np.outer(sset.representative, sset.representative.conj())
    channel = MemoryChannel(probs, mu, scheme.channel_uses)
    return hermitian_spectrum(apply_channel(channel, rho, sset.touched_qubits))


def oracle_gap(kind: str, probs: PauliProbs, mu: float) -> float:
    """Max elementwise gap between brute-force and closed-form spectra.

    The closed form is zero-padded up to the brute-force length before the
    sorted comparison.
    """
    brute = brute_force_spectrum(kind, probs, mu)
    closed = closed_form_spectrum(kind, probs, mu)
    if closed.size > brute.size:
        raise ValueError(f"closed-form spectrum longer than channel output for {kind}")
    padded = np.zeros_like(brute)
    padded[: closed.size] = closed
    return float(np.max(np.abs(brute - padded)))


def sample_probs(rng: np.random.Generator) -> PauliProbs:
    """Draw an error distribution uniformly from the probability 3-simplex."""
    return PauliProbs(*rng.dirichlet((1.0, 1.0, 1.0, 1.0)))


@dataclass(frozen=True)
class OracleCase:
    kind: str
    probs: PauliProbs
    mu: float
    gap: float


def default_workers() -> int:
    """Worker cap: MEMCHAN_THREADS when set, else min(4, cpu count)."""
    env = os.environ.get("MEMCHAN_THREADS")
    if env is not None:
        n = int(env)
        if n < 1:
            raise ValueError(f"MEMCHAN_THREADS must be >= 1, got {env}")
        return n
    return min(4, os.cpu_count() or 1)


def run_oracle_trials(
    trials: int,
    seed: int,
    kinds=SCHEME_KINDS,
    max_workers: Optional[int] = None,
) -> OracleCase:
    """Compare brute-force and closed-form spectra on random draws per scheme.

    Returns the worst case over all schemes and trials. Each scheme draws
    from its own seeded substream, so the result does not depend on the
    worker count.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    kinds = tuple(kinds)
    workers = default_workers() if max_workers is None else max_workers

    def worst_for(item):
        index, kind = item
        rng = np.random.default_rng([int(seed), index])
        worst = None
        for _ in range(trials):
            probs = sample_probs(rng)
            mu = float(rng.uniform())
            gap = oracle_gap(kind, probs, mu)
            if worst is None or gap > worst.gap:
                worst = OracleCase(kind, probs, mu, gap)
        return worst

    items = list(enumerate(kinds))
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(worst_for, items))
    else:
        results = [worst_for(item) for item in items]
    return max(results, key=lambda case: case.gap)


def holevo_chi(ensemble, channel: MemoryChannel, touched) -> float:
    """Holevo quantity S(eps(avg)) - sum_i w_i S(eps(rho_i)) of an ensemble.

    ``ensemble`` is a sequence of (weight, density matrix) pairs with
    nonnegative weights summing to 1.
    """
    pairs = [(float(w), np.asarray(rho, dtype=complex)) for w, rho in ensemble]
    if not pairs:
        raise BadEnsembleError("empty ensemble")
    weights = [w for w, _ in pairs]
    if min(weights) < 0.0:
        raise BadEnsembleError(f"negative weight {min(weights)}")
    total = sum(weights)
    if abs(total - 1.0) > ENSEMBLE_SUM_TOL:
        raise BadEnsembleError(f"weights sum to {total}, not 1")
    average = sum(w * rho for w, rho in pairs)
    mixed_entropy = entropy_bits(hermitian_spectrum(apply_channel(channel, average, touched)))
    member_entropy = sum(
        w * entropy_bits(hermitian_spectrum(apply_channel(channel, rho, touched)))
        for w, rho in pairs
        if w > 0.0
    )
    return mixed_entropy - member_entropy


@dataclass(frozen=True)
class ThresholdResult:
    """Crossing point of two schemes' bits-per-use curves, if one exists.

    ``dominant`` names the scheme whose curve stays on top across the scan
    when there is no crossing; ``bracket_width`` is the final bisection
    bracket (nan when no bracket was found).
    """

    mu_t: Optional[float]
    kind_a: str
    kind_b: str
    bracket_width: float
    dominant: Optional[str] = None


def memory_threshold(
    kind_a: str,
    kind_b: str,
    probs: PauliProbs,
    tol: float = 1e-6,
) -> ThresholdResult:
    """Locate mu in (0, 1) where the two schemes' bits-per-use curves cross.

    Scans 1024 interior points for a sign change of the difference, then
    bisects; bisection continues until the bracket is below ``tol`` and the
    curve difference at the midpoint is below 1e-9. Returns mu_t = None when
    the difference never changes sign on the scan, and raises
    DegenerateCurvesError when the curves coincide within 1e-12 everywhere.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    get_scheme(kind_a)
    get_scheme(kind_b)

    def diff(mu: float) -> float:
        return normalized_information(kind_a, probs, mu) - normalized_information(
            kind_b, probs, mu
        )

    grid = np.linspace(0.0, 1.0, SCAN_POINTS + 2)[1:-1]
    values = np.array([diff(m) for m in grid])
    if float(np.max(np.abs(values))) <= CURVE_COINCIDE_TOL:
        raise DegenerateCurvesError(
            f"{kind_a} and {kind_b} curves coincide within {CURVE_COINCIDE_TOL}"
        )

    exact = np.flatnonzero(values == 0.0)
    if exact.size:
        mu_t = float(grid[exact[0]])
        return ThresholdResult(mu_t, kind_a, kind_b, 0.0)

    signs = np.sign(values)
    changes = np.flatnonzero(signs[:-1] * signs[1:] < 0)
    if changes.size == 0:
        dominant = kind_a if values[0] > 0 else kind_b
        return ThresholdResult(None, kind_a, kind_b, float("nan"), dominant)

    lo = float(grid[changes[0]])
    hi = float(grid[changes[0] + 1])
    f_lo = diff(lo)
    mid = 0.5 * (lo + hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f_mid = diff(mid)
        if f_mid == 0.0:
            lo = hi = mid
            break
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        if hi - lo <= tol and abs(f_mid) <= VALUE_MATCH_TOL:
            break
    return ThresholdResult(mid, kind_a, kind_b, hi - lo)


@dataclass(frozen=True)
class ThresholdCurve:
    """Threshold as a function of the per-Pauli error probability.

    ``mu_values`` holds None where no crossing exists or the curves
    degenerate (recorded as gaps).
    """

    pair: tuple[str, str]
    p_values: tuple[float, ...]
    mu_values: tuple[Optional[float], ...]

    def max_threshold(self) -> Optional[tuple[float, float]]:
        """(p, mu_t) of the largest threshold on the grid, or None if all gaps."""
        best = None
        for p, mu in zip(self.p_values, self.mu_values):
            if mu is not None and (best is None or mu > best[1]):
                best = (p, mu)
        return best


def threshold_curve(
    p_grid,
    pair: tuple[str, str],
    family: str = "depolarizing",
    tol: float = 1e-6,
) -> ThresholdCurve:
    """Memory threshold across the depolarizing family.

    Grid values are the per-Pauli error probability p_i = px = py = pz (the
    preset strength is 3 p_i), so they must stay below 1/3. Points with no
    crossing, or where the curves degenerate, become gaps.
    """
    if family != "depolarizing":
        raise ValueError(f"only the depolarizing family is supported, got {family!r}")
    kind_a, kind_b = pair
    p_values = [float(p) for p in p_grid]
    mu_values: list[Optional[float]] = []
    for p_i in p_values:
        probs = preset_probs("depolarizing", 3.0 * p_i)
        try:
            result = memory_threshold(kind_a, kind_b, probs, tol=tol)
        except DegenerateCurvesError:
            mu_values.append(None)
        else:
            mu_values.append(result.mu_t)
    return ThresholdCurve((kind_a, kind_b), tuple(p_values), tuple(mu_values))


@dataclass(frozen=True)
class SweepTable:
    """Bits-per-use of several schemes on a mu grid (the data behind the figures)."""

    mu_grid: np.ndarray
    kinds: tuple[str, ...]
    values: np.ndarray  # shape (len(mu_grid), len(kinds))

    def column(self, kind: str) -> np.ndarray:
        return self.values[:, self.kinds.index(kind)].copy()


def sweep(probs: PauliProbs, kinds, mu_grid) -> SweepTable:
    """Evaluate normalized information for each scheme at each mu."""
    kinds = tuple(kinds)
    grid = np.asarray(mu_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("mu_grid must be a non-empty 1-d sequence")
    if grid.min() < 0.0 or grid.max() > 1.0:
        raise ValueError("mu_grid values must lie in [0, 1]")
    if np.any(np.diff(grid) < 0.0):
        raise ValueError("mu_grid must be sorted ascending")
    for kind in kinds:
        get_scheme(kind)
    values = np.empty((grid.size, len(kinds)), dtype=float)
    for j, kind in enumerate(kinds):
        values[:, j] = [normalized_information(kind, probs, float(mu)) for mu in grid]
    return SweepTable(grid.copy(), kinds, values)


def high_error_entropy(a: int, b: int, k: int, mu: float) -> float:
    """Entropy (bits) of the high-noise output model with k surviving levels.

    The spectrum has k entries (1-mu) a**-b + mu/k and a**b - k entries
    (1-mu) a**-b; minimizing over k (the minimum sits at k = 1) recovers the
    best-case pure correlated component.
    """
    a = int(a)
    b = int(b)
    if a < 2 or b < 1:
        raise ValueError(f"need a >= 2 and b >= 1, got a={a}, b={b}")
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu = {mu} outside [0, 1]")
    levels = a**b
    if not 1 <= int(k) <= levels:
        raise BadKError(f"k must lie in 1..{levels}, got {k}")
    k = int(k)
    base = (1.0 - mu) / levels
    raised = base + mu / k
    spectrum = np.concatenate(
        [np.full(k, raised), np.full(levels - k, base)]
    )
    return entropy_bits(spectrum)
