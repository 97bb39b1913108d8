"""Pauli channels with partial memory across consecutive uses.

A single use applies one of {I, sigma_x, sigma_y, sigma_z} with probabilities
(p0, px, py, pz). Across n consecutive uses the error indices are correlated:
with probability mu every use suffers the identical Pauli, with probability
1 - mu the later uses draw independently. Joint weights therefore read

    w(i_1, ..., i_n) = p_{i_1} * ((1 - mu) * prod_{k>=2} p_{i_k}
                                  + mu * [all indices equal]),

which reduces to the two-use Markov kernel p_{i1} ((1-mu) p_{i2} + mu delta)
and to the block-correlated four-use form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .linalg import (
    HERMITIAN_TOL,
    TRACE_TOL,
    NotHermitianError,
    NotUnitTraceError,
    pauli,
    pauli_index,
    qubit_count,
    tensor_all,
)

__all__ = [
    "NotNormalizedError",
    "UnknownPresetError",
    "LengthMismatchError",
    "BadQubitListError",
    "PauliProbs",
    "MemoryChannel",
    "PRESET_NAMES",
    "preset_probs",
    "preset_formula",
    "conditional_prob",
    "noise_weight",
    "pauli_word_action",
    "pauli_word_matrix",
    "apply_channel",
]

PROB_SUM_TOL = 1e-9


class NotNormalizedError(ValueError):
    """The four Pauli probabilities do not sum to 1 within 1e-9."""


class UnknownPresetError(ValueError):
    """No preset channel with that name."""


class LengthMismatchError(ValueError):
    """The Pauli index tuple does not match the channel's number of uses."""


class BadQubitListError(ValueError):
    """The touched-qubit list is the wrong size, repeats, or leaves the register."""


@dataclass(frozen=True)
class PauliProbs:
    """Single-use error distribution over {identity, x, y, z}."""

    p0: float
    px: float
    py: float
    pz: float

    def __post_init__(self):
        vals = (self.p0, self.px, self.py, self.pz)
        for name, v in zip(("p0", "px", "py", "pz"), vals):
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} = {v} outside [0, 1]")
        total = sum(vals)
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise NotNormalizedError(f"probabilities sum to {total}, not 1")

    def __iter__(self):
        return iter((self.p0, self.px, self.py, self.pz))

    def as_array(self) -> np.ndarray:
        return np.array(tuple(self), dtype=float)


@dataclass(frozen=True)
class MemoryChannel:
    """A PauliProbs distribution with memory coefficient mu over n in {2, 4} uses."""

    probs: PauliProbs
    mu: float
    uses: int = 2

    def __post_init__(self):
        if not 0.0 <= self.mu <= 1.0:
            raise ValueError(f"mu = {self.mu} outside [0, 1]")
        if self.uses not in (2, 4):
            raise ValueError(f"uses must be 2 or 4, got {self.uses}")


# preset name -> (probs builder, human-readable formula)
_PRESETS = {
    "depolarizing": (
        lambda p: PauliProbs(1 - p, p / 3, p / 3, p / 3),
        "p0 = 1-p, px = py = pz = p/3",
    ),
    "bit-flip": (
        lambda p: PauliProbs(1 - p, p, 0.0, 0.0),
        "p0 = 1-p, px = p",
    ),
    "phase-flip": (
        lambda p: PauliProbs(1 - p, 0.0, 0.0, p),
        "p0 = 1-p, pz = p",
    ),
    "bit-phase-flip": (
        lambda p: PauliProbs(1 - p, 0.0, p, 0.0),
        "p0 = 1-p, py = p",
    ),
    "two-pauli": (
        lambda p: PauliProbs(1 - p, p / 2, p / 2, 0.0),
        "p0 = 1-p, px = py = p/2",
    ),
    "phase-damping": (
        lambda p: PauliProbs(1 - p / 2, 0.0, 0.0, p / 2),
        "p0 = 1-p/2, pz = p/2",
    ),
}

PRESET_NAMES = tuple(_PRESETS)


def preset_probs(name: str, p: float) -> PauliProbs:
    """Error distribution of a named preset channel at strength p in [0, 1]."""
    try:
        build, _ = _PRESETS[name]
    except KeyError:
        raise UnknownPresetError(
            f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}"
        ) from None
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"preset strength p = {p} outside [0, 1]")
    return build(float(p))


def preset_formula(name: str) -> str:
    try:
        return _PRESETS[name][1]
    except KeyError:
        raise UnknownPresetError(f"unknown preset {name!r}") from None


def conditional_prob(probs: PauliProbs, mu: float, prev, cur) -> float:
    """Markov kernel (1-mu) p_cur + mu [prev == cur] for consecutive uses."""
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu = {mu} outside [0, 1]")
    p = tuple(probs)
    i_prev = pauli_index(prev)
    i_cur = pauli_index(cur)
    return (1.0 - mu) * p[i_cur] + (mu if i_prev == i_cur else 0.0)


def noise_weight(channel: MemoryChannel, indices) -> float:
    """Joint probability of one Pauli index tuple across the channel's uses.

    The weights over all 4**uses tuples sum to 1.
    """
    idx = tuple(pauli_index(i) for i in indices)
    if len(idx) != channel.uses:
        raise LengthMismatchError(
            f"expected {channel.uses} indices, got {len(idx)}"
        )
    p = tuple(channel.probs)
    rest = 1.0
    for i in idx[1:]:
        rest *= p[i]
    same = 1.0 if all(i == idx[0] for i in idx) else 0.0
    return p[idx[0]] * ((1.0 - channel.mu) * rest + channel.mu * same)


def pauli_word_action(q: int, placed):
    """Permutation/phase form of a Pauli word on a q-qubit register.

    ``placed`` is an iterable of (position, pauli_index) pairs, positions
    1-based with qubit 1 the most significant bit. Returns (perm, phase) such
    that the word maps basis state |b> to phase[b] * |perm[b]>; perm is an
    involution (a bit-mask XOR).
    """
    dim = 1 << q
    b = np.arange(dim)
    phase = np.ones(dim, dtype=complex)
    mask = 0
    for pos, index in placed:
        idx = pauli_index(index)
        if not 1 <= pos <= q:
            raise ValueError(f"qubit position {pos} outside 1..{q}")
        shift = q - pos
        bit = (b >> shift) & 1
        if idx == 1:
            mask |= 1 << shift
        elif idx == 2:
            mask |= 1 << shift
            phase = phase * (1.0j * (1.0 - 2.0 * bit))
        elif idx == 3:
            phase = phase * (1.0 - 2.0 * bit)
    return b ^ mask, phase


def pauli_word_matrix(q: int, placed) -> np.ndarray:
    """Dense matrix of a Pauli word (identity on unlisted positions).

    Exponential in q; meant for cross-checks and demonstrations on small
    registers.
    """
    by_pos = {}
    for pos, index in placed:
        if pos in by_pos:
            raise ValueError(f"qubit position {pos} listed twice")
        by_pos[pos] = pauli_index(index)
    if by_pos and not all(1 <= pos <= q for pos in by_pos):
        raise ValueError(f"positions must lie in 1..{q}")
    return tensor_all(pauli(by_pos.get(pos, 0)) for pos in range(1, q + 1))


def _validate_density(rho: np.ndarray) -> None:
    asym = float(np.max(np.abs(rho - rho.conj().T)))
    if asym > HERMITIAN_TOL:
        raise NotHermitianError(f"input max |rho - rho^dagger| = {asym:.3e}")
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > TRACE_TOL:
        raise NotUnitTraceError(f"input trace = {trace} differs from 1")


def apply_channel(channel: MemoryChannel, rho, touched) -> np.ndarray:
    """Send the qubits listed in ``touched`` through the correlated channel.

    Explicitly sums the 4**uses Pauli words: each word contributes
    noise_weight(word) * W rho W^dagger, with W acting on the touched
    positions (use k hits touched[k]) and as identity elsewhere. Words act as
    signed permutations of the computational basis; W rho W^dagger at entry
    (a, b) pulls rho[perm[a], perm[b]] times the word's phase pattern, the
    permutation being an involution. Words whose x/y placements agree share
    one permutation, so their weighted phase patterns accumulate through a
    single thin matrix product before the per-mask gather.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"expected a square density matrix, got shape {rho.shape}")
    q = qubit_count(rho.shape[0])
    positions = tuple(int(t) for t in touched)
    if len(positions) != channel.uses:
        raise BadQubitListError(
            f"need {channel.uses} touched qubits, got {len(positions)}"
        )
    if len(set(positions)) != len(positions):
        raise BadQubitListError(f"touched positions {positions} repeat a qubit")
    if not all(1 <= pos <= q for pos in positions):
        raise BadQubitListError(f"touched positions {positions} outside 1..{q}")
    _validate_density(rho)

    groups: dict[tuple[int, ...], list] = {}
    for word in itertools.product(range(4), repeat=channel.uses):
        w = noise_weight(channel, word)
        if w == 0.0:
            continue
        perm, phase = pauli_word_action(q, zip(positions, word))
        flips = tuple(1 if idx in (1, 2) else 0 for idx in word)
        groups.setdefault(flips, []).append((w, perm, phase))

    out = np.zeros_like(rho)
    for members in groups.values():
        perm = members[0][1]
        weights = np.array([w for w, _, _ in members])
        patterns = np.array([phase[perm] for _, _, phase in members])
        # sum_w w * pp pp^dagger for this mask's words
        phase_mat = (patterns * weights[:, None]).T @ patterns.conj()
        out += phase_mat * rho[np.ix_(perm, perm)]
    return out
