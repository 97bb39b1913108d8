"""Coding schemes: input states, closed-form output spectra, mutual information.

Seven schemes are supported. The two-qubit product and maximally-entangled
codes send both qubits through two correlated channel uses; the
entanglement-assisted code ("at") shares two Bell pairs and sends one half of
each; the semi-quantum dense codes share a single entangled state and send
two ("sq1") or four ("sq2") qubits through consecutive uses.

Bell-state convention used throughout: psi_pm spans {|00>, |11>} and phi_pm
spans {|01>, |10>}.

Every scheme's codewords are related by local unitaries, so one
representative state determines the channel-output spectrum and hence the
mutual information.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import PauliProbs
from .linalg import as_spectrum, entropy_bits, tensor_all

__all__ = [
    "SCHEME_KINDS",
    "CodingScheme",
    "SchemeStateSet",
    "get_scheme",
    "bell_state",
    "BELL_LABELS",
    "build_representative",
    "closed_form_values",
    "closed_form_spectrum",
    "mutual_information_total",
    "normalized_information",
]


@dataclass(frozen=True)
class CodingScheme:
    kind: str
    channel_uses: int
    payload_bits: int


@dataclass(frozen=True)
class SchemeStateSet:
    """Representative codeword plus the register layout it lives on."""

    representative: np.ndarray
    qubit_count: int
    touched_qubits: tuple[int, ...]


_SCHEMES = {
    "product-x": CodingScheme("product-x", 2, 2),
    "product-y": CodingScheme("product-y", 2, 2),
    "product-z": CodingScheme("product-z", 2, 2),
    "bell": CodingScheme("bell", 2, 2),
    "at": CodingScheme("at", 2, 4),
    "sq1": CodingScheme("sq1", 2, 4),
    "sq2": CodingScheme("sq2", 4, 8),
}

SCHEME_KINDS = tuple(_SCHEMES)


def get_scheme(kind: str) -> CodingScheme:
    try:
        return _SCHEMES[kind]
    except KeyError:
        raise ValueError(
            f"unknown scheme {kind!r}; choose from {', '.join(SCHEME_KINDS)}"
        ) from None


_SQRT_HALF = np.sqrt(0.5)

_BELL = {
    "psi+": np.array([1.0, 0.0, 0.0, 1.0], dtype=complex) * _SQRT_HALF,
    "psi-": np.array([1.0, 0.0, 0.0, -1.0], dtype=complex) * _SQRT_HALF,
    "phi+": np.array([0.0, 1.0, 1.0, 0.0], dtype=complex) * _SQRT_HALF,
    "phi-": np.array([0.0, 1.0, -1.0, 0.0], dtype=complex) * _SQRT_HALF,
}

BELL_LABELS = tuple(_BELL)


def bell_state(label: str) -> np.ndarray:
    """One of the four Bell states ('psi+', 'psi-', 'phi+', 'phi-')."""
    try:
        return _BELL[label].copy()
    except KeyError:
        raise ValueError(
            f"unknown Bell label {label!r}; choose from {BELL_LABELS}"
        ) from None


_KET0 = np.array([1.0, 0.0], dtype=complex)
_PLUS_X = np.array([1.0, 1.0], dtype=complex) * _SQRT_HALF
_PLUS_Y = np.array([1.0, 1.0j], dtype=complex) * _SQRT_HALF


def build_representative(kind: str) -> SchemeStateSet:
    """Representative codeword and touched-qubit layout for a scheme.

    Layouts (1-based, big-endian): the two-qubit schemes send qubits {1, 2};
    "at" holds Bell pairs on (1,2) and (3,4) and sends the first member of
    each, {1, 3}; "sq1" holds the sender's Bell pair on (1,2) — both sent —
    and the receiver's on (3,4); "sq2" holds four Bell pairs on
    (1,2)(3,4)(5,6)(7,8) and sends qubits {1, 2, 3, 4}.
    """
    get_scheme(kind)
    if kind == "product-z":
        psi = tensor_all([_KET0, _KET0])
        return SchemeStateSet(psi, 2, (1, 2))
    if kind == "product-x":
        psi = tensor_all([_PLUS_X, _PLUS_X])
        return SchemeStateSet(psi, 2, (1, 2))
    if kind == "product-y":
        psi = tensor_all([_PLUS_Y, _PLUS_Y])
        return SchemeStateSet(psi, 2, (1, 2))
    if kind == "bell":
        return SchemeStateSet(bell_state("psi+"), 2, (1, 2))
    if kind == "at":
        psi = tensor_all([_BELL["psi+"], _BELL["psi+"]])
        return SchemeStateSet(psi, 4, (1, 3))
    if kind == "sq1":
        psi = (
            tensor_all([_BELL["psi+"], _BELL["psi+"]])
            + tensor_all([_BELL["psi-"], _BELL["psi-"]])
        ) * _SQRT_HALF
        return SchemeStateSet(psi, 4, (1, 2))
    # sq2: equal superposition of d x d x d x d over the four Bell states
    psi = sum(
        tensor_all([_BELL[d]] * 4) for d in BELL_LABELS
    ) * 0.5
    return SchemeStateSet(psi, 8, (1, 2, 3, 4))


def _bell_values(p, mu):
    p0, px, py, pz = p
    return (
        (1 - mu) * (p0 * p0 + px * px + py * py + pz * pz) + mu,
        (1 - mu) * 2 * (p0 * pz + px * py),
        (1 - mu) * 2 * (p0 * px + py * pz),
        (1 - mu) * 2 * (p0 * py + px * pz),
    )


def _product_values(p, mu):
    p0, px, py, pz = p
    keep = p0 + pz  # identity-acting weight in this basis
    flip = px + py
    cross = (1 - mu) * keep * flip
    return (
        (1 - mu) * keep * keep + mu * keep,
        (1 - mu) * flip * flip + mu * flip,
        cross,
        cross,
    )


def _at_values(p, mu):
    vals = [(1 - mu) * q * q + mu * q for q in p]
    for i in range(4):
        for j in range(i + 1, 4):
            vals += [(1 - mu) * p[i] * p[j]] * 2
    return tuple(vals)


def _sq1_values(p, mu):
    p0, px, py, pz = p
    co = (1 - mu) * (p0 * px + py * pz)
    cr = (1 - mu) * (p0 * py + px * pz)
    return (
        (1 - mu) * (p0 * p0 + pz * pz) + mu * (p0 + pz),
        (1 - mu) * (px * px + py * py) + mu * (px + py),
        (1 - mu) * 2 * p0 * pz,
        (1 - mu) * 2 * px * py,
        co, co,
        cr, cr,
    )


def _sq2_values(p, mu):
    p0, px, py, pz = p
    s = 1 - mu
    families = (
        (s * (p0**4 + pz**4 + px**4 + py**4) + mu, 1),
        (s * 2 * ((p0 * pz) ** 2 + (px * py) ** 2), 3),
        (s * 2 * ((p0 * px) ** 2 + (py * pz) ** 2), 3),
        (s * 2 * ((p0 * py) ** 2 + (px * pz) ** 2), 3),
        (s * (p0 * pz * (p0**2 + pz**2) + px * py * (px**2 + py**2)), 4),
        (s * (p0 * pz * (px**2 + py**2) + px * py * (p0**2 + pz**2)), 12),
        (s * (p0 * px * (p0**2 + px**2) + py * pz * (py**2 + pz**2)), 4),
        (s * (p0 * px * (py**2 + pz**2) + py * pz * (p0**2 + px**2)), 8),
        (s * (p0 * py * (px**2 + pz**2) + px * pz * (p0**2 + py**2)), 4),
        (s * (p0 * py * (p0**2 + py**2) + px * pz * (px**2 + pz**2)), 4),
        (s * 4 * p0 * px * py * pz, 6),
        (s * (p0 * pz + px * py) * (p0 * px + py * pz), 8),
        (s * (p0 * pz + px * py) * (p0 * py + px * pz), 4),
    )
    out = []
    for value, mult in families:
        out.extend([value] * mult)
    return tuple(out)


def _swapped(probs, a: str, b: str):
    named = dict(zip(("p0", "px", "py", "pz"), tuple(probs)))
    named[a], named[b] = named[b], named[a]
    return (named["p0"], named["px"], named["py"], named["pz"])


def closed_form_values(kind: str, probs: PauliProbs, mu: float):
    """Unsorted closed-form eigenvalues of the scheme's channel output.

    Multiplicities are expanded and the ordering is fixed, so the entries are
    affine functions of mu. Rotated product bases reuse the z-basis formulas
    with px<->pz (x basis) or py<->pz (y basis) interchanged.
    """
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu = {mu} outside [0, 1]")
    get_scheme(kind)
    p = tuple(probs)
    if kind == "bell":
        return _bell_values(p, mu)
    if kind == "product-z":
        return _product_values(p, mu)
    if kind == "product-x":
        return _product_values(_swapped(p, "px", "pz"), mu)
    if kind == "product-y":
        return _product_values(_swapped(p, "py", "pz"), mu)
    if kind == "at":
        return _at_values(p, mu)
    if kind == "sq1":
        return _sq1_values(p, mu)
    return _sq2_values(p, mu)


def closed_form_spectrum(kind: str, probs: PauliProbs, mu: float) -> np.ndarray:
    """Closed-form output spectrum, clamped and sorted descending.

    Lengths: 4 (product and bell), 16 (at), 8 (sq1), 64 (sq2). The sq1/sq2
    lists cover only the nonzero part of the output space; the brute-force
    channel image carries 8 and 192 additional exact zeros respectively.
    """
    return as_spectrum(closed_form_values(kind, probs, mu))


def mutual_information_total(kind: str, probs: PauliProbs, mu: float) -> float:
    """Accessible bits over all channel uses: payload - output entropy."""
    scheme = get_scheme(kind)
    return scheme.payload_bits - entropy_bits(closed_form_spectrum(kind, probs, mu))


def normalized_information(kind: str, probs: PauliProbs, mu: float) -> float:
    """Bits per channel use; at most 2 (dense-coding ceiling)."""
    scheme = get_scheme(kind)
    return mutual_information_total(kind, probs, mu) / scheme.channel_uses
