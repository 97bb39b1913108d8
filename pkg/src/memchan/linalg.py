"""Dense complex linear algebra for small qubit registers.

Everything operates on plain numpy arrays: state vectors of length 2**q and
square matrices of shape (2**q, 2**q), for registers of up to 8 qubits
(dimension 256). Qubit positions are 1-based and big-endian: tensor factor 1
is the most significant index, so ``tensor(a, b)`` puts ``a`` on the
high-order bits.
"""

from __future__ import annotations

from functools import reduce

import numpy as np

__all__ = [
    "NotHermitianError",
    "NotUnitTraceError",
    "PAULI_LABELS",
    "pauli",
    "tensor",
    "tensor_all",
    "dagger",
    "as_spectrum",
    "hermitian_spectrum",
    "entropy_bits",
    "partial_trace",
]

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
SPECTRUM_SUM_TOL = 1e-10
ZERO_CLAMP = 1e-12


class NotHermitianError(ValueError):
    """The matrix differs from its conjugate transpose beyond tolerance."""


class NotUnitTraceError(ValueError):
    """The matrix trace differs from 1 beyond tolerance."""


PAULI_LABELS = ("0", "x", "y", "z")

_PAULI = (
    np.array([[1.0, 0.0], [0.0, 1.0]], dtype=complex),
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
)


def pauli_index(index) -> int:
    """Normalize a Pauli designator (0..3 or '0'/'x'/'y'/'z') to 0..3."""
    if isinstance(index, str):
        label = index.lower()
        if label in PAULI_LABELS:
            return PAULI_LABELS.index(label)
        raise ValueError(f"unknown Pauli label {index!r}; expected one of {PAULI_LABELS}")
    idx = int(index)
    if idx not in (0, 1, 2, 3):
        raise ValueError(f"Pauli index must be in 0..3, got {index!r}")
    return idx


def pauli(index) -> np.ndarray:
    """Return the 2x2 identity (index 0) or the Pauli x/y/z matrix.

    Accepts integer indices 0..3 or the labels '0', 'x', 'y', 'z'.
    """
    return _PAULI[pauli_index(index)].copy()


def tensor(a, b) -> np.ndarray:
    """Kronecker product of two vectors or two matrices (factor ``a`` first)."""
    return np.kron(np.asarray(a), np.asarray(b))


def tensor_all(factors) -> np.ndarray:
    """Left-to-right Kronecker product of a sequence of vectors or matrices."""
    mats = list(factors)
    if not mats:
        raise ValueError("tensor_all needs at least one factor")
    return reduce(tensor, mats)


def dagger(m) -> np.ndarray:
    return np.asarray(m).conj().T


def qubit_count(dim: int) -> int:
    """Number of qubits for a dimension that must be a power of two."""
    q = int(dim).bit_length() - 1
    if dim <= 0 or (1 << q) != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return q


def as_spectrum(values) -> np.ndarray:
    """Validate eigenvalues and return them sorted in descending order.

    Values within 1e-12 of zero are snapped to exactly 0 (guards the entropy
    against log of a negative); anything below -1e-12 is rejected. The total
    must equal 1 within 1e-10.
    """
    v = np.asarray(values, dtype=float).ravel()
    if v.size == 0:
        raise ValueError("empty spectrum")
    if float(v.min()) < -ZERO_CLAMP:
        raise ValueError(f"eigenvalue {v.min()} below the -1e-12 clamp window")
    total = float(v.sum())
    if abs(total - 1.0) > SPECTRUM_SUM_TOL:
        raise ValueError(f"spectrum sums to {total}, not 1")
    v = np.where(np.abs(v) <= ZERO_CLAMP, 0.0, v)
    return np.sort(v)[::-1].copy()


def hermitian_spectrum(m) -> np.ndarray:
    """Eigenvalues of a Hermitian unit-trace matrix, clamped and sorted descending.

    Raises NotHermitianError or NotUnitTraceError when the input fails the
    1e-10 symmetry/trace checks.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    asym = float(np.max(np.abs(m - m.conj().T)))
    if asym > HERMITIAN_TOL:
        raise NotHermitianError(f"max |m - m^dagger| = {asym:.3e} exceeds {HERMITIAN_TOL}")
    trace = complex(np.trace(m))
    if abs(trace - 1.0) > TRACE_TOL:
        raise NotUnitTraceError(f"trace = {trace} differs from 1 beyond {TRACE_TOL}")
    return as_spectrum(np.linalg.eigvalsh(m))


def entropy_bits(spectrum) -> float:
    """Shannon entropy -sum(v * log2 v) in bits, with the 0*log(0) = 0 convention."""
    v = np.asarray(spectrum, dtype=float).ravel()
    pos = v[v > 0.0]
    if pos.size == 0:
        return 0.0
    return float(-(pos * np.log2(pos)).sum())


def partial_trace(m, traced) -> np.ndarray:
    """Trace out the given 1-based qubit positions of a square matrix.

    Returns the reduced matrix on the remaining qubits, preserving their
    relative order.
    """
    m = np.asarray(m, dtype=complex)
    q = qubit_count(m.shape[0])
    requested = [int(p) for p in traced]
    positions = sorted(set(requested), reverse=True)
    if len(positions) != len(requested):
        raise ValueError("traced positions must be distinct")
    if positions and (positions[0] > q or positions[-1] < 1):
        raise ValueError(f"traced positions must lie in 1..{q}")
    if len(positions) == q:
        return np.atleast_2d(np.trace(m)).astype(complex)
    t = m.reshape((2,) * (2 * q))
    remaining = q
    # descending order keeps lower positions' axis numbers stable
    for pos in positions:
        t = np.trace(t, axis1=pos - 1, axis2=remaining + pos - 1)
        remaining -= 1
    dim = 1 << remaining
    return t.reshape(dim, dim)
