"""Classical information over Pauli channels with Markov-correlated noise.

The package models n-use Pauli channels whose error indices are correlated
with memory coefficient mu, evaluates the information carried by seven coding
schemes (product bases, maximally entangled pairs, entanglement-assisted and
two semi-quantum dense codes) from closed-form output spectra, and verifies
every spectrum against a brute-force Kraus evolution of the actual states.
"""

__version__ = "0.1.0"

from .analysis import (
    BadEnsembleError,
    BadKError,
    DegenerateCurvesError,
    OracleCase,
    SweepTable,
    ThresholdCurve,
    ThresholdResult,
    brute_force_spectrum,
    high_error_entropy,
    holevo_chi,
    memory_threshold,
    oracle_gap,
    run_oracle_trials,
    sample_probs,
    sweep,
    threshold_curve,
)
from .channel import (
    BadQubitListError,
    LengthMismatchError,
    MemoryChannel,
    NotNormalizedError,
    PauliProbs,
    PRESET_NAMES,
    UnknownPresetError,
    apply_channel,
    conditional_prob,
    noise_weight,
    pauli_word_action,
    pauli_word_matrix,
    preset_formula,
    preset_probs,
)
from .linalg import (
    NotHermitianError,
    NotUnitTraceError,
    as_spectrum,
    entropy_bits,
    hermitian_spectrum,
    partial_trace,
    pauli,
    tensor,
    tensor_all,
)
from .schemes import (
    BELL_LABELS,
    SCHEME_KINDS,
    CodingScheme,
    SchemeStateSet,
    bell_state,
    build_representative,
    closed_form_spectrum,
    closed_form_values,
    get_scheme,
    mutual_information_total,
    normalized_information,
)

__all__ = [
    "__version__",
    # linalg
    "NotHermitianError", "NotUnitTraceError", "as_spectrum", "entropy_bits",
    "hermitian_spectrum", "partial_trace", "pauli", "tensor", "tensor_all",
    # channel
    "BadQubitListError", "LengthMismatchError", "MemoryChannel",
    "NotNormalizedError", "PauliProbs", "PRESET_NAMES", "UnknownPresetError",
    "apply_channel", "conditional_prob", "noise_weight", "pauli_word_action",
    "pauli_word_matrix", "preset_formula", "preset_probs",
    # schemes
    "BELL_LABELS", "SCHEME_KINDS", "CodingScheme", "SchemeStateSet",
    "bell_state", "build_representative", "closed_form_spectrum",
    "closed_form_values", "get_scheme", "mutual_information_total",
    "normalized_information",
    # analysis
    "BadEnsembleError", "BadKError", "DegenerateCurvesError", "OracleCase",
    "SweepTable", "ThresholdCurve", "ThresholdResult", "brute_force_spectrum",
    "high_error_entropy", "holevo_chi", "memory_threshold", "oracle_gap",
    "run_oracle_trials", "sample_probs", "sweep", "threshold_curve",
]
