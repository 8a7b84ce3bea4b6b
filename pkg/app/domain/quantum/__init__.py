"""量子核心：稠密线性代数与量子态原语"""
from .operators import (
    CZ,
    HADAMARD,
    I2,
    KET_0,
    KET_1,
    KET_MINUS,
    KET_PLUS,
    KET_PLUS_Y,
    PAULIS,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    SIGMA_ZX,
    embed_operator,
    equatorial_ket,
    is_unitary,
    kron_all,
    projector,
    rz,
)
from .state import (
    MAX_QUBITS,
    MeasurementResult,
    QuantumState,
    apply_gate,
    apply_kraus,
    bloch_coordinates,
    fidelity,
    outcome_probabilities,
    partial_trace,
    projective_measure,
    tensor,
)

__all__ = [
    "CZ",
    "HADAMARD",
    "I2",
    "KET_0",
    "KET_1",
    "KET_MINUS",
    "KET_PLUS",
    "KET_PLUS_Y",
    "PAULIS",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "SIGMA_ZX",
    "embed_operator",
    "equatorial_ket",
    "is_unitary",
    "kron_all",
    "projector",
    "rz",
    "MAX_QUBITS",
    "MeasurementResult",
    "QuantumState",
    "apply_gate",
    "apply_kraus",
    "bloch_coordinates",
    "fidelity",
    "outcome_probabilities",
    "partial_trace",
    "projective_measure",
    "tensor",
]
