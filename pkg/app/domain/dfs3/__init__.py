"""三比特 DFS 编解码"""
from .codec import (
    DECODE_ANGLES,
    ENCODE_ANGLES,
    CircuitAngles,
    Dfs3Decoding,
    code_space_projector,
    collective_commutator,
    decode3,
    decode_all_branches,
    decoder_unitary,
    dfs3_codewords,
    encode3,
    encoder_unitary,
    gauge_partners,
    logical_span_projector,
    single_qubit_control,
    verify_collective_invariance,
    verify_unitary_invariance,
)

__all__ = [
    "DECODE_ANGLES",
    "ENCODE_ANGLES",
    "CircuitAngles",
    "Dfs3Decoding",
    "code_space_projector",
    "collective_commutator",
    "decode3",
    "decode_all_branches",
    "decoder_unitary",
    "dfs3_codewords",
    "encode3",
    "encoder_unitary",
    "gauge_partners",
    "logical_span_projector",
    "single_qubit_control",
    "verify_collective_invariance",
    "verify_unitary_invariance",
]
