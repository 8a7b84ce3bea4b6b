"""簇态制备与稳定子校验"""
from .builder import (
    apply_top_layer_entanglers,
    build_encoded_cluster,
    build_singlet_column,
    build_standard_cluster,
    minus_minus_register,
)
from .encoding import (
    DUAL_RAIL_ISOMETRY,
    DUAL_RAIL_ONE,
    DUAL_RAIL_ZERO,
    decode_pair,
    decode_register,
    encode_pair,
    encode_register,
)
from .models import (
    DFS3,
    DUAL_RAIL,
    STANDARD,
    EigenvalueSet,
    LatticeSpec,
    StabilizerOperator,
)
from .stabilizers import apply_stabilizer, stabilizer, stabilizer_residual, verify_stabilizers

__all__ = [
    "apply_top_layer_entanglers",
    "build_encoded_cluster",
    "build_singlet_column",
    "build_standard_cluster",
    "minus_minus_register",
    "DUAL_RAIL_ISOMETRY",
    "DUAL_RAIL_ONE",
    "DUAL_RAIL_ZERO",
    "decode_pair",
    "decode_register",
    "encode_pair",
    "encode_register",
    "DFS3",
    "DUAL_RAIL",
    "STANDARD",
    "EigenvalueSet",
    "LatticeSpec",
    "StabilizerOperator",
    "apply_stabilizer",
    "stabilizer",
    "stabilizer_residual",
    "verify_stabilizers",
]
