"""双轨编码 {|0_E> := |01>, |1_E> := -|10>}

-|10> 的符号放在编码映射里，测量基 B(α) 保持原样。
"""
from typing import Tuple

import numpy as np

from ..exceptions import InvalidStateError, LatticeError
from ..quantum.operators import kron_all
from ..quantum.state import QuantumState
from .models import DUAL_RAIL, LatticeSpec

DUAL_RAIL_ZERO = np.array([0, 1, 0, 0], dtype=complex)
DUAL_RAIL_ONE = np.array([0, 0, -1, 0], dtype=complex)

# 列为 |0_E>, |1_E> 的 4×2 等距映射
DUAL_RAIL_ISOMETRY = np.stack([DUAL_RAIL_ZERO, DUAL_RAIL_ONE], axis=1)

LEAKAGE_FLOOR = 1e-12


def encode_pair(mu: complex, nu: complex) -> np.ndarray:
    """μ|0_E> + ν|1_E> = μ|01> - ν|10>"""
    return mu * DUAL_RAIL_ZERO + nu * DUAL_RAIL_ONE


def decode_pair(pair_state: QuantumState) -> Tuple[QuantumState, float]:
    """
    把一个物理比特对投影回逻辑比特。

    Returns:
        (逻辑密度矩阵, 泄漏概率)；逻辑态已在双轨子空间内重新归一化
    """
    if pair_state.num_qubits != 2:
        raise InvalidStateError("dual-rail decoding needs a two-qubit state")
    rho = pair_state.density_matrix()
    logical = DUAL_RAIL_ISOMETRY.conj().T @ rho @ DUAL_RAIL_ISOMETRY
    weight = float(np.trace(logical).real)
    if weight < LEAKAGE_FLOOR:
        raise InvalidStateError("pair state has no support on the dual-rail subspace")
    logical = (logical + logical.conj().T) / (2 * weight)
    return QuantumState(logical), max(0.0, 1.0 - weight)


def _register_isometry(lattice: LatticeSpec) -> np.ndarray:
    if lattice.encoding != DUAL_RAIL:
        raise LatticeError("register decoding is only defined for dual-rail lattices")
    for a in lattice.effective_qubits:
        if lattice.physical_map[a] != (2 * a, 2 * a + 1):
            raise LatticeError("register decoding expects the canonical pair layout")
    return kron_all([DUAL_RAIL_ISOMETRY] * len(lattice.effective_qubits))


def encode_register(logical: QuantumState, lattice: LatticeSpec) -> QuantumState:
    """逻辑多比特态 -> 物理态（每个有效比特一对物理比特）"""
    isometry = _register_isometry(lattice)
    if logical.is_pure:
        return QuantumState(isometry @ logical.data)
    return QuantumState(isometry @ logical.data @ isometry.conj().T)


def decode_register(state: QuantumState, lattice: LatticeSpec) -> QuantumState:
    """物理态 -> 逻辑多比特态；要求态完全在双轨子空间内"""
    isometry = _register_isometry(lattice)
    if state.is_pure:
        logical = isometry.conj().T @ state.data
        weight = float(np.vdot(logical, logical).real)
    else:
        logical = isometry.conj().T @ state.data @ isometry
        weight = float(np.trace(logical).real)
    if abs(weight - 1.0) > 1e-10:
        raise InvalidStateError(f"state leaks outside the dual-rail code space (weight {weight:.3e})")
    return QuantumState(logical)
