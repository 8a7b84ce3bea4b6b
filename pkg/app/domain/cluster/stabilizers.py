"""关联算符 G^(a') 与本征方程校验

双轨编码下：
    X_{a'} = (σ_z σ_x)_{a'_1} ⊗ (σ_z σ_x)_{a'_2}
    Z_{c'} = σ_{z,c'_1} ⊗ 1_{c'_2}
标准编码下就是通常的 X_a ⊗ Z_{nghb}。
"""
import numpy as np
from loguru import logger

from ..exceptions import DimensionMismatchError, LatticeError
from ..quantum.operators import SIGMA_X, SIGMA_Z, SIGMA_ZX
from ..quantum.state import QuantumState, apply_gate
from .models import DUAL_RAIL, STANDARD, EigenvalueSet, LatticeSpec, StabilizerOperator


def stabilizer(lattice: LatticeSpec, effective_qubit: int) -> StabilizerOperator:
    block = lattice.block(effective_qubit)
    if lattice.encoding == DUAL_RAIL:
        factors = [(block[0], SIGMA_ZX), (block[1], SIGMA_ZX)]
    elif lattice.encoding == STANDARD:
        factors = [(block[0], SIGMA_X)]
    else:
        raise LatticeError(f"stabilizers are not defined for {lattice.encoding} lattices")
    for c in lattice.neighbors(effective_qubit):
        factors.append((lattice.top(c), SIGMA_Z))
    return StabilizerOperator(effective_qubit=effective_qubit, factors=tuple(factors))


def apply_stabilizer(operator: StabilizerOperator, state: QuantumState) -> QuantumState:
    """G|φ>（G 是单比特因子的张量积，逐个作用即可）"""
    for qubit, local in operator.factors:
        state = apply_gate(state, local, [qubit])
    return state


def stabilizer_residual(
    operator: StabilizerOperator, state: QuantumState, sign: int
) -> float:
    """‖G|φ> - sign·|φ>‖；混态时为 ‖(G - sign)ρ‖_F，对纯态两者一致"""
    if state.is_pure:
        image = apply_stabilizer(operator, state).data
        return float(np.linalg.norm(image - sign * state.data))
    g = operator.matrix(state.num_qubits)
    return float(np.linalg.norm((g - sign * np.eye(state.dim)) @ state.data))


def verify_stabilizers(
    state: QuantumState, lattice: LatticeSpec, kappa: EigenvalueSet
) -> float:
    """返回所有有效比特上本征方程残差的最大值"""
    if state.num_qubits != lattice.num_physical:
        raise DimensionMismatchError(
            f"state has {state.num_qubits} qubits, lattice needs {lattice.num_physical}"
        )
    worst = 0.0
    for a in lattice.effective_qubits:
        residual = stabilizer_residual(stabilizer(lattice, a), state, kappa.sign(a))
        worst = max(worst, residual)
    logger.debug(f"stabilizer residual over {len(lattice.effective_qubits)} qubits: {worst:.3e}")
    return worst
