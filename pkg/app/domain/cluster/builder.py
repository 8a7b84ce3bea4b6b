"""标准簇态与双轨编码簇态的制备

制备顺序：
1. 所有物理比特对初始化为 |-,->_{ab}
2. 沿 z 轴施加 S^{ab}，随后对底层比特施加 H，得到 ⊗|ψ^->_{ab}
3. 对顶层相邻比特施加 S^{ac}（γ_= 邻接），得到编码簇态，{κ} 全为 0
"""
from typing import Optional, Tuple

import numpy as np
from loguru import logger

from ..exceptions import LatticeError
from ..quantum.operators import CZ, HADAMARD, KET_0, KET_1, KET_MINUS, KET_PLUS, kron_all
from ..quantum.state import QuantumState, apply_gate
from .encoding import encode_pair
from .models import DUAL_RAIL, EigenvalueSet, LatticeSpec

LogicalInput = Tuple[complex, complex]


def minus_minus_register(num_pairs: int) -> QuantumState:
    """⊗|-,->_{ab}"""
    if num_pairs < 1:
        raise LatticeError("need at least one pair")
    return QuantumState(kron_all([KET_MINUS] * (2 * num_pairs)))


def build_singlet_column(state: QuantumState) -> QuantumState:
    """
    对每一对 (2i, 2i+1) 施加 S^{ab}，再施加 1_a ⊗ H_b。

    输入应为 ⊗|-,->；这里不做运行期检查，错误的输入只会在下游校验中暴露。
    """
    if state.num_qubits % 2:
        raise LatticeError("singlet column needs an even number of qubits")
    for a in range(0, state.num_qubits, 2):
        state = apply_gate(state, CZ, [a, a + 1])
        state = apply_gate(state, HADAMARD, [a + 1])
    return state


def apply_top_layer_entanglers(state: QuantumState, lattice: LatticeSpec) -> QuantumState:
    """S_= ：在每条顶层边的两个顶层物理比特之间施加受控 σ_z"""
    for a, c in lattice.top_layer_edges:
        state = apply_gate(state, CZ, [lattice.top(a), lattice.top(c)])
    return state


def build_encoded_cluster(
    lattice: LatticeSpec, logical_input: Optional[LogicalInput] = None
) -> Tuple[QuantumState, EigenvalueSet]:
    """
    制备双轨编码簇态。

    Args:
        lattice: 双轨编码格点
        logical_input: 可选 (μ, ν)，直接在有效比特 1'（编号 0）的比特对上写入 μ|01> - ν|10>

    Returns:
        (物理态, κ 全为 0 的本征值集合)
    """
    if lattice.encoding != DUAL_RAIL:
        raise LatticeError(f"encoded clusters need a dual-rail lattice, got {lattice.encoding}")
    num_pairs = len(lattice.effective_qubits)

    if logical_input is None:
        state = build_singlet_column(minus_minus_register(num_pairs))
    else:
        mu, nu = logical_input
        input_pair = QuantumState(encode_pair(mu, nu))
        if num_pairs == 1:
            state = input_pair
        else:
            rest = build_singlet_column(minus_minus_register(num_pairs - 1))
            state = QuantumState(np.kron(input_pair.data, rest.data))

    state = apply_top_layer_entanglers(state, lattice)
    logger.debug(
        f"built encoded cluster: {num_pairs} effective qubits, "
        f"{len(lattice.top_layer_edges)} top-layer edges"
    )
    return state, EigenvalueSet.zeros(lattice)


def build_standard_cluster(n: int, logical_input: Optional[LogicalInput] = None) -> QuantumState:
    """未编码线性簇态：|+>^⊗n 后在相邻比特间施加 CZ；可选在第 1 个比特写入 μ|0> + ν|1>"""
    if n < 1:
        raise LatticeError("a cluster needs at least one qubit")
    first = KET_PLUS if logical_input is None else logical_input[0] * KET_0 + logical_input[1] * KET_1
    state = QuantumState(kron_all([first] + [KET_PLUS] * (n - 1)))
    for q in range(n - 1):
        state = apply_gate(state, CZ, [q, q + 1])
    return state
