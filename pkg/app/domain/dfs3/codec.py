"""三比特 DFS 编码：抵御完全集体噪声（J_x, J_y, J_z 全部耦合）

码字（总自旋 j = 1/2，m = +1/2 的两个正交拷贝）：
    |0_E> = (|10> - |01>)_{12}|0>_3 / √2
    |1_E> = (2/√6)|0>_1(|10> - |01>)_{23} + (1/√6)(|10> - |01>)_{12}|0>_3

集体转动只在 m 上作用（规范自由度），不改变 j = 1/2 的拷贝标号（逻辑比特），
所以受保护的是四维码空间上的无噪声子系统。

编码 / 解码以精确的等距映射实现，线路角度作为元数据保存。
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from ..exceptions import InvalidStateError
from ..noise.channels import collective_unitary
from ..quantum.operators import KET_0, KET_1, SIGMA_Z, embed_operator, kron_all, projector
from ..quantum.state import QuantumState, apply_gate, fidelity, partial_trace, projective_measure

DFS3_QUBITS = 3
MEASURED_QUBIT = 2
LOGICAL_QUBIT = 0


def _ket(amplitudes: dict) -> np.ndarray:
    vec = np.zeros(8, dtype=complex)
    for bits, value in amplitudes.items():
        vec[int(bits, 2)] = value
    return vec


ZERO_E = _ket({"100": 1, "010": -1}) / np.sqrt(2)
ONE_E = _ket({"010": 1, "001": -2, "100": 1}) / np.sqrt(6)

# J_- 作用后的 m = -1/2 规范伙伴
ZERO_E_PARTNER = _ket({"101": 1, "011": -1}) / np.sqrt(2)
ONE_E_PARTNER = _ket({"110": 2, "011": -1, "101": -1}) / np.sqrt(6)

# j = 3/2 的四个态，填满编码器的其余列
_SPIN_3_2 = (
    _ket({"000": 1}),
    _ket({"100": 1, "010": 1, "001": 1}) / np.sqrt(3),
    _ket({"011": 1, "101": 1, "110": 1}) / np.sqrt(3),
    _ket({"111": 1}),
)


@dataclass(frozen=True)
class CircuitAngles:
    phi: float
    theta1: float
    theta2: float

    def inverse(self) -> "CircuitAngles":
        return CircuitAngles(-self.phi, -self.theta1, -self.theta2)


ENCODE_ANGLES = CircuitAngles(3 * np.pi / 4, -np.arccos(np.sqrt(2 / 3)), -np.pi / 4)
DECODE_ANGLES = ENCODE_ANGLES.inverse()


def dfs3_codewords() -> Tuple[np.ndarray, np.ndarray]:
    return ZERO_E.copy(), ONE_E.copy()


def gauge_partners() -> Tuple[np.ndarray, np.ndarray]:
    return ZERO_E_PARTNER.copy(), ONE_E_PARTNER.copy()


def encoder_unitary() -> np.ndarray:
    """
    E|ψ>_1|0>_2|1>_3 = μ|0_E> + ν|1_E>。

    |x 0 0> 映到规范伙伴（|1 0 0> 带负号），解码时测得 |0>_3 需要补一个 σ_z。
    """
    columns = {
        "001": ZERO_E,
        "101": ONE_E,
        "000": ZERO_E_PARTNER,
        "100": -ONE_E_PARTNER,
        "010": _SPIN_3_2[0],
        "011": _SPIN_3_2[1],
        "110": _SPIN_3_2[2],
        "111": _SPIN_3_2[3],
    }
    encoder = np.zeros((8, 8), dtype=complex)
    for bits, column in columns.items():
        encoder[:, int(bits, 2)] = column
    return encoder


def decoder_unitary() -> np.ndarray:
    return encoder_unitary().conj().T


def code_space_projector() -> np.ndarray:
    """两个码字及其规范伙伴张成的四维空间"""
    return sum(projector(k) for k in (ZERO_E, ONE_E, ZERO_E_PARTNER, ONE_E_PARTNER))


def logical_span_projector() -> np.ndarray:
    return projector(ZERO_E) + projector(ONE_E)


def encode3(mu: complex, nu: complex) -> QuantumState:
    """μ|0_E> + ν|1_E>，由编码器作用在 |ψ>|0>|1> 上得到"""
    logical = np.array([mu, nu], dtype=complex)
    norm = float(np.vdot(logical, logical).real)
    if abs(norm - 1.0) > 1e-10:
        raise InvalidStateError(f"logical input is not normalized (|μ|²+|ν|² = {norm:.12f})")
    register = QuantumState(kron_all([logical, KET_0, KET_1]))
    return apply_gate(register, encoder_unitary(), [0, 1, 2])


@dataclass(frozen=True)
class Dfs3Decoding:
    logical: QuantumState
    outcome: int
    probability: float


def decode3(
    state: QuantumState,
    rng: Optional[np.random.Generator] = None,
    forced: Optional[int] = None,
) -> Dfs3Decoding:
    """
    解码：施加 E†，在计算基测量第 3 个比特；得到 |0>_3 时对逻辑比特补 σ_z。
    第 2、3 个比特随后丢弃。
    """
    if state.num_qubits != DFS3_QUBITS:
        raise InvalidStateError(f"dfs3 decoding needs a three-qubit state, got {state.num_qubits}")
    decoded = apply_gate(state, decoder_unitary(), [0, 1, 2])
    result = projective_measure(
        decoded,
        [projector(KET_0), projector(KET_1)],
        [MEASURED_QUBIT],
        rng=rng,
        forced=forced,
    )
    post = result.state
    if result.outcome == 0:
        post = apply_gate(post, SIGMA_Z, [LOGICAL_QUBIT])
    logical = partial_trace(post, [LOGICAL_QUBIT])
    return Dfs3Decoding(logical=logical, outcome=result.outcome, probability=result.probability)


def decode_all_branches(state: QuantumState, floor: float = 1e-12) -> List[Dfs3Decoding]:
    """按强制结果枚举所有概率不可忽略的分支"""
    decoded = apply_gate(state, decoder_unitary(), [0, 1, 2])
    rho = partial_trace(decoded, [MEASURED_QUBIT]).density_matrix()
    branches = []
    for outcome in (0, 1):
        if rho[outcome, outcome].real > floor:
            branches.append(decode3(state, forced=outcome))
    return branches


def collective_commutator(beta: Sequence[float]) -> float:
    """‖[P_code, U(β)]‖，P_code 为四维码空间投影"""
    p = code_space_projector()
    u = collective_unitary(DFS3_QUBITS, tuple(beta))
    return float(np.linalg.norm(p @ u - u @ p))


def verify_unitary_invariance(
    unitaries: Iterable[np.ndarray], rng: np.random.Generator, states_per_unitary: int = 10
) -> float:
    """对每个三比特酉算符：编码随机逻辑态 -> 作用 -> 解码（所有分支），返回最大不保真度"""
    worst = 0.0
    for unitary in unitaries:
        for _ in range(states_per_unitary):
            logical = rng.normal(size=2) + 1j * rng.normal(size=2)
            logical = logical / np.linalg.norm(logical)
            target = QuantumState(logical)
            noisy = apply_gate(encode3(logical[0], logical[1]), unitary, [0, 1, 2])
            for branch in decode_all_branches(noisy):
                worst = max(worst, 1.0 - fidelity(branch.logical, target))
    return worst


def verify_collective_invariance(
    betas: Sequence[Sequence[float]], rng: np.random.Generator, states_per_beta: int = 10
) -> float:
    if len(betas) < 1:
        raise InvalidStateError("need at least one beta sample")
    worst = verify_unitary_invariance(
        (collective_unitary(DFS3_QUBITS, tuple(beta)) for beta in betas), rng, states_per_beta
    )
    logger.debug(f"dfs3 invariance over {len(betas)} collective samples: {worst:.3e}")
    return worst


def single_qubit_control(operator: np.ndarray, qubit: int = 0) -> np.ndarray:
    """非集体噪声（只作用在一个物理比特上），用作反例"""
    return embed_operator(operator, [qubit], DFS3_QUBITS)
