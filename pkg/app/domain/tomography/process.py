"""单比特量子过程层析

流程：探测四个输入态 -> 重建非对角像 -> 解 λ = βχ -> 对角化 χ 得到 Kraus 算符。
信道以精确密度矩阵探测，不涉及测量统计。
"""
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple, Union

import numpy as np
from loguru import logger

from ..exceptions import ChannelError, NotCompletelyPositiveError
from ..quantum.operators import KET_0, KET_1, KET_PLUS, KET_PLUS_Y, projector
from ..quantum.state import QuantumState
from .models import PAULI_BASIS, BetaTensor, ChiMatrix, KrausSet

ChannelFn = Callable[[QuantumState], Union[QuantumState, np.ndarray]]

PROBE_TRACE_ATOL = 1e-10
SOLVE_RESIDUAL_ATOL = 1e-10
NEGATIVE_EIGENVALUE_ATOL = 1e-8
KRAUS_DROP = 1e-12

PAULI_BETA = BetaTensor.pauli()


@dataclass(frozen=True)
class ProbeSet:
    """E(|0><0|), E(|1><1|), E(|+><+|), E(|+_y><+_y|)"""

    zero: np.ndarray
    one: np.ndarray
    plus: np.ndarray
    plus_y: np.ndarray


PROBE_STATES: Tuple[np.ndarray, ...] = tuple(
    projector(k) for k in (KET_0, KET_1, KET_PLUS, KET_PLUS_Y)
)


def _output_matrix(output: Union[QuantumState, np.ndarray]) -> np.ndarray:
    if isinstance(output, QuantumState):
        return output.density_matrix()
    return np.asarray(output, dtype=complex)


def probe_channel(channel: ChannelFn) -> ProbeSet:
    outputs = []
    for rho in PROBE_STATES:
        out = _output_matrix(channel(QuantumState(rho)))
        if out.shape != (2, 2):
            raise ChannelError(f"channel returned a {out.shape} matrix for a single-qubit probe")
        deviation = abs(np.trace(out) - 1.0)
        if deviation > PROBE_TRACE_ATOL:
            logger.warning(f"[层析] channel is not trace preserving (deviation {deviation:.3e})")
            raise ChannelError(f"channel is not trace preserving (deviation {deviation:.3e})")
        outputs.append(out)
    return ProbeSet(*outputs)


def reconstruct_offdiagonal(probes: ProbeSet) -> Tuple[np.ndarray, np.ndarray]:
    """E(|0><1|) = E(+) + iE(+_y) - (1+i)/2 [E(0) + E(1)]，E(|1><0|) 取其共轭转置"""
    e01 = probes.plus + 1j * probes.plus_y - (1 + 1j) / 2 * (probes.zero + probes.one)
    return e01, e01.conj().T


def matrix_unit_images(probes: ProbeSet) -> List[np.ndarray]:
    """按 ρ_j 顺序排列的 E(|0><0|), E(|0><1|), E(|1><0|), E(|1><1|)"""
    e01, e10 = reconstruct_offdiagonal(probes)
    return [probes.zero, e01, e10, probes.one]


def chi_from_lambda(images: Sequence[np.ndarray]) -> ChiMatrix:
    """
    由矩阵单位的像求 χ。

    E(ρ_j) 在矩阵单位基下的展开系数 λ_{jk} 就是其按行优先展平后的元素。
    """
    if len(images) != 4:
        raise ChannelError(f"need the images of all four matrix units, got {len(images)}")
    lam = np.stack([np.asarray(img, dtype=complex).reshape(4) for img in images]).reshape(16)
    system = PAULI_BETA.as_matrix()
    chi = np.linalg.solve(system, lam)
    residual = float(np.abs(system @ chi - lam).max())
    assert residual < SOLVE_RESIDUAL_ATOL, f"λ = βχ solve residual {residual:.3e}"
    return ChiMatrix(chi.reshape(4, 4))


def kraus_from_chi(chi: ChiMatrix) -> KrausSet:
    """χ = U D U†，K_i = √D_i Σ_j U_{ji} 𝒦_j；丢弃 D_i < 1e-12 的项"""
    values, vectors = np.linalg.eigh(chi.matrix)
    if values.min() < -NEGATIVE_EIGENVALUE_ATOL:
        raise NotCompletelyPositiveError(float(values.min()))
    if values.min() < 0:
        logger.debug(f"[层析] clamping negative chi eigenvalue {values.min():.3e}")
    operators = []
    for i, value in enumerate(np.clip(values, 0.0, None)):
        if value < KRAUS_DROP:
            continue
        op = sum(vectors[j, i] * PAULI_BASIS[j] for j in range(4))
        operators.append(np.sqrt(value) * op)
    return KrausSet(tuple(operators))


def chi_from_kraus(kraus: KrausSet) -> ChiMatrix:
    """e_{im} = Tr(𝒦_m† K_i)/2，χ_{mn} = Σ_i e_{im} e_{in}*"""
    coefficients = np.array(
        [[np.trace(basis.conj().T @ op) / 2 for basis in PAULI_BASIS] for op in kraus.operators]
    )
    return ChiMatrix(coefficients.T @ coefficients.conj())


def channel_from_kraus(kraus: KrausSet) -> Callable[[QuantumState], QuantumState]:
    def channel(rho: QuantumState) -> QuantumState:
        if rho.num_qubits != 1:
            raise ChannelError("Kraus channels here act on a single qubit")
        return QuantumState(kraus.apply(rho.density_matrix()))

    return channel

