"""退相干信道

- 独立相位阻尼：单比特 Kraus {√p·1, √(1-p)·σ_z}，p = (1 + e^{-Γt/2})/2，
  即相干项乘以 e^{-Γt/2}
- 成对集体退相位：e^{-iθJ_z} 的高斯相位扩散，J_z 本征值 m、n 之间的相干项乘以
  e^{-Γt(m-n)²/2}；J_z = 0 子空间 span{|01>, |10>} 严格不变
- 完全集体噪声：单次采样的集体酉 exp(-i(β_x J_x + β_y J_y + β_z J_z))
"""
from typing import Callable, List, Sequence, Tuple

import numpy as np
from scipy.linalg import expm

from ..cluster.models import DFS3, DUAL_RAIL, LatticeSpec
from ..exceptions import NoiseSpecError
from ..quantum.state import QuantumState, apply_gate, apply_kraus
from ..quantum.operators import I2, SIGMA_Z
from .models import CollectiveGenerators, NoiseKind, NoiseSpec

INDEPENDENT = "independent"
COLLECTIVE = "collective"


def _check_gamma(gamma_t: float) -> None:
    if not np.isfinite(gamma_t) or gamma_t < 0:
        raise NoiseSpecError(f"gamma_t must be a non-negative real, got {gamma_t}")


def dephasing_kraus(gamma_t: float) -> List[np.ndarray]:
    _check_gamma(gamma_t)
    p = (1.0 + np.exp(-gamma_t / 2)) / 2
    return [np.sqrt(p) * I2, np.sqrt(1.0 - p) * SIGMA_Z]


def apply_independent_dephasing(rho: QuantumState, qubit: int, gamma_t: float) -> QuantumState:
    return apply_kraus(rho, dephasing_kraus(gamma_t), [qubit])


def jz_eigenvalues(num_qubits: int, block: Sequence[int]) -> np.ndarray:
    """每个计算基态在 block 上的 J_z 本征值（σ_z|0> = +|0>）"""
    indices = np.arange(2**num_qubits)
    m = np.zeros(2**num_qubits)
    for q in block:
        bit = (indices >> (num_qubits - 1 - q)) & 1
        m += (1 - 2 * bit) / 2
    return m


def apply_collective_dephasing(
    rho: QuantumState, block: Sequence[int], gamma_t: float
) -> QuantumState:
    _check_gamma(gamma_t)
    if len(block) != 2:
        raise NoiseSpecError(f"collective dephasing acts on a pair, got block {tuple(block)}")
    m = jz_eigenvalues(rho.num_qubits, block)
    mask = np.exp(-gamma_t * (m[:, None] - m[None, :]) ** 2 / 2)
    return QuantumState(rho.density_matrix() * mask)


def collective_unitary(block_size: int, beta: Tuple[float, float, float]) -> np.ndarray:
    beta = tuple(float(b) for b in beta)
    if len(beta) != 3 or not all(np.isfinite(beta)):
        raise NoiseSpecError(f"beta must be a finite 3-vector, got {beta}")
    generators = CollectiveGenerators.for_block(block_size)
    return expm(-1j * generators.combination(beta))


def apply_collective_unitary(
    state: QuantumState, block: Sequence[int], beta: Tuple[float, float, float]
) -> QuantumState:
    if len(block) not in (2, 3):
        raise NoiseSpecError(f"collective unitary acts on 2 or 3 qubits, got {tuple(block)}")
    return apply_gate(state, collective_unitary(len(block), beta), list(block))


def dephase_register(
    rho: QuantumState, lattice: LatticeSpec, gamma_t: float, mode: str
) -> QuantumState:
    """对整个寄存器施加相同 Γt 的退相位：independent 作用于每个物理比特，collective 作用于每个编码对"""
    _check_gamma(gamma_t)
    if rho.num_qubits != lattice.num_physical:
        raise NoiseSpecError("state and lattice sizes differ")
    if mode == INDEPENDENT:
        for a in lattice.effective_qubits:
            for q in lattice.block(a):
                rho = apply_independent_dephasing(rho, q, gamma_t)
        return rho
    if mode == COLLECTIVE:
        if lattice.encoding != DUAL_RAIL:
            raise NoiseSpecError(f"collective dephasing needs dual-rail pairs, got {lattice.encoding}")
        for a in lattice.effective_qubits:
            rho = apply_collective_dephasing(rho, lattice.block(a), gamma_t)
        return rho
    raise NoiseSpecError(f"unknown dephasing mode {mode!r}")


def apply_noise(state: QuantumState, lattice: LatticeSpec, spec: NoiseSpec) -> QuantumState:
    """
    按 NoiseSpec 施加噪声。

    spec.targets 对独立退相位是物理比特，对集体噪声是有效比特（编码块）；
    None 表示整个寄存器。
    """
    if spec.kind is NoiseKind.INDEPENDENT_DEPHASING:
        if spec.targets is None:
            return dephase_register(state, lattice, spec.gamma_t, INDEPENDENT)
        for q in spec.targets:
            state = apply_independent_dephasing(state, q, spec.gamma_t)
        return state

    effective = lattice.effective_qubits if spec.targets is None else spec.targets
    if spec.kind is NoiseKind.COLLECTIVE_DEPHASING:
        if lattice.encoding != DUAL_RAIL:
            raise NoiseSpecError(f"collective dephasing needs dual-rail pairs, got {lattice.encoding}")
        for a in effective:
            state = apply_collective_dephasing(state, lattice.block(a), spec.gamma_t)
        return state

    if lattice.encoding not in (DUAL_RAIL, DFS3):
        raise NoiseSpecError(f"collective unitary noise needs encoded blocks, got {lattice.encoding}")
    for a in effective:
        state = apply_collective_unitary(state, lattice.block(a), spec.beta)
    return state


def choi_matrix(channel: Callable[[QuantumState], QuantumState], num_qubits: int) -> np.ndarray:
    """
    归一化 Choi 矩阵 (E ⊗ 1)(|Φ><Φ|)，|Φ> = Σ_i |i>|i> / √d。

    channel 需作用在寄存器的前 num_qubits 个比特上，参考系统占据后 num_qubits 个比特。
    """
    dim = 2**num_qubits
    phi = np.eye(dim, dtype=complex).reshape(dim * dim) / np.sqrt(dim)
    return channel(QuantumState(phi)).density_matrix()
