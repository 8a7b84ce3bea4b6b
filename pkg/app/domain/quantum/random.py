"""随机态、随机酉算符与随机信道（属性测试和 Monte-Carlo 用）"""
from typing import List, Optional

import numpy as np
from scipy.stats import unitary_group

from .state import QuantumState


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    return unitary_group.rvs(dim, random_state=rng)


def haar_state(num_qubits: int, rng: np.random.Generator) -> QuantumState:
    """Haar 随机纯态"""
    return QuantumState(random_unitary(2**num_qubits, rng)[:, 0])


def haar_vectors(count: int, dim: int, rng: np.random.Generator) -> np.ndarray:
    """批量 Haar 随机纯态，形状 (count, dim)；复高斯向量归一化即为 Haar 分布"""
    raw = rng.normal(size=(count, dim)) + 1j * rng.normal(size=(count, dim))
    return raw / np.linalg.norm(raw, axis=1, keepdims=True)


def random_density_matrix(
    num_qubits: int, rng: np.random.Generator, rank: Optional[int] = None
) -> QuantumState:
    """Hilbert-Schmidt 类随机混态：ρ = G G† / Tr(G G†)"""
    dim = 2**num_qubits
    rank = rank or dim
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    rho = rho / np.trace(rho).real
    return QuantumState((rho + rho.conj().T) / 2)


def random_kraus_operators(rank: int, rng: np.random.Generator, dim: int = 2) -> List[np.ndarray]:
    """随机 CPTP 信道：取随机等距映射 V (rank·dim × dim)，按块切分为 Kraus 算符"""
    big = random_unitary(rank * dim, rng)
    isometry = big[:, :dim]
    return [isometry[i * dim:(i + 1) * dim, :] for i in range(rank)]
