"""常用单/双比特算符

比特顺序约定（全项目统一）：qubit 0 是基态下标的最高位，
即 |q0 q1 ... q_{n-1}> 对应下标 q0·2^{n-1} + ... + q_{n-1}。
"""
from typing import Sequence

import numpy as np

UNITARY_ATOL = 1e-12

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)

# σ_z σ_x，编码比特 X 算符的单比特因子
SIGMA_ZX = SIGMA_Z @ SIGMA_X

# 受控 σ_z：|0><0| ⊗ 1 + |1><1| ⊗ σ_z
CZ = np.diag([1, 1, 1, -1]).astype(complex)

PAULIS = (I2, SIGMA_X, SIGMA_Y, SIGMA_Z)

KET_0 = np.array([1, 0], dtype=complex)
KET_1 = np.array([0, 1], dtype=complex)
KET_PLUS = np.array([1, 1], dtype=complex) / np.sqrt(2)
KET_MINUS = np.array([1, -1], dtype=complex) / np.sqrt(2)
KET_PLUS_Y = np.array([1, 1j], dtype=complex) / np.sqrt(2)


def rz(angle: float) -> np.ndarray:
    """R_z(angle) = diag(1, e^{i·angle})；文中的 R_z^{-α} 即 rz(-α)。"""
    return np.diag([1.0, np.exp(1j * angle)]).astype(complex)


def equatorial_ket(alpha: float, sign: int = +1) -> np.ndarray:
    """|±α> = (|0> ± e^{iα}|1>)/√2"""
    return np.array([1.0, sign * np.exp(1j * alpha)], dtype=complex) / np.sqrt(2)


def projector(ket: np.ndarray) -> np.ndarray:
    ket = np.asarray(ket, dtype=complex)
    return np.outer(ket, ket.conj())


def is_unitary(matrix: np.ndarray, atol: float = UNITARY_ATOL) -> bool:
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    return bool(np.allclose(matrix.conj().T @ matrix, np.eye(matrix.shape[0]), atol=atol))


def kron_all(factors: Sequence[np.ndarray]) -> np.ndarray:
    result = np.array([[1.0 + 0j]]) if np.ndim(factors[0]) == 2 else np.array([1.0 + 0j])
    for factor in factors:
        result = np.kron(result, factor)
    return result


def embed_operator(operator: np.ndarray, targets: Sequence[int], num_qubits: int) -> np.ndarray:
    """把作用在 targets 上的算符嵌入到 num_qubits 比特的完整空间"""
    k = len(targets)
    rest = [q for q in range(num_qubits) if q not in targets]
    full = np.kron(operator, np.eye(2 ** (num_qubits - k), dtype=complex))
    full = full.reshape((2,) * (2 * num_qubits))
    # 当前第 i 个轴对应 order[i] 号比特
    order = list(targets) + rest
    perm = list(np.argsort(order))
    axes = perm + [num_qubits + p for p in perm]
    return full.transpose(axes).reshape(2**num_qubits, 2**num_qubits)
