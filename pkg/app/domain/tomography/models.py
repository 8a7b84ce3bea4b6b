"""过程层析的数据模型

算符基固定为未归一化的 Pauli 基 {1, σ_x, σ_y, σ_z}；
矩阵单位 ρ_j 按 |0><0|, |0><1|, |1><0|, |1><1| 排列（j = 2r + c）。
"""
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from ..exceptions import ChannelError
from ..quantum.operators import PAULIS

BASIS_LABELS = ("I", "X", "Y", "Z")
PAULI_BASIS: Tuple[np.ndarray, ...] = PAULIS

HERMITIAN_ATOL = 1e-10
TRACE_PRESERVING_ATOL = 1e-8


def matrix_unit(j: int) -> np.ndarray:
    unit = np.zeros((2, 2), dtype=complex)
    unit[j // 2, j % 2] = 1.0
    return unit


MATRIX_UNITS: Tuple[np.ndarray, ...] = tuple(matrix_unit(j) for j in range(4))


def complex_rows(matrix: np.ndarray) -> List[List[List[float]]]:
    """复矩阵 -> 行优先的 [re, im] 嵌套列表"""
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(matrix)]


def parse_complex_rows(rows: Any) -> np.ndarray:
    try:
        arr = np.array(rows, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ChannelError(f"matrix entries must be [re, im] pairs: {exc}") from exc
    if arr.ndim != 3 or arr.shape[-1] != 2:
        raise ChannelError(f"expected a matrix of [re, im] pairs, got shape {arr.shape}")
    return arr[..., 0] + 1j * arr[..., 1]


@dataclass(frozen=True)
class BetaTensor:
    """β^{mn}_{jk}：𝒦_m ρ_j 𝒦_n† = Σ_k β^{mn}_{jk} ρ_k"""

    data: np.ndarray

    @classmethod
    def pauli(cls) -> "BetaTensor":
        beta = np.zeros((4, 4, 4, 4), dtype=complex)
        for m, km in enumerate(PAULI_BASIS):
            for n, kn in enumerate(PAULI_BASIS):
                for j, rho in enumerate(MATRIX_UNITS):
                    # 展开系数就是按行优先展平后的矩阵元
                    beta[m, n, j, :] = (km @ rho @ kn.conj().T).reshape(4)
        return cls(beta)

    def as_matrix(self) -> np.ndarray:
        """16×16 矩阵 B，行为 (j, k)，列为 (m, n)，使 λ = B χ"""
        return self.data.transpose(2, 3, 0, 1).reshape(16, 16)

    def expansion_residual(self) -> float:
        worst = 0.0
        for m, km in enumerate(PAULI_BASIS):
            for n, kn in enumerate(PAULI_BASIS):
                for j, rho in enumerate(MATRIX_UNITS):
                    direct = km @ rho @ kn.conj().T
                    expanded = sum(self.data[m, n, j, k] * MATRIX_UNITS[k] for k in range(4))
                    worst = max(worst, float(np.abs(direct - expanded).max()))
        return worst


@dataclass(frozen=True)
class ChiMatrix:
    """Pauli 基下的 4×4 信道矩阵 χ_{mn}"""

    matrix: np.ndarray

    def __post_init__(self):
        chi = np.array(self.matrix, dtype=complex)
        if chi.shape != (4, 4):
            raise ChannelError(f"chi matrix must be 4x4, got {chi.shape}")
        deviation = float(np.abs(chi - chi.conj().T).max())
        if deviation > HERMITIAN_ATOL:
            raise ChannelError(f"chi matrix is not Hermitian (deviation {deviation:.3e})")
        chi = (chi + chi.conj().T) / 2
        chi.setflags(write=False)
        object.__setattr__(self, "matrix", chi)

    def trace_preservation_residual(self) -> float:
        """‖Σ χ_{mn} 𝒦_n† 𝒦_m - 1‖_max"""
        total = np.zeros((2, 2), dtype=complex)
        for m, km in enumerate(PAULI_BASIS):
            for n, kn in enumerate(PAULI_BASIS):
                total += self.matrix[m, n] * kn.conj().T @ km
        return float(np.abs(total - np.eye(2)).max())

    def is_trace_preserving(self, atol: float = TRACE_PRESERVING_ATOL) -> bool:
        return self.trace_preservation_residual() <= atol

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "basis": list(BASIS_LABELS),
            "chi": complex_rows(self.matrix),
            "chi_eigenvalues": self.eigenvalues().tolist(),
        }


@dataclass(frozen=True)
class KrausSet:
    operators: Tuple[np.ndarray, ...]

    def __post_init__(self):
        ops = tuple(np.array(op, dtype=complex) for op in self.operators)
        if not ops:
            raise ChannelError("a Kraus set needs at least one operator")
        for op in ops:
            if op.shape != (2, 2):
                raise ChannelError(f"Kraus operators must be 2x2, got {op.shape}")
        object.__setattr__(self, "operators", ops)

    @classmethod
    def of(cls, operators: Sequence[np.ndarray]) -> "KrausSet":
        return cls(tuple(operators))

    def completeness_residual(self) -> float:
        total = sum(op.conj().T @ op for op in self.operators)
        return float(np.abs(total - np.eye(2)).max())

    def validate(self, atol: float = TRACE_PRESERVING_ATOL) -> None:
        residual = self.completeness_residual()
        if residual > atol:
            raise ChannelError(f"Kraus operators are not complete (residual {residual:.3e})")

    def apply(self, matrix: np.ndarray) -> np.ndarray:
        """Σ K X K†，X 可以是任意 2×2 矩阵（包括非厄米的矩阵单位）"""
        matrix = np.asarray(matrix, dtype=complex)
        return sum(op @ matrix @ op.conj().T for op in self.operators)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "basis": list(BASIS_LABELS),
            "kraus": [complex_rows(op) for op in self.operators],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "KrausSet":
        """{"kraus": [[[[re, im], ...], ...], ...]}"""
        if not isinstance(data, dict) or "kraus" not in data:
            raise ChannelError("Kraus document needs a 'kraus' list")
        kraus = cls(tuple(parse_complex_rows(rows) for rows in data["kraus"]))
        kraus.validate()
        return kraus
