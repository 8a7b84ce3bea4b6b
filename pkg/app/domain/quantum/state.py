"""量子态与基本操作

QuantumState 是不可变值对象：纯态保存振幅向量，混态保存稠密密度矩阵。
所有操作返回新的态，可以安全地在线程之间传递。
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..exceptions import (
    DimensionMismatchError,
    InvalidStateError,
    MeasurementError,
    RegisterTooLargeError,
    VanishingOutcomeError,
)
from .operators import PAULIS

MAX_QUBITS = 12
STATE_ATOL = 1e-10
COMPLETENESS_ATOL = 1e-10
VANISHING_PROBABILITY = 1e-12
RANK_RTOL = 1e-14


def _num_qubits_for(dim: int) -> int:
    n = int(round(np.log2(dim))) if dim > 0 else -1
    if n < 0 or 2**n != dim:
        raise DimensionMismatchError(f"dimension {dim} is not a power of two")
    return n


@dataclass(frozen=True)
class QuantumState:
    """纯态（长度 2^n 的向量）或混态（2^n × 2^n 密度矩阵）"""

    data: np.ndarray

    def __post_init__(self):
        arr = np.array(self.data, dtype=complex)
        if arr.ndim == 1:
            n = _num_qubits_for(arr.shape[0])
        elif arr.ndim == 2 and arr.shape[0] == arr.shape[1]:
            n = _num_qubits_for(arr.shape[0])
        else:
            raise DimensionMismatchError(f"unsupported state shape {arr.shape}")
        if n > MAX_QUBITS:
            raise RegisterTooLargeError(f"{n} qubits exceeds the dense cap of {MAX_QUBITS}")
        if n == 0:
            raise DimensionMismatchError("a state needs at least one qubit")

        if arr.ndim == 1:
            norm = float(np.vdot(arr, arr).real)
            if abs(norm - 1.0) > STATE_ATOL:
                raise InvalidStateError(f"state vector norm² {norm:.15f} != 1")
        else:
            if not np.allclose(arr, arr.conj().T, atol=STATE_ATOL):
                raise InvalidStateError("density matrix is not Hermitian")
            trace = float(np.trace(arr).real)
            if abs(trace - 1.0) > STATE_ATOL:
                raise InvalidStateError(f"density matrix trace {trace:.15f} != 1")
            # ρ + εI 可做 Cholesky 分解 <=> 最小本征值 > -ε
            try:
                np.linalg.cholesky((arr + arr.conj().T) / 2 + STATE_ATOL * np.eye(arr.shape[0]))
            except np.linalg.LinAlgError:
                raise InvalidStateError("density matrix is not positive semidefinite") from None

        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @classmethod
    def from_vector(cls, amplitudes: Sequence[complex]) -> "QuantumState":
        return cls(np.asarray(amplitudes, dtype=complex))

    @classmethod
    def from_density(cls, matrix: np.ndarray) -> "QuantumState":
        return cls(np.asarray(matrix, dtype=complex))

    @classmethod
    def basis(cls, bits: str) -> "QuantumState":
        """QuantumState.basis("01") -> |01>"""
        vec = np.zeros(2 ** len(bits), dtype=complex)
        vec[int(bits, 2)] = 1.0
        return cls(vec)

    @property
    def is_pure(self) -> bool:
        return self.data.ndim == 1

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    @property
    def num_qubits(self) -> int:
        return _num_qubits_for(self.dim)

    def density_matrix(self) -> np.ndarray:
        if self.is_pure:
            return np.outer(self.data, self.data.conj())
        return np.array(self.data)

    def to_density(self) -> "QuantumState":
        if not self.is_pure:
            return self
        return QuantumState(self.density_matrix())


Operand = Union[QuantumState, np.ndarray]


def _check_targets(targets: Sequence[int], num_qubits: int) -> List[int]:
    targets = [int(t) for t in targets]
    if len(set(targets)) != len(targets):
        raise DimensionMismatchError(f"duplicate targets {targets}")
    for t in targets:
        if not 0 <= t < num_qubits:
            raise DimensionMismatchError(f"target {t} outside register of {num_qubits} qubits")
    return targets


def _contract(tensor: np.ndarray, gate: np.ndarray, axes: Sequence[int]) -> np.ndarray:
    """gate 作用在 tensor 的若干轴上（每个轴维度为 2）"""
    k = len(axes)
    g = gate.reshape((2,) * (2 * k))
    out = np.tensordot(g, tensor, axes=(list(range(k, 2 * k)), list(axes)))
    return np.moveaxis(out, list(range(k)), list(axes))


def _apply_raw(data: np.ndarray, operator: np.ndarray, targets: Sequence[int]) -> np.ndarray:
    """对原始数组做 O ψ 或 O ρ O†，不做归一化"""
    n = _num_qubits_for(data.shape[0])
    if data.ndim == 1:
        out = _contract(data.reshape((2,) * n), operator, targets)
        return out.reshape(2**n)
    out = _contract(data.reshape((2,) * (2 * n)), operator, targets)
    out = _contract(out, operator.conj(), [n + t for t in targets])
    return out.reshape(2**n, 2**n)


def tensor(a: Operand, b: Operand) -> Operand:
    """Kronecker 积，左操作数占据更高位的比特"""
    if isinstance(a, QuantumState) and isinstance(b, QuantumState):
        if a.is_pure and b.is_pure:
            return QuantumState(np.kron(a.data, b.data))
        return QuantumState(np.kron(a.density_matrix(), b.density_matrix()))
    if isinstance(a, QuantumState) or isinstance(b, QuantumState):
        raise TypeError("cannot tensor a QuantumState with a bare matrix")
    a_arr = np.asarray(a, dtype=complex)
    b_arr = np.asarray(b, dtype=complex)
    if a_arr.ndim != 2 or b_arr.ndim != 2:
        raise TypeError("matrix operands must be two-dimensional")
    return np.kron(a_arr, b_arr)


def apply_gate(state: QuantumState, gate: np.ndarray, targets: Sequence[int]) -> QuantumState:
    """把 gate 嵌入到 targets 上作用于 state"""
    gate = np.asarray(gate, dtype=complex)
    targets = _check_targets(targets, state.num_qubits)
    expected = 2 ** len(targets)
    if gate.shape != (expected, expected):
        raise DimensionMismatchError(
            f"gate of shape {gate.shape} does not act on {len(targets)} target(s)"
        )
    return QuantumState(_apply_raw(state.data, gate, targets))


def apply_kraus(
    state: QuantumState, kraus_ops: Sequence[np.ndarray], targets: Sequence[int]
) -> QuantumState:
    """ρ -> Σ K ρ K†，结果总是密度矩阵"""
    targets = _check_targets(targets, state.num_qubits)
    rho = state.density_matrix()
    out = np.zeros_like(rho)
    for op in kraus_ops:
        out += _apply_raw(rho, np.asarray(op, dtype=complex), targets)
    return QuantumState(out)


def partial_trace(state: QuantumState, keep: Sequence[int]) -> QuantumState:
    """保留 keep 中的比特（按给定顺序），对其余比特求迹"""
    if not keep:
        raise DimensionMismatchError("keep list must be non-empty")
    n = state.num_qubits
    keep = _check_targets(keep, n)
    traced = [q for q in range(n) if q not in keep]
    dk, dt = 2 ** len(keep), 2 ** len(traced)
    if state.is_pure:
        psi = state.data.reshape((2,) * n).transpose(keep + traced).reshape(dk, dt)
        return QuantumState(psi @ psi.conj().T)
    rho = state.data.reshape((2,) * (2 * n))
    order = keep + traced + [n + q for q in keep] + [n + q for q in traced]
    rho = rho.transpose(order).reshape(dk, dt, dk, dt)
    return QuantumState(np.einsum("ajbj->ab", rho))


@dataclass(frozen=True)
class MeasurementResult:
    outcome: int
    probability: float
    state: QuantumState


def check_projectors(projectors: Sequence[np.ndarray], atol: float = COMPLETENESS_ATOL) -> None:
    """完备性 Σ P_i = 1 与正交性 P_i P_j = δ_ij P_i"""
    if not projectors:
        raise MeasurementError("empty projector set")
    dim = projectors[0].shape[0]
    total = sum(projectors)
    if not np.allclose(total, np.eye(dim), atol=atol):
        raise MeasurementError("projectors are not complete")
    for i, p in enumerate(projectors):
        for j, q in enumerate(projectors):
            expected = p if i == j else np.zeros_like(p)
            if not np.allclose(p @ q, expected, atol=atol):
                raise MeasurementError(f"projectors {i} and {j} are not orthogonal idempotents")


def outcome_probabilities(
    state: QuantumState, projectors: Sequence[np.ndarray], targets: Sequence[int]
) -> np.ndarray:
    targets = _check_targets(targets, state.num_qubits)
    probs = []
    for proj in projectors:
        post = _apply_raw(state.data, np.asarray(proj, dtype=complex), targets)
        if state.is_pure:
            probs.append(float(np.vdot(post, post).real))
        else:
            probs.append(float(np.trace(post).real))
    return np.clip(np.array(probs), 0.0, None)


def projective_measure(
    state: QuantumState,
    projectors: Sequence[np.ndarray],
    targets: Sequence[int],
    rng: Optional[np.random.Generator] = None,
    forced: Optional[int] = None,
) -> MeasurementResult:
    """投影测量：按 Born 规则抽样，或使用 forced 指定结果（用于确定性测试）"""
    projectors = [np.asarray(p, dtype=complex) for p in projectors]
    targets = _check_targets(targets, state.num_qubits)
    if projectors[0].shape != (2 ** len(targets),) * 2:
        raise DimensionMismatchError("projector dimension does not match targets")
    check_projectors(projectors)

    probs = outcome_probabilities(state, projectors, targets)
    if forced is not None:
        outcome = int(forced)
        if not 0 <= outcome < len(projectors):
            raise MeasurementError(f"forced outcome {outcome} out of range")
        if probs[outcome] < VANISHING_PROBABILITY:
            raise VanishingOutcomeError(outcome, float(probs[outcome]))
    elif rng is not None:
        outcome = int(rng.choice(len(probs), p=probs / probs.sum()))
    else:
        raise MeasurementError("either an rng or a forced outcome is required")

    probability = float(probs[outcome])
    post = _apply_raw(state.data, projectors[outcome], targets)
    if state.is_pure:
        post = post / np.sqrt(probability)
    else:
        post = post / probability
    return MeasurementResult(outcome=outcome, probability=probability, state=QuantumState(post))


def _chop(values: np.ndarray) -> np.ndarray:
    """相对最大本征值低于 RANK_RTOL 的本征值视为数值噪声，置零"""
    cutoff = RANK_RTOL * max(float(values.max()), 0.0)
    return np.where(values > cutoff, values, 0.0)


def _rank_one_ket(matrix: np.ndarray) -> Optional[np.ndarray]:
    """秩为 1 的密度矩阵返回对应的纯态向量，否则返回 None"""
    values, vectors = np.linalg.eigh(matrix)
    values = _chop(values)
    if np.count_nonzero(values) != 1:
        return None
    return vectors[:, -1] * np.sqrt(values[-1])


def _psd_sqrt(matrix: np.ndarray) -> np.ndarray:
    values, vectors = np.linalg.eigh(matrix)
    values = np.sqrt(_chop(values))
    return (vectors * values) @ vectors.conj().T


def _pure_fidelity(psi: np.ndarray, other: QuantumState) -> float:
    if other.is_pure:
        return abs(np.vdot(psi, other.data)) ** 2
    return float(np.vdot(psi, other.data @ psi).real)


def fidelity(a: QuantumState, b: QuantumState) -> float:
    """Uhlmann 保真度 (Tr √(√ρ σ √ρ))²，任一方为纯态（含秩 1 的密度矩阵）时退化为 <ψ|σ|ψ>"""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimension mismatch {a.dim} vs {b.dim}")
    psi = a.data if a.is_pure else _rank_one_ket(a.data)
    if psi is not None:
        value = _pure_fidelity(psi, b)
    else:
        phi = b.data if b.is_pure else _rank_one_ket(b.data)
        if phi is not None:
            value = _pure_fidelity(phi, a)
        else:
            root = _psd_sqrt(a.data)
            inner = root @ b.data @ root
            eigenvalues = _chop(np.linalg.eigvalsh((inner + inner.conj().T) / 2))
            value = float(np.sum(np.sqrt(eigenvalues)) ** 2)
    return float(min(max(value, 0.0), 1.0))


def bloch_coordinates(rho: QuantumState) -> Tuple[float, float, float]:
    """(Tr ρσ_x, Tr ρσ_y, Tr ρσ_z)"""
    if rho.num_qubits != 1:
        raise DimensionMismatchError("Bloch coordinates need a single-qubit state")
    dm = rho.density_matrix()
    x, y, z = (float(np.trace(dm @ p).real) for p in PAULIS[1:])
    return x, y, z
