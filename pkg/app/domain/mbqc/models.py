"""测量基、副产物算符帧与实验记录"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..exceptions import MeasurementError
from ..quantum.operators import KET_0, KET_1, SIGMA_X, SIGMA_Z, equatorial_ket, projector
from ..quantum.state import QuantumState

# 联合测量的三个结果：0 -> |ψ^{+α}>，1 -> |ψ^{-α}>，2 -> 双轨子空间之外（泄漏）
LEAKAGE_OUTCOME = 2


class BasisKind(str, Enum):
    JOINT_PAIR = "joint_pair"
    SINGLE_EQUATORIAL = "single_equatorial"
    COMPUTATIONAL = "computational"


def joint_ket(alpha: float, sign: int) -> np.ndarray:
    """|ψ^{±α}> = (|01> ± e^{iα}|10>)/√2"""
    ket = np.zeros(4, dtype=complex)
    ket[1] = 1.0
    ket[2] = sign * np.exp(1j * alpha)
    return ket / np.sqrt(2)


@dataclass(frozen=True)
class MeasurementBasis:
    kind: BasisKind
    alpha: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "kind", BasisKind(self.kind))
        if not np.isfinite(self.alpha):
            raise MeasurementError(f"measurement angle must be finite, got {self.alpha}")

    @property
    def num_qubits(self) -> int:
        return 2 if self.kind is BasisKind.JOINT_PAIR else 1

    def projectors(self) -> List[np.ndarray]:
        """按结果编号排列的投影算符；联合测量额外带上泄漏投影 |00><00| + |11><11|"""
        if self.kind is BasisKind.JOINT_PAIR:
            leakage = np.diag([1, 0, 0, 1]).astype(complex)
            return [
                projector(joint_ket(self.alpha, +1)),
                projector(joint_ket(self.alpha, -1)),
                leakage,
            ]
        if self.kind is BasisKind.SINGLE_EQUATORIAL:
            return [
                projector(equatorial_ket(self.alpha, +1)),
                projector(equatorial_ket(self.alpha, -1)),
            ]
        return [projector(KET_0), projector(KET_1)]

    def label(self) -> str:
        if self.kind is BasisKind.COMPUTATIONAL:
            return "Z"
        prefix = "J" if self.kind is BasisKind.JOINT_PAIR else "B"
        return f"{prefix}({self.alpha:.6g})"


@dataclass(frozen=True)
class ByproductFrame:
    """
    每个逻辑比特上待修正的 Pauli 副产物 X^x Z^z（不计全局相位），
    即实际逻辑态 = X^x Z^z · 理想逻辑态。
    """

    x_power: Dict[int, int] = field(default_factory=dict)
    z_power: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        for name, powers in (("x_power", self.x_power), ("z_power", self.z_power)):
            for qubit, bit in powers.items():
                if bit not in (0, 1):
                    raise MeasurementError(f"{name}[{qubit}] = {bit} is not a bit")

    def bits(self, qubit: int) -> Tuple[int, int]:
        return self.x_power.get(qubit, 0), self.z_power.get(qubit, 0)

    def compose(self, qubit: int, x: int, z: int) -> "ByproductFrame":
        """在 qubit 上再叠加 X^x Z^z（模 2）"""
        old_x, old_z = self.bits(qubit)
        x_power = dict(self.x_power)
        z_power = dict(self.z_power)
        x_power[qubit] = old_x ^ (x & 1)
        z_power[qubit] = old_z ^ (z & 1)
        return ByproductFrame(x_power, z_power)

    def propagate(self, measured: int, successor: int, t: int) -> "ByproductFrame":
        """
        测量 measured 后把副产物推到 successor。

        t 是该次测量模拟出的 σ_x^t H R_z(-α) 中的 t。
        X^x Z^z 经过 H 变成 Z^x X^z，所以 successor 上得到 X^{t⊕z} Z^x。
        """
        x, z = self.bits(measured)
        x_power = {q: b for q, b in self.x_power.items() if q != measured}
        z_power = {q: b for q, b in self.z_power.items() if q != measured}
        return ByproductFrame(x_power, z_power).compose(successor, t ^ z, x)

    def adapted_angle(self, qubit: int, alpha: float) -> float:
        """存在 X 副产物时测量角取反：(-1)^x α"""
        x, _ = self.bits(qubit)
        return -alpha if x else alpha

    def operator(self, qubit: int) -> np.ndarray:
        x, z = self.bits(qubit)
        return np.linalg.matrix_power(SIGMA_X, x) @ np.linalg.matrix_power(SIGMA_Z, z)

    def correct(self, logical: QuantumState, qubit: int) -> QuantumState:
        """施加 (X^x Z^z)†"""
        fix = self.operator(qubit).conj().T
        if logical.is_pure:
            return QuantumState(fix @ logical.data)
        return QuantumState(fix @ logical.data @ fix.conj().T)

    def to_dict(self) -> Dict[str, Dict[str, int]]:
        return {
            "x": {str(q): b for q, b in sorted(self.x_power.items())},
            "z": {str(q): b for q, b in sorted(self.z_power.items())},
        }


@dataclass(frozen=True)
class MeasurementOutcome:
    site: int
    basis: MeasurementBasis
    bits: Tuple[int, ...]
    probability: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "site": self.site,
            "basis": self.basis.label(),
            "bits": list(self.bits),
            "probability": self.probability,
        }


@dataclass
class ExperimentRecord:
    """一次信息传输实验的完整记录；矩阵字段保持 numpy 数组，由序列化层转换"""

    encoding: str
    strategy: str
    chain: int
    outcomes: List[MeasurementOutcome]
    byproduct: ByproductFrame
    raw_output: QuantumState
    logical_output: QuantumState
    target: QuantumState
    fidelity_vs_ideal: float
    branch_probability: float
    leakage_probability: float = 0.0
    noise: Optional[Dict[str, Any]] = None

    def __post_init__(self):
        if not 0.0 <= self.fidelity_vs_ideal <= 1.0:
            raise MeasurementError(f"fidelity {self.fidelity_vs_ideal} outside [0, 1]")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "encoding": self.encoding,
            "strategy": self.strategy,
            "chain": self.chain,
            "noise": self.noise,
            "outcomes": [o.to_dict() for o in self.outcomes],
            "byproduct": self.byproduct.to_dict(),
            "branch_probability": self.branch_probability,
            "leakage_probability": self.leakage_probability,
            "raw_output": self.raw_output.density_matrix(),
            "logical_output": self.logical_output.density_matrix(),
            "target": self.target.density_matrix(),
            "fidelity": self.fidelity_vs_ideal,
        }
