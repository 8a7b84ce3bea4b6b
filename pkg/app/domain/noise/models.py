"""噪声模型参数"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..exceptions import NoiseSpecError
from ..quantum.operators import PAULIS, embed_operator


class NoiseKind(str, Enum):
    INDEPENDENT_DEPHASING = "independent_dephasing"
    COLLECTIVE_DEPHASING = "collective_dephasing"
    COLLECTIVE_UNITARY = "collective_unitary"


def _as_float(value: Any, name: str) -> float:
    try:
        return float(value)
    except (TypeError, ValueError) as exc:
        raise NoiseSpecError(f"{name} must be a real number, got {value!r}") from exc


@dataclass(frozen=True)
class NoiseSpec:
    """
    噪声描述。

    - gamma_t: 无量纲强度 Γt（>= 0）
    - targets: 可选的物理比特（或编码块）列表；None 表示整个寄存器
    - beta: collective_unitary 的生成元系数 (β_x, β_y, β_z)
    """

    kind: NoiseKind
    gamma_t: float = 0.0
    targets: Optional[Tuple[int, ...]] = None
    beta: Optional[Tuple[float, float, float]] = None

    def __post_init__(self):
        try:
            kind = NoiseKind(self.kind)
        except ValueError as exc:
            raise NoiseSpecError(f"unknown noise kind {self.kind!r}") from exc
        object.__setattr__(self, "kind", kind)
        gamma_t = _as_float(self.gamma_t, "gamma_t")
        if not np.isfinite(gamma_t) or gamma_t < 0:
            raise NoiseSpecError(f"gamma_t must be a non-negative real, got {self.gamma_t}")
        object.__setattr__(self, "gamma_t", gamma_t)
        if self.beta is not None:
            try:
                beta = tuple(float(b) for b in self.beta)
            except (TypeError, ValueError) as exc:
                raise NoiseSpecError(f"beta must be a finite 3-vector, got {self.beta!r}") from exc
            if len(beta) != 3 or not all(np.isfinite(beta)):
                raise NoiseSpecError(f"beta must be a finite 3-vector, got {self.beta}")
            object.__setattr__(self, "beta", beta)
        if kind is NoiseKind.COLLECTIVE_UNITARY and self.beta is None:
            raise NoiseSpecError("collective_unitary noise needs a beta vector")
        if self.targets is not None:
            try:
                targets = tuple(int(t) for t in self.targets)
            except (TypeError, ValueError) as exc:
                raise NoiseSpecError(f"targets must be a list of integers, got {self.targets!r}") from exc
            object.__setattr__(self, "targets", targets)

    @classmethod
    def noiseless(cls) -> "NoiseSpec":
        return cls(kind=NoiseKind.INDEPENDENT_DEPHASING, gamma_t=0.0)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "NoiseSpec":
        """{"kind": "...", "gamma_t": x, "beta": [x, y, z]?, "targets": [...]?}"""
        if not isinstance(data, dict):
            raise NoiseSpecError("noise spec must be a JSON object")
        try:
            return cls(
                kind=data["kind"],
                gamma_t=data.get("gamma_t", 0.0),
                targets=data.get("targets"),
                beta=data.get("beta"),
            )
        except KeyError as exc:
            raise NoiseSpecError(f"noise spec is missing {exc}") from exc

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind.value, "gamma_t": self.gamma_t}
        if self.beta is not None:
            data["beta"] = list(self.beta)
        if self.targets is not None:
            data["targets"] = list(self.targets)
        return data


@dataclass(frozen=True)
class CollectiveGenerators:
    """J_l = (1/2) Σ_i σ_{l,i}，作用在 2 或 3 个比特组成的块上"""

    jx: np.ndarray
    jy: np.ndarray
    jz: np.ndarray

    @classmethod
    def for_block(cls, size: int) -> "CollectiveGenerators":
        if size not in (2, 3):
            raise NoiseSpecError(f"collective generators need a block of 2 or 3 qubits, got {size}")
        ops = []
        for pauli in PAULIS[1:]:
            total = sum(embed_operator(pauli, [i], size) for i in range(size))
            ops.append(total / 2)
        return cls(*ops)

    def combination(self, beta: Tuple[float, float, float]) -> np.ndarray:
        return beta[0] * self.jx + beta[1] * self.jy + beta[2] * self.jz
