"""格点与本征值集合的数据模型"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

import numpy as np

from ..exceptions import LatticeError
from ..quantum.operators import embed_operator, kron_all

DUAL_RAIL = "dual-rail"
DFS3 = "dfs3"
STANDARD = "standard"

BLOCK_SIZE = {STANDARD: 1, DUAL_RAIL: 2, DFS3: 3}

# 编码簇态只支持小规模线链和 2D 网格
MAX_EFFECTIVE_QUBITS = 5


@dataclass(frozen=True)
class LatticeSpec:
    """
    有效（编码）比特到物理比特的映射。

    - physical_map[a] 是有效比特 a 的物理比特元组，双轨编码为 (a'_1, a'_2)，
      即 (顶层, 底层)；dfs3 为三元组；standard 为单个物理比特
    - top_layer_edges 是顶层 γ_= 邻接关系
    """

    encoding: str
    effective_qubits: Tuple[int, ...]
    physical_map: Dict[int, Tuple[int, ...]]
    top_layer_edges: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.encoding not in BLOCK_SIZE:
            raise LatticeError(f"unknown encoding {self.encoding!r}")
        if not self.effective_qubits:
            raise LatticeError("lattice needs at least one effective qubit")
        if self.encoding != STANDARD and len(self.effective_qubits) > MAX_EFFECTIVE_QUBITS:
            raise LatticeError(
                f"encoded lattices support at most {MAX_EFFECTIVE_QUBITS} effective qubits"
            )
        seen: set = set()
        for a in self.effective_qubits:
            block = self.physical_map.get(a)
            if block is None:
                raise LatticeError(f"effective qubit {a} has no physical block")
            if len(block) != BLOCK_SIZE[self.encoding]:
                raise LatticeError(f"block {block} does not match encoding {self.encoding}")
            if seen.intersection(block):
                raise LatticeError(f"physical block {block} overlaps another block")
            seen.update(block)
        for a, c in self.top_layer_edges:
            if a == c:
                raise LatticeError(f"edge ({a}, {c}) connects a qubit to itself")
            if a not in self.physical_map or c not in self.physical_map:
                raise LatticeError(f"edge ({a}, {c}) references an unknown effective qubit")

    @classmethod
    def build(
        cls, num_effective: int, encoding: str, edges: List[Tuple[int, int]]
    ) -> "LatticeSpec":
        """标准物理映射：有效比特 a 占据连续的 block_size 个物理比特"""
        if encoding not in BLOCK_SIZE:
            raise LatticeError(f"unknown encoding {encoding!r}")
        if num_effective < 1:
            raise LatticeError("lattice needs at least one effective qubit")
        size = BLOCK_SIZE[encoding]
        physical_map = {
            a: tuple(range(size * a, size * a + size)) for a in range(num_effective)
        }
        return cls(
            encoding=encoding,
            effective_qubits=tuple(range(num_effective)),
            physical_map=physical_map,
            top_layer_edges=tuple((int(a), int(c)) for a, c in edges),
        )

    @classmethod
    def chain(cls, num_effective: int, encoding: str = DUAL_RAIL) -> "LatticeSpec":
        edges = [(a, a + 1) for a in range(num_effective - 1)]
        return cls.build(num_effective, encoding, edges)

    @classmethod
    def grid(cls, rows: int, cols: int, encoding: str = DUAL_RAIL) -> "LatticeSpec":
        edges = []
        for r in range(rows):
            for c in range(cols):
                a = r * cols + c
                if c + 1 < cols:
                    edges.append((a, a + 1))
                if r + 1 < rows:
                    edges.append((a, a + cols))
        return cls.build(rows * cols, encoding, edges)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LatticeSpec":
        """{"effective": n, "encoding": "dual-rail"|"dfs3", "edges": [[i, j], ...]}"""
        try:
            num_effective = int(data["effective"])
            encoding = str(data.get("encoding", DUAL_RAIL))
            edges = [(int(a), int(c)) for a, c in data.get("edges", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise LatticeError(f"invalid lattice document: {exc}") from exc
        return cls.build(num_effective, encoding, edges)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "effective": len(self.effective_qubits),
            "encoding": self.encoding,
            "edges": [list(edge) for edge in self.top_layer_edges],
        }

    @property
    def num_physical(self) -> int:
        return sum(len(block) for block in self.physical_map.values())

    def block(self, effective_qubit: int) -> Tuple[int, ...]:
        if effective_qubit not in self.physical_map:
            raise LatticeError(f"unknown effective qubit {effective_qubit}")
        return self.physical_map[effective_qubit]

    def top(self, effective_qubit: int) -> int:
        return self.block(effective_qubit)[0]

    def neighbors(self, effective_qubit: int) -> List[int]:
        self.block(effective_qubit)
        result = []
        for a, c in self.top_layer_edges:
            if a == effective_qubit:
                result.append(c)
            elif c == effective_qubit:
                result.append(a)
        return sorted(set(result))


@dataclass(frozen=True)
class EigenvalueSet:
    """{κ}：每个有效比特的稳定子本征值比特，G|φ> = (-1)^κ |φ>"""

    kappa: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        for a, bit in self.kappa.items():
            if bit not in (0, 1):
                raise LatticeError(f"kappa[{a}] = {bit} is not a bit")

    @classmethod
    def zeros(cls, lattice: LatticeSpec) -> "EigenvalueSet":
        return cls({a: 0 for a in lattice.effective_qubits})

    def flipped(self, effective_qubit: int) -> "EigenvalueSet":
        kappa = dict(self.kappa)
        kappa[effective_qubit] = 1 - kappa.get(effective_qubit, 0)
        return EigenvalueSet(kappa)

    def sign(self, effective_qubit: int) -> int:
        return -1 if self.kappa.get(effective_qubit, 0) else 1


@dataclass(frozen=True)
class StabilizerOperator:
    """
    G^(a') = X_{a'} ⊗_{c' ∈ nghb(a')} Z_{c'}，按物理比特分解为单比特因子。
    """

    effective_qubit: int
    factors: Tuple[Tuple[int, np.ndarray], ...]

    def qubits(self) -> List[int]:
        return [q for q, _ in self.factors]

    def matrix(self, num_qubits: int) -> np.ndarray:
        qubits = self.qubits()
        local = kron_all([op for _, op in self.factors])
        return embed_operator(local, qubits, num_qubits)
